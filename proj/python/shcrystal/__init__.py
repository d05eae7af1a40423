"""Crystal operators on shifted tableaux (Python bindings)."""

from ._shcrystal import (
    ParseError,
    apply,
    canonical,
    crystal_json,
    isomorphism,
    knuth_neighbors,
    lr_coefficients,
    rect_shape,
    rectify,
    rsk,
    schur_q,
    verify_axioms,
    walk,
)

__all__ = [
    "ParseError",
    "apply",
    "canonical",
    "crystal_json",
    "isomorphism",
    "knuth_neighbors",
    "lr_coefficients",
    "rect_shape",
    "rectify",
    "rsk",
    "schur_q",
    "verify_axioms",
    "walk",
]
