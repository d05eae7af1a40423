#pragma once

#include <utility>
#include <vector>

#include "shcrystal/shifted_tableau.hpp"

namespace shc {

struct SlideRecord {
  Cell start;
  std::vector<Cell> path;  // successive positions of the empty square, starting at start
  bool special_prime_applied = false;
};

/// Cells of the inner shape whose removal leaves a strict partition.
std::vector<Cell> inner_corners(const SkewShape& s);
/// Cells outside the outer shape whose addition leaves a strict partition.
std::vector<Cell> outer_corners(const SkewShape& s);

/// Slides are computed on the standardization, then the letters are recovered from the
/// weight. This reproduces the diagonal prime exception and keeps canonical form.
std::pair<ShiftedTableau, SlideRecord> inner_slide(const ShiftedTableau& t, Cell corner);
std::pair<ShiftedTableau, SlideRecord> outer_slide(const ShiftedTableau& t, Cell corner);

enum class RectifyPolicy {
  TopRight,   // the corner in the top-most row that has one
  BottomLeft  // the corner in the bottom-most row that has one
};

ShiftedTableau rectify(const ShiftedTableau& t, RectifyPolicy policy = RectifyPolicy::TopRight);

/// The word placed on a diagonal: shape (2n-1,...,3,1)/(2n-2,...,2), read bottom to top.
ShiftedTableau diagonal_tableau(const Word& w);
inline ShiftedTableau rectify(const Word& w) { return rectify(diagonal_tableau(w)); }

bool is_littlewood_richardson(const ShiftedTableau& t);

}  // namespace shc
