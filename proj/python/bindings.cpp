#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shcrystal/axiom_verifier.hpp"
#include "shcrystal/crystal_graph.hpp"
#include "shcrystal/jeu_de_taquin.hpp"
#include "shcrystal/lattice_walk.hpp"
#include "shcrystal/mixed_insertion.hpp"
#include "shcrystal/unprimed_operators.hpp"

namespace py = pybind11;
using namespace shc;

namespace {

SkewShape shape_of(const std::vector<int>& outer, const std::vector<int>& inner) {
  return SkewShape(StrictPartition(outer), StrictPartition(inner));
}

py::dict polynomial(const QPolynomial& q) {
  py::dict d;
  for (const auto& [e, c] : q.terms()) d[py::tuple(py::cast(e))] = c;
  return d;
}

std::optional<std::string> apply(const std::string& word, const std::string& kind, int i) {
  const bool primed = kind == "fprime" || kind == "eprime";
  if (kind != "f" && kind != "e" && !primed) throw std::invalid_argument("kind must be f, e, fprime or eprime");
  const Dir d = kind == "f" || kind == "fprime" ? Dir::Lower : Dir::Raise;
  auto w = apply_operator(Word::parse(word), i, d, primed);
  if (!w) return std::nullopt;
  return w->str();
}

}  // namespace

PYBIND11_MODULE(_shcrystal, m) {
  m.doc() = "Crystal operators on shifted tableaux";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("canonical", [](const std::string& w) { return Word::parse(w).str(); }, py::arg("word"));

  m.def(
      "walk",
      [](const std::string& word, int i) {
        LatticeWalk lw = walk(subword(Word::parse(word), i));
        std::vector<std::string> steps;
        for (Step s : lw.steps) steps.push_back(step_name(s));
        std::vector<std::pair<int, int>> points;
        for (Point p : lw.points) points.emplace_back(p.x, p.y);
        py::dict d;
        d["steps"] = steps;
        d["points"] = points;
        d["endpoint"] = points.back();
        return d;
      },
      py::arg("word"), py::arg("i") = 1);

  m.def("apply", &apply, py::arg("word"), py::arg("kind"), py::arg("i") = 1,
        "Apply F, E, F' or E' (kind 'f', 'e', 'fprime', 'eprime'); None when undefined.");

  m.def(
      "rect_shape",
      [](const std::string& word) {
        RectShape r = rect_shape(Word::parse(word));
        return py::make_tuple(r.parts(), r.ones_in_first_row);
      },
      py::arg("word"));

  m.def("rectify", [](const std::string& word) { return rectify(Word::parse(word)).str(); }, py::arg("word"));

  m.def(
      "rsk",
      [](const std::string& word) {
        RSKResult r = shifted_rsk(Word::parse(word));
        return py::make_tuple(r.P.str(), r.Q.rows, r.Q.circled);
      },
      py::arg("word"), "Returns (P as text, Q rows, circled step numbers).");

  m.def(
      "knuth_neighbors",
      [](const std::string& word) {
        std::vector<std::string> out;
        for (const Word& v : knuth_neighbors(Word::parse(word))) out.push_back(v.str());
        return out;
      },
      py::arg("word"));

  m.def(
      "schur_q",
      [](const std::vector<int>& outer, const std::vector<int>& inner, int n) {
        return polynomial(schur_q(shape_of(outer, inner), n));
      },
      py::arg("outer"), py::arg("inner") = std::vector<int>{}, py::arg("n") = 2);

  m.def(
      "lr_coefficients",
      [](const std::vector<int>& outer, const std::vector<int>& inner, int n) {
        LRTable t = lr_coefficients(shape_of(outer, inner), n);
        std::map<std::vector<int>, long long> out;
        for (const auto& [nu, f] : t.by_components) out[nu.parts()] = f;
        py::dict d;
        for (const auto& [k, v] : out) d[py::tuple(py::cast(k))] = v;
        return d;
      },
      py::arg("outer"), py::arg("inner") = std::vector<int>{}, py::arg("n") = 2);

  m.def(
      "crystal_json",
      [](const std::vector<int>& outer, const std::vector<int>& inner, int n) {
        return to_json(build_crystal(shape_of(outer, inner), n));
      },
      py::arg("outer"), py::arg("inner") = std::vector<int>{}, py::arg("n") = 2);

  m.def(
      "verify_axioms",
      [](const std::string& graph_json) {
        std::vector<py::tuple> out;
        for (const AxiomReport& r : check_all(graph_from_json(graph_json)))
          out.push_back(py::make_tuple(r.axiom, r.pass, r.witnesses));
        return out;
      },
      py::arg("graph_json"), "List of (axiom, passed, witnesses).");

  m.def(
      "isomorphism",
      [](const std::string& g_json, const std::string& h_json) -> std::optional<std::map<long long, long long>> {
        LabeledGraph g = graph_from_json(g_json), h = graph_from_json(h_json);
        Isomorphism iso = canonical_isomorphism(g, h);
        if (!iso.ok) return std::nullopt;
        std::map<long long, long long> out;
        for (int v = 0; v < g.size(); ++v) out[g.id(v)] = h.id(iso.map[v]);
        return out;
      },
      py::arg("g_json"), py::arg("h_json"));
}
