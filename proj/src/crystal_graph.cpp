#include "shcrystal/crystal_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "json.hpp"
#include "shcrystal/jeu_de_taquin.hpp"
#include "shcrystal/unprimed_operators.hpp"

namespace shc {

int CrystalGraph::find(const Word& w) const {
  auto it = index.find(w);
  return it == index.end() ? -1 : it->second;
}

std::optional<ShiftedTableau> apply_operator(const ShiftedTableau& t, int i, Dir d, bool primed) {
  auto w = apply_operator(t.reading_word(), i, d, primed);
  if (!w) return std::nullopt;
  return ShiftedTableau::from_reading(t.shape(), w->letters());
}

CrystalGraph build_crystal(const SkewShape& shape, int n) {
  if (n < 1) throw std::invalid_argument("alphabet bound must be at least 1");
  CrystalGraph g;
  g.n = n;
  g.shape = shape;
  enumerate(shape, n, Variant::Canonical, [&](const ShiftedTableau& t) {
    Word w = t.reading_word();
    g.index.emplace(w, static_cast<int>(g.words.size()));
    g.tableaux.push_back(t);
    g.weights.push_back(w.weight(n));
    g.words.push_back(std::move(w));
  });
  const int slots = 2 * std::max(n - 1, 0);
  g.lower.assign(g.size(), std::vector<int>(slots, -1));
  g.raise.assign(g.size(), std::vector<int>(slots, -1));
  for (int v = 0; v < g.size(); ++v)
    for (int i = 1; i < n; ++i)
      for (bool primed : {false, true}) {
        if (auto w = apply_operator(g.words[v], i, Dir::Lower, primed)) {
          int dst = g.find(*w);
          if (dst < 0) throw std::logic_error("lowering left the tableau set: " + g.words[v].str());
          g.lower[v][CrystalGraph::slot(i, primed)] = dst;
          g.edges.push_back({v, dst, i, primed});
        }
        if (auto w = apply_operator(g.words[v], i, Dir::Raise, primed)) {
          int dst = g.find(*w);
          if (dst < 0) throw std::logic_error("raising left the tableau set: " + g.words[v].str());
          g.raise[v][CrystalGraph::slot(i, primed)] = dst;
        }
      }
  return g;
}

std::vector<std::string> check_raising_edges(const CrystalGraph& g) {
  std::vector<std::string> bad;
  for (int v = 0; v < g.size(); ++v)
    for (int i = 1; i < g.n; ++i)
      for (bool primed : {false, true}) {
        const int w = g.f(v, i, primed);
        if (w >= 0 && g.e(w, i, primed) != v)
          bad.push_back("raising does not reverse " + g.words[v].str() + " -> " + g.words[w].str());
        const int u = g.e(v, i, primed);
        if (u >= 0 && g.f(u, i, primed) != v)
          bad.push_back("lowering does not reverse " + g.words[v].str() + " <- " + g.words[u].str());
      }
  return bad;
}

std::pair<int, int> phi_epsilon(const Word& w, int i) {
  Point p = endpoint(w, i);
  return {p.x, p.y};
}

int chain_length(const CrystalGraph& g, int v, int i, bool primed, Dir d) {
  int len = 0;
  for (int cur = v;;) {
    cur = d == Dir::Lower ? g.f(cur, i, primed) : g.e(cur, i, primed);
    if (cur < 0 || len > g.size()) return len;
    ++len;
  }
}

std::vector<Component> components(const CrystalGraph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<Component> out;
  for (int s = 0; s < g.size(); ++s) {
    if (comp[s] >= 0) continue;
    Component c;
    std::queue<int> q;
    q.push(s);
    comp[s] = static_cast<int>(out.size());
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      c.vertices.push_back(v);
      for (const auto* table : {&g.lower, &g.raise})
        for (int w : (*table)[v])
          if (w >= 0 && comp[w] < 0) {
            comp[w] = comp[s];
            q.push(w);
          }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    for (int v : c.vertices)
      if (std::all_of(g.raise[v].begin(), g.raise[v].end(), [](int w) { return w < 0; }))
        c.highest.push_back(v);
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

int nonzero_parts(const std::vector<int>& wt) {
  return static_cast<int>(std::count_if(wt.begin(), wt.end(), [](int x) { return x != 0; }));
}

StrictPartition weight_partition(const std::vector<int>& wt) {
  std::vector<int> p(wt);
  while (!p.empty() && p.back() == 0) p.pop_back();
  return StrictPartition(p);
}

}  // namespace

QPolynomial character(const CrystalGraph& g, const std::vector<int>& vertices) {
  QPolynomial q(g.n);
  for (int v : vertices) q.add(g.weights[v], std::int64_t{1} << nonzero_parts(g.weights[v]));
  return q;
}

QPolynomial character(const CrystalGraph& g) {
  std::vector<int> all(g.size());
  for (int v = 0; v < g.size(); ++v) all[v] = v;
  return character(g, all);
}

QPolynomial schur_q(const SkewShape& shape, int n) {
  QPolynomial q(n);
  enumerate(shape, n, Variant::Q, [&](const ShiftedTableau& t) { q.add(t.weight(n), 1); });
  return q;
}

QPolynomial schur_p(const SkewShape& shape, int n) {
  QPolynomial q(n);
  enumerate(shape, n, Variant::P, [&](const ShiftedTableau& t) { q.add(t.weight(n), 1); });
  return q;
}

LRTable lr_coefficients(const SkewShape& shape, int n) {
  LRTable table;
  CrystalGraph g = build_crystal(shape, n);
  for (const Component& c : components(g)) {
    if (c.highest.size() != 1) throw std::logic_error("component without a unique highest weight");
    ++table.by_components[weight_partition(g.weights[c.highest[0]])];
  }
  for (int v = 0; v < g.size(); ++v)
    if (is_littlewood_richardson(g.tableaux[v])) ++table.by_tableaux[weight_partition(g.weights[v])];
  return table;
}

KashiwaraReport verify_kashiwara(const CrystalGraph& g, bool primed) {
  KashiwaraReport rep;
  auto fail = [&](std::string msg) {
    rep.pass = false;
    rep.violations.push_back(std::move(msg));
  };
  for (int v = 0; v < g.size(); ++v)
    for (int i = 1; i < g.n; ++i) {
      auto [phi, eps] = phi_epsilon(g.words[v], i);
      const auto& wt = g.weights[v];
      if (phi != wt[i - 1] - wt[i] + eps)
        fail("K2 at " + g.words[v].str() + " i=" + std::to_string(i));
      const int w = g.f(v, i, primed);
      if (w >= 0) {
        if (g.e(w, i, primed) != v) fail("K1 inverse at " + g.words[v].str());
        auto [phi2, eps2] = phi_epsilon(g.words[w], i);
        if (eps2 != eps + 1 || phi2 != phi - 1) fail("K1 phi/epsilon at " + g.words[v].str());
        std::vector<int> expect = wt;
        expect[i - 1] -= 1;
        expect[i] += 1;
        if (g.weights[w] != expect) fail("K1 weight at " + g.words[v].str());
      }
      const int u = g.e(v, i, primed);
      if (u >= 0 && g.f(u, i, primed) != v) fail("K1 inverse at " + g.words[v].str());
    }
  return rep;
}

std::string to_dot(const CrystalGraph& g) {
  std::string out = "digraph crystal {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (int v = 0; v < g.size(); ++v) {
    std::string wt;
    for (std::size_t k = 0; k < g.weights[v].size(); ++k) wt += (k ? "," : "") + std::to_string(g.weights[v][k]);
    out += "  v" + std::to_string(v) + " [label=\"" + g.words[v].str() + "\\n(" + wt + ")\"];\n";
  }
  for (const CrystalEdge& e : g.edges) {
    out += "  v" + std::to_string(e.src) + " -> v" + std::to_string(e.dst) + " [color=red, label=\"" +
           std::to_string(e.i) + (e.primed ? "'\", style=dashed" : "\", style=solid") + "];\n";
  }
  return out + "}\n";
}

std::string to_json(const CrystalGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n;
  j["outer"] = g.shape.outer().parts();
  j["inner"] = g.shape.inner().parts();
  j["vertices"] = nlohmann::ordered_json::array();
  for (int v = 0; v < g.size(); ++v)
    j["vertices"].push_back({{"id", v}, {"word", g.words[v].str()}, {"weight", g.weights[v]}});
  j["edges"] = nlohmann::ordered_json::array();
  for (const CrystalEdge& e : g.edges)
    j["edges"].push_back({{"src", e.src}, {"dst", e.dst}, {"i", e.i}, {"primed", e.primed}});
  return j.dump(2) + "\n";
}

}  // namespace shc
