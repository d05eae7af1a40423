#include "shcrystal/axiom_verifier.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>

#include "json.hpp"

namespace shc {

namespace {

std::string label(int i, bool primed) { return std::to_string(i) + (primed ? "'" : ""); }

// First edge per (vertex, slot) in each direction; -1 when absent.
struct Adjacency {
  int n;
  std::vector<std::vector<int>> f, e;

  explicit Adjacency(const LabeledGraph& g) : n(g.n) {
    const int slots = 2 * std::max(g.n - 1, 0);
    f.assign(g.size(), std::vector<int>(slots, -1));
    e.assign(g.size(), std::vector<int>(slots, -1));
    for (const LabeledEdge& x : g.edges) {
      if (x.i < 1 || x.i >= g.n || x.src < 0 || x.dst < 0 || x.src >= g.size() || x.dst >= g.size())
        continue;
      const int s = slot(x.i, x.primed);
      if (f[x.src][s] < 0) f[x.src][s] = x.dst;
      if (e[x.dst][s] < 0) e[x.dst][s] = x.src;
    }
  }
  static int slot(int i, bool primed) { return 2 * (i - 1) + (primed ? 1 : 0); }
  int lower(int v, int i, bool primed) const { return v < 0 ? -1 : f[v][slot(i, primed)]; }
  int raise(int v, int i, bool primed) const { return v < 0 ? -1 : e[v][slot(i, primed)]; }
};

std::string vname(const LabeledGraph& g, int v) {
  return v < static_cast<int>(g.names.size()) && !g.names[v].empty() ? g.names[v] : "#" + std::to_string(v);
}

// Connected components ignoring edge direction.
std::vector<std::vector<int>> connected(const LabeledGraph& g) {
  std::vector<std::vector<int>> adj(g.size());
  for (const LabeledEdge& x : g.edges) {
    adj[x.src].push_back(x.dst);
    adj[x.dst].push_back(x.src);
  }
  std::vector<int> seen(g.size(), 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Subgraph on the given vertices keeping edges with lo <= i <= hi, relabelled to start at 1,
// with weights restricted to positions lo-1 .. hi (0-based) when truncate is set.
LabeledGraph induced(const LabeledGraph& g, const std::vector<int>& vertices, int lo, int hi, bool truncate) {
  LabeledGraph out;
  std::map<int, int> idx;
  for (int v : vertices) {
    idx[v] = out.size();
    out.names.push_back(vname(g, v));
    out.ids.push_back(g.id(v));
    if (truncate)
      out.weights.emplace_back(g.weights[v].begin() + (lo - 1), g.weights[v].begin() + (hi + 1));
    else
      out.weights.push_back(g.weights[v]);
  }
  out.n = truncate ? hi - lo + 2 : g.n;
  for (const LabeledEdge& x : g.edges) {
    if (x.i < lo || x.i > hi) continue;
    auto a = idx.find(x.src), b = idx.find(x.dst);
    if (a == idx.end() || b == idx.end()) continue;
    out.edges.push_back({a->second, b->second, truncate ? x.i - lo + 1 : x.i, x.primed});
  }
  return out;
}

std::optional<StrictPartition> as_partition(const std::vector<int>& wt) {
  std::vector<int> p(wt);
  while (!p.empty() && p.back() == 0) p.pop_back();
  try {
    return StrictPartition(p);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string show(const std::vector<int>& wt) {
  std::string s = "(";
  for (std::size_t k = 0; k < wt.size(); ++k) s += (k ? "," : "") + std::to_string(wt[k]);
  return s + ")";
}

// Models are shared across calls and threads; map nodes never move once inserted.
const LabeledGraph& model_graph(const StrictPartition& la, int n) {
  static std::mutex mu;
  static std::map<std::pair<StrictPartition, int>, LabeledGraph> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(la, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, from_crystal(build_crystal(SkewShape(la), n))).first;
  return it->second;
}

}  // namespace

LabeledGraph from_crystal(const CrystalGraph& c) {
  LabeledGraph g;
  g.n = c.n;
  g.weights = c.weights;
  for (const Word& w : c.words) g.names.push_back(w.str());
  for (const CrystalEdge& e : c.edges) g.edges.push_back({e.src, e.dst, e.i, e.primed});
  return g;
}

LabeledGraph graph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  LabeledGraph g;
  g.n = j.at("n").get<int>();
  std::map<long long, int> idx;
  for (const auto& v : j.at("vertices")) {
    long long id = v.at("id").get<long long>();
    if (!idx.emplace(id, g.size()).second) throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
    auto wt = v.at("weight").get<std::vector<int>>();
    if (static_cast<int>(wt.size()) != g.n) throw std::invalid_argument("weight length differs from n");
    g.weights.push_back(std::move(wt));
    g.names.push_back(v.contains("word") ? v["word"].get<std::string>() : std::to_string(id));
    g.ids.push_back(id);
  }
  for (const auto& e : j.at("edges")) {
    auto s = idx.find(e.at("src").get<long long>()), d = idx.find(e.at("dst").get<long long>());
    if (s == idx.end() || d == idx.end()) throw std::invalid_argument("edge refers to an unknown vertex");
    g.edges.push_back({s->second, d->second, e.at("i").get<int>(), e.value("primed", false)});
  }
  return g;
}

std::string graph_to_json(const LabeledGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n;
  j["vertices"] = nlohmann::ordered_json::array();
  for (int v = 0; v < g.size(); ++v)
    j["vertices"].push_back({{"id", g.id(v)}, {"word", vname(g, v)}, {"weight", g.weights[v]}});
  j["edges"] = nlohmann::ordered_json::array();
  for (const LabeledEdge& e : g.edges)
    j["edges"].push_back({{"src", e.src}, {"dst", e.dst}, {"i", e.i}, {"primed", e.primed}});
  return j.dump(2) + "\n";
}

AxiomReport check_a1(const LabeledGraph& g) {
  AxiomReport r;
  r.axiom = "A1";
  const int slots = 2 * std::max(g.n - 1, 0);
  std::vector<std::vector<int>> out(g.size(), std::vector<int>(slots, 0)), in = out;
  for (const LabeledEdge& x : g.edges) {
    if (x.i < 1 || x.i >= g.n || x.src < 0 || x.src >= g.size() || x.dst < 0 || x.dst >= g.size()) {
      r.fail("edge with invalid label or endpoint: " + std::to_string(x.src) + " -" + label(x.i, x.primed) + "-> " +
             std::to_string(x.dst));
      continue;
    }
    const int s = Adjacency::slot(x.i, x.primed);
    if (++out[x.src][s] == 2) r.fail("two outgoing " + label(x.i, x.primed) + " edges at " + vname(g, x.src));
    if (++in[x.dst][s] == 2) r.fail("two incoming " + label(x.i, x.primed) + " edges at " + vname(g, x.dst));
    std::vector<int> expect = g.weights[x.src];
    expect[x.i - 1] -= 1;
    expect[x.i] += 1;
    if (g.weights[x.dst] != expect)
      r.fail("weight rule fails on " + vname(g, x.src) + " -" + label(x.i, x.primed) + "-> " + vname(g, x.dst));
  }
  return r;
}

AxiomReport check_a2(const LabeledGraph& g, std::vector<std::vector<Lengths>>* lengths) {
  AxiomReport r;
  r.axiom = "A2";
  Adjacency a(g);
  if (lengths) lengths->assign(g.size(), std::vector<Lengths>(std::max(g.n - 1, 0)));
  for (int i = 1; i < g.n; ++i) {
    std::vector<int> seen(g.size(), 0);
    for (int s0 = 0; s0 < g.size(); ++s0) {
      if (seen[s0]) continue;
      std::vector<int> comp;
      std::queue<int> q;
      q.push(s0);
      seen[s0] = 1;
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        comp.push_back(v);
        for (bool p : {false, true})
          for (int w : {a.lower(v, i, p), a.raise(v, i, p)})
            if (w >= 0 && !seen[w]) {
              seen[w] = 1;
              q.push(w);
            }
      }
      const std::string where = "index " + std::to_string(i) + " near " + vname(g, s0);
      std::vector<int> sources;
      for (int v : comp)
        if (a.raise(v, i, false) < 0 && a.raise(v, i, true) < 0) sources.push_back(v);
      if (sources.size() != 1) {
        r.fail("no unique top in the " + label(i, false) + "/" + label(i, true) + " piece, " + where);
        continue;
      }
      std::vector<int> top;
      for (int v = sources[0]; v >= 0 && top.size() <= comp.size(); v = a.lower(v, i, false)) top.push_back(v);
      const int k = static_cast<int>(top.size());
      if (k > static_cast<int>(comp.size())) {
        r.fail("cycle of " + label(i, false) + " edges, " + where);
        continue;
      }
      auto set_len = [&](int v, int j, int phi_p, int eps_p, bool row) {
        if (!lengths) return;
        Lengths& L = (*lengths)[v][i - 1];
        L.hat_phi = k - 1 - j;
        L.hat_eps = j;
        L.phi_prime = row ? L.hat_phi : phi_p;
        L.eps_prime = row ? L.hat_eps : eps_p;
        L.phi = row ? L.hat_phi : L.hat_phi + phi_p;
        L.eps = row ? L.hat_eps : L.hat_eps + eps_p;
      };
      const int first_prime = a.lower(top[0], i, true);
      if (comp.size() == 1 || (first_prime >= 0 && first_prime == a.lower(top[0], i, false))) {
        bool ok = k == static_cast<int>(comp.size());
        for (int j = 0; j < k && ok; ++j) ok = a.lower(top[j], i, true) == a.lower(top[j], i, false);
        if (!ok) {
          r.fail("single row with non-coinciding edges, " + where);
          continue;
        }
        for (int j = 0; j < k; ++j) set_len(top[j], j, 0, 0, true);
        continue;
      }
      std::vector<int> bottom;
      bool ok = 2 * k == static_cast<int>(comp.size());
      for (int j = 0; j < k && ok; ++j) {
        int b = a.lower(top[j], i, true);
        ok = b >= 0 && std::find(top.begin(), top.end(), b) == top.end();
        bottom.push_back(b);
      }
      for (int j = 0; j < k && ok; ++j) {
        ok = a.lower(bottom[j], i, false) == (j + 1 < k ? bottom[j + 1] : -1) && a.lower(bottom[j], i, true) < 0;
      }
      if (ok) ok = a.raise(bottom[0], i, false) < 0;
      if (!ok) {
        r.fail("piece is neither a two-row grid nor a single row, " + where);
        continue;
      }
      for (int j = 0; j < k; ++j) {
        set_len(top[j], j, 1, 0, false);
        set_len(bottom[j], j, 0, 1, false);
      }
    }
  }
  return r;
}

AxiomReport check_a3(const LabeledGraph& g) {
  AxiomReport r;
  r.axiom = "A3";
  Adjacency a(g);
  for (int i = 1; i < g.n; ++i)
    for (int j = i + 2; j < g.n; ++j)
      for (bool pa : {false, true})
        for (bool pb : {false, true})
          for (int v = 0; v < g.size(); ++v) {
            const int x = a.lower(v, i, pa), y = a.lower(v, j, pb);
            if (x >= 0 && y >= 0) {
              const int xy = a.lower(x, j, pb), yx = a.lower(y, i, pa);
              if (xy < 0 || xy != yx)
                r.fail("lowering " + label(i, pa) + "," + label(j, pb) + " do not commute at " + vname(g, v));
            }
            const int u = a.raise(v, i, pa), w = a.raise(v, j, pb);
            if (u >= 0 && w >= 0) {
              const int uw = a.raise(u, j, pb), wu = a.raise(w, i, pa);
              if (uw < 0 || uw != wu)
                r.fail("raising " + label(i, pa) + "," + label(j, pb) + " do not commute at " + vname(g, v));
            }
          }
  return r;
}

AxiomReport check_a4(const LabeledGraph& g) {
  AxiomReport r;
  r.axiom = "A4";
  for (int i = 1; i + 1 < g.n; ++i) {
    LabeledGraph local = induced(g, [&] {
      std::vector<int> all(g.size());
      for (int v = 0; v < g.size(); ++v) all[v] = v;
      return all;
    }(), i, i + 1, true);
    for (const auto& comp : connected(local)) {
      LabeledGraph c = induced(local, comp, 1, 2, false);
      std::optional<int> top = unique_maximum(c);
      const std::string where = "index " + std::to_string(i) + " near " + vname(local, comp[0]);
      if (!top) {
        r.fail("no unique maximum, " + where);
        continue;
      }
      std::optional<StrictPartition> la = as_partition(c.weights[*top]);
      if (!la) {
        r.fail("maximum weight " + show(c.weights[*top]) + " is not a strict partition, " + where);
        continue;
      }
      Isomorphism iso = canonical_isomorphism(c, model_graph(*la, 3));
      if (!iso.ok) r.fail("not isomorphic to the model of (" + la->str() + "): " + iso.witness + ", " + where);
    }
  }
  return r;
}

AxiomReport check_model(const LabeledGraph& g) {
  AxiomReport r;
  r.axiom = "model";
  for (const auto& comp : connected(g)) {
    LabeledGraph c = induced(g, comp, 1, std::max(g.n - 1, 0), false);
    std::optional<int> top = unique_maximum(c);
    if (!top) {
      r.fail("component containing " + vname(g, comp[0]) + " has no unique maximum");
      continue;
    }
    std::optional<StrictPartition> la = as_partition(c.weights[*top]);
    if (!la) {
      r.fail("maximum weight " + show(c.weights[*top]) + " is not a strict partition");
      continue;
    }
    if (!r.highest_weight) r.highest_weight = c.weights[*top];
    if (la->length() > g.n) {
      r.fail("maximum weight has too many parts");
      continue;
    }
    Isomorphism iso = canonical_isomorphism(c, model_graph(*la, g.n));
    if (!iso.ok) r.fail("component of " + vname(g, comp[0]) + " differs from the model: " + iso.witness);
  }
  return r;
}

std::vector<AxiomReport> check_all(const LabeledGraph& g) {
  return {check_a1(g), check_a2(g), check_a3(g), check_a4(g), check_model(g)};
}

std::optional<int> unique_maximum(const LabeledGraph& g) {
  std::vector<int> incoming(g.size(), 0);
  for (const LabeledEdge& x : g.edges)
    if (x.dst >= 0 && x.dst < g.size()) ++incoming[x.dst];
  std::optional<int> top;
  for (int v = 0; v < g.size(); ++v)
    if (incoming[v] == 0) {
      if (top) return std::nullopt;
      top = v;
    }
  return top;
}

Isomorphism canonical_isomorphism(const LabeledGraph& g, const LabeledGraph& h) {
  Isomorphism out;
  if (g.n != h.n) {
    out.witness = "different alphabet bounds";
    return out;
  }
  if (g.size() != h.size()) {
    out.witness = "different vertex counts " + std::to_string(g.size()) + " and " + std::to_string(h.size());
    return out;
  }
  std::optional<int> gt = unique_maximum(g), ht = unique_maximum(h);
  if (!gt || !ht) {
    out.witness = "no unique maximum";
    return out;
  }
  if (g.weights[*gt] != h.weights[*ht]) {
    out.witness = "maxima have different weights " + show(g.weights[*gt]) + " and " + show(h.weights[*ht]);
    return out;
  }
  Adjacency ag(g), ah(h);
  std::vector<int> map(g.size(), -1), inverse(h.size(), -1);
  map[*gt] = *ht;
  inverse[*ht] = *gt;
  std::queue<int> q;
  q.push(*gt);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    const int hv = map[v];
    for (int i = 1; i < g.n; ++i)
      for (bool p : {false, true})
        for (Dir d : {Dir::Lower, Dir::Raise}) {
          const int w = d == Dir::Lower ? ag.lower(v, i, p) : ag.raise(v, i, p);
          const int hw = d == Dir::Lower ? ah.lower(hv, i, p) : ah.raise(hv, i, p);
          const std::string edge = std::string(d == Dir::Lower ? "f_" : "e_") + label(i, p);
          if ((w < 0) != (hw < 0)) {
            out.witness = edge + " defined on only one side at " + vname(g, v);
            return out;
          }
          if (w < 0) continue;
          if (map[w] >= 0) {
            if (map[w] != hw) {
              out.witness = edge + " images disagree at " + vname(g, v);
              return out;
            }
            continue;
          }
          if (inverse[hw] >= 0) {
            out.witness = "two vertices map to " + vname(h, hw);
            return out;
          }
          if (g.weights[w] != h.weights[hw]) {
            out.witness = "weights differ at " + vname(g, w);
            return out;
          }
          map[w] = hw;
          inverse[hw] = w;
          q.push(w);
        }
  }
  for (int v = 0; v < g.size(); ++v)
    if (map[v] < 0) {
      out.witness = vname(g, v) + " is not reached from the maximum";
      return out;
    }
  if (g.edges.size() != h.edges.size()) {
    out.witness = "different edge counts";
    return out;
  }
  out.ok = true;
  out.map = std::move(map);
  return out;
}

Mutation mutate(LabeledGraph& g, std::mt19937_64& rng) {
  if (g.size() == 0) throw std::invalid_argument("cannot mutate an empty graph");
  auto pick = [&](int bound) { return std::uniform_int_distribution<int>(0, bound - 1)(rng); };
  int kind = g.edges.empty() ? 2 : pick(3);
  Mutation m;
  m.kind = static_cast<MutationKind>(kind);
  if (m.kind == MutationKind::DeleteEdge) {
    m.target = pick(static_cast<int>(g.edges.size()));
    const LabeledEdge e = g.edges[m.target];
    m.description = "delete " + vname(g, e.src) + " -" + label(e.i, e.primed) + "-> " + vname(g, e.dst);
    g.edges.erase(g.edges.begin() + m.target);
  } else if (m.kind == MutationKind::FlipLabel) {
    m.target = pick(static_cast<int>(g.edges.size()));
    LabeledEdge& e = g.edges[m.target];
    m.description = "relabel " + vname(g, e.src) + " -" + label(e.i, e.primed) + "-> " + vname(g, e.dst) + " as " +
                    label(e.i, !e.primed);
    e.primed = !e.primed;
  } else {
    m.target = pick(g.size());
    const int coord = pick(g.n);
    const int delta = pick(2) ? 1 : -1;
    g.weights[m.target][coord] += delta;
    m.description = "weight of " + vname(g, m.target) + " coordinate " + std::to_string(coord + 1) +
                    (delta > 0 ? " +1" : " -1");
  }
  return m;
}

}  // namespace shc
