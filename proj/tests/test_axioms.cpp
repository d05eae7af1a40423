#include <random>

#include "doctest.h"
#include "shcrystal/axiom_verifier.hpp"
#include "shcrystal/jeu_de_taquin.hpp"

using namespace shc;

namespace {

LabeledGraph model(std::vector<int> outer, int n, std::vector<int> inner = {}) {
  return from_crystal(build_crystal(SkewShape{StrictPartition(outer), StrictPartition(inner)}, n));
}

bool all_pass(const LabeledGraph& g) {
  for (const AxiomReport& r : check_all(g))
    if (!r.pass) return false;
  return true;
}

}  // namespace

TEST_CASE("model crystals satisfy every axiom") {
  for (int n = 1; n <= 4; ++n)
    for (int size = 0; size <= 6; ++size)
      for (const StrictPartition& la : strict_partitions(size)) {
        if (la.length() > n) continue;
        LabeledGraph g = from_crystal(build_crystal(SkewShape(la), n));
        for (const AxiomReport& r : check_all(g)) {
          INFO(la.str(), " n=", n, " ", r.axiom, " ", (r.witnesses.empty() ? "" : r.witnesses[0]));
          CHECK(r.pass);
          CHECK(r.pass == r.witnesses.empty());
        }
      }
}

TEST_CASE("A1 degree and weight rules") {
  LabeledGraph single{2, {"v"}, {{1, 0}}, {}};
  CHECK(check_a1(single).pass);
  CHECK(check_a1(LabeledGraph{}).pass);

  LabeledGraph g = model({2}, 2);
  g.edges.push_back(g.edges[0]);
  AxiomReport r = check_a1(g);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witnesses.empty());

  LabeledGraph bad{2, {"a", "b"}, {{1, 0}, {1, 0}}, {{0, 1, 1, false}}};
  CHECK_FALSE(check_a1(bad).pass);
  LabeledGraph out_of_range{2, {"a", "b"}, {{1, 0}, {0, 1}}, {{0, 1, 2, false}}};
  CHECK_FALSE(check_a1(out_of_range).pass);
}

TEST_CASE("A2 templates and length functions") {
  CHECK(check_a2(LabeledGraph{}).pass);
  LabeledGraph cycle{2, {"a", "b", "c"}, {{1, 0}, {1, 0}, {1, 0}},
                     {{0, 1, 1, false}, {1, 2, 1, false}, {2, 0, 1, false}}};
  CHECK_FALSE(check_a2(cycle).pass);

  for (auto [outer, n] : std::vector<std::pair<std::vector<int>, int>>{{{4, 1}, 2}, {{3, 1}, 3}, {{3, 2, 1}, 3}}) {
    CrystalGraph c = build_crystal(SkewShape(StrictPartition(outer)), n);
    std::vector<std::vector<Lengths>> len;
    REQUIRE(check_a2(from_crystal(c), &len).pass);
    for (int v = 0; v < c.size(); ++v)
      for (int i = 1; i < n; ++i) {
        const Lengths& L = len[v][i - 1];
        auto [phi, eps] = phi_epsilon(c.words[v], i);
        CHECK(L.phi == phi);
        CHECK(L.eps == eps);
        CHECK(L.hat_phi == chain_length(c, v, i, false, Dir::Lower));
        CHECK(L.hat_eps == chain_length(c, v, i, false, Dir::Raise));
        CHECK(L.phi_prime == chain_length(c, v, i, true, Dir::Lower));
        CHECK(L.eps_prime == chain_length(c, v, i, true, Dir::Raise));
      }
  }
}

TEST_CASE("A2 grid on the (4,1) crystal has a vertex where hat-phi and phi differ") {
  CrystalGraph c = build_crystal(SkewShape(StrictPartition({4, 1})), 2);
  std::vector<std::vector<Lengths>> len;
  REQUIRE(check_a2(from_crystal(c), &len).pass);
  const int top = c.find(highest_tableau(StrictPartition({4, 1})).reading_word());
  REQUIRE(top >= 0);
  CHECK(len[top][0].hat_phi == 2);
  CHECK(len[top][0].phi == 3);
}

TEST_CASE("A3 commuting squares") {
  CHECK(check_a3(model({3, 2, 1}, 4)).pass);
  CHECK(check_a3(model({2, 1}, 2)).pass);
  // v -1-> a -3-> c, v -3-> b -1-> d with c != d
  LabeledGraph broken{4, {"v", "a", "b", "c", "d"}, {{1, 0, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 1, 0, 1}},
                      {{0, 1, 1, false}, {0, 2, 3, false}, {1, 3, 3, false}, {2, 4, 1, false}}};
  CHECK_FALSE(check_a3(broken).pass);
  broken.edges.pop_back();
  CHECK_FALSE(check_a3(broken).pass);
}

TEST_CASE("A4 local comparison") {
  CHECK(check_a4(model({4, 2, 1}, 4)).pass);
  CHECK(check_a4(LabeledGraph{3, {"v"}, {{0, 0, 0}}, {}}).pass);
  CHECK_FALSE(check_a4(LabeledGraph{3, {"v"}, {{2, 1, 0}}, {}}).pass);  // ShST((2,1),3) is larger
  AxiomReport r = check_a4(LabeledGraph{3, {"v"}, {{1, 2, 0}}, {}});
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witnesses.empty());
  CHECK(check_a4(LabeledGraph{2, {"v"}, {{1, 2}}, {}}).pass);  // vacuous for n = 2
}

TEST_CASE("unique maximum") {
  CrystalGraph c = build_crystal(SkewShape(StrictPartition({4, 1})), 2);
  auto top = unique_maximum(from_crystal(c));
  REQUIRE(top);
  CHECK(c.tableaux[*top].str() == highest_tableau(StrictPartition({4, 1})).str());
  CHECK(unique_maximum(LabeledGraph{2, {"v"}, {{0, 0}}, {}}) == 0);
  CHECK_FALSE(unique_maximum(LabeledGraph{2, {"a", "b"}, {{1, 0}, {1, 0}}, {}}));

  // each component of a skew crystal tops out at its LR tableau
  CrystalGraph s = build_crystal(SkewShape{StrictPartition({4, 2}), StrictPartition({1})}, 3);
  for (const Component& comp : components(s)) {
    REQUIRE(comp.highest.size() == 1);
    CHECK(is_littlewood_richardson(s.tableaux[comp.highest[0]]));
  }
}

TEST_CASE("canonical isomorphism") {
  LabeledGraph g = model({3, 1}, 2);
  Isomorphism id = canonical_isomorphism(g, g);
  REQUIRE(id.ok);
  for (int v = 0; v < g.size(); ++v) CHECK(id.map[v] == v);

  // reversed roles give the inverse
  LabeledGraph shuffled = g;
  std::vector<int> perm(g.size());
  for (int v = 0; v < g.size(); ++v) perm[v] = g.size() - 1 - v;
  for (int v = 0; v < g.size(); ++v) {
    shuffled.weights[perm[v]] = g.weights[v];
    shuffled.names[perm[v]] = g.names[v];
  }
  for (LabeledEdge& e : shuffled.edges) e = {perm[e.src], perm[e.dst], e.i, e.primed};
  Isomorphism a = canonical_isomorphism(g, shuffled), b = canonical_isomorphism(shuffled, g);
  REQUIRE(a.ok);
  REQUIRE(b.ok);
  for (int v = 0; v < g.size(); ++v) {
    CHECK(a.map[v] == perm[v]);
    CHECK(b.map[a.map[v]] == v);
  }

  Isomorphism bad = canonical_isomorphism(model({3, 1}, 2), model({4}, 2));
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.witness.empty());
}

TEST_CASE("skew components match their models") {
  for (auto [outer, inner] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
           {{4, 2}, {1}}, {{4, 2, 1}, {2}}, {{5, 2}, {3, 1}}, {{3, 1}, {2}}}) {
    CrystalGraph s = build_crystal(SkewShape{StrictPartition(outer), StrictPartition(inner)}, 3);
    LabeledGraph g = from_crystal(s);
    AxiomReport r = check_model(g);
    CHECK(r.pass);
    CHECK(check_a1(g).pass);
    CHECK(check_a2(g).pass);
    CHECK(check_a4(g).pass);
  }
}

TEST_CASE("json ingestion round trips the crystal export") {
  CrystalGraph c = build_crystal(SkewShape(StrictPartition({3, 1})), 3);
  LabeledGraph a = from_crystal(c);
  LabeledGraph b = graph_from_json(to_json(c));
  CHECK(a.n == b.n);
  CHECK(a.weights == b.weights);
  CHECK(a.names == b.names);
  CHECK(a.edges == b.edges);
  LabeledGraph d = graph_from_json(graph_to_json(a));
  CHECK(d.edges == a.edges);
  CHECK_THROWS(graph_from_json("{\"n\":2,\"vertices\":[{\"id\":0,\"weight\":[1]}],\"edges\":[]}"));
  CHECK_THROWS(graph_from_json("not json"));
}

TEST_CASE("random single mutations are caught") {
  std::mt19937_64 rng(12345);
  std::vector<LabeledGraph> models = {model({3, 1}, 2), model({4, 1}, 2), model({2, 1}, 3), model({3, 2}, 3),
                                      model({3, 1}, 4), model({4, 2}, 3, {1})};
  for (int trial = 0; trial < 300; ++trial) {
    LabeledGraph g = models[trial % models.size()];
    Mutation m = mutate(g, rng);
    INFO(m.description);
    CHECK_FALSE(all_pass(g));
  }
}
