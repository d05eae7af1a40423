#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "shcrystal/crystal_graph.hpp"

namespace shc {

struct LabeledEdge {
  int src = 0;
  int dst = 0;
  int i = 1;
  bool primed = false;
  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

/// Finite digraph with Z^n vertex weights and edges labeled i or i' (1 <= i <= n-1).
struct LabeledGraph {
  int n = 1;
  std::vector<std::string> names;
  std::vector<std::vector<int>> weights;
  std::vector<LabeledEdge> edges;
  std::vector<long long> ids;  // ids from the input file; empty means 0..size-1

  int size() const { return static_cast<int>(weights.size()); }
  long long id(int v) const { return ids.empty() ? v : ids[v]; }
};

LabeledGraph from_crystal(const CrystalGraph& g);

/// Reads the crystal JSON export format: {n, vertices:[{id, word?, weight}], edges:[...]}.
LabeledGraph graph_from_json(const std::string& text);
std::string graph_to_json(const LabeledGraph& g);

struct AxiomReport {
  std::string axiom;
  bool pass = true;
  std::vector<std::string> witnesses;
  std::optional<std::vector<int>> highest_weight;

  void fail(std::string w) {
    pass = false;
    witnesses.push_back(std::move(w));
  }
};

/// String lengths attached to a vertex for one index i once (A2) holds.
struct Lengths {
  int hat_phi = 0, hat_eps = 0;
  int phi_prime = 0, eps_prime = 0;
  int phi = 0, eps = 0;
};

AxiomReport check_a1(const LabeledGraph& g);
/// lengths, if given, receives lengths[v][i-1] for every vertex and index.
AxiomReport check_a2(const LabeledGraph& g, std::vector<std::vector<Lengths>>* lengths = nullptr);
AxiomReport check_a3(const LabeledGraph& g);
AxiomReport check_a4(const LabeledGraph& g);

/// Each connected component has one maximum, a strict-partition weight, and is
/// isomorphic to the tableau crystal of that weight.
AxiomReport check_model(const LabeledGraph& g);

/// A1-A4 followed by the model comparison.
std::vector<AxiomReport> check_all(const LabeledGraph& g);

/// The unique vertex with no incoming edges, or nothing if there is not exactly one.
std::optional<int> unique_maximum(const LabeledGraph& g);

struct Isomorphism {
  bool ok = false;
  std::vector<int> map;  // map[g vertex] = h vertex
  std::string witness;
};

/// Layered matching from the unique maxima along lowering edges.
Isomorphism canonical_isomorphism(const LabeledGraph& g, const LabeledGraph& h);

enum class MutationKind { DeleteEdge, FlipLabel, PerturbWeight };

struct Mutation {
  MutationKind kind = MutationKind::DeleteEdge;
  int target = 0;  // edge index, or vertex index for weights
  std::string description;
};

/// One random corruption: drop an edge, toggle an edge's prime, or shift one weight coordinate by 1.
Mutation mutate(LabeledGraph& g, std::mt19937_64& rng);

}  // namespace shc
