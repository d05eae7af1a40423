#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shcrystal/lattice_walk.hpp"
#include "shcrystal/primed_operators.hpp"
#include "shcrystal/qpolynomial.hpp"
#include "shcrystal/shifted_tableau.hpp"

namespace shc {

struct CrystalEdge {
  int src = 0;
  int dst = 0;
  int i = 1;
  bool primed = false;
};

/// Doubled crystal on ShST(shape, n). Vertices are in enumeration order and are keyed
/// by their (canonical) reading word.
struct CrystalGraph {
  int n = 1;
  SkewShape shape;
  std::vector<ShiftedTableau> tableaux;
  std::vector<Word> words;
  std::vector<std::vector<int>> weights;
  std::vector<CrystalEdge> edges;  // lowering edges, sorted by (src, i, primed)
  // lower[v][slot(i, primed)] / raise[...]: target vertex or -1.
  std::vector<std::vector<int>> lower, raise;

  static int slot(int i, bool primed) { return 2 * (i - 1) + (primed ? 1 : 0); }
  int size() const { return static_cast<int>(words.size()); }
  int f(int v, int i, bool primed) const { return lower[v][slot(i, primed)]; }
  int e(int v, int i, bool primed) const { return raise[v][slot(i, primed)]; }
  int find(const Word& w) const;

  std::map<Word, int> index;
};

CrystalGraph build_crystal(const SkewShape& shape, int n);

/// An operator applied to the reading word and refilled into the same shape.
std::optional<ShiftedTableau> apply_operator(const ShiftedTableau& t, int i, Dir d, bool primed);

/// Mismatches between raising edges (from E, E') and reversed lowering edges.
std::vector<std::string> check_raising_edges(const CrystalGraph& g);

/// (phi_i, epsilon_i): endpoint of the (i,i+1) walk. An empty subword gives (0,0).
std::pair<int, int> phi_epsilon(const Word& w, int i);

/// Length of the i (or i') string from v downward (Lower) or upward (Raise).
int chain_length(const CrystalGraph& g, int v, int i, bool primed, Dir d);

struct Component {
  std::vector<int> vertices;  // ascending
  std::vector<int> highest;   // vertices killed by every raising operator
};

std::vector<Component> components(const CrystalGraph& g);

QPolynomial character(const CrystalGraph& g);
QPolynomial character(const CrystalGraph& g, const std::vector<int>& vertices);

QPolynomial schur_q(const SkewShape& shape, int n);
QPolynomial schur_p(const SkewShape& shape, int n);

struct LRTable {
  std::map<StrictPartition, long long> by_components;  // highest weights of components
  std::map<StrictPartition, long long> by_tableaux;    // LR tableaux by weight
  bool agree() const { return by_components == by_tableaux; }
};

LRTable lr_coefficients(const SkewShape& shape, int n);

struct KashiwaraReport {
  bool pass = true;
  std::vector<std::string> violations;
};

KashiwaraReport verify_kashiwara(const CrystalGraph& g, bool primed);

std::string to_dot(const CrystalGraph& g);
std::string to_json(const CrystalGraph& g);

}  // namespace shc
