#pragma once

#include <set>
#include <string>
#include <vector>

#include "shcrystal/shifted_tableau.hpp"

namespace shc {

/// a <_row b: a primed and a <= b, or a unprimed and a < b.
bool row_precedes(Letter a, Letter b);
/// a <_col b: a primed and a < b, or a unprimed and a <= b.
bool col_precedes(Letter a, Letter b);

struct InsertionStep {
  Cell cell;                      // the new cell
  bool schensted = true;          // false iff column bumping happened
  std::vector<Cell> bump_path;    // cells whose entries were replaced, in order
};

/// Mixed insertion of one letter into a straight-shape filling (not canonicalized).
InsertionStep mixed_insert(std::vector<LetterString>& rows, Letter a);

struct RecordingTableau {
  StrictPartition shape;
  std::vector<std::vector<int>> rows;  // step numbers 1..n
  std::set<int> circled;

  std::string str() const;  // circled entries printed as (k)
  friend bool operator==(const RecordingTableau&, const RecordingTableau&) = default;
};

struct RSKResult {
  ShiftedTableau P;
  RecordingTableau Q;
  std::vector<InsertionStep> steps;
};

/// Insertion tableau (kept in canonical form after every step) and circled recording tableau.
RSKResult shifted_rsk(const Word& w);

/// Circled positions (1-based) of a {1,2}-word, read directly off the word and its walk.
std::set<int> circled_positions_fast(const Word& w);

/// Same recording tableau (entries and circles) for the two reading words.
bool dual_equivalent(const ShiftedTableau& a, const ShiftedTableau& b);

}  // namespace shc
