#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shcrystal/word.hpp"

namespace shc {

/// Strictly decreasing positive parts. Construction validates.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);

  /// "4,1" or "" (empty).
  static StrictPartition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int operator[](int r) const { return r < length() ? parts_[r] : 0; }
  bool empty() const { return parts_.empty(); }
  std::string str() const;

  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
  friend auto operator<=>(const StrictPartition& a, const StrictPartition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// All strict partitions of n.
std::vector<StrictPartition> strict_partitions(int n);

struct Cell {
  int row = 0;
  int col = 0;
  friend constexpr bool operator==(Cell, Cell) = default;
  friend constexpr auto operator<=>(Cell, Cell) = default;
};

/// Shifted skew shape outer/inner. Row r holds columns r+inner[r] .. r+outer[r]-1.
class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(StrictPartition outer, StrictPartition inner = {});

  const StrictPartition& outer() const { return outer_; }
  const StrictPartition& inner() const { return inner_; }
  int rows() const { return outer_.length(); }
  int row_begin(int r) const { return r + inner_[r]; }
  int row_end(int r) const { return r + outer_[r]; }  // one past the last column
  int row_size(int r) const { return outer_[r] - inner_[r]; }
  int size() const { return outer_.size() - inner_.size(); }
  bool contains(Cell c) const;
  bool is_straight() const { return inner_.empty(); }

  /// Cells in reading order: rows bottom to top, each left to right.
  std::vector<Cell> reading_cells() const;
  /// Cells in column order: columns left to right, each bottom to top.
  std::vector<Cell> column_cells() const;
  std::string str() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  StrictPartition outer_, inner_;
};

/// All strict inner partitions contained in outer (including empty and outer itself).
std::vector<StrictPartition> contained_partitions(const StrictPartition& outer);

enum class Variant { Canonical, Q, P };

/// A filling of a skew shape. Rows are stored left to right, skew cells only.
class ShiftedTableau {
 public:
  ShiftedTableau() = default;
  ShiftedTableau(SkewShape shape, std::vector<LetterString> rows);

  /// Fills the shape in reading order from a sequence of letters.
  static ShiftedTableau from_reading(const SkewShape& shape, std::span<const Letter> letters);

  const SkewShape& shape() const { return shape_; }
  const std::vector<LetterString>& rows() const { return rows_; }
  Letter at(Cell c) const { return rows_[c.row][c.col - shape_.row_begin(c.row)]; }
  void set(Cell c, Letter l) { rows_[c.row][c.col - shape_.row_begin(c.row)] = l; }

  LetterString reading_letters() const;
  Word reading_word() const { return Word(reading_letters()); }
  Word column_word() const;
  std::vector<int> weight(int n = 0) const { return reading_word().weight(n); }

  /// Replaces the first letter of each value in reading order by its unprimed form.
  ShiftedTableau canonicalized() const;

  /// Text form: one row per line, top first, "." for inner cells.
  std::string str() const;
  static ShiftedTableau parse(std::string_view text);

  friend bool operator==(const ShiftedTableau&, const ShiftedTableau&) = default;

 private:
  SkewShape shape_;
  std::vector<LetterString> rows_;
};

/// Row/column conditions plus the variant condition.
bool is_semistandard(const ShiftedTableau& t, Variant v = Variant::Canonical);

/// Same question for the canonical variant, answered through the standardization.
bool is_semistandard_by_standardization(const ShiftedTableau& t);

/// Standard tableau numbers 1..N per cell (same layout as rows()).
std::vector<std::vector<int>> standardize(const ShiftedTableau& t);
bool is_standard(const SkewShape& shape, const std::vector<std::vector<int>>& numbers);

/// Visits every semistandard tableau of the shape over values 1..n exactly once, in
/// backtracking order (cells in reading order, letters ascending).
void enumerate(const SkewShape& shape, int n, Variant v,
               const std::function<void(const ShiftedTableau&)>& visit);
std::vector<ShiftedTableau> enumerate_all(const SkewShape& shape, int n, Variant v = Variant::Canonical);

/// Straight tableau whose i-th row is all i.
ShiftedTableau highest_tableau(const StrictPartition& lambda);

/// eta_1 on a {1,2}-tableau: reflect across the antidiagonal of the size-N staircase,
/// swap 1 and 2 as in eta, canonicalize. N defaults to the smallest that fits.
ShiftedTableau eta_tableau(const ShiftedTableau& t, int staircase = 0);

}  // namespace shc
