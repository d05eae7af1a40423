#include "shcrystal/shifted_tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shc {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw std::invalid_argument("strict partition parts must be positive");
    if (k > 0 && parts_[k] >= parts_[k - 1])
      throw std::invalid_argument("strict partition parts must strictly decrease");
  }
}

StrictPartition StrictPartition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream in{std::string(text)};
  while (std::getline(in, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition part '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad partition part '" + tok + "'");
    parts.push_back(v);
  }
  return StrictPartition(std::move(parts));
}

int StrictPartition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::string StrictPartition::str() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

namespace {

void strict_parts_rec(int remaining, int max_part, std::vector<int>& cur,
                      std::vector<StrictPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    strict_parts_rec(remaining - p, p - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<StrictPartition> strict_partitions(int n) {
  std::vector<StrictPartition> out;
  std::vector<int> cur;
  strict_parts_rec(n, n, cur, out);
  return out;
}

std::vector<StrictPartition> contained_partitions(const StrictPartition& outer) {
  std::vector<StrictPartition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int r) {
    out.emplace_back(cur);
    if (r >= outer.length()) return;
    int cap = std::min(outer[r], r == 0 ? outer[0] : cur.back() - 1);
    for (int p = cap; p >= 1; --p) {
      cur.push_back(p);
      rec(r + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const StrictPartition& a, const StrictPartition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
  });
  return out;
}

SkewShape::SkewShape(StrictPartition outer, StrictPartition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (inner_.length() > outer_.length())
    throw std::invalid_argument("inner shape has more rows than outer shape");
  for (int r = 0; r < inner_.length(); ++r)
    if (inner_[r] > outer_[r]) throw std::invalid_argument("inner shape is not contained in outer shape");
}

bool SkewShape::contains(Cell c) const {
  return c.row >= 0 && c.row < rows() && c.col >= row_begin(c.row) && c.col < row_end(c.row);
}

std::vector<Cell> SkewShape::reading_cells() const {
  std::vector<Cell> out;
  for (int r = rows() - 1; r >= 0; --r)
    for (int c = row_begin(r); c < row_end(r); ++c) out.push_back({r, c});
  return out;
}

std::vector<Cell> SkewShape::column_cells() const {
  std::vector<Cell> out;
  const int width = rows() ? row_end(0) : 0;
  for (int c = 0; c < width; ++c)
    for (int r = std::min(c, rows() - 1); r >= 0; --r)
      if (contains({r, c})) out.push_back({r, c});
  return out;
}

std::string SkewShape::str() const {
  return inner_.empty() ? "(" + outer_.str() + ")" : "(" + outer_.str() + ")/(" + inner_.str() + ")";
}

ShiftedTableau::ShiftedTableau(SkewShape shape, std::vector<LetterString> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.rows())
    throw std::invalid_argument("row count does not match the shape");
  for (int r = 0; r < shape_.rows(); ++r)
    if (static_cast<int>(rows_[r].size()) != shape_.row_size(r))
      throw std::invalid_argument("row " + std::to_string(r + 1) + " has the wrong length");
}

ShiftedTableau ShiftedTableau::from_reading(const SkewShape& shape, std::span<const Letter> letters) {
  if (static_cast<int>(letters.size()) != shape.size())
    throw std::invalid_argument("letter count does not match the shape");
  std::vector<LetterString> rows(shape.rows());
  std::size_t k = 0;
  for (int r = shape.rows() - 1; r >= 0; --r)
    for (int c = 0; c < shape.row_size(r); ++c) rows[r].push_back(letters[k++]);
  return ShiftedTableau(shape, std::move(rows));
}

LetterString ShiftedTableau::reading_letters() const {
  LetterString out;
  out.reserve(shape_.size());
  for (int r = shape_.rows() - 1; r >= 0; --r) out.insert(out.end(), rows_[r].begin(), rows_[r].end());
  return out;
}

Word ShiftedTableau::column_word() const {
  LetterString out;
  for (Cell c : shape_.column_cells()) out.push_back(at(c));
  return Word(std::move(out));
}

ShiftedTableau ShiftedTableau::canonicalized() const {
  return from_reading(shape_, canonicalize(reading_letters()));
}

std::string ShiftedTableau::str() const {
  std::size_t width = 1;
  for (const auto& row : rows_)
    for (Letter l : row) width = std::max(width, l.str().size());
  std::string out;
  for (int r = 0; r < shape_.rows(); ++r) {
    std::string line(r * (width + 1), ' ');
    std::vector<std::string> toks(shape_.inner()[r], ".");
    for (Letter l : rows_[r]) toks.push_back(l.str());
    for (std::size_t k = 0; k < toks.size(); ++k) {
      if (k) line += ' ';
      line += toks[k];
      if (k + 1 < toks.size()) line += std::string(width - toks[k].size(), ' ');
    }
    out += line;
    out += '\n';
  }
  return out;
}

ShiftedTableau ShiftedTableau::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<int> outer, inner;
  std::vector<LetterString> rows;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    int dots = 0;
    LetterString row;
    while (ls >> tok) {
      if (tok == ".") {
        if (!row.empty()) throw ParseError("'.' after a letter in row " + std::to_string(rows.size() + 1));
        ++dots;
      } else {
        row.push_back(parse_letter(tok));
      }
    }
    if (dots == 0 && row.empty()) continue;
    inner.push_back(dots);
    outer.push_back(dots + static_cast<int>(row.size()));
    rows.push_back(std::move(row));
  }
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  return ShiftedTableau(SkewShape(StrictPartition(outer), StrictPartition(inner)), std::move(rows));
}

namespace {

bool row_ok(Letter a, Letter b) { return a < b || (a == b && !a.primed); }
bool col_ok(Letter a, Letter b) { return a < b || (a == b && a.primed); }

}  // namespace

bool is_semistandard(const ShiftedTableau& t, Variant v) {
  const SkewShape& s = t.shape();
  for (int r = 0; r < s.rows(); ++r)
    for (int c = s.row_begin(r); c < s.row_end(r); ++c) {
      Letter a = t.at({r, c});
      if (s.contains({r, c + 1}) && !row_ok(a, t.at({r, c + 1}))) return false;
      if (s.contains({r + 1, c}) && !col_ok(a, t.at({r + 1, c}))) return false;
      if (v == Variant::P && c == r && a.primed) return false;
    }
  if (v == Variant::Canonical) return is_canonical(t.reading_letters());
  return true;
}

std::vector<std::vector<int>> standardize(const ShiftedTableau& t) {
  std::vector<int> st = standardize(t.reading_letters());
  std::vector<std::vector<int>> out(t.shape().rows());
  std::size_t k = 0;
  for (int r = t.shape().rows() - 1; r >= 0; --r)
    for (int c = 0; c < t.shape().row_size(r); ++c) out[r].push_back(st[k++]);
  return out;
}

bool is_standard(const SkewShape& s, const std::vector<std::vector<int>>& num) {
  auto at = [&](int r, int c) { return num[r][c - s.row_begin(r)]; };
  for (int r = 0; r < s.rows(); ++r)
    for (int c = s.row_begin(r); c < s.row_end(r); ++c) {
      if (s.contains({r, c + 1}) && at(r, c) >= at(r, c + 1)) return false;
      if (s.contains({r + 1, c}) && at(r, c) >= at(r + 1, c)) return false;
    }
  return true;
}

bool is_semistandard_by_standardization(const ShiftedTableau& t) {
  return is_canonical(t.reading_letters()) && is_standard(t.shape(), standardize(t));
}

void enumerate(const SkewShape& shape, int n, Variant v,
               const std::function<void(const ShiftedTableau&)>& visit) {
  const std::vector<Cell> cells = shape.reading_cells();
  std::vector<LetterString> rows(shape.rows());
  for (int r = 0; r < shape.rows(); ++r) rows[r].resize(shape.row_size(r));
  ShiftedTableau t(shape, rows);
  std::vector<int> count(n + 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      visit(t);
      return;
    }
    const Cell c = cells[k];
    const bool has_left = shape.contains({c.row, c.col - 1});
    const bool has_below = shape.contains({c.row + 1, c.col});
    for (int rank = 1; rank <= 2 * n; ++rank) {
      Letter l((rank + 1) / 2, rank % 2 == 1);
      if (has_left && !row_ok(t.at({c.row, c.col - 1}), l)) continue;
      if (has_below) {
        Letter b = t.at({c.row + 1, c.col});
        if (l > b) break;
        if (!col_ok(l, b)) continue;
      }
      if (v == Variant::Canonical && l.primed && count[l.value] == 0) continue;
      if (v == Variant::P && l.primed && c.col == c.row) continue;
      t.set(c, l);
      ++count[l.value];
      rec(k + 1);
      --count[l.value];
    }
  };
  rec(0);
}

std::vector<ShiftedTableau> enumerate_all(const SkewShape& shape, int n, Variant v) {
  std::vector<ShiftedTableau> out;
  enumerate(shape, n, v, [&](const ShiftedTableau& t) { out.push_back(t); });
  return out;
}

ShiftedTableau highest_tableau(const StrictPartition& lambda) {
  std::vector<LetterString> rows;
  for (int r = 0; r < lambda.length(); ++r) rows.emplace_back(lambda[r], Letter(r + 1));
  return ShiftedTableau(SkewShape(lambda), std::move(rows));
}

ShiftedTableau eta_tableau(const ShiftedTableau& t, int staircase) {
  const SkewShape& s = t.shape();
  const int width = s.rows() ? s.row_end(0) : 0;
  const int N = staircase ? staircase : width;
  if (N < width) throw std::invalid_argument("eta_tableau: shape does not fit the staircase");
  for (int r = 0; r < s.rows(); ++r)
    for (Letter l : t.rows()[r])
      if (l.value > 2) throw std::invalid_argument("eta_tableau: entries must have value 1 or 2");

  // Cell (r,c) goes to (N-1-c, N-1-r). The new outer shape is the reflection of the
  // staircase minus the old inner shape, and the new inner shape the reflection of the
  // staircase minus the old outer shape.
  auto column_count = [&](const StrictPartition& p, int c) {
    int k = 0;
    for (int r = 0; r <= c && r < p.length(); ++r) k += (r + p[r] > c);
    return k;
  };
  std::vector<int> outer(N), inner(N);
  for (int r = 0; r < N; ++r) {
    const int c = N - 1 - r;
    outer[r] = c + 1 - column_count(s.inner(), c);
    inner[r] = c + 1 - column_count(s.outer(), c);
  }
  SkewShape shape{StrictPartition(outer), StrictPartition(inner)};
  std::vector<LetterString> rows(shape.rows());
  for (int r = 0; r < shape.rows(); ++r) rows[r].resize(shape.row_size(r));
  ShiftedTableau out(shape, rows);
  for (int r = 0; r < s.rows(); ++r)
    for (int c = s.row_begin(r); c < s.row_end(r); ++c) {
      Cell d{N - 1 - c, N - 1 - r};
      if (!shape.contains(d)) throw std::logic_error("eta_tableau: reflected cell outside shape");
      Letter l = t.at({r, c});
      out.set(d, Letter(3 - l.value, !l.primed));
    }
  if (shape.size() != s.size()) throw std::logic_error("eta_tableau: reflected shape has the wrong size");
  return out.canonicalized();
}

}  // namespace shc
