#include "shcrystal/jeu_de_taquin.hpp"

#include <stdexcept>

namespace shc {

namespace {

// Standard numbers on a grid covering the outer shape plus a margin. 0 means empty.
struct StdGrid {
  std::vector<int> outer, inner;
  std::vector<std::vector<int>> num;

  explicit StdGrid(const ShiftedTableau& t) {
    const SkewShape& s = t.shape();
    const int rows = s.rows();
    const int width = rows ? s.row_end(0) : 0;
    outer.assign(rows + 1, 0);
    inner.assign(rows + 1, 0);
    for (int r = 0; r < rows; ++r) {
      outer[r] = s.outer()[r];
      inner[r] = s.inner()[r];
    }
    num.assign(rows + 2, std::vector<int>(width + 2, 0));
    auto st = standardize(t);
    for (int r = 0; r < rows; ++r)
      for (int c = s.row_begin(r); c < s.row_end(r); ++c) num[r][c] = st[r][c - s.row_begin(r)];
  }

  void grow(int rows, int width) {
    if (static_cast<int>(num.size()) < rows + 2) num.resize(rows + 2);
    for (auto& row : num)
      if (static_cast<int>(row.size()) < width + 2) row.resize(width + 2, 0);
    if (static_cast<int>(outer.size()) < rows + 1) {
      outer.resize(rows + 1, 0);
      inner.resize(rows + 1, 0);
    }
  }

  int at(int r, int c) const {
    if (r < 0 || c < 0 || r >= static_cast<int>(num.size()) || c >= static_cast<int>(num[r].size())) return 0;
    return num[r][c];
  }

  SkewShape shape() const { return SkewShape(StrictPartition(outer), StrictPartition(inner)); }

  std::vector<Cell> inner_slide(Cell h) {
    std::vector<Cell> path{h};
    for (;;) {
      const int right = at(h.row, h.col + 1), below = at(h.row + 1, h.col);
      Cell next;
      if (right && (!below || right < below))
        next = {h.row, h.col + 1};
      else if (below)
        next = {h.row + 1, h.col};
      else
        break;
      num[h.row][h.col] = num[next.row][next.col];
      num[next.row][next.col] = 0;
      h = next;
      path.push_back(h);
    }
    --outer[h.row];
    return path;
  }

  std::vector<Cell> outer_slide(Cell h) {
    grow(h.row + 1, h.col + 1);
    ++outer[h.row];
    std::vector<Cell> path{h};
    for (;;) {
      const int left = at(h.row, h.col - 1), up = at(h.row - 1, h.col);
      Cell next;
      if (left && (!up || left > up))
        next = {h.row, h.col - 1};
      else if (up)
        next = {h.row - 1, h.col};
      else
        break;
      num[h.row][h.col] = num[next.row][next.col];
      num[next.row][next.col] = 0;
      h = next;
      path.push_back(h);
    }
    ++inner[h.row];
    return path;
  }

  ShiftedTableau letters(const std::vector<int>& weight) const {
    SkewShape s = shape();
    std::vector<int> perm;
    for (Cell c : s.reading_cells()) perm.push_back(at(c.row, c.col));
    auto w = unstandardize(perm, weight);
    if (!w) throw std::logic_error("jeu de taquin: slid standard tableau has no unstandardization");
    return ShiftedTableau::from_reading(s, w->letters());
  }
};

bool priming_changed(const ShiftedTableau& before, const ShiftedTableau& after) {
  auto a = before.reading_letters(), b = after.reading_letters();
  auto sa = standardize(a), sb = standardize(b);
  std::vector<Letter> by_num_a(a.size()), by_num_b(b.size());
  for (std::size_t k = 0; k < a.size(); ++k) by_num_a[sa[k] - 1] = a[k];
  for (std::size_t k = 0; k < b.size(); ++k) by_num_b[sb[k] - 1] = b[k];
  return by_num_a != by_num_b;
}

bool in(const std::vector<Cell>& v, Cell c) {
  for (Cell x : v)
    if (x == c) return true;
  return false;
}

}  // namespace

std::vector<Cell> inner_corners(const SkewShape& s) {
  std::vector<Cell> out;
  const StrictPartition& mu = s.inner();
  for (int r = 0; r < mu.length(); ++r) {
    const int shrunk = mu[r] - 1;
    if (shrunk > mu[r + 1] || (shrunk == 0 && mu[r + 1] == 0)) out.push_back({r, r + mu[r] - 1});
  }
  return out;
}

std::vector<Cell> outer_corners(const SkewShape& s) {
  std::vector<Cell> out;
  const StrictPartition& la = s.outer();
  for (int r = 0; r <= la.length(); ++r) {
    const int grown = la[r] + 1;
    if (r == 0 || grown < la[r - 1]) out.push_back({r, r + la[r]});
  }
  return out;
}

std::pair<ShiftedTableau, SlideRecord> inner_slide(const ShiftedTableau& t, Cell corner) {
  if (!in(inner_corners(t.shape()), corner)) throw std::invalid_argument("not an inner corner");
  StdGrid g(t);
  --g.inner[corner.row];
  SlideRecord rec{corner, g.inner_slide(corner), false};
  ShiftedTableau out = g.letters(t.weight());
  rec.special_prime_applied = priming_changed(t, out);
  return {out, rec};
}

std::pair<ShiftedTableau, SlideRecord> outer_slide(const ShiftedTableau& t, Cell corner) {
  if (!in(outer_corners(t.shape()), corner)) throw std::invalid_argument("not an outer corner");
  StdGrid g(t);
  SlideRecord rec{corner, g.outer_slide(corner), false};
  ShiftedTableau out = g.letters(t.weight());
  rec.special_prime_applied = priming_changed(t, out);
  return {out, rec};
}

ShiftedTableau rectify(const ShiftedTableau& t, RectifyPolicy policy) {
  if (t.shape().is_straight()) return t;
  StdGrid g(t);
  for (;;) {
    std::vector<Cell> corners = inner_corners(g.shape());
    if (corners.empty()) break;
    Cell c = policy == RectifyPolicy::TopRight ? corners.front() : corners.back();
    --g.inner[c.row];
    g.inner_slide(c);
  }
  return g.letters(t.weight());
}

ShiftedTableau diagonal_tableau(const Word& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> outer, inner;
  for (int r = 0; r < n; ++r) {
    outer.push_back(2 * (n - r) - 1);
    inner.push_back(2 * (n - r) - 2);
  }
  SkewShape s{StrictPartition(outer), StrictPartition(inner)};
  return ShiftedTableau::from_reading(s, w.letters());
}

bool is_littlewood_richardson(const ShiftedTableau& t) {
  ShiftedTableau r = rectify(t);
  return r == highest_tableau(r.shape().outer());
}

}  // namespace shc
