#include "shcrystal/mixed_insertion.hpp"

#include <stdexcept>

#include "shcrystal/lattice_walk.hpp"

namespace shc {

bool row_precedes(Letter a, Letter b) { return a.primed ? a <= b : a < b; }
bool col_precedes(Letter a, Letter b) { return a.primed ? a < b : a <= b; }

InsertionStep mixed_insert(std::vector<LetterString>& rows, Letter a) {
  InsertionStep step;
  Letter x = a;
  int r = 0;
  // Row phase.
  for (;; ++r) {
    if (r == static_cast<int>(rows.size())) rows.emplace_back();
    LetterString& row = rows[r];
    std::size_t k = 0;
    while (k < row.size() && !row_precedes(x, row[k])) ++k;
    if (k == row.size()) {
      row.push_back(x);
      step.cell = {r, r + static_cast<int>(k)};
      return step;
    }
    std::swap(x, row[k]);
    step.bump_path.push_back({r, r + static_cast<int>(k)});
    if (k == 0) break;  // bumped off the diagonal
  }
  // Column phase, starting one column to the right of the diagonal cell.
  step.schensted = false;
  for (int c = r + 1;; ++c) {
    int rr = 0;
    for (; rr < static_cast<int>(rows.size()) && rr <= c; ++rr) {
      const int idx = c - rr;
      if (idx >= static_cast<int>(rows[rr].size())) break;
      if (col_precedes(x, rows[rr][idx])) break;
    }
    const bool placed = rr == static_cast<int>(rows.size()) || rr > c ||
                        c - rr >= static_cast<int>(rows[rr].size());
    if (placed) {
      if (rr == static_cast<int>(rows.size())) rows.emplace_back();
      if (static_cast<int>(rows[rr].size()) != c - rr)
        throw std::logic_error("mixed_insert: column phase left a gap");
      rows[rr].push_back(x);
      step.cell = {rr, c};
      return step;
    }
    std::swap(x, rows[rr][c - rr]);
    step.bump_path.push_back({rr, c});
  }
}

std::string RecordingTableau::str() const {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line(r * 4, ' ');
    for (std::size_t k = 0; k < rows[r].size(); ++k) {
      const int v = rows[r][k];
      std::string tok = circled.count(v) ? "(" + std::to_string(v) + ")" : " " + std::to_string(v) + " ";
      if (k) line += ' ';
      line += tok;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

namespace {

// Canonical form in reading order (bottom row first).
void canonicalize_rows(std::vector<LetterString>& rows) {
  std::vector<bool> seen;
  for (std::size_t r = rows.size(); r-- > 0;)
    for (Letter& l : rows[r]) {
      if (static_cast<std::size_t>(l.value) >= seen.size()) seen.resize(l.value + 1, false);
      if (!seen[l.value]) {
        seen[l.value] = true;
        l.primed = false;
      }
    }
}

}  // namespace

RSKResult shifted_rsk(const Word& w) {
  std::vector<LetterString> rows;
  std::vector<std::vector<int>> q;
  RSKResult res;
  for (std::size_t k = 0; k < w.size(); ++k) {
    InsertionStep s = mixed_insert(rows, w[k]);
    canonicalize_rows(rows);
    if (static_cast<int>(q.size()) <= s.cell.row) q.resize(s.cell.row + 1);
    q[s.cell.row].push_back(static_cast<int>(k) + 1);
    if (!s.schensted) res.Q.circled.insert(static_cast<int>(k) + 1);
    res.steps.push_back(std::move(s));
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  SkewShape shape{StrictPartition(parts)};
  res.P = ShiftedTableau(shape, std::move(rows));
  res.Q.shape = shape.outer();
  res.Q.rows = std::move(q);
  return res;
}

std::set<int> circled_positions_fast(const Word& w) {
  LatticeWalk lw = walk(w);
  std::set<int> out;
  bool all_twos = true;            // every earlier letter is 2' or 2
  bool after_turn = false;         // an earlier step was South or West
  std::optional<Letter> last_1_or_2p;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Letter l = w[k];
    const bool mid = l == Letter(1) || l == Letter(2, true);
    if (l == Letter(1, true))
      out.insert(static_cast<int>(k) + 1);
    else if (mid && k > 0 && all_twos)
      out.insert(static_cast<int>(k) + 1);
    else if (mid && after_turn && last_1_or_2p && *last_1_or_2p == Letter(2, true))
      out.insert(static_cast<int>(k) + 1);
    if (l.value != 2) all_twos = false;
    if (mid) last_1_or_2p = l;
    if (lw.steps[k] == Step::South || lw.steps[k] == Step::West) after_turn = true;
  }
  return out;
}

bool dual_equivalent(const ShiftedTableau& a, const ShiftedTableau& b) {
  if (!(a.shape() == b.shape())) throw std::invalid_argument("dual_equivalent: shapes differ");
  return shifted_rsk(a.reading_word()).Q == shifted_rsk(b.reading_word()).Q;
}

}  // namespace shc
