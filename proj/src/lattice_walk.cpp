#include "shcrystal/lattice_walk.hpp"

#include <algorithm>
#include <stdexcept>

#include "shcrystal/primed_operators.hpp"

namespace shc {

const char* step_name(Step s) {
  switch (s) {
    case Step::East: return "E";
    case Step::West: return "W";
    case Step::North: return "N";
    case Step::South: return "S";
  }
  return "?";
}

bool LatticeWalk::has_south_or_west() const {
  for (Step s : steps)
    if (s == Step::South || s == Step::West) return true;
  return false;
}

LatticeWalk walk(std::span<const Letter> s, Point start) {
  LatticeWalk lw;
  lw.steps.reserve(s.size());
  lw.points.reserve(s.size() + 1);
  lw.points.push_back(start);
  Point p = start;
  for (Letter l : s) {
    if (l.value < 1 || l.value > 2)
      throw std::invalid_argument("walk: letters must have value 1 or 2");
    Step step;
    if (p.x == 0 || p.y == 0)
      step = l.value == 1 ? Step::East : Step::North;
    else if (l.value == 1)
      step = l.primed ? Step::East : Step::South;
    else
      step = l.primed ? Step::West : Step::North;
    switch (step) {
      case Step::East: ++p.x; break;
      case Step::West: --p.x; break;
      case Step::North: ++p.y; break;
      case Step::South: --p.y; break;
    }
    lw.steps.push_back(step);
    lw.points.push_back(p);
  }
  return lw;
}

Point endpoint(const Word& w, int i) { return walk(subword(w, i)).endpoint(); }

std::vector<int> RectShape::parts() const {
  std::vector<int> p;
  if (lambda1 > 0) p.push_back(lambda1);
  if (lambda2 > 0) p.push_back(lambda2);
  return p;
}

RectShape rect_shape(const LatticeWalk& lw, const Word& w) {
  const int n = static_cast<int>(lw.steps.size());
  const Point e = lw.endpoint();
  if ((n + e.x + e.y) % 2 != 0 || e.x + e.y > n)
    throw std::logic_error("rect_shape: walk endpoint has the wrong parity");
  RectShape r;
  r.lambda1 = (n + e.x + e.y) / 2;
  r.lambda2 = (n - e.x - e.y) / 2;
  r.ones_in_first_row = (n + e.x - e.y) / 2;
  r.has_two_prime = r.lambda2 > 0 && !apply_primed(w, 1, Dir::Lower);
  return r;
}

RectShape rect_shape(const Word& w) { return rect_shape(walk(w), w); }

bool is_ballot(const Word& w, int n) {
  for (int i = 1; i < n; ++i)
    if (endpoint(w, i).y != 0) return false;
  return true;
}

bool is_antiballot(const Word& w, int n) {
  for (int i = 1; i < n; ++i)
    if (endpoint(w, i).x != 0) return false;
  return true;
}

std::vector<LetterString> knuth_moves(const LetterString& s) {
  std::vector<LetterString> out;
  if (s.size() >= 2) {
    LetterString t = s;
    std::swap(t[0], t[1]);
    if (t != s) out.push_back(t);
    if (s[0].value == s[1].value && !s[0].primed) {
      t = s;
      t[1].primed = !t[1].primed;
      out.push_back(t);
    }
  }
  const std::vector<int> st = standardize(s);
  for (std::size_t k = 0; k + 2 < s.size(); ++k) {
    const int p = st[k], q = st[k + 1], r = st[k + 2];
    LetterString t = s;
    if ((q < p && p < r) || (r < p && p < q)) {
      std::swap(t[k + 1], t[k + 2]);  // bac <-> bca
    } else if ((p < r && r < q) || (q < r && r < p)) {
      std::swap(t[k], t[k + 1]);  // acb <-> cab
    } else {
      continue;
    }
    if (t != s) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Word> knuth_neighbors(const Word& w) {
  std::vector<Word> out;
  for (const LetterString& rep : representatives(w))
    for (LetterString& t : knuth_moves(rep)) out.emplace_back(std::move(t));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase(out, w);
  return out;
}

}  // namespace shc
