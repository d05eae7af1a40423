#pragma once

#include <vector>

#include "shcrystal/word.hpp"

namespace shc {

enum class Step { East, West, North, South };

struct Point {
  int x = 0;
  int y = 0;
  friend constexpr bool operator==(Point, Point) = default;
};

const char* step_name(Step s);

struct LatticeWalk {
  std::vector<Step> steps;
  std::vector<Point> points;  // points[0] is the start, points[k] follows letter k

  Point endpoint() const { return points.back(); }
  bool has_south_or_west() const;
};

/// Walk of a word over {1',1,2',2}. Throws std::invalid_argument on larger values.
LatticeWalk walk(std::span<const Letter> s, Point start = {});
inline LatticeWalk walk(const Word& w, Point start = {}) { return walk(w.letters(), start); }

/// Endpoint of the (i,i+1) walk of a word over any alphabet.
Point endpoint(const Word& w, int i);

struct RectShape {
  int lambda1 = 0;
  int lambda2 = 0;
  int ones_in_first_row = 0;
  bool has_two_prime = false;

  std::vector<int> parts() const;  // lambda without a zero second part
};

/// Shape of the rectification of a {1,2}-word, read off from its walk.
RectShape rect_shape(const Word& w);
RectShape rect_shape(const LatticeWalk& lw, const Word& w);

bool is_ballot(const Word& w, int n);
bool is_antiballot(const Word& w, int n);

/// Strings one elementary shifted Knuth move away from s: pivot moves bac/bca and
/// acb/cab (order taken from the standardization of s), swapping the first two
/// letters, and aa <-> aa' at the start.
std::vector<LetterString> knuth_moves(const LetterString& s);

/// Knuth moves applied to every representative of w, canonicalized, deduplicated, w itself excluded.
std::vector<Word> knuth_neighbors(const Word& w);

}  // namespace shc
