#include <algorithm>

#include "doctest.h"

#include "shcrystal/jeu_de_taquin.hpp"
#include "shcrystal/lattice_walk.hpp"

using namespace shc;

TEST_CASE("walk endpoints") {
  CHECK(walk(Word::parse("211'12'22'1'1'")).endpoint() == Point{3, 2});
  CHECK(walk(Word::parse("1221'1'111'1'2'2222'2'11'1")).endpoint() == Point{4, 2});
  CHECK(walk(Word()).endpoint() == Point{0, 0});
  CHECK_THROWS(walk(Word::parse("13")));
}

TEST_CASE("walk is representative independent and stays in the quadrant") {
  for (int L = 0; L <= 7; ++L)
    for (const Word& w : all_words(L, 2)) {
      LatticeWalk lw = walk(w);
      for (Point p : lw.points) CHECK((p.x >= 0 && p.y >= 0));
      for (const auto& r : representatives(w)) CHECK(walk(r).points == lw.points);
    }
}

TEST_CASE("rect_shape") {
  RectShape r = rect_shape(Word::parse("211'12'22'1'1'"));
  CHECK(r.parts() == std::vector<int>{7, 2});
  CHECK(r.ones_in_first_row == 5);
  CHECK(rect_shape(Word::parse("111")).parts() == std::vector<int>{3});
  CHECK(rect_shape(Word::parse("111")).ones_in_first_row == 3);
  CHECK(rect_shape(Word::parse("12")).parts() == std::vector<int>{2});
  CHECK(rect_shape(Word::parse("12")).ones_in_first_row == 1);
}

TEST_CASE("ballot") {
  CHECK(is_ballot(Word::parse("11"), 2));
  CHECK_FALSE(is_ballot(Word::parse("1122"), 2));
  CHECK(is_ballot(Word::parse("1121"), 2));
  CHECK(is_ballot(Word::parse("11211121"), 2));
  CHECK(is_antiballot(Word::parse("22"), 2));
}

TEST_CASE("bounded error under shifted starts") {
  // Shifting the start West or North moves the endpoint one step West or North;
  // likewise for East or South.
  auto west_or_north = [](Point a, Point b) {
    return b == Point{a.x - 1, a.y} || b == Point{a.x, a.y + 1};
  };
  auto east_or_south = [](Point a, Point b) {
    return b == Point{a.x + 1, a.y} || b == Point{a.x, a.y - 1};
  };
  for (int L = 1; L <= 6; ++L)
    for (const Word& w : all_words(L, 2))
      for (int x = 1; x <= 3; ++x)
        for (int y = 1; y <= 3; ++y) {
          Point base = walk(w, {x, y}).endpoint();
          CHECK(west_or_north(base, walk(w, {x - 1, y}).endpoint()));
          CHECK(west_or_north(base, walk(w, {x, y + 1}).endpoint()));
          CHECK(east_or_south(base, walk(w, {x + 1, y}).endpoint()));
          CHECK(east_or_south(base, walk(w, {x, y - 1}).endpoint()));
        }
}

namespace {

// Exact string, no canonicalization.
LetterString raw(std::string_view text) {
  LetterString s;
  for (std::size_t k = 0; k < text.size(); ++k) {
    Letter l(text[k] - '0');
    if (k + 1 < text.size() && text[k + 1] == '\'') {
      l.primed = true;
      ++k;
    }
    s.push_back(l);
  }
  return s;
}

bool contains(const std::vector<LetterString>& v, const LetterString& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("knuth moves on strings") {
  CHECK(contains(knuth_moves(raw("2'12'")), raw("12'2'")));
  CHECK_FALSE(contains(knuth_moves(raw("3212")), raw("3122")));
  CHECK(contains(knuth_moves(raw("11")), raw("11'")));
  CHECK(contains(knuth_moves(raw("11'3")), raw("113")));
  CHECK(contains(knuth_moves(raw("213")), raw("123")));
  CHECK(knuth_moves(raw("1")).empty());
  // moves are symmetric
  for (int L = 0; L <= 5; ++L)
    for (const Word& w : all_words(L, 3))
      for (const LetterString& rep : representatives(w))
        for (const LetterString& t : knuth_moves(rep)) CHECK(contains(knuth_moves(t), rep));
}

TEST_CASE("knuth moves preserve endpoints and rectification") {
  for (int L = 0; L <= 7; ++L)
    for (const Word& w : all_words(L, 2)) {
      const Point p = walk(w).endpoint();
      const std::string rect = rectify(w).str();
      for (const Word& v : knuth_neighbors(w)) {
        CHECK(walk(v).endpoint() == p);
        CHECK(rectify(v).str() == rect);
      }
    }
  for (int L = 0; L <= 5; ++L)
    for (const Word& w : all_words(L, 3))
      for (const Word& v : knuth_neighbors(w)) {
        CHECK(endpoint(v, 1) == endpoint(w, 1));
        CHECK(endpoint(v, 2) == endpoint(w, 2));
        CHECK(rectify(v).str() == rectify(w).str());
      }
}
