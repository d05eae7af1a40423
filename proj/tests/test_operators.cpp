#include <set>

#include "doctest.h"
#include "shcrystal/unprimed_operators.hpp"

using namespace shc;

namespace {

std::string show(const std::optional<Word>& w) { return w ? w->str() : "none"; }

Point shifted(Point p) { return {p.x - 1, p.y + 1}; }

}  // namespace

TEST_CASE("primed operator examples") {
  CHECK(show(apply_primed(Word::parse("12211'"), 1, Dir::Lower)) == "1222'1'");
  CHECK(show(apply_primed(Word::parse("1222'1'"), 1, Dir::Lower)) == "none");
  std::vector<std::string> chain{"1111'1'", "1121'1'", "1221'1'", "22211'", "2222'1", "2222'2'"};
  for (std::size_t k = 0; k + 1 < chain.size(); ++k)
    CHECK(show(apply_primed(Word::parse(chain[k]), 1, Dir::Lower)) == chain[k + 1]);
  CHECK(show(apply_primed(Word::parse(chain.back()), 1, Dir::Lower)) == "none");
  CHECK(primed_chain_length(Word::parse("1111'1'"), 1) == 5);
  CHECK(primed_chain_length(Word::parse("12211'"), 1) == 1);
}

TEST_CASE("explicit primed rule agrees with the standardization oracle") {
  for (int L = 0; L <= 8; ++L)
    for (const Word& w : all_words(L, 2))
      for (Dir d : {Dir::Lower, Dir::Raise}) {
        auto a = apply_primed(w, 1, d), b = apply_primed_oracle(w, 1, d);
        CHECK_MESSAGE(a == b, w.str());
      }
  for (int L = 0; L <= 5; ++L)
    for (const Word& w : all_words(L, 3))
      for (int i : {1, 2})
        for (Dir d : {Dir::Lower, Dir::Raise})
          CHECK(apply_primed(w, i, d) == apply_primed_oracle(w, i, d));
}

TEST_CASE("primed operators: inverses, eta conjugation, endpoint shift") {
  for (int L = 0; L <= 8; ++L)
    for (const Word& w : all_words(L, 2)) {
      auto f = apply_primed(w, 1, Dir::Lower);
      auto e = apply_primed(w, 1, Dir::Raise);
      if (f) CHECK(apply_primed(*f, 1, Dir::Raise) == w);
      if (e) CHECK(apply_primed(*e, 1, Dir::Lower) == w);
      auto conj = apply_primed(eta(w, 1), 1, Dir::Lower);
      CHECK(e == (conj ? std::optional<Word>(eta(*conj, 1)) : std::nullopt));
      if (f) {
        LatticeWalk a = walk(w), b = walk(*f);
        CHECK(b.endpoint() == shifted(a.endpoint()));
        int changed = 0;
        for (std::size_t k = 0; k < a.steps.size(); ++k)
          if (a.steps[k] != b.steps[k]) {
            ++changed;
            bool legal = (a.steps[k] == Step::East && b.steps[k] == Step::North) ||
                         (a.steps[k] == Step::South && b.steps[k] == Step::West);
            CHECK(legal);
          }
        CHECK(changed == 1);
        if (rect_shape(w).lambda2 > 0) CHECK(primed_chain_length(w, 1) <= 1);
      }
    }
}

TEST_CASE("critical substrings of the long example") {
  Word w = Word::parse("1221'1'111'1'2'2222'2'11'1");
  auto crit = find_criticals(w, Dir::Lower);
  auto has = [&](CritKind k, std::size_t start, std::size_t len) {
    for (auto& c : crit)
      if (c.kind == k && c.start == start && c.length == len) return true;
    return false;
  };
  CHECK(has(CritKind::F3, 0, 1));
  CHECK(has(CritKind::F1, 0, 2));
  CHECK(has(CritKind::F2, 0, 4));
  CHECK(has(CritKind::F1, 6, 4));
  auto fin = final_critical(w, Dir::Lower);
  REQUIRE(fin.has_value());
  CHECK(fin->kind == CritKind::F1);
  CHECK(fin->start == 6);
  CHECK(fin->length == 4);
  CHECK(fin->location == Point{3, 1});

  auto f = apply_unprimed(w, 1, Dir::Lower);
  REQUIRE(f.has_value());
  LetterString expect = w.letters();
  expect[6] = Letter(2, true);
  expect[7] = Letter(1, true);
  expect[8] = Letter(1, true);
  expect[9] = Letter(2);
  CHECK(*f == Word(expect));
  CHECK(unprimed_chain_length(w, 1) == 3);
}

TEST_CASE("small unprimed examples") {
  CHECK(show(apply_unprimed(Word::parse("2112'3"), 1, Dir::Lower)) == "212'23");
  CHECK(show(apply_unprimed(Word::parse("2112'3"), 2, Dir::Lower)) == "31123");
  CHECK(show(apply_unprimed(Word::parse("12"), 1, Dir::Lower)) == "22");
  CHECK(find_criticals(Word::parse("22'2"), Dir::Lower).empty());
  CHECK_FALSE(final_critical(Word::parse("22"), Dir::Lower).has_value());

  // 121: the representative 12'1 contains a 1F at the start, but the last letter is a
  // South step at (1,1), a 5F that comes later and blocks F.
  Word w = Word::parse("121");
  auto crit = find_criticals(w, Dir::Lower);
  bool has_1f = false;
  for (auto& c : crit) has_1f |= (c.kind == CritKind::F1 && c.start == 0 && c.length == 2);
  CHECK(has_1f);
  auto fin = final_critical(w, Dir::Lower);
  REQUIRE(fin.has_value());
  CHECK(fin->kind == CritKind::F5);
  CHECK(fin->start == 2);
  CHECK_FALSE(apply_unprimed(w, 1, Dir::Lower).has_value());
  CHECK(show(apply_primed(w, 1, Dir::Lower)) == "122'");
}

TEST_CASE("unprimed operators: exhaustive properties on two-value words") {
  for (int L = 0; L <= 8; ++L)
    for (const Word& w : all_words(L, 2)) {
      auto f = apply_unprimed(w, 1, Dir::Lower);
      auto e = apply_unprimed(w, 1, Dir::Raise);
      CHECK(f.has_value() == definedness_by_endpoint(w, Dir::Lower));
      CHECK(e.has_value() == definedness_by_endpoint(w, Dir::Raise));
      auto conj = apply_unprimed(eta(w, 1), 1, Dir::Lower);
      CHECK(e == (conj ? std::optional<Word>(eta(*conj, 1)) : std::nullopt));
      if (f) {
        CHECK(apply_unprimed(*f, 1, Dir::Raise) == w);
        LatticeWalk a = walk(w), b = walk(*f);
        CHECK(b.endpoint() == shifted(a.endpoint()));
        int changed = 0;
        for (std::size_t k = 0; k < a.steps.size(); ++k) {
          CHECK(a.points[k + 1].x + a.points[k + 1].y == b.points[k + 1].x + b.points[k + 1].y);
          if (a.steps[k] != b.steps[k]) {
            ++changed;
            bool legal = (a.steps[k] == Step::East && b.steps[k] == Step::North) ||
                         (a.steps[k] == Step::South && b.steps[k] == Step::West);
            CHECK(legal);
          }
        }
        CHECK(changed == 1);
        if (rect_shape(w).lambda2 == 0) CHECK(f == apply_primed(w, 1, Dir::Lower));
      }
      if (e) CHECK(apply_unprimed(*e, 1, Dir::Lower) == w);
      if (e && rect_shape(w).lambda2 == 0) CHECK(e == apply_primed(w, 1, Dir::Raise));
      bool ballot = walk(w).endpoint().y == 0;
      CHECK(ballot == (!e && !apply_primed(w, 1, Dir::Raise)));
      bool anti = walk(w).endpoint().x == 0;
      CHECK(anti == (!f && !apply_primed(w, 1, Dir::Lower)));
    }
}

TEST_CASE("final critical ties give equivalent outputs") {
  // Whenever two critical substrings share (start, length) at the end, both transforms agree.
  for (int L = 1; L <= 8; ++L)
    for (const Word& w : all_words(L, 2))
      for (Dir d : {Dir::Lower, Dir::Raise}) {
        auto crit = find_criticals(w, d);
        if (crit.size() < 2) continue;
        const auto& last = crit.back();
        for (const auto& c : crit)
          if (c.start == last.start && c.length == last.length && !c.blocks() && !last.blocks())
            CHECK(transform(c) == transform(last));
      }
}

TEST_CASE("operators on three-value words") {
  for (int L = 0; L <= 6; ++L)
    for (const Word& w : all_words(L, 3))
      for (int i : {1, 2})
        for (bool primed : {false, true}) {
          auto f = apply_operator(w, i, Dir::Lower, primed);
          if (!f) continue;
          CHECK(apply_operator(*f, i, Dir::Raise, primed) == w);
          auto a = w.weight(3), b = f->weight(3);
          CHECK(b[i - 1] == a[i - 1] - 1);
          CHECK(b[i] == a[i] + 1);
        }
}
