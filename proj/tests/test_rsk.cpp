#include "doctest.h"
#include "shcrystal/jeu_de_taquin.hpp"
#include "shcrystal/mixed_insertion.hpp"
#include "shcrystal/unprimed_operators.hpp"

using namespace shc;

TEST_CASE("mixed insertion example") {
  // The 2' in the first row is not the first 2 in reading order, so this is canonical.
  std::vector<LetterString> rows{{Letter(1), Letter(1), Letter(1), Letter(2, true), Letter(2)},
                                 {Letter(2), Letter(2), Letter(2)}};
  CHECK(is_semistandard(ShiftedTableau(SkewShape(StrictPartition({5, 3})), rows)));
  InsertionStep s = mixed_insert(rows, Letter(1));
  CHECK_FALSE(s.schensted);
  CHECK(Word(rows[0]).str() == "111122");
  CHECK((rows[1] == LetterString{Letter(2, true), Letter(2), Letter(2)}));

  std::vector<LetterString> empty;
  InsertionStep first = mixed_insert(empty, Letter(2));
  CHECK(first.schensted);
  CHECK(first.cell == Cell{0, 0});

  std::vector<LetterString> row{Word::parse("112").letters()};
  InsertionStep end = mixed_insert(row, Letter(3));
  CHECK(end.schensted);
  CHECK(end.cell == Cell{0, 3});
}

TEST_CASE("shifted RSK example") {
  RSKResult r = shifted_rsk(Word::parse("22111'2'1"));
  CHECK(r.P == ShiftedTableau::parse("1 1 1 1\n  2 2 2"));
  CHECK(r.Q.rows == std::vector<std::vector<int>>{{1, 2, 3, 5}, {4, 6, 7}});
  CHECK(r.Q.circled == std::set<int>{3, 5, 7});
  CHECK(circled_positions_fast(Word::parse("22111'2'1")) == std::set<int>{3, 5, 7});
  RSKResult one = shifted_rsk(Word::parse("1"));
  CHECK(one.P.str() == "1\n");
  CHECK(one.Q.circled.empty());
  CHECK(circled_positions_fast(Word::parse("11'")) == std::set<int>{2});
  CHECK(circled_positions_fast(Word::parse("1121")).empty());
}

TEST_CASE("RSK insertion tableau is the rectification; circles read from the walk") {
  for (int L = 0; L <= 7; ++L)
    for (const Word& w : all_words(L, 2)) {
      RSKResult r = shifted_rsk(w);
      CHECK(r.P == rectify(w));
      CHECK(circled_positions_fast(w) == r.Q.circled);
      // Standardizing the word standardizes P and leaves Q alone.
      auto st = standardize(w);
      std::vector<int> unit(st.size(), 1);
      LetterString sl;
      for (int k : st) sl.emplace_back(k);
      CHECK(shifted_rsk(Word(sl)).Q.rows == r.Q.rows);
    }
  for (int L = 0; L <= 5; ++L)
    for (const Word& w : all_words(L, 3)) CHECK(shifted_rsk(w).P == rectify(w));
}

TEST_CASE("operators preserve the recording tableau") {
  for (int L = 1; L <= 7; ++L)
    for (const Word& w : all_words(L, 2)) {
      const RecordingTableau q = shifted_rsk(w).Q;
      for (Dir d : {Dir::Lower, Dir::Raise})
        for (bool primed : {false, true})
          if (auto v = apply_operator(w, 1, d, primed)) CHECK(shifted_rsk(*v).Q == q);
    }
}

TEST_CASE("dual equivalence") {
  ShiftedTableau t = highest_tableau(StrictPartition({3, 1}));
  CHECK(dual_equivalent(t, t));
  CHECK(dual_equivalent(ShiftedTableau::parse("1"), ShiftedTableau::parse("2")));
  CHECK_THROWS(dual_equivalent(ShiftedTableau::parse("1"), ShiftedTableau::parse("1 2")));
}
