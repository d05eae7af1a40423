#include <algorithm>
#include <set>

#include "doctest.h"
#include "shcrystal/word.hpp"

using namespace shc;

namespace {

std::string letters_str(const LetterString& s) {
  std::string out;
  for (Letter l : s) out += l.str();
  return out;
}

// Standardization by counting: a letter's number is 1 + the number of letters that
// precede it in the tie-broken order.
std::vector<int> std_by_counting(const LetterString& s) {
  std::vector<int> out;
  for (std::size_t a = 0; a < s.size(); ++a) {
    int below = 0;
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (a == b) continue;
      bool less = s[b].rank() < s[a].rank() ||
                  (s[b] == s[a] && (s[a].primed ? b > a : b < a));
      below += less;
    }
    out.push_back(below + 1);
  }
  return out;
}

}  // namespace

TEST_CASE("parse and canonical form") {
  CHECK(Word::parse("1'1'2'112'").str() == "11'2112'");
  CHECK(Word::parse("").empty());
  CHECK(Word::parse("1'").str() == "1");
  CHECK(Word::parse("11 3' 2").str() == "11 3 2");
  CHECK(Word::parse("1 1' 2").str() == "11'2");
  CHECK(Word::parse("1,2,10'").str() == "1 2 10");
  CHECK(Word::parse("1,10,10'").str() == "1 10 10'");
  CHECK(Word::parse("122\xE2\x80\xB2").str() == "122'");
  CHECK_THROWS_AS(Word::parse("'1"), ParseError);
  CHECK_THROWS_AS(Word::parse("1 ' 2"), ParseError);
  CHECK_THROWS_AS(Word::parse("1a"), ParseError);
  CHECK_THROWS_AS(Word::parse("1''"), ParseError);
  CHECK_THROWS_AS(Word::parse("0"), ParseError);
  for (const Word& w : all_words(4, 3)) CHECK(Word::parse(w.str()) == w);
}

TEST_CASE("representatives") {
  auto reps = representatives(Word::parse("11'2112'"));
  std::set<std::string> got;
  for (auto& r : reps) got.insert(letters_str(r));
  CHECK(got == std::set<std::string>{"1'1'2'112'", "11'2'112'", "1'1'2112'", "11'2112'"});
  CHECK(representatives(Word::parse("11'1")).size() == 2);
  CHECK(representatives(Word()).size() == 1);
}

TEST_CASE("standardization") {
  auto s = standardize(Word::parse("1121'22'1'11"));
  std::string digits;
  for (int k : s) digits += std::to_string(k);
  CHECK(digits == "348297156");
  CHECK(standardize(Word::parse("1")) == std::vector<int>{1});
  CHECK(standardize(Word::parse("11")) == std::vector<int>{1, 2});
  for (const Word& w : all_words(5, 3)) {
    auto st = standardize(w);
    CHECK(st == std_by_counting(w.letters()));
    for (const auto& r : representatives(w)) CHECK(standardize(r) == st);
    auto back = unstandardize(st, w.weight());
    REQUIRE(back.has_value());
    CHECK(*back == w);
  }
}

TEST_CASE("unstandardize has at most one solution") {
  // Every word of length 5 over two values, grouped by (std, weight), is alone in its group.
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (const Word& w : all_words(5, 2)) CHECK(seen.insert({standardize(w), w.weight(2)}).second);
  std::vector<int> perm{2, 1}, wt{2};
  CHECK(unstandardize(perm, wt)->str() == "11'");
  std::vector<int> perm2{1, 3, 2}, wt2{3};
  CHECK_FALSE(unstandardize(perm2, wt2).has_value());
}

TEST_CASE("eta") {
  CHECK(eta(Word::parse("121'132"), 1).str() == "2122'31'");
  CHECK(eta(Word::parse("1"), 1).str() == "2");
  for (const Word& w : all_words(5, 3)) {
    for (int i : {1, 2}) {
      Word v = eta(w, i);
      CHECK(eta(v, i) == w);
      auto a = w.weight(3), b = v.weight(3);
      CHECK(a[i - 1] == b[i]);
      CHECK(a[i] == b[i - 1]);
    }
  }
  // On two-value words eta reverses the standardization numbering.
  for (const Word& w : all_words(6, 2)) {
    auto s = standardize(w), t = standardize(eta(w, 1));
    for (std::size_t k = 0; k < s.size(); ++k) CHECK(t[k] == static_cast<int>(s.size()) + 1 - s[k]);
  }
}

TEST_CASE("subword") {
  CHECK(subword(Word::parse("2112'3"), 2).str() == "11'2");
  CHECK(subword(Word::parse("3443"), 1).empty());
  CHECK(subword(Word::parse("1122"), 1).str() == "1122");
}

TEST_CASE("all_words counts") {
  // Canonical words of length L over n values: count by brute-force filtering of all strings.
  for (int n = 1; n <= 3; ++n)
    for (int L = 0; L <= 4; ++L) {
      std::size_t brute = 0;
      std::size_t total = 1;
      for (int k = 0; k < L; ++k) total *= 2 * n;
      for (std::size_t code = 0; code < total; ++code) {
        LetterString s;
        std::size_t c = code;
        for (int k = 0; k < L; ++k) {
          int d = static_cast<int>(c % (2 * n));
          c /= 2 * n;
          s.emplace_back(d / 2 + 1, d % 2 == 1);
        }
        brute += is_canonical(s);
      }
      CHECK(all_words(L, n).size() == brute);
    }
}
