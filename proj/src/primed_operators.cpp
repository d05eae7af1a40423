#include "shcrystal/primed_operators.hpp"

namespace shc {

std::vector<int> alpha(int i, int n) {
  std::vector<int> a(n, 0);
  a[i - 1] = 1;
  a[i] = -1;
  return a;
}

namespace {

// F' on a {1,2}-word.
std::optional<Word> fprime_12(const Word& w) {
  for (std::size_t k = w.size(); k-- > 0;) {
    if (w[k] == Letter(1)) {
      LetterString s = w.letters();
      s[k] = Letter(2, true);
      Word v(std::move(s));
      if (standardize(v) == standardize(w)) return v;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// E' on a {1,2}-word.
std::optional<Word> eprime_12(const Word& w) {
  std::optional<std::size_t> x, y;
  for (std::size_t k = w.size(); k-- > 0;)
    if (w[k] == Letter(2, true)) {
      x = k;
      break;
    }
  if (!x)
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k].value == 2) {
        x = k;
        break;
      }
  if (!x) return std::nullopt;
  int unprimed_ones = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == Letter(1)) {
      if (!y) y = k;
      ++unprimed_ones;
    }
  }
  LetterString s = w.letters();
  if (y && *x < *y && unprimed_ones == 1) {
    s[*x] = Letter(1);
    s[*y] = Letter(1, true);
    return Word(std::move(s));
  }
  s[*x] = Letter(1);
  Word v(std::move(s));
  if (standardize(v) == standardize(w)) return v;
  return std::nullopt;
}

}  // namespace

std::optional<Word> apply_primed(const Word& w, int i, Dir d) {
  Restriction r = restrict_to(w, i);
  std::optional<Word> t = d == Dir::Lower ? fprime_12(r.sub) : eprime_12(r.sub);
  if (!t) return std::nullopt;
  return splice(w, r, *t, i);
}

std::optional<Word> apply_primed_oracle(const Word& w, int i, Dir d) {
  std::vector<int> wt = w.weight(i + 1);
  const int shift = d == Dir::Lower ? -1 : 1;
  wt[i - 1] += shift;
  wt[i] -= shift;
  if (wt[i - 1] < 0 || wt[i] < 0) return std::nullopt;
  return unstandardize(standardize(w), wt);
}

int primed_chain_length(const Word& w, int i) {
  int len = 0;
  std::optional<Word> cur = apply_primed(w, i, Dir::Lower);
  while (cur) {
    ++len;
    cur = apply_primed(*cur, i, Dir::Lower);
  }
  return len;
}

}  // namespace shc
