#include "shcrystal/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace shc {

std::string Letter::str() const {
  return primed ? std::to_string(value) + "'" : std::to_string(value);
}

std::ostream& operator<<(std::ostream& os, Letter l) { return os << l.str(); }

LetterString canonicalize(LetterString s) {
  std::vector<bool> seen;
  for (Letter& l : s) {
    if (static_cast<std::size_t>(l.value) >= seen.size()) seen.resize(l.value + 1, false);
    if (!seen[l.value]) {
      seen[l.value] = true;
      l.primed = false;
    }
  }
  return s;
}

bool is_canonical(std::span<const Letter> s) {
  std::vector<bool> seen;
  for (Letter l : s) {
    if (static_cast<std::size_t>(l.value) >= seen.size()) seen.resize(l.value + 1, false);
    if (!seen[l.value]) {
      if (l.primed) return false;
      seen[l.value] = true;
    }
  }
  return true;
}

Word::Word(LetterString letters) : letters_(canonicalize(std::move(letters))) {
  for (Letter l : letters_)
    if (l.value < 1) throw std::invalid_argument("letter value must be at least 1");
}

namespace {

// Consumes an apostrophe (ASCII or U+2032 prime) at text[pos]; returns its byte length.
std::size_t prime_mark_at(std::string_view text, std::size_t pos) {
  if (pos < text.size() && text[pos] == '\'') return 1;
  if (text.substr(pos, 3) == "\xE2\x80\xB2") return 3;
  return 0;
}

Letter parse_token(std::string_view tok) {
  std::size_t k = 0;
  while (k < tok.size() && std::isdigit(static_cast<unsigned char>(tok[k]))) ++k;
  if (k == 0) {
    if (prime_mark_at(tok, 0)) throw ParseError("apostrophe without numeral");
    throw ParseError("malformed token '" + std::string(tok) + "'");
  }
  if (k > 9) throw ParseError("letter value too large: " + std::string(tok));
  int value = std::stoi(std::string(tok.substr(0, k)));
  if (value < 1) throw ParseError("letter value must be at least 1");
  bool primed = false;
  if (k < tok.size()) {
    std::size_t m = prime_mark_at(tok, k);
    if (m == 0 || k + m != tok.size()) throw ParseError("malformed token '" + std::string(tok) + "'");
    primed = true;
  }
  return {value, primed};
}

}  // namespace

Letter parse_letter(std::string_view token) { return parse_token(token); }

Word Word::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  LetterString out;
  bool separated = text.find_first_of(" \t,") != std::string_view::npos;
  if (separated) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
      std::size_t end = pos;
      while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != ',') ++end;
      if (end > pos) out.push_back(parse_token(text.substr(pos, end - pos)));
      pos = end;
    }
  } else {
    std::size_t pos = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (prime_mark_at(text, pos)) throw ParseError("apostrophe without numeral");
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError(std::string("unexpected character '") + c + "'");
      if (c == '0') throw ParseError("letter value must be at least 1");
      Letter l{c - '0'};
      ++pos;
      if (std::size_t m = prime_mark_at(text, pos)) {
        l.primed = true;
        pos += m;
      }
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

int Word::max_value() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, l.value);
  return m;
}

std::vector<int> Word::weight(int n) const {
  std::vector<int> wt(std::max(n, max_value()), 0);
  for (Letter l : letters_) ++wt[l.value - 1];
  return wt;
}

std::string Word::str() const {
  bool compact = max_value() <= 9;
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (!compact && k > 0) out += ' ';
    out += letters_[k].str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

std::vector<LetterString> representatives(const Word& w) {
  std::vector<std::size_t> flexible;
  std::vector<bool> seen;
  for (std::size_t k = 0; k < w.size(); ++k) {
    int v = w[k].value;
    if (static_cast<std::size_t>(v) >= seen.size()) seen.resize(v + 1, false);
    if (!seen[v]) {
      seen[v] = true;
      flexible.push_back(k);
    }
  }
  std::vector<LetterString> reps;
  reps.reserve(std::size_t{1} << flexible.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << flexible.size()); ++mask) {
    LetterString s = w.letters();
    for (std::size_t b = 0; b < flexible.size(); ++b)
      if (mask & (std::size_t{1} << b)) s[flexible[b]].primed = true;
    reps.push_back(std::move(s));
  }
  return reps;
}

std::vector<int> standardize(std::span<const Letter> s) {
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (s[a] != s[b]) return s[a] < s[b];
    return s[a].primed ? a > b : a < b;
  });
  std::vector<int> perm(s.size());
  for (std::size_t r = 0; r < order.size(); ++r) perm[order[r]] = static_cast<int>(r) + 1;
  return perm;
}

std::optional<Word> unstandardize(std::span<const int> perm, std::span<const int> weight) {
  const int n = static_cast<int>(perm.size());
  if (std::accumulate(weight.begin(), weight.end(), 0) != n) return std::nullopt;
  std::vector<int> pos(n + 1, -1);
  for (int k = 0; k < n; ++k) {
    if (perm[k] < 1 || perm[k] > n || pos[perm[k]] != -1) return std::nullopt;
    pos[perm[k]] = k;
  }
  LetterString out(n);
  int lo = 1;
  for (std::size_t v = 0; v < weight.size(); ++v) {
    const int hi = lo + weight[v] - 1;
    if (weight[v] > 0) {
      int first = lo;
      for (int num = lo; num <= hi; ++num)
        if (pos[num] < pos[first]) first = num;
      for (int num = lo; num < first; ++num) {
        if (num > lo && pos[num] > pos[num - 1]) return std::nullopt;
        out[pos[num]] = Letter(static_cast<int>(v) + 1, true);
      }
      for (int num = first; num <= hi; ++num) {
        if (num > first && pos[num] < pos[num - 1]) return std::nullopt;
        out[pos[num]] = Letter(static_cast<int>(v) + 1, false);
      }
    }
    lo = hi + 1;
  }
  return Word(std::move(out));
}

Word eta(const Word& w, int i) {
  LetterString s = w.letters();
  for (Letter& l : s) {
    if (l.value == i)
      l = Letter(i + 1, !l.primed);
    else if (l.value == i + 1)
      l = Letter(i, !l.primed);
  }
  return Word(std::move(s));
}

Restriction restrict_to(const Word& w, int i) {
  Restriction r;
  LetterString sub;
  for (std::size_t k = 0; k < w.size(); ++k) {
    Letter l = w[k];
    if (l.value == i || l.value == i + 1) {
      sub.emplace_back(l.value - i + 1, l.primed);
      r.positions.push_back(k);
    }
  }
  r.sub = Word(std::move(sub));
  return r;
}

Word splice(const Word& w, const Restriction& r, const Word& new_sub, int i) {
  if (new_sub.size() != r.positions.size())
    throw std::invalid_argument("splice: length mismatch");
  LetterString s = w.letters();
  for (std::size_t k = 0; k < r.positions.size(); ++k)
    s[r.positions[k]] = Letter(new_sub[k].value + i - 1, new_sub[k].primed);
  return Word(std::move(s));
}

namespace {

void extend_words(int length, int n, LetterString& cur, std::vector<bool>& seen,
                  std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == length) {
    out.emplace_back(cur);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    for (bool primed : {true, false}) {
      if (primed && !seen[v]) continue;
      bool was = seen[v];
      seen[v] = true;
      cur.emplace_back(v, primed);
      extend_words(length, n, cur, seen, out);
      cur.pop_back();
      seen[v] = was;
    }
  }
}

}  // namespace

std::vector<Word> all_words(int length, int n) {
  std::vector<Word> out;
  LetterString cur;
  std::vector<bool> seen(n + 1, false);
  extend_words(length, n, cur, seen, out);
  return out;
}

}  // namespace shc
