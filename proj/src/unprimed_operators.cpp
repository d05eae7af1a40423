#include "shcrystal/unprimed_operators.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace shc {

std::string kind_name(CritKind k) {
  static const char* names[] = {"1F", "2F", "3F", "4F", "5F", "1E", "2E", "3E", "4E", "5E"};
  return names[static_cast<int>(k)];
}

namespace {

constexpr Letter one{1, false}, one_p{1, true}, two{2, false}, two_p{2, true};

void check_two_valued(const Word& w) {
  if (w.max_value() > 2) throw std::invalid_argument("expected a word over {1',1,2',2}");
}

LetterString eta_letters(LetterString s) {
  for (Letter& l : s) l = Letter(3 - l.value, !l.primed);
  return s;
}

CritKind mirror(CritKind k) {
  int v = static_cast<int>(k);
  return static_cast<CritKind>(v < 5 ? v + 5 : v - 5);
}

std::vector<CriticalSubstring> f_criticals(const Word& w) {
  const std::vector<Point> pts = walk(w).points;
  std::vector<CriticalSubstring> out;
  auto add = [&](CritKind kind, std::size_t start, std::size_t len, const LetterString& rep) {
    for (const auto& c : out)
      if (c.kind == kind && c.start == start && c.length == len) return;
    out.push_back({kind, start, len, rep, pts[start]});
  };
  for (const LetterString& r : representatives(w)) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      const Point p = pts[k];
      if (r[k] == one && p.y == 0) add(CritKind::F3, k, 1, r);
      if (r[k] == one_p && p.x == 0) add(CritKind::F4, k, 1, r);
      if ((r[k] == one || r[k] == two_p) && p.x == 1 && p.y >= 1) add(CritKind::F5, k, 1, r);
      if (r[k] != one) continue;
      if (p.y == 0 || (p.y == 1 && p.x >= 1)) {
        std::size_t j = k + 1;
        while (j < r.size() && r[j] == one_p) ++j;
        if (j < r.size() && r[j] == two_p) add(CritKind::F1, k, j - k + 1, r);
      }
      if (p.x == 0 || (p.x == 1 && p.y >= 1)) {
        std::size_t j = k + 1;
        while (j < r.size() && r[j] == two) ++j;
        if (j < r.size() && r[j] == one_p) add(CritKind::F2, k, j - k + 1, r);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.start, a.length, a.kind) < std::tie(b.start, b.length, b.kind);
  });
  return out;
}

}  // namespace

std::vector<CriticalSubstring> find_criticals(const Word& w, Dir d) {
  check_two_valued(w);
  if (d == Dir::Lower) return f_criticals(w);
  std::vector<CriticalSubstring> out = f_criticals(eta(w, 1));
  for (auto& c : out) {
    c.kind = mirror(c.kind);
    c.representative = eta_letters(std::move(c.representative));
    std::swap(c.location.x, c.location.y);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.start, a.length, a.kind) < std::tie(b.start, b.length, b.kind);
  });
  return out;
}

std::optional<CriticalSubstring> final_critical(const Word& w, Dir d) {
  std::vector<CriticalSubstring> all = find_criticals(w, d);
  if (all.empty()) return std::nullopt;
  // Sorted by (start, length, kind): the last group of equal (start, length) holds the
  // final candidates. Within it the smallest kind wins, which puts 3F ahead of 4F.
  auto it = all.end() - 1;
  while (it != all.begin() && (it - 1)->start == it->start && (it - 1)->length == it->length) --it;
  return *it;
}

Word transform(const CriticalSubstring& c) {
  LetterString s = c.representative;
  const std::size_t a = c.start, b = c.start + c.length - 1;
  switch (c.kind) {
    case CritKind::F1: s[a] = two_p; s[b] = two; break;   // 1(1')*2' -> 2'(1')*2
    case CritKind::F2: s[a] = two_p; s[b] = one; break;   // 1(2)*1'  -> 2'(2)*1
    case CritKind::F3: s[a] = two; break;
    case CritKind::F4: s[a] = two_p; break;
    case CritKind::E1: s[a] = one; s[b] = one_p; break;   // 2'(2)*1  -> 1(2)*1'
    case CritKind::E2: s[a] = one; s[b] = two_p; break;   // 2'(1')*2 -> 1(1')*2'
    case CritKind::E3: s[a] = one_p; break;
    case CritKind::E4: s[a] = one; break;
    case CritKind::F5:
    case CritKind::E5: throw std::logic_error("transform: blocking critical substring");
  }
  return Word(std::move(s));
}

std::optional<Word> apply_unprimed(const Word& w, int i, Dir d) {
  Restriction r = restrict_to(w, i);
  std::optional<CriticalSubstring> c = final_critical(r.sub, d);
  if (!c || c->blocks()) return std::nullopt;
  return splice(w, r, transform(*c), i);
}

bool definedness_by_endpoint(const Word& w, Dir d) {
  check_two_valued(w);
  if (d == Dir::Raise) return definedness_by_endpoint(eta(w, 1), Dir::Lower);
  LatticeWalk lw = walk(w);
  const int x = lw.endpoint().x;
  if (x == 0) return false;
  if (x >= 2) return true;
  if (!lw.has_south_or_west()) return true;
  return !apply_primed(w, 1, Dir::Lower).has_value();
}

std::optional<Word> apply_operator(const Word& w, int i, Dir d, bool primed) {
  return primed ? apply_primed(w, i, d) : apply_unprimed(w, i, d);
}

int unprimed_chain_length(const Word& w, int i) {
  int len = 0;
  std::optional<Word> cur = apply_unprimed(w, i, Dir::Lower);
  while (cur) {
    ++len;
    cur = apply_unprimed(*cur, i, Dir::Lower);
  }
  return len;
}

}  // namespace shc
