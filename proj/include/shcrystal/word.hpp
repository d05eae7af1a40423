#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shc {

/// A letter of the primed alphabet 1' < 1 < 2' < 2 < 3' < ...
struct Letter {
  int value = 1;
  bool primed = false;

  constexpr Letter() = default;
  constexpr Letter(int v, bool p = false) : value(v), primed(p) {}

  /// Position in the total order: 1' -> 1, 1 -> 2, 2' -> 3, ...
  constexpr int rank() const { return 2 * value - (primed ? 1 : 0); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    return a.rank() <=> b.rank();
  }

  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, Letter l);

/// Sequence of letters with no canonical-form guarantee (a representative).
using LetterString = std::vector<Letter>;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One token such as "3" or "12'".
Letter parse_letter(std::string_view token);

/// Replaces the first letter of each value by its unprimed version.
LetterString canonicalize(LetterString s);
bool is_canonical(std::span<const Letter> s);

/// A word: the equivalence class of strings sharing a canonical form.
/// Always stored as its canonical representative.
class Word {
 public:
  Word() = default;
  explicit Word(LetterString letters);

  /// Accepts compact ("211'12'") or separated ("11 3' 2", "1,2,10'") text.
  static Word parse(std::string_view text);

  const LetterString& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t k) const { return letters_[k]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  int max_value() const;

  /// Letter counts per value, regardless of priming. The result has length
  /// max(n, max_value()); trailing zeros pad up to n.
  std::vector<int> weight(int n = 0) const;

  /// Compact form when every value is a single digit, separated otherwise.
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  LetterString letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Every string equivalent to w (first letter of each value primed or not).
std::vector<LetterString> representatives(const Word& w);

/// Standardization: 1-based permutation, entry k is the number given to the
/// k-th letter.
std::vector<int> standardize(std::span<const Letter> s);
inline std::vector<int> standardize(const Word& w) { return standardize(w.letters()); }

/// Inverse of standardization for a fixed weight; at most one word exists.
std::optional<Word> unstandardize(std::span<const int> perm, std::span<const int> weight);

/// Swaps the roles of i and i+1: i' -> i+1, i -> (i+1)', (i+1)' -> i, i+1 -> i'.
Word eta(const Word& w, int i);

/// Letters of value i or i+1, in order, relabelled to 1 and 2.
struct Restriction {
  Word sub;
  std::vector<std::size_t> positions;
};

Restriction restrict_to(const Word& w, int i);

inline Word subword(const Word& w, int i) { return restrict_to(w, i).sub; }

/// Writes a transformed {1,2}-word back into w at the recorded positions.
Word splice(const Word& w, const Restriction& r, const Word& new_sub, int i);

/// All canonical words of the given length over values 1..n.
std::vector<Word> all_words(int length, int n);

}  // namespace shc
