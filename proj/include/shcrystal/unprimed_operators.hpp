#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shcrystal/lattice_walk.hpp"
#include "shcrystal/primed_operators.hpp"

namespace shc {

enum class CritKind { F1, F2, F3, F4, F5, E1, E2, E3, E4, E5 };

std::string kind_name(CritKind k);  // "1F", "3E", ...

struct CriticalSubstring {
  CritKind kind;
  std::size_t start = 0;   // 0-based index into the word
  std::size_t length = 1;
  LetterString representative;  // priming choice in which the pattern occurs
  Point location;               // walk point before the substring

  bool blocks() const { return kind == CritKind::F5 || kind == CritKind::E5; }
};

/// All critical substrings of a {1,2}-word over all of its representatives,
/// deduplicated by (kind, start, length), sorted by (start, length, kind).
std::vector<CriticalSubstring> find_criticals(const Word& w, Dir d);

/// The critical substring with the latest start, longest on ties.
std::optional<CriticalSubstring> final_critical(const Word& w, Dir d);

/// Rewrites the critical substring on its representative and canonicalizes.
Word transform(const CriticalSubstring& c);

/// E_i / F_i. Empty optional means undefined.
std::optional<Word> apply_unprimed(const Word& w, int i, Dir d);

/// Definedness of F (or E) on a {1,2}-word from the walk endpoint alone.
bool definedness_by_endpoint(const Word& w, Dir d);

/// Any of the four operators: primed selects E'/F'.
std::optional<Word> apply_operator(const Word& w, int i, Dir d, bool primed);

/// Number of times F_i applies before becoming undefined.
int unprimed_chain_length(const Word& w, int i);

}  // namespace shc
