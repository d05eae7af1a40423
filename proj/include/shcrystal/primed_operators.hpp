#pragma once

#include <optional>

#include "shcrystal/word.hpp"

namespace shc {

/// Raise = E-type operators, Lower = F-type operators.
enum class Dir { Raise, Lower };

/// The weight-shift vector alpha_i (1 at i, -1 at i+1), of length n.
std::vector<int> alpha(int i, int n);

/// E'_i / F'_i by the explicit rule. Empty optional means the operator is undefined.
std::optional<Word> apply_primed(const Word& w, int i, Dir d);

/// E'_i / F'_i as the unique word with the same standardization and weight shifted by alpha_i.
std::optional<Word> apply_primed_oracle(const Word& w, int i, Dir d);

/// Number of times F'_i applies before becoming undefined.
int primed_chain_length(const Word& w, int i);

}  // namespace shc
