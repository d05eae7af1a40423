#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace shc {

/// Sparse polynomial in x_1..x_n with integer coefficients; no zero terms stored.
class QPolynomial {
 public:
  using Exponent = std::vector<int>;

  QPolynomial() = default;
  explicit QPolynomial(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<Exponent, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(const Exponent& e) const;

  void add(const Exponent& e, std::int64_t c);
  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial operator*(std::int64_t c) const;

  /// Exchanges x_i and x_{i+1} (1-based).
  QPolynomial swap_variables(int i) const;
  bool is_symmetric() const;

  /// Terms in descending lex order of exponents, e.g. "2x1^2 + 4x1x2 + 2x2^2".
  std::string str() const;

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  int nvars_ = 0;
  std::map<Exponent, std::int64_t> terms_;
};

}  // namespace shc
