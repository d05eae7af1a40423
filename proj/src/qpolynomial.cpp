#include "shcrystal/qpolynomial.hpp"

#include <stdexcept>

namespace shc {

std::int64_t QPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void QPolynomial::add(const Exponent& e, std::int64_t c) {
  if (nvars_ == 0) nvars_ = static_cast<int>(e.size());
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh && (it->second += c) == 0) terms_.erase(it);
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

QPolynomial QPolynomial::operator*(std::int64_t c) const {
  QPolynomial out(nvars_);
  for (const auto& [e, k] : terms_) out.add(e, k * c);
  return out;
}

QPolynomial QPolynomial::swap_variables(int i) const {
  QPolynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    std::swap(f[i - 1], f[i]);
    out.add(f, c);
  }
  return out;
}

bool QPolynomial::is_symmetric() const {
  for (int i = 1; i < nvars_; ++i)
    if (!(swap_variables(i) == *this)) return false;
  return true;
}

std::string QPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      mono += "x" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    std::int64_t mag = c < 0 ? -c : c;
    if (!out.empty())
      out += c < 0 ? " - " : " + ";
    else if (c < 0)
      out += "-";
    if (mono.empty())
      out += std::to_string(mag);
    else
      out += (mag == 1 ? "" : std::to_string(mag)) + mono;
  }
  return out;
}

}  // namespace shc
