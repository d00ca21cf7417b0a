#include "nilcone/polynomial.hpp"

#include <utility>

namespace nilcone {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  normalize();
}

Polynomial Polynomial::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> coeffs(k + 1);
  coeffs[k] = c;
  return Polynomial(std::move(coeffs));
}

long Polynomial::valuation() const noexcept {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return static_cast<long>(k);
  return -1;
}

Rational Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Polynomial Polynomial::truncated(std::size_t bound) const {
  if (bound >= coeffs_.size()) return *this;
  return Polynomial(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(bound)));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace nilcone
