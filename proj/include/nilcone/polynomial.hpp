#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "nilcone/rational.hpp"

namespace nilcone {

/// Univariate polynomial with rational coefficients; coefficient k multiplies x^k.
/// The highest stored coefficient is nonzero unless the polynomial is zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  /// c * x^k
  static Polynomial monomial(std::size_t k, const Rational& c = Rational(1));

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Smallest k with a nonzero coefficient; -1 for zero.
  long valuation() const noexcept;
  /// Coefficient of x^k (zero past the degree).
  Rational coefficient(std::size_t k) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// Drops every term of degree >= bound.
  Polynomial truncated(std::size_t bound) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

}  // namespace nilcone
