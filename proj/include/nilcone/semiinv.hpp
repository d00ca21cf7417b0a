#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nilcone/groups.hpp"
#include "nilcone/matrix.hpp"
#include "nilcone/polynomial.hpp"
#include "nilcone/random.hpp"

namespace nilcone {

using PolyGrid = std::vector<std::vector<Polynomial>>;

/// Row block sizes (a_1..a_s), column block sizes (a'_1..a'_t) and an s x t
/// grid of polynomials. Evaluates to N -> det of the block matrix whose (i,j)
/// block is the last a_i rows and first a'_j columns of P_ij(N).
class SemiInvariantDatum {
 public:
  SemiInvariantDatum() = default;
  /// Blocks of size zero are dropped together with their polynomial row or
  /// column. Throws PreconditionError if the grid does not match the blocks or
  /// the two block sums differ.
  SemiInvariantDatum(std::vector<std::size_t> row_blocks, std::vector<std::size_t> col_blocks, PolyGrid polys);

  const std::vector<std::size_t>& row_blocks() const noexcept { return rows_; }
  const std::vector<std::size_t>& col_blocks() const noexcept { return cols_; }
  const PolyGrid& polys() const noexcept { return polys_; }
  const Polynomial& poly(std::size_t i, std::size_t j) const { return polys_[i][j]; }
  /// Common block sum r.
  std::size_t size() const noexcept { return size_; }
  /// Largest polynomial degree in the grid (-1 if all zero).
  long max_degree() const noexcept;

  /// Throws ShapeError if some block exceeds n.
  void check_fits(std::size_t n) const;

  friend bool operator==(const SemiInvariantDatum&, const SemiInvariantDatum&) = default;

 private:
  std::vector<std::size_t> rows_;
  std::vector<std::size_t> cols_;
  PolyGrid polys_;
  std::size_t size_ = 0;
};

struct WeightedInvariant {
  SemiInvariantDatum datum;
  Character weight;
  std::string label;
};

Matrix block_matrix(const Matrix& n, const SemiInvariantDatum& datum);
/// Same, reusing N^0, N^1, ... (missing higher powers count as zero, so this is
/// only valid for nilpotent N with all powers up to n-1 supplied).
Matrix block_matrix(std::span<const Matrix> powers, const SemiInvariantDatum& datum);
Rational eval(const Matrix& n, const SemiInvariantDatum& datum);
Rational eval(std::span<const Matrix> powers, const SemiInvariantDatum& datum);

/// sum_i (omega_{n-a_i+1} + ... + omega_n) - sum_j (omega_1 + ... + omega_{a'_j}).
Character weight_of(const SemiInvariantDatum& datum, std::size_t n);

WeightedInvariant make_invariant(SemiInvariantDatum datum, std::size_t n, std::string label);

/// det((N^{n-k})_{(k,k)}), 1 <= k <= n-1.
WeightedInvariant det_k(std::size_t n, std::size_t k);
/// Datum ((j-1, n-i+1), (j, n-i), [[x^{n-j+1}, 0], [x, x^i]]), 1 <= j < i-1 <= n-1.
WeightedInvariant f_ij(std::size_t n, std::size_t i, std::size_t j);
/// f_{3,1}, f_1, f_2, det_1 at n = 3.
std::vector<WeightedInvariant> n3_invariants();
/// The weight-chi invariant with g_ij(H) = H_ij on the Borel normal-form
/// pattern; valid for j + 2 <= i <= n, j >= 1.
WeightedInvariant g_ij(std::size_t n, std::size_t i, std::size_t j);
/// sum_{i=1}^{n-1} (omega_{n-i+1} + ... + omega_n) - (omega_1 + ... + omega_i).
Character chi_extract(std::size_t n);

/// Block-diagonal concatenation; evaluates to the product of the two functions.
SemiInvariantDatum stack(const SemiInvariantDatum& first, const SemiInvariantDatum& second);

/// Random datum valid for size n: up to three row and column blocks, sum r <= max_size,
/// each polynomial zero with probability 1/3, else degree < n with small integer coefficients.
SemiInvariantDatum random_datum(std::size_t n, Rng& rng, std::size_t max_size = 6);

/// Checks f(b N b^{-1}) = chi(b) f(N) for `matrices` random nilpotent N and
/// `group_elements` random b in B each.
bool verify_semiinvariance(const WeightedInvariant& inv, std::size_t n, std::size_t matrices, std::size_t group_elements,
                           std::uint64_t seed);
/// Checks f(u N u^{-1}) = f(N) for random u in U.
bool verify_u_invariance(const SemiInvariantDatum& datum, std::size_t n, std::size_t matrices,
                         std::size_t group_elements, std::uint64_t seed);

}  // namespace nilcone
