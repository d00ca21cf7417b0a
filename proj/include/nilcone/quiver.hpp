#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "nilcone/groups.hpp"
#include "nilcone/matrix.hpp"
#include "nilcone/polynomial.hpp"
#include "nilcone/random.hpp"
#include "nilcone/semiinv.hpp"

namespace nilcone {

/// Quiver with vertices 1..p in a line (arrows alpha_i: i -> i+1) and a loop
/// alpha at vertex p, bound by alpha^n = 0.
struct QuiverShape {
  std::size_t p = 0;
  std::size_t n = 0;
};

struct Representation {
  std::vector<std::size_t> dims;
  /// arrow_maps[i] is dims[i+1] x dims[i].
  std::vector<Matrix> arrow_maps;
  Matrix loop_map;
};

/// The representation with the coordinate inclusions K^{d_i} -> K^{d_{i+1}} and loop N.
Representation build_MN(const Matrix& n, const ParabolicShape& shape);

/// A morphism between direct sums of indecomposable projectives of the bound
/// quiver Q_n: x_j copies of P(j) on the source side, y_i copies of P(i) on
/// the target side (1-based j, i). Entry (k, l) of the (i, j) coefficient grid
/// is a scalar (a constant polynomial) when j <= i < n, and a polynomial
/// sum_h lambda_h X^h standing for sum_h lambda_h alpha^h rho_{j,n} when i = n.
class MorphismDatum {
 public:
  using Grid = std::vector<std::vector<Polynomial>>;

  /// x and y have length n. All coefficient grids start at zero. Throws
  /// PreconditionError unless sum_j j x_j = sum_i i y_i.
  MorphismDatum(std::size_t n, std::vector<std::size_t> x, std::vector<std::size_t> y);

  std::size_t n() const noexcept { return n_; }
  const std::vector<std::size_t>& x() const noexcept { return x_; }
  const std::vector<std::size_t>& y() const noexcept { return y_; }
  /// Common size sum_j j x_j.
  std::size_t size() const noexcept;

  /// Sets entry (k, l) (zero-based copy indices) of the (i, j) grid. Terms of
  /// degree >= n are dropped. Throws PreconditionError for j > i, a
  /// non-constant coefficient with i < n, or out-of-range indices.
  void set(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Polynomial& coefficient);
  /// Entry (k, l) of the (i, j) grid; zero when never set.
  Polynomial get(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;
  /// Nonzero grids keyed by (i, j).
  const std::map<std::pair<std::size_t, std::size_t>, Grid>& grids() const noexcept { return grids_; }

 private:
  std::size_t n_;
  std::vector<std::size_t> x_;
  std::vector<std::size_t> y_;
  std::map<std::pair<std::size_t, std::size_t>, Grid> grids_;
};

/// The square matrix M^N(phi): block (i, j) is lambda times the first j
/// columns of the i x i identity when i < n, and the first j columns of
/// sum_h lambda_h N^h when i = n. Rows follow target summands (i ascending,
/// then copy), columns source summands (j ascending, then copy).
Matrix assemble_MN(const Matrix& n, const MorphismDatum& phi);
/// det M^N(phi).
Rational eval_f_phi(const Matrix& n, const MorphismDatum& phi);

/// Datum ((n)^{y_n}, (1^{x_1}, ..., n^{x_n}), polynomials of the (n, j) grids).
/// Throws PreconditionError when y_i != 0 for some i < n.
SemiInvariantDatum datum_from_morphism(const MorphismDatum& phi);

/// Random morphism with y supported at vertex n (y_n in {1, 2}), multiplicities
/// x_j <= 2 and polynomial coefficients of at most three terms of degree < n.
MorphismDatum random_morphism(std::size_t n, Rng& rng);

}  // namespace nilcone
