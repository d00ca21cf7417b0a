#pragma once

// Independent reference computations used by the test suites. Nothing here
// calls into the determinant or normal-form code under test.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "nilcone/matrix.hpp"
#include "nilcone/random.hpp"

namespace oracle {

using nilcone::Matrix;
using nilcone::Rational;

/// Determinant by the Leibniz permutation sum. Only for r <= 8.
inline Rational leibniz_det(const Matrix& a) {
  const std::size_t r = a.rows();
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Rational term = 1;
    for (std::size_t i = 0; i < r && term != 0; ++i) term *= a(i, perm[i]);
    if (term == 0) continue;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        if (perm[i] > perm[j]) ++inversions;
    total += inversions % 2 == 0 ? term : Rational(-term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Schoolbook product.
inline Matrix naive_mul(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

inline Matrix random_matrix(std::size_t rows, std::size_t cols, nilcone::Rng& rng) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.small_rational();
  return m;
}

/// Borel normal-form pattern: unit subdiagonal, random entries strictly below it.
inline Matrix borel_pattern(std::size_t n, nilcone::Rng& rng) {
  Matrix h(n, n);
  for (std::size_t i = 1; i < n; ++i) h(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j + 1 < i; ++j) h(i, j) = rng.small_rational();
  return h;
}

/// Unipotent normal-form pattern: nonzero subdiagonal, random entries below it.
inline Matrix unipotent_pattern(std::size_t n, nilcone::Rng& rng) {
  Matrix h = borel_pattern(n, rng);
  for (std::size_t i = 1; i < n; ++i) h(i, i - 1) = rng.nonzero_small_rational();
  return h;
}

/// Subdiagonal-only matrix with the given entries.
inline Matrix subdiagonal(const std::vector<Rational>& x) {
  Matrix h(x.size() + 1, x.size() + 1);
  for (std::size_t i = 0; i < x.size(); ++i) h(i + 1, i) = x[i];
  return h;
}

// 1-based entry access, matching the usual N_{i,j} notation.
inline const Rational& at(const Matrix& m, std::size_t i, std::size_t j) { return m(i - 1, j - 1); }

/// det_1 at n = 3 written out: N21 N32 - N22 N31.
inline Rational det1_n3(const Matrix& m) { return at(m, 2, 1) * at(m, 3, 2) - at(m, 2, 2) * at(m, 3, 1); }

/// f_1 at n = 3: N21 det_1 + N31 (N21 N33 - N31 N23).
inline Rational f1_n3(const Matrix& m) {
  return at(m, 2, 1) * det1_n3(m) + at(m, 3, 1) * (at(m, 2, 1) * at(m, 3, 3) - at(m, 3, 1) * at(m, 2, 3));
}

/// f_2 at n = 3: N32 det_1 + N31 (N11 N32 - N12 N31).
inline Rational f2_n3(const Matrix& m) {
  return at(m, 3, 2) * det1_n3(m) + at(m, 3, 1) * (at(m, 1, 1) * at(m, 3, 2) - at(m, 1, 2) * at(m, 3, 1));
}

// Generic normal form for blocks (3,4,2) at n = 9: 0 = forced zero, 1 = unit, 2 = free.
inline constexpr int kZeroStructure342[9][9] = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0}, {2, 2, 0, 1, 0, 0, 0, 0, 0}, {2, 2, 0, 0, 1, 0, 0, 0, 0},
    {2, 2, 0, 0, 0, 1, 0, 0, 0}, {2, 2, 2, 2, 2, 2, 1, 0, 0}, {2, 2, 2, 2, 2, 2, 0, 1, 0},
};

}  // namespace oracle
