#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "nilcone/polynomial.hpp"
#include "nilcone/rational.hpp"

namespace nilcone {

/// Dense row-major matrix of exact rationals. Indices are zero-based.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);
  /// Throws ShapeError if the rows are ragged.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(const std::vector<Rational>& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Rational& scalar, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);

using Vector = std::vector<Rational>;

Matrix mat_mul(const Matrix& a, const Matrix& b);
/// a^k, with a^0 the identity.
Matrix mat_pow(const Matrix& a, unsigned k);
/// All powers a^0 .. a^max_power.
std::vector<Matrix> powers(const Matrix& a, unsigned max_power);
Matrix transpose(const Matrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination. The 0x0 matrix has determinant 1.
Rational det(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Throws SingularityError when a is not invertible.
Matrix inverse(const Matrix& a);

/// Last `a` rows and first `b` columns.
Matrix corner_submatrix(const Matrix& n, std::size_t a, std::size_t b);
/// Sum of c_k N^k.
Matrix poly_eval_matrix(const Polynomial& p, const Matrix& n);
/// Same, reusing precomputed powers (powers[k] = N^k); missing powers are treated as zero.
Matrix poly_eval_matrix(const Polynomial& p, std::span<const Matrix> powers);

/// Basis of {v : a v = 0} from the reduced row echelon form; empty iff only v = 0.
std::vector<Vector> solve_homogeneous(const Matrix& a);

}  // namespace nilcone
