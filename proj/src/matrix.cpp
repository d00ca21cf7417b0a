#include "nilcone/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "nilcone/errors.hpp"

namespace nilcone {

namespace {

std::string dims(const Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square()) throw ShapeError(std::string(op) + " needs a square matrix, got " + dims(a));
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw ShapeError("ragged matrix rows");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<long>(i * m.cols_));
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ShapeError("cannot add " + dims(*this) + " and " + dims(other));
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ShapeError("cannot subtract " + dims(other) + " from " + dims(*this));
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& q : data_) q *= scalar;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(const Rational& scalar, Matrix a) { return a *= scalar; }
Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("cannot multiply " + dims(a) + " by " + dims(b));
  Matrix c(a.rows(), b.cols());
  Rational term;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) == 0) continue;
        term = aik * b(k, j);
        c(i, j) += term;
      }
    }
  }
  return c;
}

Matrix mat_pow(const Matrix& a, unsigned k) {
  require_square(a, "mat_pow");
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

std::vector<Matrix> powers(const Matrix& a, unsigned max_power) {
  require_square(a, "powers");
  std::vector<Matrix> out;
  out.reserve(max_power + 1);
  out.push_back(Matrix::identity(a.rows()));
  for (unsigned k = 1; k <= max_power; ++k) out.push_back(out.back() * a);
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Rational det(const Matrix& a) {
  require_square(a, "det");
  const std::size_t n = a.rows();
  if (n == 0) return 1;

  // Scale each row to integers, run Bareiss over Z, undo the scaling.
  std::vector<Integer> m(n * n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(i, j).get_num() * (row_lcm / a(i, j).get_den());
    scale *= row_lcm;
  }

  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot * n + k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[pivot * n + j]);
      sign = -sign;
    }
    const Integer& p = m[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& target = m[i * n + j];
        target = target * p - m[i * n + k] * m[k * n + j];
        mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), previous.get_mpz_t());
      }
      m[i * n + k] = 0;
    }
    previous = p;
  }
  Rational result(m[n * n - 1] * sign, scale);
  result.canonicalize();
  return result;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  return rref(m).size();
}

Matrix inverse(const Matrix& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw SingularityError("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Matrix corner_submatrix(const Matrix& n, std::size_t a, std::size_t b) {
  if (a > n.rows() || b > n.cols())
    throw ShapeError("corner (" + std::to_string(a) + "," + std::to_string(b) + ") out of range for " + dims(n));
  Matrix c(a, b);
  const std::size_t offset = n.rows() - a;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) c(i, j) = n(offset + i, j);
  return c;
}

Matrix poly_eval_matrix(const Polynomial& p, const Matrix& n) {
  require_square(n, "poly_eval_matrix");
  Matrix acc(n.rows(), n.cols());
  // Horner: (((c_d) N + c_{d-1}) N + ...) + c_0
  for (long k = p.degree(); k >= 0; --k) {
    acc = acc * n;
    const Rational c = p.coefficient(static_cast<std::size_t>(k));
    if (c != 0)
      for (std::size_t i = 0; i < n.rows(); ++i) acc(i, i) += c;
  }
  return acc;
}

Matrix poly_eval_matrix(const Polynomial& p, std::span<const Matrix> pw) {
  if (pw.empty()) throw ShapeError("poly_eval_matrix needs at least the zeroth power");
  Matrix acc(pw.front().rows(), pw.front().cols());
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size() && k < pw.size(); ++k)
    if (c[k] != 0) acc += c[k] * pw[k];
  return acc;
}

std::vector<Vector> solve_homogeneous(const Matrix& a) {
  Matrix m = a;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace nilcone
