#include "nilcone/groups.hpp"

#include <numeric>
#include <string>

#include "nilcone/errors.hpp"

namespace nilcone {

ParabolicShape ParabolicShape::from_blocks(std::vector<std::size_t> blocks) {
  if (blocks.empty()) throw PreconditionError("a parabolic shape needs at least one block");
  ParabolicShape s;
  s.blocks = std::move(blocks);
  for (auto b : s.blocks) {
    if (b == 0) throw PreconditionError("parabolic block sizes must be positive");
    s.n += b;
    s.dims.push_back(s.n);
  }
  return s;
}

ParabolicShape ParabolicShape::borel(std::size_t n) {
  if (n == 0) throw PreconditionError("matrix size must be positive");
  return from_blocks(std::vector<std::size_t>(n, 1));
}

ParabolicShape ParabolicShape::full(std::size_t n) { return from_blocks({n}); }

bool ParabolicShape::is_borel() const noexcept { return blocks.size() == n; }

std::size_t ParabolicShape::block_of(std::size_t i) const {
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (i < dims[k]) return k;
  throw ShapeError("coordinate " + std::to_string(i) + " outside a shape of size " + std::to_string(n));
}

Character Character::omega(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw PreconditionError("omega index out of range");
  Character c = zero(n);
  c.coords[i - 1] = 1;
  return c;
}

Character& Character::operator+=(const Character& other) {
  if (size() != other.size()) throw ShapeError("characters of different rank");
  for (std::size_t i = 0; i < size(); ++i) coords[i] += other.coords[i];
  return *this;
}

Character& Character::operator-=(const Character& other) {
  if (size() != other.size()) throw ShapeError("characters of different rank");
  for (std::size_t i = 0; i < size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

Character operator+(Character a, const Character& b) { return a += b; }
Character operator-(Character a, const Character& b) { return a -= b; }

bool is_in_parabolic(const Matrix& g, const ParabolicShape& shape) {
  if (g.rows() != shape.n || g.cols() != shape.n) return false;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (shape.block_of(i) > shape.block_of(j) && g(i, j) != 0) return false;
  return det(g) != 0;
}

bool is_in_borel(const Matrix& g) {
  if (!g.is_square()) return false;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (g(i, i) == 0) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (g(i, j) != 0) return false;
  }
  return true;
}

bool is_in_unipotent(const Matrix& g) {
  if (!is_in_borel(g)) return false;
  for (std::size_t i = 0; i < g.rows(); ++i)
    if (g(i, i) != 1) return false;
  return true;
}

Matrix random_element(const ParabolicShape& shape, Rng& rng) {
  const std::size_t n = shape.n;
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational block_row_sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || shape.block_of(i) > shape.block_of(j)) continue;
      g(i, j) = rng.small_rational();
      if (shape.block_of(i) == shape.block_of(j)) block_row_sum += abs(g(i, j));
    }
    // ceil(row sum) + k with k in [1, 9], random sign
    Integer floor_sum = block_row_sum.get_num() / block_row_sum.get_den();
    Rational magnitude = Rational(floor_sum) + rng.uniform_int(1, 9);
    if (block_row_sum.get_den() != 1) magnitude += 1;
    g(i, i) = rng.uniform_int(0, 1) == 0 ? magnitude : Rational(-magnitude);
  }
  return g;
}

Matrix random_element(const ParabolicShape& shape, std::uint64_t seed) {
  Rng rng(seed);
  return random_element(shape, rng);
}

Matrix random_borel(std::size_t n, Rng& rng) { return random_element(ParabolicShape::borel(n), rng); }

Matrix random_unipotent(std::size_t n, Rng& rng) {
  Matrix g = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g(i, j) = rng.small_rational();
  return g;
}

Matrix random_unipotent(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_unipotent(n, rng);
}

Matrix random_invertible(std::size_t n, Rng& rng) {
  for (;;) {
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.small_rational();
    if (det(g) != 0) return g;
  }
}

Matrix conjugate(const Matrix& g, const Matrix& n) {
  if (!g.is_square() || g.rows() != n.rows() || !n.is_square())
    throw ShapeError("conjugate needs square matrices of equal size");
  return conjugate(g, n, inverse(g));
}

Matrix conjugate(const Matrix& g, const Matrix& n, const Matrix& g_inverse) {
  return g * n * g_inverse;
}

Rational char_eval(const Character& chi, const Matrix& g) {
  if (!g.is_square() || g.rows() != chi.size()) throw ShapeError("character and matrix sizes differ");
  Rational value = 1;
  for (std::size_t i = 0; i < chi.size(); ++i) value *= power(g(i, i), chi.coords[i]);
  return value;
}

bool is_nilpotent(const Matrix& n) {
  if (!n.is_square()) throw ShapeError("is_nilpotent needs a square matrix");
  return mat_pow(n, static_cast<unsigned>(n.rows())).is_zero();
}

Matrix random_nilpotent(std::size_t n, Rng& rng) {
  Matrix lower(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) lower(i, j) = j + 1 == i ? rng.nonzero_small_rational() : rng.small_rational();
  const Matrix g = random_invertible(n, rng);
  return conjugate(g, lower);
}

Matrix random_nilpotent(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_nilpotent(n, rng);
}

}  // namespace nilcone
