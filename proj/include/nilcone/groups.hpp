#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nilcone/matrix.hpp"
#include "nilcone/random.hpp"

namespace nilcone {

/// Block sizes (b_1, ..., b_p) of an upper-block parabolic subgroup of GL_n,
/// together with the cumulative dimensions d_k = b_1 + ... + b_k.
struct ParabolicShape {
  std::size_t n = 0;
  std::vector<std::size_t> blocks;
  std::vector<std::size_t> dims;

  /// Throws PreconditionError for empty input or a zero block.
  static ParabolicShape from_blocks(std::vector<std::size_t> blocks);
  /// Blocks (1, ..., 1).
  static ParabolicShape borel(std::size_t n);
  /// The single block (n).
  static ParabolicShape full(std::size_t n);

  std::size_t block_count() const noexcept { return blocks.size(); }
  bool is_borel() const noexcept;
  /// Block index (zero-based) containing the zero-based coordinate i.
  std::size_t block_of(std::size_t i) const;

  friend bool operator==(const ParabolicShape&, const ParabolicShape&) = default;
};

/// Character of the Borel subgroup, written additively in the basis
/// omega_1, ..., omega_n with omega_i(g) = g_ii.
struct Character {
  std::vector<long> coords;

  static Character zero(std::size_t n) { return {std::vector<long>(n, 0)}; }
  /// omega_i with 1-based i.
  static Character omega(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return coords.size(); }
  Character& operator+=(const Character& other);
  Character& operator-=(const Character& other);
  friend bool operator==(const Character&, const Character&) = default;
};

Character operator+(Character a, const Character& b);
Character operator-(Character a, const Character& b);

/// Invertible and zero below the block-diagonal pattern of `shape`.
bool is_in_parabolic(const Matrix& g, const ParabolicShape& shape);
bool is_in_borel(const Matrix& g);
bool is_in_unipotent(const Matrix& g);

/// Random element of the parabolic subgroup. Off-diagonal entries inside the
/// pattern are p/q with p in [-9, 9], q in [1, 4]. Diagonal entries are nonzero
/// integers whose magnitude exceeds the absolute row sum inside the diagonal
/// block, so every diagonal block is strictly diagonally dominant.
Matrix random_element(const ParabolicShape& shape, Rng& rng);
Matrix random_element(const ParabolicShape& shape, std::uint64_t seed);
Matrix random_borel(std::size_t n, Rng& rng);
/// Upper triangular with unit diagonal.
Matrix random_unipotent(std::size_t n, Rng& rng);
Matrix random_unipotent(std::size_t n, std::uint64_t seed);
/// Dense random invertible matrix (resampled until det != 0).
Matrix random_invertible(std::size_t n, Rng& rng);

/// g N g^{-1}. Throws SingularityError if g is singular, ShapeError on size mismatch.
Matrix conjugate(const Matrix& g, const Matrix& n);
/// Same, with g^{-1} supplied by the caller.
Matrix conjugate(const Matrix& g, const Matrix& n, const Matrix& g_inverse);

/// prod_i g_ii^{c_i}. SingularityError on a zero diagonal entry with negative exponent.
Rational char_eval(const Character& chi, const Matrix& g);

/// N^n = 0.
bool is_nilpotent(const Matrix& n);
/// Random strictly lower triangular matrix (nonzero subdiagonal, so the result is
/// regular) conjugated by a random invertible one.
Matrix random_nilpotent(std::size_t n, Rng& rng);
Matrix random_nilpotent(std::size_t n, std::uint64_t seed);

}  // namespace nilcone
