#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nilcone/groups.hpp"
#include "nilcone/matrix.hpp"

namespace nilcone {

enum class GroupKind { borel, unipotent, parabolic };

std::string to_string(GroupKind kind);

/// One of the three acting groups. For borel and unipotent the shape is the
/// Borel shape (1, ..., 1).
struct GroupSpec {
  GroupKind kind = GroupKind::borel;
  ParabolicShape shape;

  static GroupSpec borel(std::size_t n);
  static GroupSpec unipotent(std::size_t n);
  static GroupSpec parabolic(const ParabolicShape& shape);

  std::size_t n() const noexcept { return shape.n; }
  /// Whether the (zero-based) entry (i, j) may be nonzero in a group element.
  bool allows(std::size_t i, std::size_t j) const;
  bool contains(const Matrix& g) const;
};

enum class Cell { forced_zero, forced_one, nonzero_free, free };

/// Cell classification of the generic normal form for a group.
struct PatternSpec {
  GroupSpec group;
  std::vector<Cell> cells;  // row-major, n x n

  std::size_t n() const noexcept { return group.n(); }
  /// Zero-based access.
  Cell at(std::size_t i, std::size_t j) const { return cells[i * n() + j]; }
  /// Number of free and nonzero-free cells.
  std::size_t free_count() const;
  bool matches(const Matrix& h) const;
};

/// Borel: unit subdiagonal, free strictly below it, zero elsewhere. Unipotent:
/// the same with the subdiagonal nonzero-free. Parabolic with dims d_1 < ... < d_p
/// (1-based, d_0 = 0): H_ij = 0 if i <= j; if i = d_1+1 and j < d_1; if
/// d_{k-1}+3 <= i <= d_k, d_{k-1}+1 <= j <= d_k-2 and i > j+1; if
/// d_{k-1}+2 <= i <= d_k and j = d_{k-1}. H_{j+1,j} = 1. Everything else is free.
PatternSpec pattern(const GroupSpec& group);

/// det((N^{n-d_k})_{(d_k,d_k)}) for k = 1, ..., p-1.
std::vector<Rational> genericity_minors(const Matrix& n, const ParabolicShape& shape);
/// All genericity minors are nonzero.
bool is_generic(const Matrix& n, const ParabolicShape& shape);

struct ConjugacyCertificate {
  Matrix g;
  GroupKind group_kind = GroupKind::borel;
};

struct NormalForm {
  Matrix h;
  ConjugacyCertificate cert;
  /// Genericity minors of the input, for reporting.
  std::vector<Rational> minors;
};

/// Search budget of conjugacy_witness before the exhaustive fallback.
inline constexpr int kWitnessAttempts = 32;
/// Largest grid the exhaustive non-conjugacy check will enumerate.
inline constexpr std::size_t kWitnessGridLimit = 20000;

/// Invertible g in the group with g N = H g. Solves the linear system for g
/// restricted to the group's pattern (with a homogenizing diagonal variable for
/// the unipotent group), then tries kWitnessAttempts random combinations of the
/// kernel basis with coefficients in [-9, 9]. If all are singular and the grid
/// {0..D}^m over the m kernel coordinates has at most kWitnessGridLimit points
/// (D = n, or n + 1 for the unipotent group), every grid point is tried: the
/// determinant has degree at most D in each coordinate, so vanishing on the
/// whole grid proves it vanishes identically. The result is scaled so that
/// g_11 = 1. Throws NotConjugateError, with certified() true when proven.
Matrix conjugacy_witness(const Matrix& n, const Matrix& h, const GroupSpec& group, std::uint64_t seed = 0);

/// Borel normal form by invariant extraction: H_ij = g_ij(N) / prod_k det_k(N).
/// Throws GenericityError unless all det_k(N) are nonzero.
NormalForm normal_form_B(const Matrix& n, std::uint64_t seed = 0);
/// Unipotent normal form: H = t^{-1} H_B t with t the diagonal of the Borel certificate.
NormalForm normal_form_U(const Matrix& n, std::uint64_t seed = 0);
/// Parabolic normal form, starting from the Borel normal form (the input must
/// be Borel-generic) and conjugating by elementary matrices of the parabolic
/// subgroup, finishing with a Toeplitz correction in the first block.
NormalForm normal_form_P(const Matrix& n, const ParabolicShape& shape, std::uint64_t seed = 0);
/// Dispatch on the group kind.
NormalForm normal_form(const Matrix& n, const GroupSpec& group, std::uint64_t seed = 0);

}  // namespace nilcone
