#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nilcone/matrix.hpp"
#include "nilcone/semiinv.hpp"

namespace nilcone {

/// f_{2,1}(N) = N_{2,1}, the U-quotient of the 2x2 nilpotent cone.
Rational u_quotient_n2(const Matrix& n);

/// (f_{3,1}(N), f_1(N), f_2(N), det_1(N)) for a 3x3 nilpotent N.
std::array<Rational, 4> u_quotient_n3(const Matrix& n);

/// Samples pairs of distinct U-pattern matrices (half of them differing in a
/// single coordinate) and checks that the U-quotient separates them.
bool separation_check_U(std::size_t n, std::size_t trials, std::uint64_t seed);

/// n = 2: f_{2,1}(N) != 0. n = 3: Borel-generic or N_{3,1} != 0.
/// Other sizes throw PreconditionError.
bool git_semistable(const Matrix& n);

/// Point (x0 : x1) of the projective line, scaled so the first nonzero coordinate is 1.
struct ProjectivePoint {
  Rational x0;
  Rational x1;
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

ProjectivePoint normalized(const Rational& x0, const Rational& x1);

/// (f_{3,1}(N) : det_1(N)). Throws UnstablePointError when both vanish.
ProjectivePoint git_map_n3(const Matrix& n);

/// Toric invariant of block sizes (k), (1, ..., 1) at size n, 1 <= k <= n-1.
SemiInvariantDatum toric_f(std::size_t n, std::size_t k);

/// ((2),(2),(x)) for n = 4, ((n-2),(2,n-4),(x, x^4)) for n > 4.
SemiInvariantDatum nonsurjectivity_witness(std::size_t n);

/// g det_{n-3} det_1 f_{n-3} f_{n-1} - (f_{3,1} f_{4,2} f_{n-3} f_{n-1} - f_{4,1} f_{n-2}^2 det_{n-3} det_1)
/// at N, with det_0 = 1. Zero for every nilpotent N when n >= 4.
Rational nonsurjectivity_residual(const Matrix& n);

/// (x_{3,1} x_{4,2} - x_{3,2} x_{4,1}) det_{n-4}(H), the value of the witness on U-pattern H.
Rational witness_closed_form(const Matrix& h);

/// Residual vanishes on `trials` random nilpotent matrices of size n >= 4.
bool nonsurjectivity_relation(std::size_t n, std::size_t trials, std::uint64_t seed);

/// Coordinates of a U-pattern matrix: entries strictly below the subdiagonal
/// (rows 3..n, columns 1..i-2, row by row) and the subdiagonal.
struct UCoordinates {
  std::vector<Rational> free;
  std::vector<Rational> torus;
  friend bool operator==(const UCoordinates&, const UCoordinates&) = default;
};

/// Throws PatternError unless H is strictly lower triangular with nonzero subdiagonal.
UCoordinates u_coordinates(const Matrix& h);
/// Inverse of u_coordinates. Throws ShapeError on inconsistent lengths and
/// PatternError on a zero torus coordinate.
Matrix u_pattern_matrix(const UCoordinates& coords);
/// Random U-pattern matrix with small rational entries.
Matrix random_u_pattern(std::size_t n, Rng& rng);

/// One exact identity checked on samples. Every stored residual must be zero.
struct RelationCheck {
  std::string label;
  std::string anchor;
  std::vector<Rational> residuals;
  bool ok() const;
};

/// One sampled yes/no property.
struct Verdict {
  std::string label;
  std::string anchor;
  std::size_t samples = 0;
  bool ok = false;
};

struct QuotientReport {
  std::size_t n = 0;
  std::string map_label;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<std::vector<Rational>> sampled_values;
  std::vector<RelationCheck> relations;
  std::vector<Verdict> verdicts;
  bool ok() const;
};

/// All quotient checks available at size n (n >= 2), `trials` samples each.
QuotientReport verify_relations(std::size_t n, std::size_t trials, std::uint64_t seed);

}  // namespace nilcone
