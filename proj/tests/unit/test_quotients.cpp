#include "doctest.h"

#include "nilcone/errors.hpp"
#include "nilcone/groups.hpp"
#include "nilcone/quotients.hpp"
#include "nilcone/random.hpp"
#include "oracles.hpp"

using namespace nilcone;
using oracle::at;

namespace {

Matrix u3(const Rational& x, const Rational& x1, const Rational& x2) { return Matrix{{0, 0, 0}, {x1, 0, 0}, {x, x2, 0}}; }

}  // namespace

TEST_CASE("n=2 U-quotient") {
  CHECK(u_quotient_n2(Matrix{{0, 0}, {7, 0}}) == 7);
  CHECK_THROWS_AS(u_quotient_n2(Matrix{{1, 0}, {0, 0}}), PreconditionError);
  CHECK_THROWS_AS(u_quotient_n2(Matrix(3, 3)), ShapeError);
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const Matrix n = random_nilpotent(2, rng);
    CHECK(u_quotient_n2(conjugate(random_unipotent(2, rng), n)) == u_quotient_n2(n));
    const Rational c = rng.small_rational();
    CHECK(u_quotient_n2(Matrix{{0, 0}, {c, 0}}) == c);
  }
}

TEST_CASE("n=3 U-quotient closed forms on U-pattern matrices") {
  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    const Rational x = rng.small_rational();
    const Rational x1 = rng.nonzero_small_rational();
    const Rational x2 = rng.nonzero_small_rational();
    const auto q = u_quotient_n3(u3(x, x1, x2));
    CHECK(q[0] == x);
    CHECK(q[1] == x1 * x1 * x2);
    CHECK(q[2] == x1 * x2 * x2);
    CHECK(q[3] == x1 * x2);
    // the closed forms invert: x = q0, x1 = q1/q3, x2 = q2/q3
    CHECK(q[1] / q[3] == x1);
    CHECK(q[2] / q[3] == x2);
  }
  const auto toric = u_quotient_n3(u3(0, 2, 3));
  CHECK(toric == std::array<Rational, 4>{0, 12, 18, 6});
}

TEST_CASE("n=3 U-quotient relations on random nilpotent matrices") {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const Matrix n = random_nilpotent(3, rng);
    const auto q = u_quotient_n3(n);
    REQUIRE(q[1] * q[2] == q[3] * q[3] * q[3]);
    REQUIRE(q[3] == oracle::det1_n3(n));
    REQUIRE(q[1] == oracle::f1_n3(n));
    REQUIRE(q[2] == oracle::f2_n3(n));
    REQUIRE(q[0] == at(n, 3, 1));
    REQUIRE(u_quotient_n3(conjugate(random_unipotent(3, rng), n)) == q);
  }
}

TEST_CASE("separation of U-pattern matrices") {
  CHECK(separation_check_U(2, 50, 1));
  CHECK(separation_check_U(3, 200, 1));
  CHECK_THROWS_AS(separation_check_U(4, 1, 1), PreconditionError);
}

TEST_CASE("GIT semistability") {
  CHECK(git_semistable(Matrix{{0, 0}, {7, 0}}));
  CHECK_FALSE(git_semistable(Matrix(2, 2)));
  CHECK_FALSE(git_semistable(Matrix{{0, 1}, {0, 0}}));
  CHECK(git_semistable(Matrix{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}));
  CHECK(git_semistable(u3(0, 1, 2)));
  CHECK_FALSE(git_semistable(Matrix(3, 3)));
  CHECK_FALSE(git_semistable(Matrix{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}));
  CHECK_THROWS_AS(git_semistable(Matrix(4, 4)), PreconditionError);
  CHECK_THROWS_AS(git_semistable(Matrix{{1, 0}, {0, 0}}), PreconditionError);
}

TEST_CASE("n=3 GIT map") {
  CHECK(git_map_n3(u3(0, 1, 2)) == ProjectivePoint{0, 1});
  CHECK(git_map_n3(Matrix{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}) == ProjectivePoint{1, 0});
  CHECK(git_map_n3(u3(3, 1, 2)) == ProjectivePoint{1, Rational(2, 3)});
  CHECK_THROWS_AS(git_map_n3(Matrix(3, 3)), UnstablePointError);
  Rng rng(8);
  for (int orbit = 0; orbit < 20; ++orbit) {
    Matrix n = random_nilpotent(3, rng);
    while (!git_semistable(n)) n = random_nilpotent(3, rng);
    const ProjectivePoint base = git_map_n3(n);
    for (int k = 0; k < 10; ++k) REQUIRE(git_map_n3(conjugate(random_borel(3, rng), n)) == base);
  }
}

TEST_CASE("projective normalization") {
  CHECK(normalized(2, 4) == ProjectivePoint{1, 2});
  CHECK(normalized(0, -5) == ProjectivePoint{0, 1});
  CHECK_THROWS_AS(normalized(0, 0), UnstablePointError);
}

TEST_CASE("non-surjectivity relation") {
  for (std::size_t n = 4; n <= 6; ++n) {
    CHECK(nonsurjectivity_residual(Matrix(n, n)) == 0);
    CHECK(nonsurjectivity_relation(n, n == 4 ? 50 : 10, 3));
  }
  CHECK_THROWS_AS(nonsurjectivity_relation(3, 1, 1), PreconditionError);
  CHECK(nonsurjectivity_witness(4) == SemiInvariantDatum({2}, {2}, {{Polynomial::monomial(1)}}));
}

TEST_CASE("witness closed form on U-pattern matrices") {
  Rng rng(10);
  for (std::size_t n = 4; n <= 6; ++n) {
    for (int t = 0; t < 10; ++t) {
      const Matrix h = random_u_pattern(n, rng);
      const Rational minor = at(h, 3, 1) * at(h, 4, 2) - at(h, 3, 2) * at(h, 4, 1);
      Rational det_low = 1;
      if (n > 4) {
        // det_{n-4} on a U-pattern matrix via the Leibniz oracle on the corner of N^4
        const Matrix p = oracle::naive_mul(oracle::naive_mul(h, h), oracle::naive_mul(h, h));
        det_low = oracle::leibniz_det(corner_submatrix(p, n - 4, n - 4));
      }
      REQUIRE(eval(h, nonsurjectivity_witness(n)) == minor * det_low);
      REQUIRE(witness_closed_form(h) == minor * det_low);
    }
  }
}

TEST_CASE("U-pattern coordinates") {
  const Matrix h = u3(5, 1, 2);
  const UCoordinates c = u_coordinates(h);
  CHECK(c.free == std::vector<Rational>{5});
  CHECK(c.torus == std::vector<Rational>{1, 2});
  CHECK(u_pattern_matrix(c) == h);
  Rng rng(12);
  for (std::size_t n = 2; n <= 6; ++n) {
    const Matrix r = random_u_pattern(n, rng);
    const UCoordinates rc = u_coordinates(r);
    CHECK(rc.free.size() == (n - 1) * (n - 2) / 2);
    CHECK(u_pattern_matrix(rc) == r);
  }
  CHECK_THROWS_AS(u_coordinates(Matrix{{0, 0}, {0, 0}}), PatternError);
  CHECK_THROWS_AS(u_pattern_matrix(UCoordinates{{1, 2}, {1, 1}}), ShapeError);
}

TEST_CASE("quotient reports") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) CHECK(verify_relations(3, 5, seed).ok());
  for (std::size_t n = 2; n <= 5; ++n) {
    const QuotientReport report = verify_relations(n, 10, 7);
    CHECK(report.ok());
    CHECK(report.seed == 7);
    CHECK(report.sampled_values.size() == 10);
    const QuotientReport again = verify_relations(n, 10, 7);
    CHECK(again.sampled_values == report.sampled_values);
  }
  const QuotientReport n3 = verify_relations(3, 5, 1);
  bool has_ring_relation = false;
  for (const auto& c : n3.relations) has_ring_relation = has_ring_relation || c.label == "f1*f2 = det1^3";
  CHECK(has_ring_relation);
}
