#include "doctest.h"

#include "nilcone/errors.hpp"
#include "nilcone/groups.hpp"
#include "nilcone/quiver.hpp"
#include "nilcone/semiinv.hpp"
#include "oracles.hpp"

using namespace nilcone;

namespace {

Polynomial x_pow(std::size_t k) { return Polynomial::monomial(k); }

// n = 2, x = (2, 0), y = (0, 1) with the two source columns given by p and q.
MorphismDatum two_column_morphism(const Polynomial& p, const Polynomial& q) {
  MorphismDatum phi(2, {2, 0}, {0, 1});
  phi.set(2, 1, 0, 0, p);
  phi.set(2, 1, 0, 1, q);
  return phi;
}

}  // namespace

TEST_CASE("build_MN") {
  const auto zero = build_MN(Matrix::zero(3, 3), ParabolicShape::borel(3));
  CHECK(zero.loop_map.is_zero());
  const auto rep = build_MN(Matrix{{0, 0}, {5, 0}}, ParabolicShape::borel(2));
  CHECK(rep.dims == std::vector<std::size_t>{1, 2});
  REQUIRE(rep.arrow_maps.size() == 1);
  CHECK(rep.arrow_maps[0] == Matrix{{1}, {0}});

  const auto shape = ParabolicShape::from_blocks({2, 1, 2});
  const Matrix nil = random_nilpotent(5, 3);
  const auto r = build_MN(nil, shape);
  CHECK(r.dims == std::vector<std::size_t>{2, 3, 5});
  CHECK(r.arrow_maps[1].rows() == 5);
  CHECK(r.arrow_maps[1].cols() == 3);
  CHECK(mat_pow(r.loop_map, 5).is_zero());
  CHECK_THROWS_AS(build_MN(nil, ParabolicShape::borel(4)), ShapeError);
}

TEST_CASE("morphism datum validation") {
  CHECK_THROWS_AS(MorphismDatum(2, {1, 0}, {0, 1}), PreconditionError);
  MorphismDatum phi(3, {1, 1, 0}, {0, 0, 1});
  CHECK(phi.size() == 3);
  CHECK_THROWS_AS(phi.set(1, 2, 0, 0, x_pow(0)), PreconditionError);
  CHECK_THROWS_AS(phi.set(3, 1, 1, 0, x_pow(0)), PreconditionError);
  phi.set(3, 1, 0, 0, Polynomial{1, 0, 0, 5});
  CHECK(phi.get(3, 1, 0, 0) == Polynomial{1});
  MorphismDatum general(3, {1, 0, 1}, {0, 2, 0});
  CHECK_THROWS_AS(general.set(2, 1, 0, 0, x_pow(1)), PreconditionError);
  CHECK_THROWS_AS(datum_from_morphism(general), PreconditionError);
}

TEST_CASE("eval_f_phi on small morphisms") {
  Rng rng(1);
  for (int t = 0; t < 10; ++t) {
    const Matrix nil = random_nilpotent(2, rng);
    // Repeated or proportional columns give a vanishing determinant.
    CHECK(eval_f_phi(nil, two_column_morphism(x_pow(1), x_pow(1))) == 0);
    CHECK(eval_f_phi(nil, two_column_morphism(x_pow(1), Polynomial{0, 7})) == 0);
    // Columns (N^0)_{(2,1)} and (N^1)_{(2,1)}: det [[1, N11], [0, N21]] = N21.
    const auto phi = two_column_morphism(x_pow(0), x_pow(1));
    CHECK(assemble_MN(nil, phi) == Matrix{{1, nil(0, 0)}, {0, nil(1, 0)}});
    CHECK(eval_f_phi(nil, phi) == nil(1, 0));
  }
}

TEST_CASE("datum_from_morphism") {
  const auto d = datum_from_morphism(two_column_morphism(x_pow(0), x_pow(1)));
  CHECK(d == SemiInvariantDatum({2}, {1, 1}, {{x_pow(0), x_pow(1)}}));

  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<std::size_t> x(n, 0);
    x[n - 1] = 1;
    MorphismDatum phi(n, x, x);
    phi.set(n, n, 0, 0, x_pow(0));
    CHECK(datum_from_morphism(phi) == SemiInvariantDatum({n}, {n}, {{x_pow(0)}}));
    CHECK(eval_f_phi(random_nilpotent(n, n), phi) == 1);
  }
}

TEST_CASE("f_phi agrees with the translated datum and is U-invariant") {
  Rng rng(2);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int t = 0; t < 15; ++t) {
      const auto phi = random_morphism(n, rng);
      CHECK(phi.y()[n - 1] >= 1);
      for (std::size_t i = 0; i + 1 < n; ++i) CHECK(phi.y()[i] == 0);
      for (std::size_t j = 0; j < n; ++j) CHECK(phi.x()[j] <= 2);
      const auto datum = datum_from_morphism(phi);
      for (int s = 0; s < 3; ++s) {
        const Matrix nil = random_nilpotent(n, rng);
        const Rational value = eval_f_phi(nil, phi);
        CHECK(value == eval(nil, datum));
        CHECK(eval_f_phi(conjugate(random_unipotent(n, rng), nil), phi) == value);
      }
    }
  }
}
