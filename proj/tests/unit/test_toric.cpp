#include "doctest.h"

#include <algorithm>
#include <set>

#include "nilcone/errors.hpp"
#include "nilcone/groups.hpp"
#include "nilcone/random.hpp"
#include "nilcone/semiinv.hpp"
#include "nilcone/toric.hpp"
#include "oracles.hpp"

using namespace nilcone;

namespace {

Matrix toric_matrix(const std::vector<Rational>& x) { return oracle::subdiagonal(x); }

Matrix ones_toric(std::size_t n) { return toric_matrix(std::vector<Rational>(n - 1, 1)); }

// Sign of a 1-based permutation via inversion count.
int inversion_sign(const std::vector<std::size_t>& sigma) {
  int sign = 1;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) sign = -sign;
  return sign;
}

}  // namespace

TEST_CASE("block pair validation") {
  CHECK_THROWS_AS(BlockPair::make({3}, {1, 2}, 3), PreconditionError);
  CHECK_THROWS_AS(BlockPair::make({2}, {1}, 3), PreconditionError);
  CHECK_THROWS_AS(BlockPair::make({}, {}, 3), PreconditionError);
  const BlockPair bp = BlockPair::make({2, 2}, {3, 1}, 4);
  CHECK(bp.r == 4);
  CHECK(bp.s() == 2);
  CHECK(bp.t() == 2);
}

TEST_CASE("sum-free test") {
  CHECK(is_sum_free(BlockPair::make({2}, {1, 1}, 3)));
  CHECK(is_sum_free(BlockPair::make({2, 2}, {3, 1}, 4)));
  CHECK_FALSE(is_sum_free(BlockPair::make({1, 2}, {2, 1}, 3)));
  CHECK_FALSE(is_sum_free(BlockPair::make({1, 1}, {1, 1}, 3)));
}

TEST_CASE("block combinatorics") {
  const BlockCombinatorics small(BlockPair::make({2}, {1, 1}, 3));
  CHECK(small.hb(1) == 1);
  CHECK(small.hd(2) == 2);
  CHECK(small.vb(2) == 2);
  CHECK(small.vd(2) == 1);
  CHECK(small.vc(1) == 1);
  CHECK(small.vs(1) == 1);
  CHECK(small.cv(1) == 1);
  CHECK_THROWS_AS(small.hc(1), PreconditionError);
  CHECK_THROWS_AS(small.hd(3), PreconditionError);

  const BlockCombinatorics bc(BlockPair::make({2, 2}, {3, 1}, 4));
  CHECK(bc.hc(0) == 0);
  CHECK(bc.hc(1) == 1);
  CHECK(bc.hs(1) == 1);
  CHECK(bc.ch(1) == 2);
  CHECK(bc.vc(1) == 2);
  CHECK(bc.vs(1) == 1);
  CHECK(bc.cv(1) == 1);
  CHECK(bc.hb(3) == 2);
  CHECK(bc.hd(3) == 1);
  CHECK(bc.vb(4) == 2);
  CHECK(bc.vd(4) == 1);
}

TEST_CASE("toric part") {
  const Matrix h{{0, 0, 0}, {2, 0, 0}, {5, 3, 0}};
  CHECK(toric_part(h) == toric_matrix({2, 3}));
  CHECK_THROWS_AS(toric_part(Matrix{{0, 0, 0}, {0, 0, 0}, {5, 3, 0}}), PatternError);
  CHECK_THROWS_AS(toric_part(Matrix{{0, 1}, {1, 0}}), PatternError);
}

TEST_CASE("toric exponents of small pairs") {
  CHECK(toric_exponents(BlockPair::make({2}, {1, 1}, 3)) == IntVector{2, 1});
  CHECK(toric_exponents(BlockPair::make({1, 1}, {2}, 3)) == IntVector{1, 2});
  CHECK(toric_exponents(BlockPair::make({1}, {1}, 3)) == IntVector{1, 1});
  CHECK(toric_exponents(BlockPair::make({1}, {1}, 2)) == IntVector{1});
}

TEST_CASE("exponent oracle on known invariants") {
  // det_1 at n = 3 is x_1 x_2 on toric matrices
  CHECK(toric_exponents_oracle(det_k(3, 1).datum, 3) == IntVector{1, 1});
  CHECK(toric_exponents_oracle(toric_datum(BlockPair::make({2}, {1, 1}, 3)), 3) == IntVector{2, 1});
  // f_{3,1} vanishes on toric matrices
  CHECK_THROWS_AS(toric_exponents_oracle(f_ij(3, 3, 1).datum, 3), NotToricError);
}

TEST_CASE("accperm is acceptable and the exponent formula matches factoring") {
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& bp : sum_free_block_pairs(n, 8)) {
      const auto sigma = accperm(bp);
      for (std::size_t i = 1; i <= bp.r; ++i) REQUIRE(is_acceptable_entry(i, sigma[i - 1], bp));
      const auto datum = toric_datum(bp);
      REQUIRE(toric_exponents(bp) == toric_exponents_oracle(datum, n));
      ++checked;
    }
  }
  // independent enumeration of ascending partitions gives 48 sum-free pairs
  CHECK(checked == 48);
}

TEST_CASE("accperm rejects pairs with common sub-sums") {
  CHECK_THROWS_AS(accperm(BlockPair::make({1, 2}, {2, 1}, 3)), PreconditionError);
}

TEST_CASE("toric invariants depend only on the subdiagonal") {
  Rng rng(11);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& bp : sum_free_block_pairs(n, 6)) {
      const auto datum = toric_datum(bp);
      const Matrix h = oracle::unipotent_pattern(n, rng);
      REQUIRE(eval(h, datum) == eval(toric_part(h), datum));
    }
  }
}

TEST_CASE("single permutation product equals the determinant on toric matrices") {
  Rng rng(5);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& bp : sum_free_block_pairs(n, 6)) {
      const auto datum = toric_datum(bp);
      const auto sigma = accperm(bp);
      const Matrix ht = toric_part(oracle::unipotent_pattern(n, rng));
      const auto product = eval_via_permutation(ht, datum, sigma);
      REQUIRE(product.value == eval(ht, datum));
      REQUIRE(product.lambda == eval(ones_toric(n), datum));
      REQUIRE(product.lambda * product.lambda == 1);
      const Matrix m = block_matrix(ht, datum);
      Rational direct = inversion_sign(sigma);
      for (std::size_t i = 0; i < sigma.size(); ++i) direct *= m(i, sigma[i] - 1);
      REQUIRE(direct == product.value);
    }
  }
}

TEST_CASE("permutation product rejects unacceptable entries") {
  const auto datum = toric_datum(BlockPair::make({2}, {1, 1}, 3));
  CHECK_THROWS_AS(eval_via_permutation(ones_toric(3), datum, {1, 1}), PreconditionError);
  // the block matrix is the identity on the all-ones toric matrix
  CHECK(eval_via_permutation(ones_toric(3), datum, {1, 2}).lambda == 1);
  CHECK_THROWS_AS(eval_via_permutation(ones_toric(3), datum, {2, 1}), NotAcceptableError);
}

TEST_CASE("weight transport under the diagonal torus") {
  Rng rng(3);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& bp : sum_free_block_pairs(n, 5)) {
      const auto datum = toric_datum(bp);
      const auto h = toric_exponents(bp);
      std::vector<Rational> t(n);
      for (auto& ti : t) ti = rng.nonzero_small_rational();
      std::vector<Rational> x(n - 1);
      for (auto& xi : x) xi = rng.nonzero_small_rational();
      const Matrix g = Matrix::diagonal(t);
      const Rational before = eval(toric_matrix(x), datum);
      const Rational after = eval(conjugate(g, toric_matrix(x)), datum);
      Rational expected = 1;
      for (std::size_t i = 0; i + 1 < n; ++i) expected *= power(t[i + 1] / t[i], static_cast<unsigned>(h[i]));
      REQUIRE(after == expected * before);
      REQUIRE(char_eval(weight_of(datum, n), g) == expected);
    }
  }
}

TEST_CASE("toric cone for small n") {
  const ToricCone c2 = toric_cone(2);
  CHECK(c2.dim == 1);
  CHECK(c2.generators == std::vector<IntVector>{{1}});

  const ToricCone c3 = toric_cone(3);
  const ToricCone expected{2, {{1, 1}, {1, 2}, {2, 1}}};
  CHECK(cones_equal(c3, expected));
  CHECK(is_strongly_convex(c3));
  for (const auto& g : expected.generators) CHECK(cone_contains(c3, g));
  CHECK_FALSE(cone_contains(c3, {1, 0}));
  CHECK_FALSE(cone_contains(c3, {1, 3}));
  CHECK(cone_contains(c3, {3, 5}));
}

TEST_CASE("dual cone and Hilbert basis") {
  const ToricCone c3{2, {{1, 1}, {1, 2}, {2, 1}}};
  const ToricCone dual = dual_cone(c3);
  const std::set<IntVector> normals(dual.generators.begin(), dual.generators.end());
  CHECK(normals == std::set<IntVector>{{2, -1}, {-1, 2}});

  const ToricCone orthant{3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  CHECK(cones_equal(dual_cone(orthant), orthant));

  const auto basis = hilbert_basis(c3);
  CHECK(basis == std::vector<IntVector>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(semigroup_generators(c3) == basis);

  // a non-unimodular cone needs an interior generator
  const auto wide = hilbert_basis(ToricCone{2, {{1, 0}, {1, 3}}});
  CHECK(wide == std::vector<IntVector>{{1, 0}, {1, 1}, {1, 2}, {1, 3}});

  CHECK_THROWS_AS(dual_cone(ToricCone{2, {{1, 1}}}), PreconditionError);
  CHECK_THROWS_AS(hilbert_basis(ToricCone{1, {{1}, {-1}}}), PreconditionError);
  CHECK_THROWS_AS(dual_cone(ToricCone{5, {}}), ScaleError);
}

TEST_CASE("semigroup membership") {
  const std::vector<IntVector> gens{{1, 1}, {1, 2}, {2, 1}};
  CHECK(in_semigroup(gens, {0, 0}));
  CHECK(in_semigroup(gens, {3, 3}));
  CHECK(in_semigroup(gens, {3, 4}));
  CHECK_FALSE(in_semigroup(gens, {1, 0}));
  CHECK_FALSE(in_semigroup(gens, {1, 3}));
}
