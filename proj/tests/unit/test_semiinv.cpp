#include "doctest.h"

#include "nilcone/errors.hpp"
#include "nilcone/groups.hpp"
#include "nilcone/semiinv.hpp"
#include "oracles.hpp"

using namespace nilcone;
using oracle::at;

namespace {

const Matrix kSample{{0, 0, 0}, {1, 0, 0}, {0, 2, 0}};

Polynomial x_pow(std::size_t k) { return Polynomial::monomial(k); }

Character vec(std::vector<long> c) { return Character{std::move(c)}; }

}  // namespace

TEST_CASE("datum normalization") {
  const SemiInvariantDatum d({0, 2}, {1, 1, 0}, {{x_pow(1), x_pow(2), x_pow(3)}, {x_pow(4), x_pow(5), x_pow(6)}});
  CHECK(d.row_blocks() == std::vector<std::size_t>{2});
  CHECK(d.col_blocks() == std::vector<std::size_t>{1, 1});
  CHECK(d.poly(0, 0) == x_pow(4));
  CHECK(d.poly(0, 1) == x_pow(5));
  CHECK(d.size() == 2);
  CHECK_THROWS_AS(SemiInvariantDatum({2}, {1}, {{x_pow(1)}}), PreconditionError);
  CHECK_THROWS_AS(SemiInvariantDatum({1}, {1}, {{x_pow(1), x_pow(1)}}), PreconditionError);
}

TEST_CASE("block_matrix and eval") {
  const SemiInvariantDatum x({1}, {1}, {{x_pow(1)}});
  CHECK(block_matrix(Matrix{{0, 0}, {7, 0}}, x) == Matrix{{7}});
  CHECK(eval(Matrix{{0, 0}, {7, 0}}, x) == 7);
  CHECK(block_matrix(kSample, SemiInvariantDatum({1}, {1}, {{x_pow(2)}})) == Matrix{{2}});
  CHECK(block_matrix(kSample, SemiInvariantDatum({2}, {1, 1}, {{Polynomial(), Polynomial()}})).is_zero());
  CHECK(eval(kSample, det_k(3, 1).datum) == 2);
  CHECK(eval(kSample, det_k(3, 1).datum) == oracle::det1_n3(kSample));

  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    SemiInvariantDatum d = random_datum(3, rng);
    bool positive_valuation = true;
    for (const auto& row : d.polys())
      for (const auto& p : row)
        if (!p.is_zero() && p.valuation() == 0) positive_valuation = false;
    if (positive_valuation) CHECK(eval(Matrix::zero(3, 3), d) == 0);
  }
  CHECK_THROWS_AS(block_matrix(kSample, SemiInvariantDatum({4}, {4}, {{x_pow(1)}})), ShapeError);
}

TEST_CASE("block_matrix matches the assembled definition") {
  Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 4));
    const SemiInvariantDatum d = random_datum(n, rng);
    const Matrix nil = random_nilpotent(n, rng);
    const Matrix m = block_matrix(nil, d);
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < d.row_blocks().size(); ++i) {
      std::size_t c0 = 0;
      for (std::size_t j = 0; j < d.col_blocks().size(); ++j) {
        Matrix pn(n, n);
        const auto& c = d.poly(i, j).coefficients();
        for (std::size_t k = 0; k < c.size(); ++k) pn += c[k] * mat_pow(nil, static_cast<unsigned>(k));
        const Matrix block = corner_submatrix(pn, d.row_blocks()[i], d.col_blocks()[j]);
        for (std::size_t u = 0; u < block.rows(); ++u)
          for (std::size_t v = 0; v < block.cols(); ++v) CHECK(m(r0 + u, c0 + v) == block(u, v));
        c0 += d.col_blocks()[j];
      }
      r0 += d.row_blocks()[i];
    }
    if (d.size() <= 7) CHECK(eval(nil, d) == oracle::leibniz_det(m));
  }
}

TEST_CASE("weights") {
  CHECK(weight_of(SemiInvariantDatum({2}, {1, 1}, {{x_pow(1), x_pow(2)}}), 3) == vec({-2, 1, 1}));
  CHECK(weight_of(SemiInvariantDatum({1}, {1}, {{x_pow(1)}}), 2) == vec({-1, 1}));
  CHECK(weight_of(SemiInvariantDatum({4}, {4}, {{x_pow(0)}}), 4) == Character::zero(4));
  CHECK(det_k(4, 2).weight == vec({-1, -1, 1, 1}));
  const auto inv = n3_invariants();
  CHECK(inv[0].weight == vec({-1, 0, 1}));
  CHECK(inv[3].weight == vec({-1, 0, 1}));
}

TEST_CASE("det_k") {
  CHECK_THROWS_AS(det_k(3, 0), PreconditionError);
  CHECK_THROWS_AS(det_k(3, 3), PreconditionError);
  CHECK(det_k(2, 1).datum == SemiInvariantDatum({1}, {1}, {{x_pow(1)}}));
  Rng rng(4);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int t = 0; t < 10; ++t) {
      const Matrix h = oracle::borel_pattern(n, rng);
      for (std::size_t k = 1; k < n; ++k) CHECK(eval(h, det_k(n, k).datum) == 1);
    }
  }
}

TEST_CASE("f_ij") {
  const auto f31 = f_ij(3, 3, 1);
  CHECK(f31.datum == SemiInvariantDatum({1}, {1}, {{x_pow(1)}}));
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const Matrix nil = random_nilpotent(3, rng);
    CHECK(eval(nil, f31.datum) == at(nil, 3, 1));
  }
  const auto f42 = f_ij(4, 4, 2);
  CHECK(f42.datum.row_blocks() == std::vector<std::size_t>{1, 1});
  CHECK(f42.datum.col_blocks() == std::vector<std::size_t>{2});
  CHECK_THROWS_AS(f_ij(4, 2, 1), PreconditionError);
  CHECK_THROWS_AS(f_ij(4, 5, 1), PreconditionError);
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t i = 3; i <= n; ++i)
      for (std::size_t j = 1; j + 1 < i; ++j) CHECK(f_ij(n, i, j).datum.size() > 0);
}

TEST_CASE("n = 3 invariants") {
  const auto inv = n3_invariants();
  REQUIRE(inv.size() == 4);
  CHECK(inv[0].label == "f_{3,1}");
  CHECK(inv[1].label == "f_1");
  CHECK(inv[2].label == "f_2");
  CHECK(inv[3].label == "det_1");

  const Matrix toric = oracle::subdiagonal({1, 2});
  CHECK(eval(toric, inv[1].datum) == 2);
  CHECK(eval(toric, inv[2].datum) == 4);
  CHECK(eval(toric, inv[3].datum) == 2);
  CHECK(eval(toric, inv[0].datum) == 0);

  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const Matrix nil = random_nilpotent(3, rng);
    const Rational f1 = eval(nil, inv[1].datum);
    const Rational f2 = eval(nil, inv[2].datum);
    const Rational d1 = eval(nil, inv[3].datum);
    CHECK(f1 == oracle::f1_n3(nil));
    CHECK(f2 == oracle::f2_n3(nil));
    CHECK(d1 == oracle::det1_n3(nil));
    CHECK(f1 * f2 == d1 * d1 * d1);
    CHECK(d1 == eval(nil, det_k(3, 2).datum));
  }
}

TEST_CASE("g_ij extracts the free entries of the Borel pattern") {
  CHECK_THROWS_AS(g_ij(4, 2, 1), PreconditionError);
  CHECK_THROWS_AS(g_ij(4, 5, 1), PreconditionError);
  Rng rng(7);
  for (std::size_t n = 3; n <= 6; ++n) {
    for (std::size_t i = 3; i <= n; ++i) {
      for (std::size_t j = 1; j + 2 <= i; ++j) {
        const auto g = g_ij(n, i, j);
        CHECK(g.weight == chi_extract(n));
        for (int t = 0; t < 5; ++t) {
          const Matrix h = oracle::borel_pattern(n, rng);
          CHECK(eval(h, g.datum) == at(h, i, j));
        }
      }
    }
  }
}

TEST_CASE("chi_extract") {
  CHECK(chi_extract(2) == vec({-1, 1}));
  CHECK(chi_extract(3) == vec({-2, 0, 2}));
  for (std::size_t n = 2; n <= 7; ++n) {
    Character sum = Character::zero(n);
    for (std::size_t k = 1; k < n; ++k) sum += det_k(n, k).weight;
    CHECK(chi_extract(n) == sum);
  }
}

TEST_CASE("semi-invariance") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t k = 1; k < n; ++k) CHECK(verify_semiinvariance(det_k(n, k), n, 5, 3, 100 + n));
  for (std::size_t n = 3; n <= 5; ++n)
    for (std::size_t i = 3; i <= n; ++i)
      for (std::size_t j = 1; j + 2 <= i; ++j) CHECK(verify_semiinvariance(g_ij(n, i, j), n, 4, 3, 200 + n));

  auto wrong = det_k(3, 1);
  wrong.weight = vec({0, 0, 1});
  CHECK_FALSE(verify_semiinvariance(wrong, 3, 5, 3, 1));

  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 4));
    const auto inv = make_invariant(random_datum(n, rng), n, "random");
    CHECK(verify_semiinvariance(inv, n, 3, 3, rng.next()));
    CHECK(verify_u_invariance(inv.datum, n, 3, 3, rng.next()));
  }
}

TEST_CASE("stacking multiplies functions and adds weights") {
  Rng rng(9);
  for (int t = 0; t < 15; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 4));
    const auto a = random_datum(n, rng, 4);
    const auto b = random_datum(n, rng, 4);
    const auto ab = stack(a, b);
    CHECK(weight_of(ab, n) == weight_of(a, n) + weight_of(b, n));
    const Matrix nil = random_nilpotent(n, rng);
    CHECK(eval(nil, ab) == eval(nil, a) * eval(nil, b));
  }
}
