#include "nilcone/semiinv.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "nilcone/errors.hpp"

namespace nilcone {

namespace {

Polynomial x_pow(std::size_t k) { return Polynomial::monomial(k); }

PolyGrid zero_grid(std::size_t s, std::size_t t) { return PolyGrid(s, std::vector<Polynomial>(t)); }

std::vector<std::size_t> remaining_sizes(std::size_t n, std::initializer_list<std::size_t> used) {
  std::vector<std::size_t> out;
  for (std::size_t v = 1; v < n; ++v)
    if (std::find(used.begin(), used.end(), v) == used.end()) out.push_back(v);
  return out;
}

}  // namespace

SemiInvariantDatum::SemiInvariantDatum(std::vector<std::size_t> row_blocks, std::vector<std::size_t> col_blocks,
                                       PolyGrid polys) {
  if (polys.size() != row_blocks.size())
    throw PreconditionError("polynomial grid has " + std::to_string(polys.size()) + " rows, expected " +
                            std::to_string(row_blocks.size()));
  for (const auto& row : polys)
    if (row.size() != col_blocks.size()) throw PreconditionError("polynomial grid row has the wrong length");

  std::vector<std::size_t> keep_cols;
  for (std::size_t j = 0; j < col_blocks.size(); ++j)
    if (col_blocks[j] != 0) keep_cols.push_back(j);
  for (auto j : keep_cols) cols_.push_back(col_blocks[j]);
  for (std::size_t i = 0; i < row_blocks.size(); ++i) {
    if (row_blocks[i] == 0) continue;
    rows_.push_back(row_blocks[i]);
    std::vector<Polynomial> row;
    row.reserve(keep_cols.size());
    for (auto j : keep_cols) row.push_back(std::move(polys[i][j]));
    polys_.push_back(std::move(row));
  }
  const std::size_t r = std::accumulate(rows_.begin(), rows_.end(), std::size_t{0});
  const std::size_t c = std::accumulate(cols_.begin(), cols_.end(), std::size_t{0});
  if (r != c)
    throw PreconditionError("row blocks sum to " + std::to_string(r) + " but column blocks sum to " +
                            std::to_string(c));
  size_ = r;
}

long SemiInvariantDatum::max_degree() const noexcept {
  long d = -1;
  for (const auto& row : polys_)
    for (const auto& p : row) d = std::max(d, p.degree());
  return d;
}

void SemiInvariantDatum::check_fits(std::size_t n) const {
  for (auto a : rows_)
    if (a > n) throw ShapeError("row block " + std::to_string(a) + " exceeds matrix size " + std::to_string(n));
  for (auto a : cols_)
    if (a > n) throw ShapeError("column block " + std::to_string(a) + " exceeds matrix size " + std::to_string(n));
}

Matrix block_matrix(std::span<const Matrix> pw, const SemiInvariantDatum& datum) {
  if (pw.empty()) throw ShapeError("block_matrix needs at least the zeroth power");
  const std::size_t n = pw.front().rows();
  datum.check_fits(n);
  Matrix out(datum.size(), datum.size());
  std::size_t row_offset = 0;
  for (std::size_t i = 0; i < datum.row_blocks().size(); ++i) {
    const std::size_t a = datum.row_blocks()[i];
    std::size_t col_offset = 0;
    for (std::size_t j = 0; j < datum.col_blocks().size(); ++j) {
      const std::size_t b = datum.col_blocks()[j];
      const Polynomial& p = datum.poly(i, j);
      if (!p.is_zero()) {
        const Matrix value = poly_eval_matrix(p, pw);
        for (std::size_t u = 0; u < a; ++u)
          for (std::size_t v = 0; v < b; ++v) out(row_offset + u, col_offset + v) = value(n - a + u, v);
      }
      col_offset += b;
    }
    row_offset += a;
  }
  return out;
}

Matrix block_matrix(const Matrix& n, const SemiInvariantDatum& datum) {
  if (!n.is_square()) throw ShapeError("block_matrix needs a square matrix");
  const auto pw = powers(n, static_cast<unsigned>(std::max(0L, datum.max_degree())));
  return block_matrix(pw, datum);
}

Rational eval(const Matrix& n, const SemiInvariantDatum& datum) { return det(block_matrix(n, datum)); }

Rational eval(std::span<const Matrix> pw, const SemiInvariantDatum& datum) { return det(block_matrix(pw, datum)); }

Character weight_of(const SemiInvariantDatum& datum, std::size_t n) {
  datum.check_fits(n);
  Character w = Character::zero(n);
  for (auto a : datum.row_blocks())
    for (std::size_t k = n - a; k < n; ++k) ++w.coords[k];
  for (auto b : datum.col_blocks())
    for (std::size_t k = 0; k < b; ++k) --w.coords[k];
  return w;
}

WeightedInvariant make_invariant(SemiInvariantDatum datum, std::size_t n, std::string label) {
  Character w = weight_of(datum, n);
  return {std::move(datum), std::move(w), std::move(label)};
}

WeightedInvariant det_k(std::size_t n, std::size_t k) {
  if (k < 1 || k + 1 > n) throw PreconditionError("det_k needs 1 <= k <= n-1");
  return make_invariant(SemiInvariantDatum({k}, {k}, {{x_pow(n - k)}}), n, "det_" + std::to_string(k));
}

WeightedInvariant f_ij(std::size_t n, std::size_t i, std::size_t j) {
  if (j < 1 || j + 1 >= i || i > n) throw PreconditionError("f_ij needs 1 <= j < i-1 <= n-1");
  PolyGrid p = zero_grid(2, 2);
  p[0][0] = x_pow(n - j + 1);
  p[1][0] = x_pow(1);
  p[1][1] = x_pow(i);
  return make_invariant(SemiInvariantDatum({j - 1, n - i + 1}, {j, n - i}, std::move(p)), n,
                        "f_{" + std::to_string(i) + "," + std::to_string(j) + "}");
}

std::vector<WeightedInvariant> n3_invariants() {
  std::vector<WeightedInvariant> out;
  out.push_back(f_ij(3, 3, 1));
  out.push_back(make_invariant(SemiInvariantDatum({2}, {1, 1}, {{x_pow(1), x_pow(2)}}), 3, "f_1"));
  out.push_back(make_invariant(SemiInvariantDatum({1, 1}, {2}, {{x_pow(2)}, {x_pow(1)}}), 3, "f_2"));
  out.push_back(det_k(3, 1));
  return out;
}

WeightedInvariant g_ij(std::size_t n, std::size_t i, std::size_t j) {
  if (j < 1 || j + 2 > i || i > n) throw PreconditionError("g_ij needs 1 <= j and j+2 <= i <= n");
  std::vector<std::size_t> a;
  std::vector<std::size_t> ap;
  PolyGrid p;
  // Trailing diagonal blocks x^{n-a_k} for the sizes not used by the head.
  auto add_tail = [&](std::size_t from) {
    for (std::size_t k = from; k < a.size(); ++k) p[k][k] = x_pow(n - a[k]);
  };
  const std::size_t c = n - i + 1;
  if (c != j - 1 && c != j) {
    a = {j - 1, c, j};
    ap = {j, c, j - 1};
    for (auto v : remaining_sizes(n, {j - 1, j, c})) {
      a.push_back(v);
      ap.push_back(v);
    }
    p = zero_grid(a.size(), ap.size());
    p[0][0] = x_pow(n - j + 1);
    p[2][2] = x_pow(n - j + 1);
    p[1][0] = x_pow(1);
    p[1][1] = x_pow(i);
    p[2][1] = x_pow(i - j);
    add_tail(3);
  } else if (c == j) {
    a = {j - 1, j};
    ap = {j, j - 1};
    for (auto v : remaining_sizes(n, {j - 1, j})) {
      a.push_back(v);
      ap.push_back(v);
    }
    p = zero_grid(a.size(), ap.size());
    p[0][0] = x_pow(n - j + 1);
    p[1][1] = x_pow(n - j + 1);
    p[1][0] = x_pow(1);
    add_tail(2);
  } else if (j == 2) {
    a = {2, 1};
    ap = {1, 2};
    for (std::size_t v = 3; v < n; ++v) {
      a.push_back(v);
      ap.push_back(v);
    }
    p = zero_grid(a.size(), ap.size());
    p[0][0] = x_pow(n - 2);
    p[0][1] = x_pow(n - 1);
    p[1][1] = x_pow(1);
    add_tail(2);
  } else {
    a = {j, j - 1};
    for (std::size_t v = 1; v + 1 < j; ++v) a.push_back(v);
    ap = {1, j, j - 1};
    for (std::size_t v = 2; v + 1 < j; ++v) ap.push_back(v);
    for (std::size_t v = j + 1; v < n; ++v) {
      a.push_back(v);
      ap.push_back(v);
    }
    p = zero_grid(a.size(), ap.size());
    p[0][0] = x_pow(n - a[0]);
    p[0][1] = x_pow(n - j + 1);
    p[1][1] = x_pow(1);
    p[1][2] = x_pow(n - j + 2);
    p[2][2] = x_pow(n - j + 1);
    add_tail(3);
  }
  return make_invariant(SemiInvariantDatum(std::move(a), std::move(ap), std::move(p)), n,
                        "g_{" + std::to_string(i) + "," + std::to_string(j) + "}");
}

Character chi_extract(std::size_t n) {
  if (n < 2) throw PreconditionError("chi_extract needs n >= 2");
  Character chi = Character::zero(n);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t k = n - i; k < n; ++k) ++chi.coords[k];
    for (std::size_t k = 0; k < i; ++k) --chi.coords[k];
  }
  return chi;
}

SemiInvariantDatum stack(const SemiInvariantDatum& first, const SemiInvariantDatum& second) {
  std::vector<std::size_t> rows = first.row_blocks();
  rows.insert(rows.end(), second.row_blocks().begin(), second.row_blocks().end());
  std::vector<std::size_t> cols = first.col_blocks();
  cols.insert(cols.end(), second.col_blocks().begin(), second.col_blocks().end());
  PolyGrid p = zero_grid(rows.size(), cols.size());
  const std::size_t s1 = first.row_blocks().size();
  const std::size_t t1 = first.col_blocks().size();
  for (std::size_t i = 0; i < s1; ++i)
    for (std::size_t j = 0; j < t1; ++j) p[i][j] = first.poly(i, j);
  for (std::size_t i = 0; i < second.row_blocks().size(); ++i)
    for (std::size_t j = 0; j < second.col_blocks().size(); ++j) p[s1 + i][t1 + j] = second.poly(i, j);
  return SemiInvariantDatum(std::move(rows), std::move(cols), std::move(p));
}

namespace {

// Composition of r into at most three parts, each at most n.
std::vector<std::size_t> random_composition(std::size_t r, std::size_t n, Rng& rng) {
  for (;;) {
    const auto parts = static_cast<std::size_t>(rng.uniform_int(1, 3));
    if (parts > r) continue;
    std::vector<std::size_t> out;
    std::size_t left = r;
    for (std::size_t k = 0; k + 1 < parts; ++k) {
      const auto hi = static_cast<std::int64_t>(std::min(n, left - (parts - 1 - k)));
      const auto part = static_cast<std::size_t>(rng.uniform_int(1, hi));
      out.push_back(part);
      left -= part;
    }
    if (left > n) continue;
    out.push_back(left);
    return out;
  }
}

}  // namespace

SemiInvariantDatum random_datum(std::size_t n, Rng& rng, std::size_t max_size) {
  if (n == 0 || max_size == 0) throw PreconditionError("random_datum needs n >= 1 and max_size >= 1");
  const auto r = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(max_size)));
  auto rows = random_composition(r, n, rng);
  auto cols = random_composition(r, n, rng);
  PolyGrid p = zero_grid(rows.size(), cols.size());
  for (auto& row : p) {
    for (auto& poly : row) {
      if (rng.uniform_int(0, 2) == 0) continue;
      std::vector<Rational> coeffs(static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(n))));
      for (auto& c : coeffs) c = rng.uniform_int(-3, 3);
      poly = Polynomial(std::move(coeffs));
    }
  }
  return SemiInvariantDatum(std::move(rows), std::move(cols), std::move(p));
}

bool verify_semiinvariance(const WeightedInvariant& inv, std::size_t n, std::size_t matrices,
                           std::size_t group_elements, std::uint64_t seed) {
  Rng rng(seed);
  for (std::size_t m = 0; m < matrices; ++m) {
    const Matrix nil = random_nilpotent(n, rng);
    const Rational base = eval(nil, inv.datum);
    for (std::size_t g = 0; g < group_elements; ++g) {
      const Matrix b = random_borel(n, rng);
      if (eval(conjugate(b, nil), inv.datum) != char_eval(inv.weight, b) * base) return false;
    }
  }
  return true;
}

bool verify_u_invariance(const SemiInvariantDatum& datum, std::size_t n, std::size_t matrices,
                         std::size_t group_elements, std::uint64_t seed) {
  Rng rng(seed);
  for (std::size_t m = 0; m < matrices; ++m) {
    const Matrix nil = random_nilpotent(n, rng);
    const Rational base = eval(nil, datum);
    for (std::size_t g = 0; g < group_elements; ++g) {
      const Matrix u = random_unipotent(n, rng);
      if (eval(conjugate(u, nil), datum) != base) return false;
    }
  }
  return true;
}

}  // namespace nilcone
