#include "nilcone/toric.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "nilcone/errors.hpp"

namespace nilcone {

namespace {

std::vector<std::size_t> prefix_sums(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> p(v.size() + 1, 0);
  for (std::size_t k = 0; k < v.size(); ++k) p[k + 1] = p[k] + v[k];
  return p;
}

std::set<std::size_t> proper_subset_sums(const std::vector<std::size_t>& v) {
  std::set<std::size_t> sums;
  const std::size_t count = v.size();
  // nonempty proper subsets
  for (unsigned long mask = 1; mask + 1 < (1UL << count); ++mask) {
    std::size_t s = 0;
    for (std::size_t k = 0; k < count; ++k)
      if (mask & (1UL << k)) s += v[k];
    sums.insert(s);
  }
  return sums;
}

// (block index, position inside it), both 1-based.
std::pair<std::size_t, std::size_t> locate(const std::vector<std::size_t>& prefix, std::size_t i) {
  if (i < 1 || i > prefix.back()) throw PreconditionError("index " + std::to_string(i) + " outside 1.." +
                                                          std::to_string(prefix.back()));
  std::size_t b = 1;
  while (prefix[b] < i) ++b;
  return {b, i - prefix[b - 1]};
}

}  // namespace

BlockPair BlockPair::make(std::vector<std::size_t> a, std::vector<std::size_t> ap, std::size_t n) {
  if (a.empty() || ap.empty()) throw PreconditionError("block pair needs nonempty block lists");
  if (n < 2) throw PreconditionError("block pair needs n >= 2");
  for (const auto* side : {&a, &ap})
    for (auto x : *side)
      if (x < 1 || x + 1 > n) throw PreconditionError("toric block sizes must lie in [1, n-1]");
  const std::size_t r = std::accumulate(a.begin(), a.end(), std::size_t{0});
  if (r != std::accumulate(ap.begin(), ap.end(), std::size_t{0}))
    throw PreconditionError("block sizes have different sums");
  return {std::move(a), std::move(ap), n, r};
}

Matrix toric_part(const Matrix& h) {
  if (!h.is_square()) throw PatternError("toric_part needs a square matrix");
  const std::size_t n = h.rows();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j)
      if (h(i, j) != 0) throw PatternError("matrix is not strictly lower triangular");
    if (i > 0) {
      if (h(i, i - 1) == 0) throw PatternError("matrix has a zero subdiagonal entry");
      out(i, i - 1) = h(i, i - 1);
    }
  }
  return out;
}

bool is_sum_free(const BlockPair& bp) {
  const auto left = proper_subset_sums(bp.a);
  const auto right = proper_subset_sums(bp.ap);
  return std::none_of(left.begin(), left.end(), [&](std::size_t x) { return right.count(x) > 0; });
}

BlockCombinatorics::BlockCombinatorics(const BlockPair& bp)
    : bp_(bp), prefix_a_(prefix_sums(bp.a)), prefix_ap_(prefix_sums(bp.ap)) {}

std::size_t BlockCombinatorics::change(const std::vector<std::size_t>& from, const std::vector<std::size_t>& to,
                                       std::size_t k, std::size_t& split) const {
  if (k >= from.size()) throw PreconditionError("no positive split at index " + std::to_string(k));
  for (std::size_t c = 1; c < to.size(); ++c) {
    if (to[c] > from[k]) {
      split = to[c] - from[k];
      return c;
    }
  }
  throw PreconditionError("no positive split at index " + std::to_string(k));
}

std::size_t BlockCombinatorics::hc(std::size_t k) const {
  if (k == 0) return 0;
  std::size_t split = 0;
  return change(prefix_a_, prefix_ap_, k, split);
}

std::size_t BlockCombinatorics::hs(std::size_t k) const {
  std::size_t split = 0;
  change(prefix_a_, prefix_ap_, k, split);
  return split;
}

std::size_t BlockCombinatorics::ch(std::size_t k) const { return bp_.ap[hc(k) - 1] - hs(k); }

std::size_t BlockCombinatorics::vc(std::size_t k) const {
  if (k == 0) return 0;
  std::size_t split = 0;
  return change(prefix_ap_, prefix_a_, k, split);
}

std::size_t BlockCombinatorics::vs(std::size_t k) const {
  std::size_t split = 0;
  change(prefix_ap_, prefix_a_, k, split);
  return split;
}

std::size_t BlockCombinatorics::cv(std::size_t k) const { return bp_.a[vc(k) - 1] - vs(k); }

std::size_t BlockCombinatorics::hb(std::size_t i) const { return locate(prefix_a_, i).first; }
std::size_t BlockCombinatorics::hd(std::size_t i) const { return locate(prefix_a_, i).second; }
std::size_t BlockCombinatorics::vb(std::size_t j) const { return locate(prefix_ap_, j).first; }
std::size_t BlockCombinatorics::vd(std::size_t j) const { return locate(prefix_ap_, j).second; }

bool is_acceptable_entry(std::size_t i, std::size_t j, const BlockPair& bp) {
  const BlockCombinatorics bc(bp);
  return bc.vd(j) < bc.hd(i) + bp.n - bp.a[bc.hb(i) - 1];
}

std::vector<std::size_t> accperm(const BlockPair& bp) {
  if (!is_sum_free(bp)) throw PreconditionError("accperm needs a sum-free block pair");
  const auto pa = prefix_sums(bp.a);
  const auto pap = prefix_sums(bp.ap);
  std::vector<std::size_t> sigma(bp.r);
  std::iota(sigma.begin(), sigma.end(), std::size_t{1});
  for (std::size_t m = 0; m < bp.ap.size(); ++m) {
    const std::size_t lo = pap[m];
    const std::size_t hi = pap[m + 1];
    std::vector<std::size_t> bounds{lo};
    for (auto p : pa)
      if (lo < p && p < hi) bounds.push_back(p);
    bounds.push_back(hi);
    std::size_t column = lo + 1;
    for (std::size_t seg = bounds.size() - 1; seg-- > 0;)
      for (std::size_t i = bounds[seg] + 1; i <= bounds[seg + 1]; ++i) sigma[i - 1] = column++;
  }
  return sigma;
}

SemiInvariantDatum toric_datum(const BlockPair& bp) {
  const auto sigma = accperm(bp);
  const BlockCombinatorics bc(bp);
  PolyGrid polys(bp.s(), std::vector<Polynomial>(bp.t()));
  std::vector<std::vector<bool>> set(bp.s(), std::vector<bool>(bp.t(), false));
  for (std::size_t i = 1; i <= bp.r; ++i) {
    const std::size_t k = bc.hb(i);
    const std::size_t l = bc.vb(sigma[i - 1]);
    if (set[k - 1][l - 1]) continue;
    set[k - 1][l - 1] = true;
    const std::size_t exponent = bp.n - bp.a[k - 1] + bc.hd(i) - bc.vd(sigma[i - 1]);
    polys[k - 1][l - 1] = Polynomial::monomial(exponent);
  }
  return SemiInvariantDatum(bp.a, bp.ap, std::move(polys));
}

namespace {

int permutation_sign(const std::vector<std::size_t>& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  int sign = 1;
  for (std::size_t start = 0; start < sigma.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (std::size_t i = start; !seen[i]; i = sigma[i] - 1) {
      seen[i] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

void check_permutation(const std::vector<std::size_t>& sigma, std::size_t r) {
  if (sigma.size() != r) throw PreconditionError("permutation has the wrong length");
  std::vector<bool> hit(r, false);
  for (auto v : sigma) {
    if (v < 1 || v > r || hit[v - 1]) throw PreconditionError("not a permutation of 1..r");
    hit[v - 1] = true;
  }
}

}  // namespace

PermutationProduct eval_via_permutation(const Matrix& h, const SemiInvariantDatum& datum,
                                        const std::vector<std::size_t>& sigma) {
  check_permutation(sigma, datum.size());
  const std::size_t n = h.rows();
  const Matrix m = block_matrix(h, datum);
  Matrix ones(n, n);
  for (std::size_t i = 1; i < n; ++i) ones(i, i - 1) = 1;
  const Matrix m_ones = block_matrix(ones, datum);
  const int sign = permutation_sign(sigma);
  PermutationProduct out{sign, sign};
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const Rational& coefficient = m_ones(i, sigma[i] - 1);
    if (coefficient == 0)
      throw NotAcceptableError("entry (" + std::to_string(i + 1) + "," + std::to_string(sigma[i]) +
                               ") vanishes on toric matrices");
    out.value *= m(i, sigma[i] - 1);
    out.lambda *= coefficient;
  }
  return out;
}

IntVector toric_exponents(const BlockPair& bp) {
  if (!is_sum_free(bp)) throw PreconditionError("exponent formula needs a sum-free block pair");
  const std::size_t n = bp.n;
  IntVector h(n - 1, 0);
  h[n - 2] = static_cast<long>(bp.s());
  for (std::size_t l = 1; l + 1 < n; ++l) {
    long value = static_cast<long>(bp.t());
    for (std::size_t k = 2; k <= l; ++k)
      value += std::count_if(bp.ap.begin(), bp.ap.end(), [&](std::size_t x) { return x >= k; });
    for (std::size_t k = 1; k < l; ++k)
      value -= std::count_if(bp.a.begin(), bp.a.end(), [&](std::size_t x) { return x + k >= n; });
    h[l - 1] = value;
  }
  return h;
}

namespace {

std::vector<long> first_primes(std::size_t count, std::size_t skip) {
  std::vector<long> primes;
  for (long candidate = 2; primes.size() < count + skip; ++candidate) {
    bool prime = true;
    for (long d = 2; d * d <= candidate; ++d)
      if (candidate % d == 0) prime = false;
    if (prime) primes.push_back(candidate);
  }
  return {primes.begin() + static_cast<long>(skip), primes.end()};
}

// Exponents of the given primes in |value| and the remaining rational cofactor.
IntVector factor_over(const Rational& value, const std::vector<long>& primes, Rational& cofactor) {
  Integer num = abs(value.get_num());
  Integer den = value.get_den();
  IntVector exponents;
  for (long p : primes) {
    long e = 0;
    while (num % p == 0) {
      num /= p;
      ++e;
    }
    while (den % p == 0) {
      den /= p;
      --e;
    }
    exponents.push_back(e);
  }
  cofactor = Rational(num, den);
  if (value < 0) cofactor = -cofactor;
  return exponents;
}

}  // namespace

IntVector toric_exponents_oracle(const SemiInvariantDatum& datum, std::size_t n) {
  if (n < 2) throw PreconditionError("toric exponents need n >= 2");
  const std::size_t d = n - 1;
  const auto ones_value = [&] {
    Matrix h(n, n);
    for (std::size_t i = 1; i < n; ++i) h(i, i - 1) = 1;
    return eval(h, datum);
  }();
  if (ones_value == 0) throw NotToricError("invariant vanishes on toric matrices");

  IntVector readings[2];
  for (int round = 0; round < 2; ++round) {
    const auto primes = first_primes(d, round == 0 ? 0 : d + 2);
    Matrix h(n, n);
    for (std::size_t i = 1; i < n; ++i) h(i, i - 1) = primes[i - 1];
    const Rational value = eval(h, datum);
    if (value == 0) throw NotToricError("invariant vanishes on a toric matrix");
    Rational cofactor;
    readings[round] = factor_over(value, primes, cofactor);
    // a monomial c * x^h has cofactor exactly c = f(all ones)
    if (cofactor != ones_value) throw NotToricError("value on a toric matrix is not a monomial in the subdiagonal");
    for (long e : readings[round])
      if (e < 0) throw NotToricError("negative exponent");
  }
  if (readings[0] != readings[1]) throw NotToricError("two prime assignments give different exponents");
  return readings[0];
}

std::vector<BlockPair> sum_free_block_pairs(std::size_t n, std::size_t max_r) {
  std::vector<BlockPair> out;
  if (n < 2) return out;
  // ascending partitions of r with parts in [1, n-1]
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::vector<std::vector<std::size_t>>&)>
      partitions = [&](std::size_t left, std::size_t min_part, std::vector<std::size_t>& current,
                       std::vector<std::vector<std::size_t>>& acc) {
        if (left == 0) {
          acc.push_back(current);
          return;
        }
        for (std::size_t p = min_part; p <= std::min(left, n - 1); ++p) {
          current.push_back(p);
          partitions(left - p, p, current, acc);
          current.pop_back();
        }
      };
  for (std::size_t r = 1; r <= max_r; ++r) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> current;
    partitions(r, 1, current, parts);
    for (const auto& a : parts)
      for (const auto& ap : parts) {
        BlockPair bp = BlockPair::make(a, ap, n);
        if (is_sum_free(bp)) out.push_back(std::move(bp));
      }
  }
  return out;
}

bool in_semigroup(const std::vector<IntVector>& generators, const IntVector& v) {
  std::set<IntVector> dead;
  std::function<bool(const IntVector&)> reach = [&](const IntVector& target) {
    if (std::all_of(target.begin(), target.end(), [](long x) { return x == 0; })) return true;
    if (dead.count(target)) return false;
    for (const auto& g : generators) {
      if (std::all_of(g.begin(), g.end(), [](long x) { return x == 0; })) continue;
      IntVector rest(target.size());
      bool fits = true;
      for (std::size_t k = 0; k < target.size() && fits; ++k) {
        rest[k] = target[k] - g[k];
        fits = rest[k] >= 0;
      }
      if (fits && reach(rest)) return true;
    }
    dead.insert(target);
    return false;
  };
  for (const auto& g : generators)
    for (long x : g)
      if (x < 0) throw PreconditionError("in_semigroup needs nonnegative generators");
  for (long x : v)
    if (x < 0) return false;
  return reach(v);
}

ToricCone toric_cone(std::size_t n, std::size_t bound) {
  if (n < 2) throw PreconditionError("toric_cone needs n >= 2");
  if (bound == 0) bound = 2 * (n - 1);
  std::set<IntVector> exponents;
  for (const auto& bp : sum_free_block_pairs(n, bound)) exponents.insert(toric_exponents(bp));
  const std::vector<IntVector> all(exponents.begin(), exponents.end());
  ToricCone cone{n - 1, {}};
  for (std::size_t k = 0; k < all.size(); ++k) {
    std::vector<IntVector> others;
    for (std::size_t m = 0; m < all.size(); ++m)
      if (m != k) others.push_back(all[m]);
    if (!in_semigroup(others, all[k])) cone.generators.push_back(all[k]);
  }
  return cone;
}

namespace {

Matrix columns_of(const std::vector<IntVector>& vectors, std::size_t dim) {
  Matrix m(dim, vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = vectors[j][i];
  return m;
}

// Calls f on every k-subset of {0..count-1}; stops early when f returns true.
bool any_subset(std::size_t count, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (k > count) return false;
  for (;;) {
    if (f(idx)) return true;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == count - k + pos - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t q = pos; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

IntVector primitive(const Vector& v) {
  Integer den_lcm = 1;
  for (const auto& q : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& q : v) {
    ints.push_back(q.get_num() * (den_lcm / q.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  IntVector out;
  for (auto& x : ints) {
    if (g != 0) x /= g;
    if (!x.fits_slong_p()) throw ScaleError("cone coordinates exceed machine integers");
    out.push_back(x.get_si());
  }
  return out;
}

Rational dot(const IntVector& a, const IntVector& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += Rational(a[k]) * b[k];
  return s;
}

}  // namespace

bool cone_contains(const ToricCone& c, const IntVector& v) {
  if (v.size() != c.dim) throw ShapeError("vector dimension differs from the cone's");
  if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; })) return true;
  // Caratheodory: v lies in the cone of some linearly independent subset.
  for (std::size_t k = 1; k <= std::min(c.dim, c.generators.size()); ++k) {
    const bool found = any_subset(c.generators.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<IntVector> chosen;
      for (auto i : idx) chosen.push_back(c.generators[i]);
      const Matrix a = columns_of(chosen, c.dim);
      if (rank(a) != k) return false;
      Matrix aug(c.dim, k + 1);
      for (std::size_t i = 0; i < c.dim; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug(i, j) = a(i, j);
        aug(i, k) = v[i];
      }
      const auto kernel = solve_homogeneous(aug);
      if (kernel.size() != 1 || kernel[0][k] == 0) return false;
      // v = -sum_j (kernel_j / kernel_k) g_j
      for (std::size_t j = 0; j < k; ++j)
        if (-kernel[0][j] / kernel[0][k] < 0) return false;
      return true;
    });
    if (found) return true;
  }
  return false;
}

bool cones_equal(const ToricCone& a, const ToricCone& b) {
  if (a.dim != b.dim) return false;
  for (const auto& g : a.generators)
    if (!cone_contains(b, g)) return false;
  for (const auto& g : b.generators)
    if (!cone_contains(a, g)) return false;
  return true;
}

bool is_strongly_convex(const ToricCone& c) {
  for (const auto& g : c.generators) {
    if (std::all_of(g.begin(), g.end(), [](long x) { return x == 0; })) continue;
    IntVector neg(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) neg[k] = -g[k];
    if (cone_contains(c, neg)) return false;
  }
  return true;
}

ToricCone dual_cone(const ToricCone& c) {
  if (c.dim > 4) throw ScaleError("dual_cone is limited to dimension 4");
  if (c.dim == 0) return c;
  if (rank(columns_of(c.generators, c.dim)) != c.dim) throw PreconditionError("dual_cone needs a full-dimensional cone");
  std::set<IntVector> normals;
  any_subset(c.generators.size(), c.dim - 1, [&](const std::vector<std::size_t>& idx) {
    Matrix rows(idx.size(), c.dim);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t k = 0; k < c.dim; ++k) rows(r, k) = c.generators[idx[r]][k];
    const auto kernel = solve_homogeneous(rows);
    if (kernel.size() != 1) return false;
    IntVector u = primitive(kernel[0]);
    bool positive = false;
    bool negative = false;
    for (const auto& g : c.generators) {
      const Rational d = dot(u, g);
      positive = positive || d > 0;
      negative = negative || d < 0;
    }
    if (positive && negative) return false;
    if (negative)
      for (auto& x : u) x = -x;
    normals.insert(u);
    return false;
  });
  return {c.dim, {normals.begin(), normals.end()}};
}

namespace {

bool satisfies(const ToricCone& dual, const IntVector& v) {
  return std::all_of(dual.generators.begin(), dual.generators.end(), [&](const IntVector& u) { return dot(u, v) >= 0; });
}

// Primitive generators lying on dim-1 independent facets.
std::vector<IntVector> extreme_rays(const ToricCone& c, const ToricCone& dual) {
  std::set<IntVector> rays;
  for (const auto& g : c.generators) {
    if (std::all_of(g.begin(), g.end(), [](long x) { return x == 0; })) continue;
    std::vector<IntVector> tight;
    for (const auto& u : dual.generators)
      if (dot(u, g) == 0) tight.push_back(u);
    if (c.dim == 1 || (!tight.empty() && rank(columns_of(tight, c.dim)) + 1 == c.dim)) {
      Vector gv(g.begin(), g.end());
      rays.insert(primitive(gv));
    }
  }
  return {rays.begin(), rays.end()};
}

}  // namespace

std::vector<IntVector> hilbert_basis(const ToricCone& c) {
  if (!is_strongly_convex(c)) throw PreconditionError("hilbert_basis needs a strongly convex cone");
  const ToricCone dual = dual_cone(c);
  // strictly positive grading on c minus the origin
  IntVector grading(c.dim, 0);
  for (const auto& u : dual.generators)
    for (std::size_t k = 0; k < c.dim; ++k) grading[k] += u[k];

  // Every lattice point of the cone is a nonnegative integer combination of
  // primitive extreme rays plus a point of the zonotope they span.
  const auto rays = extreme_rays(c, dual);
  IntVector lo(c.dim, 0);
  IntVector hi(c.dim, 0);
  for (const auto& g : rays)
    for (std::size_t k = 0; k < c.dim; ++k) (g[k] < 0 ? lo[k] : hi[k]) += g[k];
  double box = 1;
  for (std::size_t k = 0; k < c.dim; ++k) box *= static_cast<double>(hi[k] - lo[k] + 1);
  if (box > 2e6) throw ScaleError("Hilbert basis search box too large");

  std::vector<std::pair<Rational, IntVector>> candidates;
  IntVector v = lo;
  for (;;) {
    if (!std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }) && satisfies(dual, v))
      candidates.emplace_back(dot(grading, v), v);
    std::size_t k = 0;
    while (k < c.dim && ++v[k] > hi[k]) {
      v[k] = lo[k];
      ++k;
    }
    if (k == c.dim) break;
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<IntVector> basis;
  for (const auto& [grade, w] : candidates) {
    bool reducible = false;
    for (const auto& b : basis) {
      IntVector rest(c.dim);
      for (std::size_t k = 0; k < c.dim; ++k) rest[k] = w[k] - b[k];
      if (satisfies(dual, rest)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(w);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<IntVector> semigroup_generators(const ToricCone& c) { return hilbert_basis(c); }

}  // namespace nilcone
