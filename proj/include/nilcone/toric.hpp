#pragma once

#include <cstddef>
#include <vector>

#include "nilcone/matrix.hpp"
#include "nilcone/semiinv.hpp"

namespace nilcone {

using IntVector = std::vector<long>;

/// Row and column block sizes of a toric invariant with 1 <= a_i, a'_j <= n-1
/// and equal sums r.
struct BlockPair {
  std::vector<std::size_t> a;
  std::vector<std::size_t> ap;
  std::size_t n = 0;
  std::size_t r = 0;

  /// Throws PreconditionError on empty blocks, a part outside [1, n-1] or unequal sums.
  static BlockPair make(std::vector<std::size_t> a, std::vector<std::size_t> ap, std::size_t n);
  std::size_t s() const noexcept { return a.size(); }
  std::size_t t() const noexcept { return ap.size(); }
};

/// Subdiagonal of H kept, everything else cleared. Throws PatternError unless H
/// is strictly lower triangular with nonzero subdiagonal.
Matrix toric_part(const Matrix& h);

/// No proper sub-sums sum_{I} a_i = sum_{I'} a'_i except the empty pair.
bool is_sum_free(const BlockPair& bp);

/// Split and block bookkeeping of a block pair. All arguments and results are 1-based.
class BlockCombinatorics {
 public:
  explicit BlockCombinatorics(const BlockPair& bp);

  /// Minimal c with sum_{j<=k} a_j = sum_{j<=c} a'_j - hs(k) and hs(k) > 0;
  /// hc(0) = 0. k = s has no positive split and throws PreconditionError.
  std::size_t hc(std::size_t k) const;
  std::size_t hs(std::size_t k) const;
  /// a'_{hc(k)} - hs(k)
  std::size_t ch(std::size_t k) const;
  /// Vertical versions with the roles of a and a' exchanged.
  std::size_t vc(std::size_t k) const;
  std::size_t vs(std::size_t k) const;
  /// a_{vc(k)} - vs(k)
  std::size_t cv(std::size_t k) const;
  /// Block of a containing row i, and the position inside it.
  std::size_t hb(std::size_t i) const;
  std::size_t hd(std::size_t i) const;
  /// Block of a' containing column j, and the position inside it.
  std::size_t vb(std::size_t j) const;
  std::size_t vd(std::size_t j) const;

 private:
  std::size_t change(const std::vector<std::size_t>& from, const std::vector<std::size_t>& to, std::size_t k,
                     std::size_t& split) const;
  BlockPair bp_;
  std::vector<std::size_t> prefix_a_;
  std::vector<std::size_t> prefix_ap_;
};

/// vd(j) < hd(i) + n - a_{hb(i)}, 1-based i and j.
bool is_acceptable_entry(std::size_t i, std::size_t j, const BlockPair& bp);

/// An acceptable permutation (sigma[i-1] = sigma(i), 1-based values). Inside
/// every a'-block that contains boundaries of a-blocks, the segments cut out by
/// those boundaries are placed in reverse order; elsewhere sigma is the
/// identity. Throws PreconditionError unless the pair is sum-free.
std::vector<std::size_t> accperm(const BlockPair& bp);

/// Datum whose (k, l) polynomial is x^{n - a_k + hd(i) - vd(sigma(i))} for the
/// first row i of block k sent by accperm into column block l, zero if none.
SemiInvariantDatum toric_datum(const BlockPair& bp);

struct PermutationProduct {
  /// sign(sigma) * prod_i M_{i, sigma(i)} for the block matrix M of H.
  Rational value;
  /// sign(sigma) times the product of the selected entries at the all-ones toric matrix.
  Rational lambda;
};

/// Single-permutation product of the block matrix. sigma is 1-based. Throws
/// NotAcceptableError if some selected entry vanishes on the all-ones toric matrix.
PermutationProduct eval_via_permutation(const Matrix& h, const SemiInvariantDatum& datum,
                                        const std::vector<std::size_t>& sigma);

/// h_{n-1} = s and h_l = t + sum_{k=2}^{l} #{a'_j >= k} - sum_{k=1}^{l-1} #{a_i >= n-k}.
IntVector toric_exponents(const BlockPair& bp);

/// Exponents read off by factoring f on toric matrices whose subdiagonal
/// holds distinct primes, checked against a second set of primes. Throws
/// NotToricError when f vanishes there or the two readings disagree.
IntVector toric_exponents_oracle(const SemiInvariantDatum& datum, std::size_t n);

/// All sum-free block pairs with ascending parts <= n-1 and r <= max_r.
std::vector<BlockPair> sum_free_block_pairs(std::size_t n, std::size_t max_r);

/// Finitely generated rational cone in Z^dim.
struct ToricCone {
  std::size_t dim = 0;
  std::vector<IntVector> generators;
};

/// Cone over the minimal semigroup generators among the exponent vectors of all
/// sum-free toric invariants with r <= bound (default 2(n-1)).
ToricCone toric_cone(std::size_t n, std::size_t bound = 0);

/// Exact membership v in Cone(generators).
bool cone_contains(const ToricCone& c, const IntVector& v);
/// Every generator of each cone lies in the other.
bool cones_equal(const ToricCone& a, const ToricCone& b);
/// sigma and -sigma meet only in 0.
bool is_strongly_convex(const ToricCone& c);
/// Primitive inner facet normals. Needs a full-dimensional cone with dim <= 4
/// (ScaleError above that).
ToricCone dual_cone(const ToricCone& c);
/// Hilbert basis of c intersected with Z^dim for a pointed full-dimensional
/// cone, by enumerating the bounding box of the generator zonotope.
std::vector<IntVector> hilbert_basis(const ToricCone& c);
/// Minimal generating set of the lattice points in c (its Hilbert basis).
std::vector<IntVector> semigroup_generators(const ToricCone& c);
/// Whether v is a nonnegative integer combination of the given vectors
/// (all with nonnegative coordinates).
bool in_semigroup(const std::vector<IntVector>& generators, const IntVector& v);

}  // namespace nilcone
