#include "nilcone/quotients.hpp"

#include <algorithm>

#include "nilcone/errors.hpp"
#include "nilcone/groups.hpp"
#include "nilcone/normalform.hpp"
#include "nilcone/random.hpp"
#include "nilcone/toric.hpp"

namespace nilcone {

namespace {

void require_nilpotent(const Matrix& n, std::size_t size, const char* op) {
  if (!n.is_square() || n.rows() != size)
    throw ShapeError(std::string(op) + " needs a " + std::to_string(size) + "x" + std::to_string(size) + " matrix");
  if (!is_nilpotent(n)) throw PreconditionError(std::string(op) + " needs a nilpotent matrix");
}

std::vector<Rational> quotient_tuple(const Matrix& n) {
  if (n.rows() == 2) return {u_quotient_n2(n)};
  const auto t = u_quotient_n3(n);
  return {t.begin(), t.end()};
}

}  // namespace

Rational u_quotient_n2(const Matrix& n) {
  require_nilpotent(n, 2, "u_quotient_n2");
  return n(1, 0);
}

std::array<Rational, 4> u_quotient_n3(const Matrix& n) {
  require_nilpotent(n, 3, "u_quotient_n3");
  const auto pw = powers(n, 2);
  const auto invariants = n3_invariants();
  std::array<Rational, 4> out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = eval(pw, invariants[k].datum);
  return out;
}

bool separation_check_U(std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (n != 2 && n != 3) throw PreconditionError("separation_check_U supports n = 2 and n = 3");
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const Matrix first = random_u_pattern(n, rng);
    Matrix second = first;
    while (second == first) {
      if (t % 2 == 0) {
        second = random_u_pattern(n, rng);
      } else {
        UCoordinates c = u_coordinates(first);
        const std::size_t total = c.free.size() + c.torus.size();
        const auto k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(total) - 1));
        if (k < c.free.size())
          c.free[k] = rng.small_rational();
        else
          c.torus[k - c.free.size()] = rng.nonzero_small_rational();
        second = u_pattern_matrix(c);
      }
    }
    if (quotient_tuple(first) == quotient_tuple(second)) return false;
  }
  return true;
}

bool git_semistable(const Matrix& n) {
  const std::size_t size = n.rows();
  if (size != 2 && size != 3) throw PreconditionError("git_semistable supports n = 2 and n = 3");
  require_nilpotent(n, size, "git_semistable");
  if (size == 2) return n(1, 0) != 0;
  return is_generic(n, ParabolicShape::borel(3)) || n(2, 0) != 0;
}

ProjectivePoint normalized(const Rational& x0, const Rational& x1) {
  if (x0 != 0) return {1, x1 / x0};
  if (x1 != 0) return {0, 1};
  throw UnstablePointError("both projective coordinates vanish");
}

ProjectivePoint git_map_n3(const Matrix& n) {
  require_nilpotent(n, 3, "git_map_n3");
  const auto t = u_quotient_n3(n);
  if (t[0] == 0 && t[3] == 0) throw UnstablePointError("f_{3,1} and det_1 both vanish: point is not semistable");
  return normalized(t[0], t[3]);
}

SemiInvariantDatum toric_f(std::size_t n, std::size_t k) {
  return toric_datum(BlockPair::make({k}, std::vector<std::size_t>(k, 1), n));
}

SemiInvariantDatum nonsurjectivity_witness(std::size_t n) {
  if (n < 4) throw PreconditionError("the witness needs n >= 4");
  if (n == 4) return SemiInvariantDatum({2}, {2}, {{Polynomial::monomial(1)}});
  return SemiInvariantDatum({n - 2}, {2, n - 4}, {{Polynomial::monomial(1), Polynomial::monomial(4)}});
}

Rational nonsurjectivity_residual(const Matrix& n) {
  const std::size_t size = n.rows();
  if (size < 4) throw PreconditionError("the relation needs n >= 4");
  require_nilpotent(n, size, "nonsurjectivity_residual");
  const auto pw = powers(n, static_cast<unsigned>(size - 1));
  const auto e = [&](const SemiInvariantDatum& d) { return eval(pw, d); };
  const auto det = [&](std::size_t k) { return k == 0 ? Rational(1) : e(det_k(size, k).datum); };

  const Rational g = e(nonsurjectivity_witness(size));
  const Rational f_low = e(toric_f(size, size - 3));
  const Rational f_mid = e(toric_f(size, size - 2));
  const Rational f_high = e(toric_f(size, size - 1));
  const Rational d_low = det(size - 3);
  const Rational d_1 = det(1);
  const Rational f31 = e(f_ij(size, 3, 1).datum);
  const Rational f42 = e(f_ij(size, 4, 2).datum);
  const Rational f41 = e(f_ij(size, 4, 1).datum);

  const Rational lhs = g * d_low * d_1 * f_low * f_high;
  const Rational rhs = f31 * f42 * f_low * f_high - f41 * f_mid * f_mid * d_low * d_1;
  return lhs - rhs;
}

Rational witness_closed_form(const Matrix& h) {
  const std::size_t size = h.rows();
  if (size < 4) throw PreconditionError("the witness needs n >= 4");
  u_coordinates(h);
  const Rational minor = h(2, 0) * h(3, 1) - h(2, 1) * h(3, 0);
  return size == 4 ? minor : minor * eval(h, det_k(size, size - 4).datum);
}

bool nonsurjectivity_relation(std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (n < 4) throw PreconditionError("the relation needs n >= 4");
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t)
    if (nonsurjectivity_residual(random_nilpotent(n, rng)) != 0) return false;
  return true;
}

UCoordinates u_coordinates(const Matrix& h) {
  const Matrix toric = toric_part(h);
  const std::size_t n = h.rows();
  UCoordinates c;
  for (std::size_t i = 2; i < n; ++i)
    for (std::size_t j = 0; j + 2 <= i; ++j) c.free.push_back(h(i, j));
  for (std::size_t i = 1; i < n; ++i) c.torus.push_back(toric(i, i - 1));
  return c;
}

Matrix u_pattern_matrix(const UCoordinates& coords) {
  const std::size_t n = coords.torus.size() + 1;
  if (coords.free.size() != (n - 1) * (n - 2) / 2) throw ShapeError("free coordinate count does not match the torus");
  Matrix h(n, n);
  std::size_t k = 0;
  for (std::size_t i = 2; i < n; ++i)
    for (std::size_t j = 0; j + 2 <= i; ++j) h(i, j) = coords.free[k++];
  for (std::size_t i = 1; i < n; ++i) {
    if (coords.torus[i - 1] == 0) throw PatternError("torus coordinates must be nonzero");
    h(i, i - 1) = coords.torus[i - 1];
  }
  return h;
}

Matrix random_u_pattern(std::size_t n, Rng& rng) {
  UCoordinates c;
  for (std::size_t k = 0; k < (n - 1) * (n - 2) / 2; ++k) c.free.push_back(rng.small_rational());
  for (std::size_t k = 0; k + 1 < n; ++k) c.torus.push_back(rng.nonzero_small_rational());
  return u_pattern_matrix(c);
}

bool RelationCheck::ok() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const Rational& q) { return q == 0; });
}

bool QuotientReport::ok() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationCheck& c) { return c.ok(); }) &&
         std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.ok; });
}

namespace {

constexpr std::size_t kConjugatesPerOrbit = 10;

// Nilpotent samples that miss the generic locus in various ways.
std::vector<Matrix> degenerate_n3() {
  return {Matrix(3, 3),
          Matrix{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}},
          Matrix{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}},
          Matrix{{0, 0, 0}, {0, 0, 0}, {0, 1, 0}},
          Matrix{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}},
          Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}},
          Matrix{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}};
}

void u_invariance(QuotientReport& report, std::size_t n, Rng& rng) {
  RelationCheck check{"quotient map is U-invariant", "U-invariance of the quotient coordinates", {}};
  for (std::size_t t = 0; t < report.trials; ++t) {
    const Matrix sample = random_nilpotent(n, rng);
    const auto before = quotient_tuple(sample);
    const auto after = quotient_tuple(conjugate(random_unipotent(n, rng), sample));
    for (std::size_t k = 0; k < before.size(); ++k) check.residuals.push_back(after[k] - before[k]);
  }
  report.relations.push_back(std::move(check));
}

void report_n2(QuotientReport& report, Rng& rng) {
  for (std::size_t t = 0; t < report.trials; ++t) report.sampled_values.push_back({u_quotient_n2(random_nilpotent(2, rng))});
  u_invariance(report, 2, rng);

  RelationCheck surjective{"f21(H_c) = c", "surjectivity of the n=2 U-quotient", {}};
  for (std::size_t t = 0; t < report.trials; ++t) {
    const Rational c = rng.small_rational();
    surjective.residuals.push_back(u_quotient_n2(Matrix{{0, 0}, {c, 0}}) - c);
  }
  report.relations.push_back(std::move(surjective));

  Verdict sst{"semistable iff f21 != 0 iff Borel-generic", "GIT quotient of the 2x2 nilpotent cone", 0, true};
  std::vector<Matrix> samples{Matrix(2, 2), Matrix{{0, 1}, {0, 0}}};
  for (std::size_t t = 0; t < report.trials; ++t) samples.push_back(random_nilpotent(2, rng));
  for (const auto& m : samples) {
    ++sst.samples;
    const bool semistable = git_semistable(m);
    sst.ok = sst.ok && semistable == (m(1, 0) != 0) && semistable == is_generic(m, ParabolicShape::borel(2));
  }
  report.verdicts.push_back(sst);
}

void report_n3(QuotientReport& report, Rng& rng) {
  RelationCheck ring{"f1*f2 = det1^3", "ring relation of the n=3 U-quotient", {}};
  RelationCheck dets{"det1 = det2", "equality of the two determinantal invariants at n=3", {}};
  const WeightedInvariant det2 = det_k(3, 2);
  for (std::size_t t = 0; t < report.trials; ++t) {
    const Matrix sample = random_nilpotent(3, rng);
    const auto q = u_quotient_n3(sample);
    report.sampled_values.push_back({q.begin(), q.end()});
    ring.residuals.push_back(q[1] * q[2] - q[3] * q[3] * q[3]);
    dets.residuals.push_back(q[3] - eval(sample, det2.datum));
  }
  report.relations.push_back(std::move(ring));
  report.relations.push_back(std::move(dets));
  u_invariance(report, 3, rng);

  Verdict orbits{"git map constant on B-orbits", "GIT quotient of the 3x3 nilpotent cone", 0, true};
  const std::size_t orbit_count = std::min<std::size_t>(report.trials, 20);
  for (std::size_t t = 0; t < orbit_count; ++t) {
    Matrix sample = random_nilpotent(3, rng);
    while (!git_semistable(sample)) sample = random_nilpotent(3, rng);
    const ProjectivePoint base = git_map_n3(sample);
    for (std::size_t k = 0; k < kConjugatesPerOrbit; ++k) {
      ++orbits.samples;
      orbits.ok = orbits.ok && git_map_n3(conjugate(random_borel(3, rng), sample)) == base;
    }
  }
  report.verdicts.push_back(orbits);

  Verdict locus{"git map defined exactly on the semistable locus", "semistable locus of the n=3 GIT quotient", 0, true};
  std::vector<Matrix> samples = degenerate_n3();
  for (std::size_t t = 0; t < report.trials; ++t) samples.push_back(random_nilpotent(3, rng));
  for (const auto& m : samples) {
    ++locus.samples;
    bool defined = true;
    try {
      git_map_n3(m);
    } catch (const UnstablePointError&) {
      defined = false;
    }
    locus.ok = locus.ok && defined == git_semistable(m);
  }
  report.verdicts.push_back(locus);
}

void report_large(QuotientReport& report, Rng& rng) {
  const std::size_t n = report.n;
  RelationCheck relation{"g*F = F'", "non-surjectivity witness relation", {}};
  relation.residuals.push_back(nonsurjectivity_residual(Matrix(n, n)));
  const auto witness = nonsurjectivity_witness(n);
  for (std::size_t t = 0; t < report.trials; ++t) {
    const Matrix sample = random_nilpotent(n, rng);
    report.sampled_values.push_back({eval(sample, witness)});
    relation.residuals.push_back(nonsurjectivity_residual(sample));
  }
  report.relations.push_back(std::move(relation));

  RelationCheck closed{"g(H) = (x31*x42 - x32*x41)*det_{n-4}(H)", "witness on U-pattern matrices", {}};
  for (std::size_t t = 0; t < report.trials; ++t) {
    const Matrix h = random_u_pattern(n, rng);
    closed.residuals.push_back(eval(h, witness) - witness_closed_form(h));
  }
  report.relations.push_back(std::move(closed));
}

}  // namespace

QuotientReport verify_relations(std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("verify_relations needs n >= 2");
  QuotientReport report;
  report.n = n;
  report.seed = seed;
  report.trials = trials;
  Rng rng(seed);
  if (n == 2) {
    report.map_label = "u_quotient_n2";
    report_n2(report, rng);
  } else if (n == 3) {
    report.map_label = "u_quotient_n3";
    report_n3(report, rng);
  } else {
    report.map_label = "nonsurjectivity_witness";
    report_large(report, rng);
  }
  if (n <= 3) {
    Verdict separation{"quotient separates U-pattern matrices", "generic separation of U-orbits", trials,
                       separation_check_U(n, trials, seed + 1)};
    report.verdicts.push_back(separation);
  }
  return report;
}

}  // namespace nilcone
