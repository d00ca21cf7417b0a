#include "nilcone/normalform.hpp"

#include <algorithm>

#include "nilcone/errors.hpp"
#include "nilcone/random.hpp"
#include "nilcone/semiinv.hpp"

namespace nilcone {

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::borel:
      return "borel";
    case GroupKind::unipotent:
      return "unipotent";
    case GroupKind::parabolic:
      return "parabolic";
  }
  return "unknown";
}

GroupSpec GroupSpec::borel(std::size_t n) { return {GroupKind::borel, ParabolicShape::borel(n)}; }
GroupSpec GroupSpec::unipotent(std::size_t n) { return {GroupKind::unipotent, ParabolicShape::borel(n)}; }
GroupSpec GroupSpec::parabolic(const ParabolicShape& shape) { return {GroupKind::parabolic, shape}; }

bool GroupSpec::allows(std::size_t i, std::size_t j) const {
  if (kind == GroupKind::parabolic) return shape.block_of(i) <= shape.block_of(j);
  return i <= j;
}

bool GroupSpec::contains(const Matrix& g) const {
  switch (kind) {
    case GroupKind::borel:
      return g.rows() == n() && is_in_borel(g);
    case GroupKind::unipotent:
      return g.rows() == n() && is_in_unipotent(g);
    case GroupKind::parabolic:
      return is_in_parabolic(g, shape);
  }
  return false;
}

std::size_t PatternSpec::free_count() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](Cell c) { return c == Cell::free || c == Cell::nonzero_free; }));
}

bool PatternSpec::matches(const Matrix& h) const {
  if (h.rows() != n() || h.cols() != n()) return false;
  for (std::size_t i = 0; i < n(); ++i) {
    for (std::size_t j = 0; j < n(); ++j) {
      switch (at(i, j)) {
        case Cell::forced_zero:
          if (h(i, j) != 0) return false;
          break;
        case Cell::forced_one:
          if (h(i, j) != 1) return false;
          break;
        case Cell::nonzero_free:
          if (h(i, j) == 0) return false;
          break;
        case Cell::free:
          break;
      }
    }
  }
  return true;
}

namespace {

// Zero conditions of the parabolic normal form, 1-based i, j.
bool parabolic_zero(const ParabolicShape& shape, std::size_t i, std::size_t j) {
  if (i <= j) return true;
  const std::size_t d1 = shape.dims.front();
  if (i == d1 + 1 && j < d1) return true;
  std::size_t previous = 0;
  for (const std::size_t dk : shape.dims) {
    if (previous + 3 <= i && i <= dk && previous + 1 <= j && j + 2 <= dk && i > j + 1) return true;
    if (previous + 2 <= i && i <= dk && j == previous) return true;
    previous = dk;
  }
  return false;
}

}  // namespace

PatternSpec pattern(const GroupSpec& group) {
  const std::size_t n = group.n();
  PatternSpec out{group, std::vector<Cell>(n * n, Cell::forced_zero)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Cell& c = out.cells[i * n + j];
      if (parabolic_zero(group.shape, i + 1, j + 1))
        c = Cell::forced_zero;
      else if (i == j + 1)
        c = group.kind == GroupKind::unipotent ? Cell::nonzero_free : Cell::forced_one;
      else
        c = Cell::free;
    }
  }
  return out;
}

std::vector<Rational> genericity_minors(const Matrix& n, const ParabolicShape& shape) {
  if (!n.is_square() || n.rows() != shape.n) throw ShapeError("matrix size differs from the shape");
  std::vector<Rational> minors;
  const auto pw = powers(n, static_cast<unsigned>(shape.n));
  for (std::size_t k = 0; k + 1 < shape.dims.size(); ++k) {
    const std::size_t d = shape.dims[k];
    minors.push_back(det(corner_submatrix(pw[shape.n - d], d, d)));
  }
  return minors;
}

bool is_generic(const Matrix& n, const ParabolicShape& shape) {
  const auto minors = genericity_minors(n, shape);
  return std::none_of(minors.begin(), minors.end(), [](const Rational& m) { return m == 0; });
}

namespace {

struct WitnessSystem {
  std::vector<std::pair<std::size_t, std::size_t>> positions;  // unknown entries of g
  bool homogenized = false;                                    // last unknown is the unipotent diagonal s
  std::vector<Vector> kernel;
};

WitnessSystem build_witness_system(const Matrix& n, const Matrix& h, const GroupSpec& group) {
  const std::size_t size = group.n();
  WitnessSystem sys;
  std::vector<long> index(size * size, -1);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (group.allows(i, j)) {
        index[i * size + j] = static_cast<long>(sys.positions.size());
        sys.positions.emplace_back(i, j);
      }
  sys.homogenized = group.kind == GroupKind::unipotent;
  const std::size_t unknowns = sys.positions.size() + (sys.homogenized ? 1 : 0);
  const std::size_t equations = size * size + (sys.homogenized ? size : 0);
  Matrix a(equations, unknowns);
  // (g N - H g)_{r,c} = sum_m g_{r,m} N_{m,c} - sum_m H_{r,m} g_{m,c}
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      const std::size_t eq = r * size + c;
      for (std::size_t m = 0; m < size; ++m) {
        const long left = index[r * size + m];
        if (left >= 0 && n(m, c) != 0) a(eq, static_cast<std::size_t>(left)) += n(m, c);
        const long right = index[m * size + c];
        if (right >= 0 && h(r, m) != 0) a(eq, static_cast<std::size_t>(right)) -= h(r, m);
      }
    }
  }
  if (sys.homogenized) {
    for (std::size_t i = 0; i < size; ++i) {
      a(size * size + i, static_cast<std::size_t>(index[i * size + i])) = 1;
      a(size * size + i, unknowns - 1) = -1;
    }
  }
  sys.kernel = solve_homogeneous(a);
  return sys;
}

// g from kernel coordinates; returns false if the combination is not an
// invertible element (for the unipotent system: homogenizing variable zero).
bool candidate(const WitnessSystem& sys, std::size_t size, const std::vector<Rational>& t, Matrix& g) {
  const std::size_t unknowns = sys.positions.size() + (sys.homogenized ? 1 : 0);
  Vector v(unknowns);
  for (std::size_t k = 0; k < sys.kernel.size(); ++k)
    if (t[k] != 0)
      for (std::size_t u = 0; u < unknowns; ++u) v[u] += t[k] * sys.kernel[k][u];
  if (sys.homogenized && v.back() == 0) return false;
  g = Matrix(size, size);
  for (std::size_t u = 0; u < sys.positions.size(); ++u) g(sys.positions[u].first, sys.positions[u].second) = v[u];
  return det(g) != 0;
}

Matrix finish_witness(Matrix g, const Matrix& n, const Matrix& h, const GroupSpec& group) {
  if (g(0, 0) != 0) g *= Rational(1) / g(0, 0);
  if (!(g * n == h * g) || !group.contains(g)) throw InternalError("conjugacy witness failed its own check");
  return g;
}

}  // namespace

Matrix conjugacy_witness(const Matrix& n, const Matrix& h, const GroupSpec& group, std::uint64_t seed) {
  const std::size_t size = group.n();
  if (!n.is_square() || !h.is_square() || n.rows() != size || h.rows() != size)
    throw ShapeError("conjugacy_witness needs two matrices of the group's size");
  const WitnessSystem sys = build_witness_system(n, h, group);
  const std::size_t m = sys.kernel.size();
  if (m == 0) throw NotConjugateError("no nonzero solution of g N = H g in the group pattern", true);

  Rng rng(seed);
  Matrix g;
  std::vector<Rational> t(m);
  for (int attempt = 0; attempt < kWitnessAttempts; ++attempt) {
    for (auto& c : t) c = rng.uniform_int(-9, 9);
    if (candidate(sys, size, t, g)) return finish_witness(std::move(g), n, h, group);
  }

  const std::size_t degree = size + (sys.homogenized ? 1 : 0);
  std::size_t points = 1;
  for (std::size_t k = 0; k < m; ++k) {
    points *= degree + 1;
    if (points > kWitnessGridLimit)
      throw NotConjugateError("no invertible witness in " + std::to_string(kWitnessAttempts) +
                                  " random combinations; grid check too large",
                              false);
  }
  std::vector<std::size_t> digits(m, 0);
  for (std::size_t p = 0; p < points; ++p) {
    for (std::size_t k = 0; k < m; ++k) t[k] = static_cast<long>(digits[k]);
    if (candidate(sys, size, t, g)) return finish_witness(std::move(g), n, h, group);
    for (std::size_t k = 0; k < m && ++digits[k] > degree; ++k) digits[k] = 0;
  }
  throw NotConjugateError("the determinant vanishes on the whole solution space", true);
}

NormalForm normal_form_B(const Matrix& n, std::uint64_t seed) {
  if (!n.is_square() || n.rows() == 0) throw ShapeError("normal_form_B needs a nonempty square matrix");
  if (!is_nilpotent(n)) throw PreconditionError("normal forms are defined for nilpotent matrices");
  const std::size_t size = n.rows();
  const auto shape = ParabolicShape::borel(size);
  NormalForm out;
  out.minors = genericity_minors(n, shape);
  Rational denominator = 1;
  for (const auto& m : out.minors) {
    if (m == 0) throw GenericityError("matrix is not generic for the Borel action (some det_k vanishes)");
    denominator *= m;
  }

  const auto pw = powers(n, static_cast<unsigned>(size));
  Matrix h(size, size);
  for (std::size_t i = 1; i < size; ++i) h(i, i - 1) = 1;
  for (std::size_t i = 3; i <= size; ++i)
    for (std::size_t j = 1; j + 2 <= i; ++j) h(i - 1, j - 1) = eval(pw, g_ij(size, i, j).datum) / denominator;

  const auto hpw = powers(h, static_cast<unsigned>(size));
  for (std::size_t k = 1; k < size; ++k)
    if (eval(hpw, det_k(size, k).datum) != 1) throw InternalError("det_k is not 1 on the Borel pattern");

  try {
    out.cert = {conjugacy_witness(n, h, GroupSpec::borel(size), seed), GroupKind::borel};
  } catch (const NotConjugateError& e) {
    throw InternalError(std::string("extracted Borel normal form has no certificate: ") + e.what());
  }
  out.h = std::move(h);
  return out;
}

NormalForm normal_form_U(const Matrix& n, std::uint64_t seed) {
  NormalForm b = normal_form_B(n, seed);
  const std::size_t size = n.rows();
  std::vector<Rational> diag(size);
  std::vector<Rational> diag_inv(size);
  for (std::size_t i = 0; i < size; ++i) {
    diag[i] = b.cert.g(i, i);
    diag_inv[i] = 1 / diag[i];
  }
  const Matrix t = Matrix::diagonal(diag);
  const Matrix t_inv = Matrix::diagonal(diag_inv);
  NormalForm out;
  out.minors = std::move(b.minors);
  out.h = t_inv * b.h * t;
  out.cert = {t_inv * b.cert.g, GroupKind::unipotent};
  if (!is_in_unipotent(out.cert.g) || !(out.cert.g * n == out.h * out.cert.g) ||
      !pattern(GroupSpec::unipotent(size)).matches(out.h))
    throw InternalError("unipotent normal form failed its own check");
  return out;
}

NormalForm normal_form_P(const Matrix& n, const ParabolicShape& shape, std::uint64_t seed) {
  if (!n.is_square() || n.rows() != shape.n) throw ShapeError("matrix size differs from the shape");
  NormalForm b = normal_form_B(n, seed);
  const std::size_t size = shape.n;
  const GroupSpec group = GroupSpec::parabolic(shape);
  const PatternSpec target = pattern(group);
  Matrix h = std::move(b.h);
  Matrix g = std::move(b.cert.g);
  const std::size_t d1 = shape.dims.front();

  // Clear the zero cells inside diagonal blocks with E = I + c E_{i,j+1}: row i
  // gains c times row j+1 (whose subdiagonal 1 sits in column j) and column j+1
  // loses c times column i (rows below i only). Rows ascending and columns
  // descending never revisit a cleared cell. Row d_1 + 1 is left to the
  // correction below since E_{d_1+1, j+1} lies outside the parabolic subgroup.
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t jj = i; jj-- > 0;) {
      if (target.at(i, jj) != Cell::forced_zero || h(i, jj) == 0) continue;
      if (i == d1) continue;
      const Rational c = -h(i, jj);
      const std::size_t col = jj + 1;
      if (!group.allows(i, col)) throw InternalError("elementary clearing step left the parabolic subgroup");
      for (std::size_t v = 0; v < size; ++v) h(i, v) += c * h(col, v);
      for (std::size_t u = 0; u < size; ++u) h(u, col) -= c * h(u, i);
      for (std::size_t v = 0; v < size; ++v) g(i, v) += c * g(col, v);
      if (h(i, jj) != 0) throw InternalError("elementary clearing step did not clear its cell");
    }
  }

  // First block: replace the basis by Toeplitz combinations w_x = sum_i mu_i v_{x+i}
  // so that row d_1 + 1 vanishes left of column d_1.
  if (d1 < size && d1 > 1) {
    std::vector<Rational> lambda(d1 + 1);
    for (std::size_t x = 1; x < d1; ++x) lambda[x] = h(d1, x - 1);
    lambda[d1] = 1;
    std::vector<Rational> mu(d1);
    mu[0] = 1;
    for (std::size_t m = 1; m < d1; ++m) {
      Rational acc = 0;
      for (std::size_t i = 0; i < m; ++i) acc += mu[i] * lambda[d1 - m + i];
      mu[m] = -acc;
    }
    Matrix t = Matrix::identity(size);
    for (std::size_t y = 0; y < d1; ++y)
      for (std::size_t x = 0; x <= y; ++x) t(y, x) = mu[y - x];
    const Matrix t_inv = inverse(t);
    h = t_inv * h * t;
    g = t_inv * g;
  }

  if (!target.matches(h)) throw InternalError("parabolic normal form does not match its pattern");
  if (!group.contains(g) || !(g * n == h * g)) throw InternalError("parabolic normal form certificate is invalid");
  return {std::move(h), {std::move(g), GroupKind::parabolic}, genericity_minors(n, shape)};
}

NormalForm normal_form(const Matrix& n, const GroupSpec& group, std::uint64_t seed) {
  switch (group.kind) {
    case GroupKind::borel:
      return normal_form_B(n, seed);
    case GroupKind::unipotent:
      return normal_form_U(n, seed);
    case GroupKind::parabolic:
      return normal_form_P(n, group.shape, seed);
  }
  throw PreconditionError("unknown group kind");
}

}  // namespace nilcone
