#include "nilcone/quiver.hpp"

#include <string>

#include "nilcone/errors.hpp"

namespace nilcone {

Representation build_MN(const Matrix& n, const ParabolicShape& shape) {
  if (!n.is_square() || n.rows() != shape.n)
    throw ShapeError("loop matrix is " + std::to_string(n.rows()) + "x" + std::to_string(n.cols()) +
                     " but the shape has size " + std::to_string(shape.n));
  Representation rep;
  rep.dims = shape.dims;
  for (std::size_t i = 0; i + 1 < shape.dims.size(); ++i) {
    Matrix inclusion(shape.dims[i + 1], shape.dims[i]);
    for (std::size_t k = 0; k < shape.dims[i]; ++k) inclusion(k, k) = 1;
    rep.arrow_maps.push_back(std::move(inclusion));
  }
  rep.loop_map = n;
  return rep;
}

MorphismDatum::MorphismDatum(std::size_t n, std::vector<std::size_t> x, std::vector<std::size_t> y)
    : n_(n), x_(std::move(x)), y_(std::move(y)) {
  if (n_ == 0) throw PreconditionError("morphism needs n >= 1");
  if (x_.size() != n_ || y_.size() != n_) throw PreconditionError("multiplicity vectors must have length n");
  std::size_t source = 0;
  std::size_t target = 0;
  for (std::size_t j = 1; j <= n_; ++j) {
    source += j * x_[j - 1];
    target += j * y_[j - 1];
  }
  if (source != target)
    throw PreconditionError("square condition fails: sum j x_j = " + std::to_string(source) +
                            " but sum i y_i = " + std::to_string(target));
}

std::size_t MorphismDatum::size() const noexcept {
  std::size_t h = 0;
  for (std::size_t j = 1; j <= n_; ++j) h += j * x_[j - 1];
  return h;
}

void MorphismDatum::set(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Polynomial& coefficient) {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw PreconditionError("vertex index out of range");
  if (j > i) throw PreconditionError("no nonzero morphisms P(j) -> P(i) for j > i");
  if (k >= y_[i - 1] || l >= x_[j - 1]) throw PreconditionError("summand copy index out of range");
  Polynomial c = coefficient.truncated(n_);
  if (i < n_ && c.degree() > 0) throw PreconditionError("coefficients into P(i) with i < n are scalars");
  auto it = grids_.find({i, j});
  if (it == grids_.end()) {
    if (c.is_zero()) return;
    it = grids_.emplace(std::make_pair(i, j), Grid(y_[i - 1], std::vector<Polynomial>(x_[j - 1]))).first;
  }
  it->second[k][l] = std::move(c);
}

Polynomial MorphismDatum::get(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
  const auto it = grids_.find({i, j});
  if (it == grids_.end()) return {};
  return it->second.at(k).at(l);
}

Matrix assemble_MN(const Matrix& n, const MorphismDatum& phi) {
  if (!n.is_square() || n.rows() != phi.n()) throw ShapeError("loop matrix size differs from the morphism's n");
  const std::size_t size = phi.size();
  const auto pw = powers(n, static_cast<unsigned>(phi.n() - 1));
  Matrix m(size, size);

  std::size_t row = 0;
  for (std::size_t i = 1; i <= phi.n(); ++i) {
    for (std::size_t k = 0; k < phi.y()[i - 1]; ++k) {
      std::size_t col = 0;
      for (std::size_t j = 1; j <= phi.n(); ++j) {
        for (std::size_t l = 0; l < phi.x()[j - 1]; ++l) {
          const Polynomial c = j <= i ? phi.get(i, j, k, l) : Polynomial();
          if (!c.is_zero()) {
            if (i < phi.n()) {
              for (std::size_t u = 0; u < j; ++u) m(row + u, col + u) = c.coefficient(0);
            } else {
              Matrix value(phi.n(), phi.n());
              const auto& coeffs = c.coefficients();
              for (std::size_t h = 0; h < coeffs.size(); ++h)
                if (coeffs[h] != 0) value += coeffs[h] * pw[h];
              for (std::size_t u = 0; u < phi.n(); ++u)
                for (std::size_t v = 0; v < j; ++v) m(row + u, col + v) = value(u, v);
            }
          }
          col += j;
        }
      }
      row += i;
    }
  }
  return m;
}

Rational eval_f_phi(const Matrix& n, const MorphismDatum& phi) { return det(assemble_MN(n, phi)); }

SemiInvariantDatum datum_from_morphism(const MorphismDatum& phi) {
  const std::size_t n = phi.n();
  for (std::size_t i = 1; i < n; ++i)
    if (phi.y()[i - 1] != 0)
      throw PreconditionError("only morphisms into copies of P(n) translate to a datum (y_" + std::to_string(i) +
                              " != 0)");
  const std::size_t s = phi.y()[n - 1];
  std::vector<std::size_t> rows(s, n);
  std::vector<std::size_t> cols;
  for (std::size_t j = 1; j <= n; ++j) cols.insert(cols.end(), phi.x()[j - 1], j);
  PolyGrid polys(s, std::vector<Polynomial>(cols.size()));
  for (std::size_t k = 0; k < s; ++k) {
    std::size_t col = 0;
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t l = 0; l < phi.x()[j - 1]; ++l) polys[k][col++] = phi.get(n, j, k, l);
  }
  return SemiInvariantDatum(std::move(rows), std::move(cols), std::move(polys));
}

namespace {

void collect_multiplicities(std::size_t n, std::size_t j, std::size_t left, std::vector<std::size_t>& current,
                            std::vector<std::vector<std::size_t>>& out) {
  if (j > n) {
    if (left == 0) out.push_back(current);
    return;
  }
  for (std::size_t c = 0; c <= 2 && c * j <= left; ++c) {
    current[j - 1] = c;
    collect_multiplicities(n, j + 1, left - c * j, current, out);
  }
  current[j - 1] = 0;
}

}  // namespace

MorphismDatum random_morphism(std::size_t n, Rng& rng) {
  if (n < 1) throw PreconditionError("random_morphism needs n >= 1");
  for (;;) {
    const auto yn = static_cast<std::size_t>(rng.uniform_int(1, 2));
    std::vector<std::vector<std::size_t>> options;
    std::vector<std::size_t> current(n, 0);
    collect_multiplicities(n, 1, n * yn, current, options);
    if (options.empty()) continue;
    const auto& x = options[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(options.size()) - 1))];
    std::vector<std::size_t> y(n, 0);
    y[n - 1] = yn;
    MorphismDatum phi(n, x, y);
    for (std::size_t k = 0; k < yn; ++k) {
      for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t l = 0; l < x[j - 1]; ++l) {
          if (rng.uniform_int(0, 4) == 0) continue;
          std::vector<Rational> coeffs(n);
          const auto terms = rng.uniform_int(1, 3);
          for (std::int64_t t = 0; t < terms; ++t)
            coeffs[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1))] = rng.nonzero_int(5);
          phi.set(n, j, k, l, Polynomial(std::move(coeffs)));
        }
      }
    }
    return phi;
  }
}

}  // namespace nilcone
