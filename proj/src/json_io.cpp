#include "nilcone/json_io.hpp"

#include <fstream>
#include <sstream>

#include "nilcone/errors.hpp"

namespace nilcone::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::size_t> sizes_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw InputError(std::string(what) + " must hold nonnegative integers");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) throw InputError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InputError("rational must be a string or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

Json rationals_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_to_json(q));
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("matrix rows must be arrays");
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(rational_from_json(v));
    rows.push_back(std::move(r));
  }
  try {
    return Matrix::from_rows(rows);
  } catch (const ShapeError& e) {
    throw InputError(e.what());
  }
}

Json polynomial_to_json(const Polynomial& p) { return rationals_to_json(p.coefficients()); }

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("polynomial must be a coefficient array");
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return Polynomial(std::move(c));
}

Json datum_to_json(const SemiInvariantDatum& d) {
  Json polys = Json::array();
  for (const auto& row : d.polys()) {
    Json r = Json::array();
    for (const auto& p : row) r.push_back(polynomial_to_json(p));
    polys.push_back(std::move(r));
  }
  return Json{{"row_blocks", d.row_blocks()}, {"col_blocks", d.col_blocks()}, {"polys", std::move(polys)}};
}

SemiInvariantDatum datum_from_json(const Json& j) {
  auto rows = sizes_from_json(field(j, "row_blocks"), "row_blocks");
  auto cols = sizes_from_json(field(j, "col_blocks"), "col_blocks");
  const Json& pj = field(j, "polys");
  if (!pj.is_array()) throw InputError("polys must be an array of rows");
  PolyGrid polys;
  for (const auto& row : pj) {
    if (!row.is_array()) throw InputError("polys rows must be arrays");
    std::vector<Polynomial> r;
    for (const auto& p : row) r.push_back(polynomial_from_json(p));
    polys.push_back(std::move(r));
  }
  return SemiInvariantDatum(std::move(rows), std::move(cols), std::move(polys));
}

Json morphism_to_json(const MorphismDatum& phi) {
  Json entries = Json::array();
  for (const auto& [key, grid] : phi.grids())
    for (std::size_t k = 0; k < grid.size(); ++k)
      for (std::size_t l = 0; l < grid[k].size(); ++l)
        if (!grid[k][l].is_zero())
          entries.push_back(Json{{"target", key.first},
                                 {"source", key.second},
                                 {"row", k},
                                 {"col", l},
                                 {"poly", polynomial_to_json(grid[k][l])}});
  return Json{{"n", phi.n()}, {"x", phi.x()}, {"y", phi.y()}, {"entries", std::move(entries)}};
}

MorphismDatum morphism_from_json(const Json& j) {
  MorphismDatum phi(size_from_json(field(j, "n"), "n"), sizes_from_json(field(j, "x"), "x"),
                    sizes_from_json(field(j, "y"), "y"));
  if (j.contains("entries")) {
    const Json& entries = j.at("entries");
    if (!entries.is_array()) throw InputError("entries must be an array");
    for (const auto& e : entries)
      phi.set(size_from_json(field(e, "target"), "target"), size_from_json(field(e, "source"), "source"),
              size_from_json(field(e, "row"), "row"), size_from_json(field(e, "col"), "col"),
              polynomial_from_json(field(e, "poly")));
  }
  return phi;
}

Json character_to_json(const Character& c) { return c.coords; }

Json shape_to_json(const ParabolicShape& s) { return Json{{"n", s.n}, {"blocks", s.blocks}}; }

ParabolicShape shape_from_json(const Json& j) {
  ParabolicShape s = ParabolicShape::from_blocks(sizes_from_json(field(j, "blocks"), "blocks"));
  if (j.contains("n") && size_from_json(j.at("n"), "n") != s.n) throw InputError("shape n differs from the block sum");
  return s;
}

Json int_vectors_to_json(const std::vector<IntVector>& v) { return v; }

Json report_to_json(const QuotientReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.sampled_values) samples.push_back(rationals_to_json(s));
  Json relations = Json::array();
  for (const auto& c : r.relations)
    relations.push_back(Json{{"label", c.label},
                             {"anchor", c.anchor},
                             {"samples", c.residuals.size()},
                             {"residuals", rationals_to_json(c.residuals)},
                             {"ok", c.ok()}});
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back(Json{{"label", v.label}, {"anchor", v.anchor}, {"samples", v.samples}, {"ok", v.ok}});
  return Json{{"n", r.n},
              {"map", r.map_label},
              {"seed", r.seed},
              {"trials", r.trials},
              {"sampled_values", std::move(samples)},
              {"relations", std::move(relations)},
              {"verdicts", std::move(verdicts)},
              {"ok", r.ok()}};
}

Json read_json_argument(const std::string& path_or_literal) {
  const auto first = path_or_literal.find_first_not_of(" \t\n");
  std::string text;
  if (first != std::string::npos && (path_or_literal[first] == '[' || path_or_literal[first] == '{')) {
    text = path_or_literal;
  } else {
    std::ifstream in(path_or_literal);
    if (!in) throw InputError("cannot read " + path_or_literal);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace nilcone::json_io
