// Python bindings. Rationals cross the boundary as strings "p/q"; structured
// values (data, morphisms, reports) as JSON text in the library's encoding.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nilcone/cli.hpp"
#include "nilcone/errors.hpp"
#include "nilcone/groups.hpp"
#include "nilcone/json_io.hpp"
#include "nilcone/normalform.hpp"
#include "nilcone/quiver.hpp"
#include "nilcone/quotients.hpp"
#include "nilcone/semiinv.hpp"
#include "nilcone/toric.hpp"

namespace py = pybind11;
using namespace nilcone;
using json_io::Json;

namespace {

using StringMatrix = std::vector<std::vector<std::string>>;

Matrix to_matrix(const StringMatrix& rows) {
  std::vector<std::vector<Rational>> q;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const auto& s : row) r.push_back(parse_rational(s));
    q.push_back(std::move(r));
  }
  return Matrix::from_rows(q);
}

StringMatrix from_matrix(const Matrix& m) {
  StringMatrix out(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = to_string(m(i, j));
  return out;
}

std::vector<std::string> from_rationals(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

SemiInvariantDatum to_datum(const std::string& text) { return json_io::datum_from_json(Json::parse(text)); }
std::string from_datum(const SemiInvariantDatum& d) { return json_io::datum_to_json(d).dump(); }

py::tuple from_invariant(const WeightedInvariant& inv) {
  return py::make_tuple(from_datum(inv.datum), inv.weight.coords, inv.label);
}

GroupSpec to_group(const std::string& kind, const std::vector<std::size_t>& blocks, std::size_t n) {
  if (kind == "borel") return GroupSpec::borel(n);
  if (kind == "unipotent") return GroupSpec::unipotent(n);
  if (kind == "parabolic") return GroupSpec::parabolic(ParabolicShape::from_blocks(blocks));
  throw PreconditionError("unknown group " + kind);
}

ParabolicShape to_shape(const std::vector<std::size_t>& blocks, std::size_t n) {
  return blocks.empty() ? ParabolicShape::borel(n) : ParabolicShape::from_blocks(blocks);
}

}  // namespace

PYBIND11_MODULE(_nilcone, m) {
  m.doc() = "Exact semi-invariants, normal forms and toric data for nilpotent matrices";

  auto base = py::register_exception<Error>(m, "NilconeError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
  py::register_exception<SingularityError>(m, "SingularityError", base.ptr());
  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<GenericityError>(m, "GenericityError", precondition.ptr());
  py::register_exception<PatternError>(m, "PatternError", precondition.ptr());
  py::register_exception<UnstablePointError>(m, "UnstablePointError", precondition.ptr());
  py::register_exception<NotToricError>(m, "NotToricError", base.ptr());
  py::register_exception<NotAcceptableError>(m, "NotAcceptableError", base.ptr());
  py::register_exception<ScaleError>(m, "ScaleError", base.ptr());
  py::register_exception<NotConjugateError>(m, "NotConjugateError", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());

  m.def("det", [](const StringMatrix& a) { return to_string(det(to_matrix(a))); });
  m.def("rank", [](const StringMatrix& a) { return rank(to_matrix(a)); });
  m.def("random_nilpotent", [](std::size_t n, std::uint64_t seed) { return from_matrix(random_nilpotent(n, seed)); });

  m.def("eval_datum", [](const std::string& datum, const StringMatrix& a) { return to_string(eval(to_matrix(a), to_datum(datum))); });
  m.def("weight_of", [](const std::string& datum, std::size_t n) { return weight_of(to_datum(datum), n).coords; });
  m.def("det_k", [](std::size_t n, std::size_t k) { return from_invariant(det_k(n, k)); });
  m.def("f_ij", [](std::size_t n, std::size_t i, std::size_t j) { return from_invariant(f_ij(n, i, j)); });
  m.def("g_ij", [](std::size_t n, std::size_t i, std::size_t j) { return from_invariant(g_ij(n, i, j)); });
  m.def("chi_extract", [](std::size_t n) { return chi_extract(n).coords; });

  m.def("genericity_minors", [](const StringMatrix& a, const std::vector<std::size_t>& blocks) {
    const Matrix n = to_matrix(a);
    return from_rationals(genericity_minors(n, to_shape(blocks, n.rows())));
  });
  m.def("normal_form", [](const StringMatrix& a, const std::string& group, const std::vector<std::size_t>& blocks,
                          std::uint64_t seed) {
    const Matrix n = to_matrix(a);
    const NormalForm form = normal_form(n, to_group(group, blocks, n.rows()), seed);
    return py::make_tuple(from_matrix(form.h), from_matrix(form.cert.g), from_rationals(form.minors));
  });
  m.def("conjugacy_witness", [](const StringMatrix& a, const StringMatrix& b, const std::string& group,
                                const std::vector<std::size_t>& blocks, std::uint64_t seed) {
    const Matrix n = to_matrix(a);
    return from_matrix(conjugacy_witness(n, to_matrix(b), to_group(group, blocks, n.rows()), seed));
  });

  m.def("toric_exponents", [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& ap, std::size_t n) {
    return toric_exponents(BlockPair::make(a, ap, n));
  });
  m.def("toric_exponents_oracle", [](const std::string& datum, std::size_t n) { return toric_exponents_oracle(to_datum(datum), n); });
  m.def("toric_datum", [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& ap, std::size_t n) {
    return from_datum(toric_datum(BlockPair::make(a, ap, n)));
  });
  m.def("accperm", [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& ap, std::size_t n) {
    return accperm(BlockPair::make(a, ap, n));
  });
  m.def("toric_cone", [](std::size_t n) { return toric_cone(n).generators; });
  m.def("dual_cone", [](std::size_t dim, const std::vector<IntVector>& gens) { return dual_cone(ToricCone{dim, gens}).generators; });
  m.def("hilbert_basis", [](std::size_t dim, const std::vector<IntVector>& gens) { return hilbert_basis(ToricCone{dim, gens}); });

  m.def("eval_quiver", [](const std::string& morphism, const StringMatrix& a) {
    const MorphismDatum phi = json_io::morphism_from_json(Json::parse(morphism));
    return py::make_tuple(to_string(eval_f_phi(to_matrix(a), phi)), from_datum(datum_from_morphism(phi)));
  });

  m.def("u_quotient_n3", [](const StringMatrix& a) {
    const auto q = u_quotient_n3(to_matrix(a));
    return from_rationals({q.begin(), q.end()});
  });
  m.def("git_semistable", [](const StringMatrix& a) { return git_semistable(to_matrix(a)); });
  m.def("git_map_n3", [](const StringMatrix& a) {
    const ProjectivePoint p = git_map_n3(to_matrix(a));
    return py::make_tuple(to_string(p.x0), to_string(p.x1));
  });
  m.def("nonsurjectivity_residual", [](const StringMatrix& a) { return to_string(nonsurjectivity_residual(to_matrix(a))); });
  m.def("verify_relations", [](std::size_t n, std::size_t trials, std::uint64_t seed) {
    return json_io::report_to_json(verify_relations(n, trials, seed)).dump();
  });

  m.def("cli_run", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
