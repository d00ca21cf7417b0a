#include "nilcone/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "nilcone/errors.hpp"
#include "nilcone/groups.hpp"
#include "nilcone/json_io.hpp"
#include "nilcone/normalform.hpp"
#include "nilcone/quiver.hpp"
#include "nilcone/quotients.hpp"
#include "nilcone/random.hpp"
#include "nilcone/semiinv.hpp"
#include "nilcone/toric.hpp"

namespace nilcone::cli {

namespace {

using json_io::Json;

struct Result {
  Json body;
  int code = kExitOk;
};

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(part, &used);
    } catch (const std::exception&) {
      throw InputError("expected comma-separated sizes, got \"" + text + "\"");
    }
    if (used != part.size() || part.empty() || part[0] == '-')
      throw InputError("expected comma-separated sizes, got \"" + text + "\"");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("expected at least one size");
  return out;
}

GroupSpec group_from(const std::string& kind, const std::string& blocks, std::size_t n) {
  if (kind == "borel") return GroupSpec::borel(n);
  if (kind == "unipotent") return GroupSpec::unipotent(n);
  if (kind == "parabolic") {
    if (blocks.empty()) throw InputError("--group parabolic needs --blocks");
    const auto shape = ParabolicShape::from_blocks(parse_sizes(blocks));
    if (shape.n != n) throw InputError("block sizes do not sum to the matrix size");
    return GroupSpec::parabolic(shape);
  }
  throw InputError("unknown group \"" + kind + "\"");
}

Matrix read_matrix(const std::string& arg) {
  const Matrix m = json_io::matrix_from_json(json_io::read_json_argument(arg));
  if (!m.is_square() || m.rows() == 0) throw InputError("matrix must be square and nonempty");
  return m;
}

Json sizes_json(const std::vector<std::size_t>& v) { return v; }

// ----- verify-all ---------------------------------------------------------

struct Check {
  std::string label;
  std::string anchor;
  bool ok = true;
  std::size_t samples = 0;
};

Check semiinvariance_check(const std::string& label, const std::vector<WeightedInvariant>& invariants, std::size_t n,
                           std::size_t trials, std::uint64_t seed) {
  Check c{label, "B-semi-invariance of the determinantal functions", true, 0};
  for (const auto& inv : invariants) {
    c.ok = c.ok && verify_semiinvariance(inv, n, trials, 3, seed + c.samples);
    ++c.samples;
  }
  return c;
}

std::vector<Check> verify_all(std::size_t n, std::size_t trials, std::uint64_t seed) {
  std::vector<Check> checks;
  Rng rng(seed);

  std::vector<WeightedInvariant> dets;
  for (std::size_t k = 1; k < n; ++k) dets.push_back(det_k(n, k));
  checks.push_back(semiinvariance_check("det_k semi-invariance", dets, n, trials, seed));

  std::vector<WeightedInvariant> fs;
  std::vector<WeightedInvariant> gs;
  for (std::size_t i = 3; i <= n; ++i)
    for (std::size_t j = 1; j + 2 <= i; ++j) {
      fs.push_back(f_ij(n, i, j));
      gs.push_back(g_ij(n, i, j));
    }
  if (!fs.empty()) {
    checks.push_back(semiinvariance_check("f_{i,j} semi-invariance", fs, n, trials, seed));
    checks.push_back(semiinvariance_check("g_{i,j} semi-invariance", gs, n, trials, seed));
  }

  Check random_data{"U-invariance of random data", "U-invariance of every determinantal function", true, 0};
  for (std::size_t t = 0; t < trials; ++t, ++random_data.samples)
    random_data.ok = random_data.ok && verify_u_invariance(random_datum(n, rng), n, 3, 3, rng.next());
  checks.push_back(random_data);

  Check quiver{"f_phi = f^P", "quiver morphisms and block data give the same function", true, 0};
  for (std::size_t t = 0; t < trials; ++t, ++quiver.samples) {
    const MorphismDatum phi = random_morphism(n, rng);
    const Matrix sample = random_nilpotent(n, rng);
    quiver.ok = quiver.ok && eval_f_phi(sample, phi) == eval(sample, datum_from_morphism(phi));
  }
  checks.push_back(quiver);

  if (n >= 2) {
    Check nf{"Borel normal form: pattern, orbit invariance, idempotence", "generic normal form under B", true, 0};
    Check extraction{"g_{i,j}(H) = H_{i,j}", "entry extraction on the Borel normal form", true, 0};
    const PatternSpec borel_pattern = pattern(GroupSpec::borel(n));
    for (std::size_t t = 0; t < trials; ++t) {
      const Matrix sample = random_nilpotent(n, rng);
      if (!is_generic(sample, ParabolicShape::borel(n))) continue;
      const NormalForm form = normal_form_B(sample, seed);
      ++nf.samples;
      nf.ok = nf.ok && borel_pattern.matches(form.h) && form.cert.g * sample == form.h * form.cert.g &&
              normal_form_B(conjugate(random_borel(n, rng), sample), seed).h == form.h &&
              normal_form_B(form.h, seed).h == form.h;
      for (std::size_t i = 3; i <= n; ++i)
        for (std::size_t j = 1; j + 2 <= i; ++j) {
          ++extraction.samples;
          extraction.ok = extraction.ok && eval(form.h, g_ij(n, i, j).datum) == form.h(i - 1, j - 1);
        }
    }
    nf.ok = nf.ok && nf.samples > 0;
    checks.push_back(nf);
    if (n >= 3) {
      for (std::size_t i = 3; i <= n; ++i)
        for (std::size_t j = 1; j + 2 <= i; ++j)
          extraction.ok = extraction.ok && g_ij(n, i, j).weight == chi_extract(n);
      checks.push_back(extraction);
    }
  }

  if (n <= 5) {
    Check exponents{"toric exponents = factored exponents", "exponent formula for sum-free toric invariants", true, 0};
    for (const auto& bp : sum_free_block_pairs(n, 2 * (n - 1))) {
      ++exponents.samples;
      const auto sigma = accperm(bp);
      for (std::size_t i = 1; i <= bp.r; ++i) exponents.ok = exponents.ok && is_acceptable_entry(i, sigma[i - 1], bp);
      exponents.ok = exponents.ok && toric_exponents(bp) == toric_exponents_oracle(toric_datum(bp), n);
    }
    checks.push_back(exponents);
  }

  const QuotientReport report = verify_relations(n, trials, seed);
  for (const auto& r : report.relations) checks.push_back({r.label, r.anchor, r.ok(), r.residuals.size()});
  for (const auto& v : report.verdicts) checks.push_back({v.label, v.anchor, v.ok, v.samples});
  return checks;
}

// ----- subcommands --------------------------------------------------------

struct Options {
  std::string matrix;
  std::string datum;
  std::string morphism;
  std::string group = "borel";
  std::string blocks;
  std::string a;
  std::string aprime;
  std::size_t n = 3;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
};

Result eval_invariant(const Options& o) {
  const Matrix m = read_matrix(o.matrix);
  const SemiInvariantDatum d = json_io::datum_from_json(json_io::read_json_argument(o.datum));
  d.check_fits(m.rows());
  return {Json{{"n", m.rows()},
               {"datum", json_io::datum_to_json(d)},
               {"value", json_io::rational_to_json(eval(m, d))},
               {"weight", json_io::character_to_json(weight_of(d, m.rows()))}}};
}

Result normal_form_cmd(const Options& o) {
  const Matrix m = read_matrix(o.matrix);
  const GroupSpec group = group_from(o.group, o.blocks, m.rows());
  const NormalForm form = normal_form(m, group, o.seed);
  return {Json{{"group", to_string(group.kind)},
               {"shape", json_io::shape_to_json(group.shape)},
               {"seed", o.seed},
               {"H", json_io::matrix_to_json(form.h)},
               {"g", json_io::matrix_to_json(form.cert.g)},
               {"minors", json_io::rationals_to_json(form.minors)}}};
}

Result genericity_cmd(const Options& o) {
  const Matrix m = read_matrix(o.matrix);
  const GroupSpec group = group_from(o.group, o.blocks, m.rows());
  return {Json{{"group", to_string(group.kind)},
               {"shape", json_io::shape_to_json(group.shape)},
               {"generic", is_generic(m, group.shape)},
               {"minors", json_io::rationals_to_json(genericity_minors(m, group.shape))}}};
}

Result toric_cone_cmd(const Options& o) {
  const ToricCone cone = toric_cone(o.n);
  return {Json{{"n", o.n},
               {"bound", 2 * (o.n - 1)},
               {"generators", json_io::int_vectors_to_json(cone.generators)},
               {"dual", json_io::int_vectors_to_json(dual_cone(cone).generators)},
               {"hilbert", json_io::int_vectors_to_json(hilbert_basis(cone))}}};
}

Result toric_exponents_cmd(const Options& o) {
  const BlockPair bp = BlockPair::make(parse_sizes(o.a), parse_sizes(o.aprime), o.n);
  const auto formula = toric_exponents(bp);
  const SemiInvariantDatum d = toric_datum(bp);
  const auto factored = toric_exponents_oracle(d, o.n);
  return {Json{{"n", o.n},
               {"a", sizes_json(bp.a)},
               {"aprime", sizes_json(bp.ap)},
               {"accperm", sizes_json(accperm(bp))},
               {"datum", json_io::datum_to_json(d)},
               {"exponents", formula},
               {"factored_exponents", factored},
               {"ok", formula == factored}},
          formula == factored ? kExitOk : kExitCheckFailed};
}

Result eval_quiver_cmd(const Options& o) {
  const Matrix m = read_matrix(o.matrix);
  const MorphismDatum phi = json_io::morphism_from_json(json_io::read_json_argument(o.morphism));
  if (phi.n() != m.rows()) throw InputError("morphism n differs from the matrix size");
  const Rational via_quiver = eval_f_phi(m, phi);
  const SemiInvariantDatum d = datum_from_morphism(phi);
  const Rational via_datum = eval(m, d);
  const bool ok = via_quiver == via_datum;
  return {Json{{"value", json_io::rational_to_json(via_quiver)},
               {"datum", json_io::datum_to_json(d)},
               {"datum_value", json_io::rational_to_json(via_datum)},
               {"ok", ok}},
          ok ? kExitOk : kExitCheckFailed};
}

Result verify_relations_cmd(const Options& o) {
  const QuotientReport report = verify_relations(o.n, o.trials, o.seed);
  return {json_io::report_to_json(report), report.ok() ? kExitOk : kExitCheckFailed};
}

Result verify_all_cmd(const Options& o) {
  const auto checks = verify_all(o.n, o.trials, o.seed);
  Json list = Json::array();
  Json summary = Json::array();
  bool ok = true;
  for (const auto& c : checks) {
    const std::string status = c.ok ? "ok" : "FAILED";
    list.push_back(Json{{"label", c.label}, {"anchor", c.anchor}, {"samples", c.samples}, {"status", status}});
    summary.push_back(c.label + ": " + status);
    ok = ok && c.ok;
  }
  return {Json{{"n", o.n}, {"seed", o.seed}, {"trials", o.trials}, {"checks", list}, {"summary", summary}, {"ok", ok}},
          ok ? kExitOk : kExitCheckFailed};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact semi-invariants, normal forms and toric data for nilpotent matrices", "nilcone"};
  app.require_subcommand(1);
  Options o;
  std::string output;
  app.add_option("--output", output, "Write the JSON result to this file instead of standard output");

  std::function<Result(const Options&)> action;
  const auto add = [&](const char* name, const char* help, std::function<Result(const Options&)> f) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, f] { action = f; });
    return sub;
  };

  auto* ev = add("eval-invariant", "Evaluate f^P at a matrix", eval_invariant);
  ev->add_option("--datum", o.datum, "Datum JSON file or literal")->required();
  ev->add_option("--matrix", o.matrix, "Matrix JSON file or literal")->required();

  for (auto [name, help, f] : {std::tuple{"normal-form", "Generic normal form with conjugating element", &normal_form_cmd},
                               std::tuple{"genericity-check", "Genericity minors for a group", &genericity_cmd}}) {
    auto* sub = add(name, help, f);
    sub->add_option("--matrix", o.matrix, "Matrix JSON file or literal")->required();
    sub->add_option("--group", o.group, "borel, unipotent or parabolic")
        ->check(CLI::IsMember({"borel", "unipotent", "parabolic"}));
    sub->add_option("--blocks", o.blocks, "Comma-separated block sizes for a parabolic group");
    sub->add_option("--seed", o.seed, "Seed of the conjugacy witness search");
  }

  auto* cone = add("toric-cone", "Cone of toric invariant exponents, its dual and Hilbert basis", toric_cone_cmd);
  cone->add_option("--n", o.n, "Matrix size")->required()->check(CLI::Range(2, 5));

  auto* exps = add("toric-exponents", "Exponent vector of a sum-free toric invariant", toric_exponents_cmd);
  exps->add_option("--a", o.a, "Row block sizes")->required();
  exps->add_option("--aprime", o.aprime, "Column block sizes")->required();
  exps->add_option("--n", o.n, "Matrix size")->required()->check(CLI::PositiveNumber);

  auto* quiver = add("eval-quiver-si", "Evaluate the semi-invariant of a quiver morphism", eval_quiver_cmd);
  quiver->add_option("--morphism", o.morphism, "Morphism JSON file or literal")->required();
  quiver->add_option("--matrix", o.matrix, "Matrix JSON file or literal")->required();

  auto* rel = add("verify-relations", "Check the quotient relations on random samples", verify_relations_cmd);
  auto* all = add("verify-all", "Run every sampled identity at one size", verify_all_cmd);
  for (auto* sub : {rel, all}) {
    sub->add_option("--n", o.n, "Matrix size")->check(CLI::Range(2, 8));
    sub->add_option("--trials", o.trials, "Samples per check")->check(CLI::Range(1, 100000));
    sub->add_option("--seed", o.seed, "Sampling seed");
  }

  std::vector<std::string> argv_storage{"nilcone"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Result result;
  try {
    result = action(o);
  } catch (const InputError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ShapeError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GenericityError& e) {
    err << "genericity error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ScaleError& e) {
    err << "scale error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotToricError& e) {
    err << "precondition error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }

  const std::string text = result.body.dump(2) + "\n";
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output);
    if (!file) {
      err << "usage error: cannot write " << output << "\n";
      return kExitUsage;
    }
    file << text;
  }
  return result.code;
}

}  // namespace nilcone::cli
