#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nilcone/groups.hpp"
#include "nilcone/matrix.hpp"
#include "nilcone/quiver.hpp"
#include "nilcone/quotients.hpp"
#include "nilcone/semiinv.hpp"
#include "nilcone/toric.hpp"

/// JSON encodings. Rationals are strings "p/q" or "p"; readers also accept
/// JSON integers. Every reader throws InputError on malformed input.
namespace nilcone::json_io {

using Json = nlohmann::json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json rationals_to_json(const std::vector<Rational>& v);

/// Array of rows.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Coefficient list, lowest degree first.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {"row_blocks": [..], "col_blocks": [..], "polys": [[[coeffs]]]}.
Json datum_to_json(const SemiInvariantDatum& d);
SemiInvariantDatum datum_from_json(const Json& j);

/// {"n": n, "x": [..], "y": [..], "entries": [{"target", "source", "row", "col", "poly"}]}
/// with 1-based target/source vertices and zero-based copy indices.
Json morphism_to_json(const MorphismDatum& phi);
MorphismDatum morphism_from_json(const Json& j);

Json character_to_json(const Character& c);

/// {"n": n, "blocks": [..]}.
Json shape_to_json(const ParabolicShape& s);
ParabolicShape shape_from_json(const Json& j);

Json int_vectors_to_json(const std::vector<IntVector>& v);

Json report_to_json(const QuotientReport& r);

/// Parses a file, or the argument itself when it starts with '[' or '{'.
Json read_json_argument(const std::string& path_or_literal);

}  // namespace nilcone::json_io
