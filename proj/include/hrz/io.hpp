#pragma once

// Text formats. Every file is a JSON object; rationals are written as
// strings "p/q" or "p" (plain JSON integers are also accepted on input),
// and basis indices are 1-based.
//
// Algebra:
//   {"dim": n, "kind": "rhizaform" | "mono", "alpha": [[...]],
//    "beta": [[...]], "succ": [[i, j, k, "c"], ...], "prec": [...],
//    "mul": [...], "params": {"eta": "1/4"}}
// Matrix rows are listed top to bottom; column j holds the image of e_j.
// A coefficient may also be a parameter symbol, "-sym" or "c*sym".
//
// Extra sections read by the tools: "bimodule" {"dim", "left", "right",
// "beta"}, operators "T", "R", "D", forms "B", vectors "z". Family files
// add "omega" {"size", "table"} (0-based elements) and key succ / prec /
// R / star sections by element ("0", "1", ...) or pair ("0,1").

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "hrz/algebra.hpp"
#include "hrz/family.hpp"
#include "hrz/operators.hpp"
#include "hrz/report.hpp"

namespace hrz {

using Bindings = std::map<std::string, Rational>;

/// Parses JSON text; syntax errors become ParseError with the byte offset.
Json load_json(std::string_view text);

/// "name=p/q" as given on a command line.
std::pair<std::string, Rational> parse_binding(std::string_view text);

/// A coefficient string under the given bindings. Throws UnboundParameter
/// for unknown symbols and ParseError for anything malformed.
Rational parse_coefficient(std::string_view text, const Bindings &bindings);

/// Parameters declared in the file's "params" section, overridden by
/// `bindings`, are used to resolve symbols and stored in the result.
HomAlgebra parse_algebra(std::string_view text, const Bindings &bindings = {});
HomAlgebra algebra_from_json(const Json &j, const Bindings &bindings = {});

Json algebra_to_json(const HomAlgebra &a);
std::string serialize_algebra(const HomAlgebra &a);

/// Indented JSON with arrays of scalars kept on one line, so matrices
/// print one row per line. Ends with a newline.
std::string format_json(const Json &j);

/// The bindings in effect for a document: its "params" overridden by
/// `bindings`.
Bindings effective_bindings(const Json &doc, const Bindings &bindings);

Matrix matrix_from_json(const Json &j, const Bindings &bindings, const std::string &path);
Vector vector_from_json(const Json &j, const Bindings &bindings, const std::string &path);

/// Reads the "bimodule" section over an algebra of dimension alg_dim.
std::optional<Bimodule> bimodule_from_json(const Json &doc, std::size_t alg_dim, const Bindings &bindings);
/// Reads a matrix-valued section such as "T" or "R".
std::optional<LinearOperator> operator_from_json(const Json &doc, const std::string &key, const Bindings &bindings);

Semigroup semigroup_from_json(const Json &j);
Json semigroup_to_json(const Semigroup &s);

/// Family files: "dim", "alpha", "omega", then "succ"/"prec" keyed by
/// element.
FamilyAlgebra family_algebra_from_json(const Json &doc, const Bindings &bindings = {});
Json family_algebra_to_json(const FamilyAlgebra &f);
/// "omega" and "R" keyed by element, each an n x n matrix.
RBFamily rb_family_from_json(const Json &doc, std::size_t dim, const Bindings &bindings = {});
/// "omega" and "star" keyed "l,w".
FamilyProducts family_products_from_json(const Json &doc, std::size_t dim, const Bindings &bindings = {});

Json bilinear_to_json(const BilinearOp &op);

} // namespace hrz
