#pragma once

#include <json.hpp>

#include "kleind/dq.hpp"
#include "kleind/flag_order.hpp"
#include "kleind/gwa.hpp"
#include "kleind/hc_modules.hpp"
#include "kleind/skew.hpp"

namespace kleind {

// nlohmann adapters. Rationals and polynomials travel as strings in the
// exact text format; malformed input throws ParseError.

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);
void to_json(nlohmann::json& j, const Polynomial& p);
void from_json(const nlohmann::json& j, Polynomial& p);

// {"num": "<poly>", "den": "<poly>"}
void to_json(nlohmann::json& j, const RationalFunction& f);
void from_json(const nlohmann::json& j, RationalFunction& f);

// {"terms": [{"k": int, "eps": 0|1, "num": "<poly>", "den": "<poly>"}]}
void to_json(nlohmann::json& j, const SkewElement& X);
void from_json(const nlohmann::json& j, SkewElement& X);

// [{"n": int, "coeff": {"num", "den"}}]
void to_json(nlohmann::json& j, const GwaElement& X);
void from_json(const nlohmann::json& j, GwaElement& X);

// [{"u": i, "v": j, "w": k, "coeff": "a/b"}]
void to_json(nlohmann::json& j, const PbwForm& X);
void from_json(const nlohmann::json& j, PbwForm& X);

// "3/2*u*v - w" in the expression grammar
void to_json(nlohmann::json& j, const FreeExpression& X);
void from_json(const nlohmann::json& j, FreeExpression& X);

// {"order": 0|1, "point": "a/b"}
void to_json(nlohmann::json& j, const Tableau& t);
void from_json(const nlohmann::json& j, Tableau& t);

// [{"order", "point", "coeff"}]
void to_json(nlohmann::json& j, const Distribution& d);
void from_json(const nlohmann::json& j, Distribution& d);

// [{"identity": string, "pass": bool, "residual": element-or-null}]
nlohmann::json identity_report(const std::vector<IdentityResult>& results);

/// {"orbit_class", "lambda0", "window", "vertices", "edges", "closures",
///  "closure_details", "covers"}. Edges carry "symbolic" and "via" besides
/// the label and kind.
nlohmann::json graph_to_json(const ModuleGraph& graph, const ClosurePoset& closures);

}  // namespace kleind
