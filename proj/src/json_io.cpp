#include "kleind/json_io.hpp"

#include "kleind/error.hpp"

namespace kleind {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string text(const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

long integer(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long>();
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

}  // namespace

void to_json(json& j, const Rational& r) { j = r.to_string(); }
void from_json(const json& j, Rational& r) { r = Rational::parse(text(j, "rational")); }

void to_json(json& j, const Polynomial& p) { j = p.to_string(); }
void from_json(const json& j, Polynomial& p) { p = Polynomial::parse(text(j, "polynomial")); }

void to_json(json& j, const RationalFunction& f) { j = json{{"num", f.num()}, {"den", f.den()}}; }

void from_json(const json& j, RationalFunction& f) {
  Polynomial num = field(j, "num").get<Polynomial>();
  Polynomial den = field(j, "den").get<Polynomial>();
  if (den.is_zero()) bad("zero denominator");
  f = RationalFunction(std::move(num), std::move(den));
}

void to_json(json& j, const SkewElement& X) {
  json terms = json::array();
  for (const auto& [g, f] : X.terms()) {
    terms.push_back(json{{"k", g.k}, {"eps", g.eps ? 1 : 0}, {"num", f.num()}, {"den", f.den()}});
  }
  j = json{{"terms", std::move(terms)}};
}

void from_json(const json& j, SkewElement& X) {
  SkewElement out;
  for (const json& t : array(field(j, "terms"), "terms")) {
    const long eps = integer(field(t, "eps"), "eps");
    if (eps != 0 && eps != 1) bad("eps must be 0 or 1");
    out.add_term(GroupElement{integer(field(t, "k"), "k"), eps == 1}, t.get<RationalFunction>());
  }
  X = std::move(out);
}

void to_json(json& j, const GwaElement& X) {
  j = json::array();
  for (const auto& [n, f] : X.terms()) j.push_back(json{{"n", n}, {"coeff", f}});
}

void from_json(const json& j, GwaElement& X) {
  GwaElement out;
  for (const json& t : array(j, "GWA element")) {
    out.add_term(integer(field(t, "n"), "n"), field(t, "coeff").get<RationalFunction>());
  }
  X = std::move(out);
}

void to_json(json& j, const PbwForm& X) {
  j = json::array();
  for (const auto& [key, c] : X.terms()) {
    const auto& [i, jj, k] = key;
    j.push_back(json{{"u", i}, {"v", jj}, {"w", k}, {"coeff", c}});
  }
}

void from_json(const json& j, PbwForm& X) {
  PbwForm out;
  for (const json& t : array(j, "PBW form")) {
    const long i = integer(field(t, "u"), "u"), jj = integer(field(t, "v"), "v"), k = integer(field(t, "w"), "w");
    if (i < 0 || jj < 0 || k < 0 || k > 1) bad("PBW exponents must satisfy i, j >= 0 and k in {0, 1}");
    out.add_term({static_cast<unsigned>(i), static_cast<unsigned>(jj), static_cast<unsigned>(k)},
                 field(t, "coeff").get<Rational>());
  }
  X = std::move(out);
}

void to_json(json& j, const FreeExpression& X) { j = X.to_string(); }
void from_json(const json& j, FreeExpression& X) { X = FreeExpression::parse(text(j, "expression")); }

void to_json(json& j, const Tableau& t) { j = json{{"order", t.order}, {"point", t.point}}; }

void from_json(const json& j, Tableau& t) {
  const long order = integer(field(j, "order"), "order");
  if (order != 0 && order != 1) bad("order must be 0 or 1");
  t = Tableau{static_cast<int>(order), field(j, "point").get<Rational>()};
}

void to_json(json& j, const Distribution& d) {
  j = json::array();
  for (const auto& [t, c] : d.terms()) j.push_back(json{{"order", t.order}, {"point", t.point}, {"coeff", c}});
}

void from_json(const json& j, Distribution& d) {
  Distribution out;
  for (const json& t : array(j, "distribution")) {
    const Tableau tab = t.get<Tableau>();
    out.add(tab.order, tab.point, field(t, "coeff").get<Rational>());
  }
  d = std::move(out);
}

json identity_report(const std::vector<IdentityResult>& results) {
  json out = json::array();
  for (const IdentityResult& r : results) {
    out.push_back(json{{"identity", r.identity},
                       {"pass", r.pass},
                       {"residual", r.residual ? json(*r.residual) : json(nullptr)}});
  }
  return out;
}

json graph_to_json(const ModuleGraph& graph, const ClosurePoset& closures) {
  json vertices = json::array();
  for (const GraphVertex& v : graph.vertices) {
    vertices.push_back(json{{"order", v.tableau.order}, {"point", v.tableau.point}, {"orbit_point", v.orbit_point}});
  }
  json edges = json::array();
  for (int e : graph.edges) {
    const EdgeSlot& s = graph.slots[e];
    edges.push_back(json{{"src", s.src},
                         {"dst", s.dst},
                         {"label", s.label},
                         {"kind", edge_kind_text(s.kind)},
                         {"symbolic", s.symbolic},
                         {"via", s.via}});
  }
  json sets = json::array(), details = json::array(), covers = json::array();
  for (const Closure& c : closures.closures) {
    sets.push_back(c.vertices);
    details.push_back(json{{"generators", c.generators},
                           {"truncated_left", c.truncated_left},
                           {"truncated_right", c.truncated_right}});
  }
  for (const auto& [lo, hi] : closures.covers) covers.push_back(json::array({lo, hi}));
  return json{{"orbit_class", orbit_class_text(graph.orbit_class)},
              {"lambda0", graph.lambda0},
              {"window", graph.window},
              {"full", graph.full},
              {"vertices", std::move(vertices)},
              {"edges", std::move(edges)},
              {"closures", std::move(sets)},
              {"closure_details", std::move(details)},
              {"covers", std::move(covers)}};
}

}  // namespace kleind
