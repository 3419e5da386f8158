#include <doctest.h>

#include "kleind/error.hpp"
#include "kleind/hc_modules.hpp"
#include "kleind/json_io.hpp"
#include "support/generators.hpp"

using namespace kleind;
using nlohmann::json;
using testing_support::Gen;

namespace {

template <typename T>
T round_trip(const T& value) {
  return json::parse(json(value).dump()).get<T>();
}

template <typename T>
ErrorCode parse_code(const char* text) {
  try {
    (void)json::parse(text).get<T>();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error for " << text);
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("wire formats") {
  CHECK(json(Rational(-3, 4)) == json("-3/4"));
  CHECK(json(Polynomial::parse("1,0,2")) == json("1,0,2"));
  CHECK(json(SkewElement::delta()) == json::parse(R"({"terms":[{"k":1,"eps":0,"num":"1","den":"1"}]})"));
  CHECK(json(SkewElement()) == json::parse(R"({"terms":[]})"));
  CHECK(json(Distribution::tableau(1, Rational(-2))) ==
        json::parse(R"([{"order":1,"point":"2","coeff":"-1"}])"));
  CHECK(json(Tableau{0, Rational(1, 3)}) == json::parse(R"({"order":0,"point":"1/3"})"));
}

TEST_CASE("round trips") {
  Gen gen(601);
  const DqParams d = params_from_q(Polynomial::parse("0,0,0,0,1"));
  for (int i = 0; i < 40; ++i) {
    const Rational r = gen.rational(1000, 97);
    CHECK(round_trip(r) == r);
    const Polynomial p = gen.poly(6);
    CHECK(round_trip(p) == p);
    const RationalFunction f = gen.ratfun(3);
    CHECK(round_trip(f) == f);
    const SkewElement X = gen.skew(3, 3, 2);
    CHECK(round_trip(X) == X);
    const GwaElement G = gen.gwa(3, 3, 2);
    CHECK(round_trip(G) == G);
    const FreeExpression E = gen.expression(3, 4);
    CHECK(round_trip(E) == E);
    const PbwForm nf = pbw_normal_form(FreeExpression::word(gen.word(4)), d);
    CHECK(round_trip(nf) == nf);
    const Distribution D = Distribution::tableau(0, gen.rational(), gen.nonzero_rational()) +
                           Distribution::tableau(1, gen.rational(), gen.nonzero_rational());
    CHECK(round_trip(D) == D);
  }
}

TEST_CASE("malformed input") {
  CHECK(parse_code<Rational>(R"("1/0")") == ErrorCode::kParseError);
  CHECK(parse_code<Rational>("3") == ErrorCode::kParseError);
  CHECK(parse_code<Polynomial>(R"("1,,2")") == ErrorCode::kParseError);
  CHECK(parse_code<SkewElement>(R"({"terms":[{"k":1,"eps":2,"num":"1","den":"1"}]})") == ErrorCode::kParseError);
  CHECK(parse_code<SkewElement>(R"({"terms":[{"k":1,"eps":0,"num":"1","den":"0"}]})") != ErrorCode::kInvalidArgument);
  CHECK(parse_code<SkewElement>(R"([1,2])") == ErrorCode::kParseError);
  CHECK(parse_code<Tableau>(R"({"order":3,"point":"1"})") == ErrorCode::kParseError);
  CHECK(parse_code<FreeExpression>(R"("u*")") == ErrorCode::kExpressionParseError);
  CHECK(parse_code<PbwForm>(R"([{"u":0,"v":0,"w":2,"coeff":"1"}])") == ErrorCode::kParseError);
}

TEST_CASE("identity report shape") {
  const json report = identity_report(verify_nil_hecke());
  REQUIRE(report.is_array());
  for (const auto& entry : report) {
    CHECK(entry.contains("identity"));
    CHECK(entry["pass"].is_boolean());
    CHECK(entry["residual"].is_null() == entry["pass"].get<bool>());
  }
}

TEST_CASE("graph json shape") {
  const Embedding emb(params_from_q(Polynomial::parse("4,0,-5,0,1")));
  const ModuleGraph g = module_graph(emb, Rational(1, 2), 6);
  const json j = graph_to_json(g, submodule_closures(g));
  CHECK(j["orbit_class"] == "half_integral");
  CHECK(j["vertices"].size() == g.vertices.size());
  CHECK(j["edges"].size() == g.edges.size());
  for (const auto& e : j["edges"]) {
    CHECK(e["src"].is_number_integer());
    CHECK(e["label"].is_string());
    CHECK(e["kind"].is_string());
    CHECK(e["via"].is_array());
  }
  CHECK(j["closures"].is_array());
}
