// Identities in the exact form they are commonly stated. Each one is false
// as written; the corrected forms are checked in the other suites. This
// binary is expected to fail.
#include <doctest.h>

#include "kleind/flag_order.hpp"
#include "kleind/hc_modules.hpp"
#include "support/generators.hpp"

using namespace kleind;
using testing_support::kBattery;

namespace {

Polynomial P(const char* text) { return Polynomial::parse(text); }
RationalFunction X() { return RationalFunction::variable(); }

}  // namespace

TEST_CASE("s0 s1 s0 s1 = s1 s0 s1 s0") {
  const SkewElement s0 = build(FlagName::kS0, Polynomial()).value;
  const SkewElement s1 = build(FlagName::kS1, Polynomial()).value;
  CHECK(s0 * s1 * s0 * s1 == s1 * s0 * s1 * s0);
}

TEST_CASE("(u - l^2).T1(l) = T0(l)") {
  const Embedding emb(params_from_q(P("0,0,0,0,1")));
  const DualActionOracle oracle(emb);
  for (const Rational& l : {Rational(1, 3), Rational(2), Rational(5, 7)}) {
    const Distribution t1 = Distribution::tableau(1, l);
    CHECK(oracle.act(HcGenerator::kU, Tableau{1, l}) - (l * l) * t1 == Distribution::tableau(0, l));
  }
}

TEST_CASE("phi(w) with (x + 1) on the delta term") {
  for (const char* text : kBattery) {
    const Polynomial q = P(text);
    const Embedding emb(params_from_q(q));
    const RationalFunction half(Rational(1, 2)), one(1), x = X();
    const RationalFunction qx(q), qmx(q.negate_var());
    const RationalFunction c(q.eval(Rational(-1, 2)));
    const SkewElement stated =
        SkewElement(half * qx * (-one - x) / (x * (half + x)), GroupElement::delta(-1)) +
        SkewElement(half * qmx * (x + one) / (-x * (half - x)), GroupElement::delta(1)) +
        SkewElement(c * -half / ((half + x) * (half - x)));
    CHECK(emb.phi(Generator::kW) == stated);
  }
}

TEST_CASE("a drawn label is zero exactly when the edge is missing") {
  const Embedding emb(params_from_q(P("4,0,-5,0,1")));
  const ModuleGraph g = module_graph(emb, Rational(0), minimal_window(emb.params(), Rational(0)));
  for (const auto& e : g.slots) {
    CHECK_MESSAGE(e.label.is_zero() == !e.reaches,
                  g.vertices[e.src].tableau.to_string() << " -> " << g.vertices[e.dst].tableau.to_string());
  }
}
