// Acceptance run: one PASS/FAIL line per criterion, exact checks only, with
// the wall time against each criterion's budget. Exits nonzero if any
// criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kleind/flag_order.hpp"
#include "kleind/hc_modules.hpp"
#include "kleind/verify.hpp"

using namespace kleind;

namespace {

const std::vector<std::string> kBattery{"0,0,0,0,1", "1,1,0,0,1", "7,0,0,-2,0,1", "4,0,-5,0,1", "0,1,0,0,0,0,1"};

struct Outcome {
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

Polynomial P(const std::string& text) { return Polynomial::parse(text); }

Outcome relations() {
  Outcome o;
  for (const auto& text : kBattery) {
    const Embedding emb(params_from_q(P(text)));
    const auto rels = defining_relations(emb.params());
    for (std::size_t i = 0; i < rels.size(); ++i) {
      o.require(emb.phi(rels[i]).is_zero(), "q=" + text + ": relation " + std::to_string(i + 1) + " is not killed");
    }
  }
  return o;
}

Outcome gwa_psi() {
  Outcome o;
  for (const auto& text : kBattery) {
    const Embedding emb(params_from_q(P(text)));
    const GwaParams& gp = emb.gwa_params();
    const Psi& psi = emb.psi();
    const RationalFunction s = emb.params().s, one(1), h = RationalFunction::variable();
    const RationalFunction s_shift(s.num().shift(Rational(-1)), s.den().shift(Rational(-1)));
    const GwaElement a = GwaElement::a(), b = GwaElement::b(), H = GwaElement::h();
    struct Rel {
      const char* name;
      GwaElement lhs, rhs;
    };
    const Rel rels[] = {
        {"ba = s(h)", gwa_mul(b, a, gp), GwaElement(s)},
        {"ab = s(h - 1)", gwa_mul(a, b, gp), GwaElement(s_shift)},
        {"ah = (h - 1)a", gwa_mul(a, H, gp), GwaElement(h - one, 1)},
        {"bh = (h + 1)b", gwa_mul(b, H, gp), GwaElement(h + one, -1)},
    };
    for (const auto& r : rels) {
      o.require(r.lhs == r.rhs, "q=" + text + ": " + r.name + " fails in the GWA");
    }
    o.require(psi(b) * psi(a) == SkewElement(s), "q=" + text + ": psi(b)psi(a) != s(x)");
    o.require(psi(a) * psi(b) == SkewElement(s_shift), "q=" + text + ": psi(a)psi(b) != s(x - 1)");
    o.require(psi(a) * psi(H) == SkewElement(RationalFunction::variable() - one) * psi(a),
              "q=" + text + ": psi(a)psi(h) != (x - 1)psi(a)");
    o.require(psi(b) * psi(H) == SkewElement(RationalFunction::variable() + one) * psi(b),
              "q=" + text + ": psi(b)psi(h) != (x + 1)psi(b)");
    for (const auto& r : run_suite("gwa", P(text))) o.require(r.pass, "q=" + text + ": " + r.identity);
  }
  return o;
}

Outcome nil_hecke() {
  Outcome o;
  for (const auto& r : verify_nil_hecke()) o.require(r.pass, r.identity);
  return o;
}

Outcome flag_order() {
  Outcome o;
  for (const auto& text : kBattery) {
    const Polynomial q = P(text);
    for (const auto& r : verify_flag_order(q)) o.require(r.pass, "q=" + text + ": " + r.identity);
    for (FlagName n : {FlagName::kQS0, FlagName::kS1, FlagName::kX}) {
      const auto res = preserves_polys(build(n, q).value, 40);
      o.require(res.preserved, "q=" + text + ": " + std::string(flag_name_text(n)) + " leaves Q[x]");
    }
  }
  return o;
}

Outcome invariance() {
  Outcome o;
  for (const auto& text : kBattery) {
    const Embedding emb(params_from_q(P(text)));
    const char* names[] = {"u", "v", "w"};
    int i = 0;
    for (Generator g : {Generator::kU, Generator::kV, Generator::kW}) {
      const std::string tag = "q=" + text + ": phi(" + names[i++] + ")";
      o.require(is_tau_invariant(emb.phi(g)), tag + " is not tau-invariant");
      o.require(preserves_even_polys(emb.phi(g), 40).preserved, tag + " leaves Q[x^2]");
    }
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const std::vector<Rational> lambdas{Rational(1, 3), Rational(5, 7), Rational(2), Rational(5),
                                      Rational(0),    Rational(1, 2), Rational(1), Rational(3, 2)};
  for (const auto& text : kBattery) {
    const Embedding emb(params_from_q(P(text)));
    const DqParams& d = emb.params();
    const DualActionOracle oracle(emb);
    for (const Rational& l : lambdas) {
      for (HcGenerator g : {HcGenerator::kU, HcGenerator::kV, HcGenerator::kW, HcGenerator::kHalfVPlusW}) {
        for (int order : {0, 1}) {
          if (order == 1 && l.is_zero()) continue;
          const Tableau t{order, l};
          o.require(act_closed_form(g, t, d) == oracle.act(g, t),
                    "q=" + text + ": " + std::string(hc_generator_text(g)) + " on " + t.to_string());
        }
      }
    }
    const Distribution apex = Distribution::tableau(1, Rational(1), d.q.eval(Rational(0))) +
                              Distribution::tableau(0, Rational(1), d.q.derivative().eval(Rational(0)));
    o.require(oracle.act(HcGenerator::kHalfVPlusW, Tableau{0, Rational(0)}) == apex,
              "q=" + text + ": (v/2 + w).T0(0) != q(0)T1(1) + q'(0)T0(1)");
    o.require(oracle.act(HcGenerator::kW, Tableau{0, Rational(1, 2)}).coeff(Tableau{1, Rational(1, 2)}) ==
                  d.q.eval(Rational(-1, 2)),
              "q=" + text + ": coefficient of T1(1/2) in w.T0(1/2) is not q(-1/2)");
  }
  return o;
}

Outcome pbw_consistency() {
  Outcome o;
  std::mt19937 rng(7);
  for (const auto& text : kBattery) {
    const Embedding emb(params_from_q(P(text)));
    for (int i = 0; i < 50; ++i) {
      std::string word;
      const int len = std::uniform_int_distribution<int>(1, 6)(rng);
      for (int k = 0; k < len; ++k) word.push_back("uvw"[std::uniform_int_distribution<int>(0, 2)(rng)]);
      const PbwForm nf = pbw_normal_form(FreeExpression::word(word), emb.params());
      for (const auto& [key, c] : nf.terms()) {
        o.require(std::get<2>(key) <= 1, "q=" + text + ": " + word + " has a w^2 term in normal form");
      }
      o.require(emb.phi(nf.to_expression()) == emb.phi(FreeExpression::word(word)),
                "q=" + text + ": phi(" + word + ") != phi(normal form)");
    }
  }
  return o;
}

Outcome graph_structure() {
  Outcome o;
  {
    const Embedding emb(params_from_q(P("4,0,-5,0,1")));
    const ModuleGraph g = module_graph(emb, Rational(0), 8);
    std::set<std::pair<std::string, std::string>> missing_t0;
    for (const auto& e : g.slots) {
      const Tableau& s = g.vertices[e.src].tableau;
      const Tableau& t = g.vertices[e.dst].tableau;
      const std::string edge = s.to_string() + " -> " + t.to_string();
      o.require(e.label.is_zero() == !e.reaches,
                "integral orbit: " + edge + " has label " + e.symbolic + " = " + e.label.to_string() +
                    (e.reaches ? " but is reached" : " but is not reached"));
      if (s.order == 0 && t.order == 0 && !e.reaches && t.point == s.point + Rational(1)) {
        missing_t0.insert({s.point.to_string(), t.point.to_string()});
      }
    }
    const std::set<std::pair<std::string, std::string>> expected{{"1", "2"}, {"2", "3"}};
    o.require(missing_t0 == expected, "integral orbit: missing forward edges are not exactly T0(1)->T0(2), T0(2)->T0(3)");
  }
  {
    // (3t - 1)(t^3 + 2): the single root 1/3 on the orbit 1/3 + Z
    const Embedding emb(params_from_q(P("-2,6,0,-1,3")));
    const Rational root(1, 3);
    const int window = minimal_window(emb.params(), root);
    const ModuleGraph g = module_graph(emb, root, window);
    const ClosurePoset poset = submodule_closures(g);
    const int at = g.index_of(0, root);
    bool found = false;
    for (const auto& c : poset.closures) {
      if (std::find(c.generators.begin(), c.generators.end(), at) == c.generators.end()) continue;
      found = true;
      std::set<Rational> points;
      for (int v : c.vertices) points.insert(g.vertices[v].orbit_point);
      std::set<Rational> ray;
      for (Rational p = root; p >= Rational(-window); p -= Rational(1)) ray.insert(p);
      o.require(points == ray && c.truncated_left, "generic orbit: closure of T0(1/3) is not the left ray");
    }
    o.require(found, "generic orbit: no closure generated by T0(1/3)");
  }
  return o;
}

Outcome star() {
  Outcome o;
  for (const auto& text : kBattery) {
    for (const auto& r : run_suite("star", P(text))) o.require(r.pass, "q=" + text + ": " + r.identity);
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "relations killed by phi", 10, relations},
      {2, "GWA relations and psi", 5, gwa_psi},
      {3, "nil-Hecke identities", 2, nil_hecke},
      {4, "flag-order identities and preservation", 10, flag_order},
      {5, "tau-invariance and preservation of even polynomials", 10, invariance},
      {6, "closed forms equal the dual-action oracle", 20, oracle_equivalence},
      {7, "PBW normal forms", 30, pbw_consistency},
      {8, "module graphs and submodule closures", 10, graph_structure},
      {9, "star anti-automorphisms", 5, star},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.failures.push_back(std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) out.failures.push_back("over the time budget");
    const bool pass = out.failures.empty();
    failed += pass ? 0 : 1;
    std::printf("%s %d %s (%.2f s, budget %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.budget_s);
    for (const auto& f : out.failures) std::printf("    %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
