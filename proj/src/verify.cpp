#include "kleind/verify.hpp"

#include <functional>
#include <random>

#include "kleind/dq.hpp"
#include "kleind/error.hpp"
#include "kleind/flag_order.hpp"
#include "kleind/gwa.hpp"
#include "kleind/json_io.hpp"

namespace kleind {

using nlohmann::json;

namespace {

struct Suite {
  std::vector<CheckResult> out;
  std::string name;

  template <typename T>
  void equal(std::string identity, const T& lhs, const T& rhs) {
    const bool ok = lhs == rhs;
    out.push_back({name, std::move(identity), ok, ok ? json(nullptr) : json(lhs - rhs)});
  }
  void truth(std::string identity, bool ok, json residual = nullptr) {
    out.push_back({name, std::move(identity), ok, ok ? json(nullptr) : std::move(residual)});
  }
  void skew_zero(std::string identity, const SkewElement& residual) {
    truth(std::move(identity), residual.is_zero(), json(residual));
  }
};

json witness(const PreservationResult& r) {
  return json{{"exponent", r.witness_exponent ? json(*r.witness_exponent) : json(nullptr)},
              {"image", r.witness_image ? json(*r.witness_image) : json(nullptr)}};
}

RationalFunction x_fn() { return RationalFunction::variable(); }

// Words of length 1..max_len over {u, v, w}.
std::string random_word(std::mt19937& rng, unsigned max_len) {
  std::uniform_int_distribution<unsigned> len(1, max_len);
  std::uniform_int_distribution<int> letter(0, 2);
  std::string w;
  for (unsigned i = len(rng); i > 0; --i) w.push_back("uvw"[letter(rng)]);
  return w;
}

Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  return Rational(num(rng), den(rng));
}

FreeExpression random_expression(std::mt19937& rng) {
  FreeExpression e;
  std::uniform_int_distribution<int> count(1, 3);
  for (int i = count(rng); i > 0; --i) e.add_term(random_word(rng, 3), small_rational(rng));
  return e;
}

GwaElement random_gwa(std::mt19937& rng) {
  GwaElement out;
  std::uniform_int_distribution<long> power(-2, 2), shift(-3, 3);
  std::uniform_int_distribution<int> count(1, 3), coin(0, 1);
  for (int i = count(rng); i > 0; --i) {
    Polynomial num{small_rational(rng), small_rational(rng), small_rational(rng)};
    Polynomial den = coin(rng) ? Polynomial{Rational(shift(rng)), Rational(1)} : Polynomial(Rational(1));
    if (num.is_zero()) continue;
    out.add_term(power(rng), RationalFunction(num, den));
  }
  return out;
}

std::vector<CheckResult> relations(const Polynomial& q, const VerifyOptions&) {
  Suite s{{}, "relations"};
  const DqParams params = params_from_q(q);
  const Embedding embedding(params);
  const long n = q.degree();
  const Polynomial one_plus_2t{Rational(1), Rational(2)};
  s.truth("rho = 2 q(-1/2)", params.rho == Rational(2) * q.eval(Rational(-1, 2)));
  s.equal("p(t) (1 + 2t)^2 = -4 q(t) q(-t-1) + rho^2", params.p * one_plus_2t * one_plus_2t,
          Polynomial(params.rho * params.rho) - Rational(4) * q * q.negate_var().shift(Rational(1)));
  s.equal("p(t) = p0(t^2) + t p1(t^2)", params.p,
          params.p0.compose_square() + Polynomial::variable() * params.p1.compose_square());
  s.truth("deg p = 2n - 2", params.p.degree() == 2 * n - 2, json(params.p.degree()));
  s.truth("deg p1 = n - 2", params.p1.degree() == n - 2, json(params.p1.degree()));
  static const char* const kNames[4] = {"[u,v] = 2w + v", "[u,w] = 2vu + w + rho", "[v,w] = -v^2 - p1(u)",
                                        "w^2 = v^2 u + vw + rho v + p0(u)"};
  const auto rels = defining_relations(params);
  for (int i = 0; i < 4; ++i) s.skew_zero(std::string("phi: ") + kNames[i], embedding.phi(rels[i]));
  return s.out;
}

std::vector<CheckResult> gwa(const Polynomial& q, const VerifyOptions&) {
  Suite s{{}, "gwa"};
  const DqParams params = params_from_q(q);
  const Embedding embedding(params);
  const GwaParams& gp = embedding.gwa_params();
  const Psi& psi_map = embedding.psi();
  const GwaElement a = GwaElement::a(), b = GwaElement::b(), h = GwaElement::h();
  const RationalFunction x = x_fn(), one(1);
  s.equal("b a = s(h)", gwa_mul(b, a, gp), GwaElement(params.s));
  s.equal("a b = s(h - 1)", gwa_mul(a, b, gp), GwaElement(params.s.shift(Rational(-1))));
  s.equal("a h = (h - 1) a", gwa_mul(a, h, gp), GwaElement(x - one, 1));
  s.equal("b h = (h + 1) b", gwa_mul(b, h, gp), GwaElement(x + one, -1));
  const SkewElement pa = psi_map(a), pb = psi_map(b), ph = psi_map(h);
  s.equal("psi(h) = x", ph, SkewElement::x());
  s.equal("psi(b) psi(a) = s(x)", pb * pa, SkewElement(params.s));
  s.equal("psi(a) psi(b) = s(x - 1)", pa * pb, SkewElement(params.s.shift(Rational(-1))));
  s.equal("psi(a) psi(h) = (x - 1) psi(a)", pa * ph, SkewElement(x - one) * pa);
  s.equal("psi(b) psi(h) = (x + 1) psi(b)", pb * ph, SkewElement(x + one) * pb);
  const char* names = "uvw";
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto gi = static_cast<Generator>(i), gj = static_cast<Generator>(j);
      std::string id = std::string("psi(beta(") + names[i] + ") beta(" + names[j] + ")) = phi(" + names[i] +
                       ") phi(" + names[j] + ")";
      s.equal(std::move(id), psi_map(gwa_mul(beta(gi, params), beta(gj, params), gp)),
              embedding.phi(gi) * embedding.phi(gj));
    }
  }
  return s.out;
}

std::vector<CheckResult> from_identities(std::string suite, const std::vector<IdentityResult>& results) {
  std::vector<CheckResult> out;
  for (const IdentityResult& r : results) {
    out.push_back({suite, r.identity, r.pass, r.residual ? json(*r.residual) : json(nullptr)});
  }
  return out;
}

std::vector<CheckResult> nilhecke(const Polynomial&, const VerifyOptions&) {
  return from_identities("nilhecke", verify_nil_hecke());
}

std::vector<CheckResult> flag(const Polynomial& q, const VerifyOptions& options) {
  auto out = from_identities("flag", verify_flag_order(q));
  Suite s{{}, "flag"};
  for (FlagName name : {FlagName::kQS0, FlagName::kS1, FlagName::kX}) {
    const PreservationResult r = preserves_polys(build(name, q).value, options.max_deg);
    s.truth(std::string(flag_name_text(name)) + " preserves Q[x] up to degree " + std::to_string(options.max_deg),
            r.preserved, witness(r));
  }
  out.insert(out.end(), s.out.begin(), s.out.end());
  return out;
}

std::vector<CheckResult> invariance(const Polynomial& q, const VerifyOptions& options) {
  Suite s{{}, "invariance"};
  const Embedding embedding(params_from_q(q));
  const char* names = "uvw";
  for (int i = 0; i < 3; ++i) {
    const SkewElement& image = embedding.phi(static_cast<Generator>(i));
    const std::string g(1, names[i]);
    s.truth("phi(" + g + ") is tau-invariant", is_tau_invariant(image), json(tau_conjugate(image) - image));
    const PreservationResult r = preserves_even_polys(image, options.max_deg);
    s.truth("phi(" + g + ") preserves Q[x^2] up to x^" + std::to_string(2 * options.max_deg), r.preserved,
            witness(r));
  }
  return s.out;
}

std::vector<CheckResult> structure(const Polynomial& q, const VerifyOptions&) {
  Suite s{{}, "structure"};
  const DqParams params = params_from_q(q);
  const Embedding embedding(params);
  const RationalFunction x = x_fn(), one(1), half(Rational(1, 2));
  const RationalFunction qx(q), qm(q.negate_var());
  const RationalFunction c(q.eval(Rational(-1, 2)));
  const RationalFunction both = (half + x) * (half - x);
  const GroupElement down = GroupElement::delta(-1), up = GroupElement::delta(1);
  const FreeExpression u = FreeExpression::u(), v = FreeExpression::v(), w = FreeExpression::w();

  s.equal("phi(u) = x^2", embedding.phi(u), SkewElement(x * x));
  s.equal("phi(-v - w) = (q(x)/(1/2+x) d^-1 + q(-x)/(1/2-x) d - q(-1/2)/((1/2+x)(1/2-x))) / 2",
          embedding.phi(-v - w),
          SkewElement(half * qx / (half + x), down) + SkewElement(half * qm / (half - x), up) -
              SkewElement(half * c / both));
  s.equal("phi(-v/2 - w) = (q(x)/x d^-1 + q(-x)/(-x) d) / 2", embedding.phi(FreeExpression(Rational(-1, 2)) * v - w),
          SkewElement(half * qx / x, down) + SkewElement(half * qm / -x, up));
  s.equal("phi(v) = (q(x)/(x(1/2+x)) d^-1 + q(-x)/(-x(1/2-x)) d) / 2 + q(-1/2)/((1/2+x)(1/2-x))", embedding.phi(v),
          SkewElement(half * qx / (x * (half + x)), down) + SkewElement(half * qm / (-x * (half - x)), up) +
              SkewElement(c / both));
  s.equal("phi(w) = (q(x)(-1-x)/(x(1/2+x)) d^-1 + q(-x)(x-1)/(-x(1/2-x)) d) / 2 - q(-1/2)/(2(1/2+x)(1/2-x))",
          embedding.phi(w),
          SkewElement(half * qx * (-one - x) / (x * (half + x)), down) +
              SkewElement(half * qm * (x - one) / (-x * (half - x)), up) - SkewElement(half * c / both));
  s.equal("phi(u v) = phi(v (u + 1) + 2 w)", embedding.phi(u * v),
          embedding.phi(v * (u + FreeExpression(1)) + FreeExpression(2) * w));
  s.equal("phi(u w) = phi(w (u + 1) + 2 v u + rho)", embedding.phi(u * w),
          embedding.phi(w * (u + FreeExpression(1)) + FreeExpression(2) * v * u + FreeExpression(params.rho)));
  return s.out;
}

std::vector<CheckResult> pbw(const Polynomial& q, const VerifyOptions& options) {
  Suite s{{}, "pbw"};
  const DqParams params = params_from_q(q);
  const Embedding embedding(params);
  std::mt19937 rng(options.seed);
  for (unsigned i = 0; i < options.random_words; ++i) {
    const std::string word = random_word(rng, 6);
    const FreeExpression X = FreeExpression::word(word);
    const PbwForm nf = pbw_normal_form(X, params);
    bool shaped = true;
    for (const auto& [key, coeff] : nf.terms()) shaped = shaped && std::get<2>(key) <= 1;
    s.truth("normal form of " + word + " has w-exponent <= 1", shaped, json(nf));
    s.equal("phi(" + word + ") = phi(nf(" + word + "))", embedding.phi(X), embedding.phi(nf.to_expression()));
  }
  return s.out;
}

std::vector<CheckResult> star(const Polynomial& q, const VerifyOptions& options) {
  Suite s{{}, "star"};
  const DqParams params = params_from_q(q);
  const Embedding embedding(params);
  const GwaParams& gp = embedding.gwa_params();
  const GwaElement bu = beta(Generator::kU, params), bv = beta(Generator::kV, params),
                   bw = beta(Generator::kW, params);
  s.equal("beta(u)* = beta(u)", gwa_star(bu), bu);
  s.equal("beta(v)* = beta(v)", gwa_star(bv), bv);
  s.equal("beta(w)* = -beta(w) - beta(v)", gwa_star(bw), -bw - bv);
  std::mt19937 rng(options.seed);
  bool involutive = true, anti = true, transported = true, free_involutive = true;
  json inv_res, anti_res, tr_res, free_res;
  for (unsigned i = 0; i < options.random_elements; ++i) {
    const GwaElement X = random_gwa(rng), Y = random_gwa(rng);
    if (involutive && !(gwa_star(gwa_star(X)) == X)) {
      involutive = false;
      inv_res = json(X);
    }
    if (anti && !(gwa_star(gwa_mul(X, Y, gp)) == gwa_mul(gwa_star(Y), gwa_star(X), gp))) {
      anti = false;
      anti_res = json{{"X", X}, {"Y", Y}};
    }
    const FreeExpression E = random_expression(rng);
    if (transported && !(embedding.phi(star_free(E)) == embedding.psi()(gwa_star(embedding.beta_lift(E))))) {
      transported = false;
      tr_res = json(E);
    }
    if (free_involutive && !(star_free(star_free(E)) == E)) {
      free_involutive = false;
      free_res = json(E);
    }
  }
  const std::string n = std::to_string(options.random_elements);
  s.truth("star(star(X)) = X on " + n + " random GWA elements", involutive, inv_res);
  s.truth("star(X Y) = star(Y) star(X) on " + n + " random GWA pairs", anti, anti_res);
  s.truth("phi(X*) = psi(beta(X)*) on " + n + " random expressions", transported, tr_res);
  s.truth("(X*)* = X on " + n + " random expressions", free_involutive, free_res);
  return s.out;
}

using SuiteFn = std::vector<CheckResult> (*)(const Polynomial&, const VerifyOptions&);

const std::vector<std::pair<std::string_view, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string_view, SuiteFn>> suites{
      {"relations", relations}, {"gwa", gwa},         {"nilhecke", nilhecke}, {"flag", flag},
      {"invariance", invariance}, {"structure", structure}, {"pbw", pbw},   {"star", star},
  };
  return suites;
}

}  // namespace

const std::vector<std::string_view>& verify_suite_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const Polynomial& q, const VerifyOptions& options) {
  for (const auto& [name, fn] : registry()) {
    if (name == suite) return fn(q, options);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown suite \"" + std::string(suite) + "\"");
}

std::vector<CheckResult> verify_all(const Polynomial& q, const VerifyOptions& options,
                                    std::optional<std::string_view> only) {
  if (q.degree() < 4) {
    throw Error(ErrorCode::kDegreeTooSmall, "q must have degree >= 4, got " + std::to_string(q.degree()));
  }
  if (only) return run_suite(*only, q, options);
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : registry()) {
    auto part = fn(q, options);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

json verify_report(const std::vector<CheckResult>& results) {
  json out = json::array();
  for (const CheckResult& r : results) {
    out.push_back(json{{"suite", r.suite}, {"identity", r.identity}, {"pass", r.pass}, {"residual", r.residual}});
  }
  return out;
}

}  // namespace kleind
