#include "kleind/flag_order.hpp"

#include <array>

#include "kleind/error.hpp"

namespace kleind {

namespace {

constexpr std::array<std::pair<FlagName, std::string_view>, 10> kNames{{
    {FlagName::kTau, "tau"},
    {FlagName::kDelta, "delta"},
    {FlagName::kE, "e"},
    {FlagName::kS0, "s0"},
    {FlagName::kS1, "s1"},
    {FlagName::kX, "x"},
    {FlagName::kD, "D"},
    {FlagName::kAImg, "a_img"},
    {FlagName::kBImg, "b_img"},
    {FlagName::kQS0, "q_s0"},
}};

RationalFunction x_fn() { return RationalFunction::variable(); }

// 1 / (c0 + c1 x)
RationalFunction inverse_linear(const Rational& c0, const Rational& c1) {
  return RationalFunction(Polynomial(Rational(1)), Polynomial{c0, c1});
}

void require_degree(const Polynomial& q) {
  if (q.degree() < 4) {
    throw Error(ErrorCode::kDegreeTooSmall, "q must have degree >= 4, got " + std::to_string(q.degree()));
  }
}

IdentityResult check(std::string name, const SkewElement& lhs, const SkewElement& rhs) {
  SkewElement residual = lhs - rhs;
  IdentityResult r{std::move(name), residual.is_zero(), std::nullopt};
  if (!r.pass) r.residual = std::move(residual);
  return r;
}

}  // namespace

std::string_view flag_name_text(FlagName name) {
  for (const auto& [n, text] : kNames) {
    if (n == name) return text;
  }
  return "?";
}

std::optional<FlagName> flag_name_from_text(std::string_view text) {
  for (const auto& [n, t] : kNames) {
    if (t == text) return n;
  }
  return std::nullopt;
}

NamedElement build(FlagName name, const Polynomial& q) {
  const SkewElement one(1), tau = SkewElement::tau();
  const Rational half(1, 2);
  switch (name) {
    case FlagName::kTau:
      return {name, tau};
    case FlagName::kDelta:
      return {name, SkewElement::delta()};
    case FlagName::kE:
      return {name, SkewElement(half) * (one + tau)};
    case FlagName::kS1:
      return {name, SkewElement(inverse_linear(0, 2)) * (one - tau)};
    case FlagName::kS0:
      return {name, SkewElement(inverse_linear(1, 2)) *
                        (one - SkewElement(RationalFunction(1), GroupElement{-1, true}))};
    case FlagName::kX:
      return {name, SkewElement::x()};
    case FlagName::kD: {
      require_degree(q);
      SkewElement inner = SkewElement(RationalFunction(q), GroupElement::delta(-1)) -
                          SkewElement(q.eval(-half)) * tau;
      return {name, SkewElement(inverse_linear(half, 1)) * inner};
    }
    case FlagName::kAImg:
      require_degree(q);
      return {name, phi(FreeExpression::v() * FreeExpression(-half) - FreeExpression::w(), q)};
    case FlagName::kBImg:
      require_degree(q);
      return {name, phi(-FreeExpression::v() - FreeExpression::w(), q)};
    case FlagName::kQS0:
      require_degree(q);
      return {name, SkewElement(RationalFunction(q)) * build(FlagName::kS0, q).value};
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown flag-order element");
}

Polynomial divided_difference(int i, const Polynomial& p) {
  if (i == 1) return exact_div(p - p.negate_var(), Polynomial{Rational(0), Rational(2)});
  if (i == 0) {
    // p(-1-x) = p(-x) shifted by +1... as a function of x: r(x) = p(-(x+1))
    Polynomial reflected = p.negate_var().shift(Rational(1));
    return exact_div(p - reflected, Polynomial{Rational(1), Rational(2)});
  }
  throw Error(ErrorCode::kInvalidArgument, "divided difference index must be 0 or 1");
}

std::vector<IdentityResult> verify_nil_hecke() {
  const Polynomial unused;
  const SkewElement one(1), tau = SkewElement::tau(), x = SkewElement::x(), delta = SkewElement::delta();
  const SkewElement e = build(FlagName::kE, unused).value;
  const SkewElement s0 = build(FlagName::kS0, unused).value;
  const SkewElement s1 = build(FlagName::kS1, unused).value;
  const SkewElement x_inv(x_fn().inverse());

  std::vector<IdentityResult> out;
  out.push_back(check("tau^2 = 1", tau * tau, one));
  out.push_back(check("tau delta tau^-1 = delta^-1", tau * delta * tau, SkewElement::delta(-1)));
  out.push_back(check("delta x = (x - 1) delta", delta * x, SkewElement(x_fn() - RationalFunction(1)) * delta));
  out.push_back(check("s0^2 = 0", s0 * s0, SkewElement()));
  out.push_back(check("s1^2 = 0", s1 * s1, SkewElement()));
  out.push_back(check("s0 s1 s0 s1 = s1 s0 s1 s0", s0 * s1 * s0 * s1, s1 * s0 * s1 * s0));
  out.push_back(check("e + x e x^-1 = 1", e + x * e * x_inv, one));
  out.push_back(check("s1 x + x s1 = 1", s1 * x + x * s1, one));
  out.push_back(check("s1 x - x s1 = tau", s1 * x - x * s1, tau));
  out.push_back(check("s1 x = e", s1 * x, e));
  out.push_back(check("e s1 = s1", e * s1, s1));
  out.push_back(check("e^2 = e", e * e, e));
  return out;
}

std::array<SkewElement, 4> sandwich_summands(const Polynomial& q) {
  require_degree(q);
  const Polynomial unused;
  const SkewElement e = build(FlagName::kE, unused).value;
  const SkewElement x = SkewElement::x();
  const SkewElement x_inv(x_fn().inverse());
  const RationalFunction qx(q), qmx(q.negate_var());
  const RationalFunction half(Rational(1, 2));
  const RationalFunction xr = x_fn();
  auto sym = [&](const RationalFunction& lower, const RationalFunction& upper) {
    // (lower delta^{-1} + upper delta) / 2
    return SkewElement(half * lower, GroupElement::delta(-1)) + SkewElement(half * upper, GroupElement::delta(1));
  };
  const RationalFunction one(1);
  return {
      e * sym(qx, qmx) * e,
      x * e * sym(qx / xr, qmx / -xr) * e,
      e * sym(qx * (xr + one), qmx * (one - xr)) * e * x_inv,
      x * e * sym(qx * (xr + one) / xr, qmx * (one - xr) / -xr) * e * x_inv,
  };
}

std::vector<IdentityResult> verify_flag_order(const Polynomial& q) {
  require_degree(q);
  const Rational half(1, 2);
  const SkewElement tau = SkewElement::tau(), x = SkewElement::x();
  const SkewElement x2 = x * x;
  const SkewElement e = build(FlagName::kE, q).value;
  const SkewElement s1 = build(FlagName::kS1, q).value;
  const SkewElement D = build(FlagName::kD, q).value;
  const SkewElement a = build(FlagName::kAImg, q).value;
  const SkewElement b = build(FlagName::kBImg, q).value;
  const SkewElement q_s0 = build(FlagName::kQS0, q).value;
  const SkewElement q_delta_inv(RationalFunction(q), GroupElement::delta(-1));

  std::vector<IdentityResult> out;
  out.push_back(check("e a e = s1 q(x) delta^-1 e", e * a * e, s1 * q_delta_inv * e));
  auto parts = sandwich_summands(q);
  out.push_back(check("q(x) delta^-1 = sum of the four e + x e x^-1 sandwich summands",
                      parts[0] + parts[1] + parts[2] + parts[3], q_delta_inv));
  out.push_back(check("e b e = e D e", e * b * e, e * D * e));
  out.push_back(check("[D, x^2] = 2 q(x) delta^-1", commutator(D, x2), SkewElement(2) * q_delta_inv));
  const RationalFunction tail(q - Polynomial(q.eval(-half)), Polynomial{Rational(1), Rational(2)});
  out.push_back(check("q(x) s0 = -D tau / 2 - (q(-1/2) - q(x)) / (2x + 1)", q_s0,
                      SkewElement(-half) * D * tau + SkewElement(tail)));
  return out;
}

std::vector<IdentityResult> verify_identities(const Polynomial& q) {
  auto out = verify_nil_hecke();
  auto flag = verify_flag_order(q);
  out.insert(out.end(), std::make_move_iterator(flag.begin()), std::make_move_iterator(flag.end()));
  return out;
}

}  // namespace kleind
