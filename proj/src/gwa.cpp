#include "kleind/gwa.hpp"

#include <cstdlib>
#include <sstream>

#include "kleind/error.hpp"

namespace kleind {

GwaElement::GwaElement(RationalFunction f, long n) {
  if (!f.is_zero()) terms_.emplace(n, std::move(f));
}

RationalFunction GwaElement::coeff(long n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? RationalFunction() : it->second;
}

void GwaElement::add_term(long n, const RationalFunction& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(n, f);
  if (inserted) return;
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

GwaElement& GwaElement::operator+=(const GwaElement& o) {
  for (const auto& [n, f] : o.terms_) add_term(n, f);
  return *this;
}

GwaElement& GwaElement::operator-=(const GwaElement& o) {
  for (const auto& [n, f] : o.terms_) add_term(n, -f);
  return *this;
}

GwaElement operator-(const GwaElement& x) {
  GwaElement r;
  for (const auto& [n, f] : x.terms_) r.terms_.emplace(n, -f);
  return r;
}

std::string GwaElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, f] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << f.to_string("h") << ')';
    if (n > 0) os << "*a^" << n;
    if (n < 0) os << "*b^" << -n;
  }
  return os.str();
}

GwaParams::GwaParams(RationalFunction s_) : s(std::move(s_)) {
  if (s.is_zero()) throw Error(ErrorCode::kInvalidArgument, "GWA parameter s must be nonzero");
}

RationalFunction gwa_commute_past(long n, const RationalFunction& f) {
  return n == 0 ? f : f.shift(Rational(-n));
}

namespace {

// x_m x_n = c(h) x_{m+n}; returns c.
RationalFunction contract(long m, long n, const RationalFunction& s) {
  if (m == 0 || n == 0 || (m > 0) == (n > 0)) return RationalFunction(1);
  // a^m b^n: peel innermost ab = s(h-1) pairs, each moved left past the
  // remaining a's. b^m a^n: innermost ba = s(h), likewise.
  RationalFunction c(1);
  const long pairs = std::min(std::labs(m), std::labs(n));
  if (m > 0) {
    for (long j = 0; j < pairs; ++j) c *= s.shift(Rational(-1 - (m - 1 - j)));
  } else {
    const long bm = -m;
    for (long j = 0; j < pairs; ++j) c *= s.shift(Rational(bm - 1 - j));
  }
  return c;
}

}  // namespace

GwaElement gwa_mul(const GwaElement& X, const GwaElement& Y, const GwaParams& params) {
  GwaElement r;
  for (const auto& [m, f] : X.terms()) {
    for (const auto& [n, g] : Y.terms()) {
      r.add_term(m + n, f * gwa_commute_past(m, g) * contract(m, n, params.s));
    }
  }
  return r;
}

GwaElement gwa_star(const GwaElement& X) {
  // (f(h) x_n)* = x_{-n} f(h) = f(h + n) x_{-n}
  GwaElement r;
  for (const auto& [n, f] : X.terms()) r.add_term(-n, gwa_commute_past(-n, f));
  return r;
}

Psi::Psi(const Polynomial& q) {
  if (q.degree() < 4) {
    throw Error(ErrorCode::kDegreeTooSmall, "q must have degree >= 4, got " + std::to_string(q.degree()));
  }
  // f(x) = (1/2) q(-x) / ((-x)(1/2 - x)) = q(-x) / (2x^2 - x)
  f_ = RationalFunction(q.negate_var(), Polynomial{Rational(0), Rational(-1), Rational(2)});
}

SkewElement Psi::image_of_basis(long n) const {
  RationalFunction c(1);
  if (n > 0) {
    // (f delta)^n = f(x) f(x-1) ... f(x-n+1) delta^n
    for (long j = 0; j < n; ++j) c *= f_.shift(Rational(-j));
  } else if (n < 0) {
    // (f(-x) delta^{-1})^{|n|} = f(-x) f(-x-1) ... f(-x-|n|+1) delta^{-|n|}
    RationalFunction fm = f_.negate_var();
    for (long j = 0; j < -n; ++j) c *= fm.shift(Rational(j));
  }
  return SkewElement(std::move(c), GroupElement::delta(n));
}

SkewElement Psi::operator()(const GwaElement& X) const {
  SkewElement r;
  for (const auto& [n, g] : X.terms()) {
    SkewElement basis = image_of_basis(n);
    for (const auto& [grp, c] : basis.terms()) r.add_term(grp, g * c);
  }
  return r;
}

SkewElement psi(const GwaElement& X, const Polynomial& q) { return Psi(q)(X); }

}  // namespace kleind
