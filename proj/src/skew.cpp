#include "kleind/skew.hpp"

#include <sstream>

#include "kleind/error.hpp"

namespace kleind {

RationalFunction GroupElement::act(const RationalFunction& f) const {
  RationalFunction g = eps ? f.negate_var() : f;
  return k == 0 ? g : g.shift(Rational(-k));
}

Polynomial GroupElement::act(const Polynomial& p) const {
  Polynomial g = eps ? p.negate_var() : p;
  return k == 0 ? g : g.shift(Rational(-k));
}

SkewElement::SkewElement(RationalFunction f) {
  if (!f.is_zero()) terms_.emplace(GroupElement::identity(), std::move(f));
}

SkewElement::SkewElement(RationalFunction f, GroupElement g) {
  if (!f.is_zero()) terms_.emplace(g, std::move(f));
}

RationalFunction SkewElement::coeff(const GroupElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? RationalFunction() : it->second;
}

bool SkewElement::in_l_sharp_m() const {
  for (const auto& [g, f] : terms_) {
    if (g.eps) return false;
  }
  return true;
}

void SkewElement::add_term(const GroupElement& g, const RationalFunction& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, f);
  if (inserted) return;
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

SkewElement& SkewElement::operator+=(const SkewElement& o) {
  for (const auto& [g, f] : o.terms_) add_term(g, f);
  return *this;
}

SkewElement& SkewElement::operator-=(const SkewElement& o) {
  for (const auto& [g, f] : o.terms_) add_term(g, -f);
  return *this;
}

SkewElement operator-(const SkewElement& a) {
  SkewElement r;
  for (const auto& [g, f] : a.terms_) r.terms_.emplace(g, -f);
  return r;
}

SkewElement operator*(const SkewElement& a, const SkewElement& b) {
  // (f mu)(g nu) = f mu(g) (mu nu)
  SkewElement r;
  for (const auto& [ga, fa] : a.terms_) {
    for (const auto& [gb, fb] : b.terms_) r.add_term(ga * gb, fa * ga.act(fb));
  }
  return r;
}

std::string SkewElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, f] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << f << ')';
    if (g.k != 0) os << "*delta^" << g.k;
    if (g.eps) os << "*tau";
  }
  return os.str();
}

SkewElement commutator(const SkewElement& a, const SkewElement& b) { return a * b - b * a; }

RationalFunction skew_act(const SkewElement& X, const RationalFunction& p) {
  RationalFunction out;
  for (const auto& [g, f] : X.terms()) out += f * g.act(p);
  return out;
}

SkewElement tau_conjugate(const SkewElement& X) {
  // tau f delta^k tau^e tau = f(-x) delta^{-k} tau^e
  SkewElement r;
  for (const auto& [g, f] : X.terms()) r.add_term(GroupElement{-g.k, g.eps}, f.negate_var());
  return r;
}

bool is_tau_invariant(const SkewElement& X) {
  if (!X.in_l_sharp_m()) {
    throw Error(ErrorCode::kNotInLSharpM, "invariance test needs an element without tau terms");
  }
  for (const auto& [g, f] : X.terms()) {
    if (X.coeff(GroupElement{-g.k, false}) != f.negate_var()) return false;
  }
  return true;
}

SkewElement augment(const SkewElement& X) {
  SkewElement r;
  for (const auto& [g, f] : X.terms()) r.add_term(GroupElement{0, g.eps}, f);
  return r;
}

namespace {

template <class Accept>
PreservationResult check_monomials(const SkewElement& X, unsigned max_deg, unsigned step, Accept accept) {
  for (unsigned m = 0; m <= max_deg; ++m) {
    const unsigned e = step * m;
    RationalFunction image = skew_act(X, RationalFunction(Polynomial::monomial(e)));
    if (!accept(image)) return {false, e, image};
  }
  return {};
}

}  // namespace

PreservationResult preserves_even_polys(const SkewElement& X, unsigned max_deg) {
  return check_monomials(X, max_deg, 2, [](const RationalFunction& r) {
    return r.is_polynomial() && r.num().is_even();
  });
}

PreservationResult preserves_polys(const SkewElement& X, unsigned max_deg) {
  return check_monomials(X, max_deg, 1, [](const RationalFunction& r) { return r.is_polynomial(); });
}

}  // namespace kleind
