#include "kleind/ratfun.hpp"

#include <ostream>

#include "kleind/error.hpp"

namespace kleind {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::kDivisionByZero, "rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  Rational lead = den_.leading();
  if (lead != Rational(1)) {
    Rational inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::eval(const Rational& a) const {
  Rational d = den_.eval(a);
  if (d.is_zero()) {
    throw Error(ErrorCode::kPoleEvaluation, "pole of " + to_string() + " at x = " + a.to_string());
  }
  return num_.eval(a) / d;
}

RationalFunction RationalFunction::shift(const Rational& c) const {
  return RationalFunction(num_.shift(c), den_.shift(c), Canonical{});
}

RationalFunction RationalFunction::negate_var() const {
  Polynomial n = num_.negate_var(), d = den_.negate_var();
  if (d.leading().sign() < 0) {
    n = -n;
    d = -d;
  }
  return RationalFunction(std::move(n), std::move(d), Canonical{});
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of the zero rational function");
  Rational lead = num_.leading().inverse();
  return RationalFunction(den_ * lead, num_ * lead, Canonical{});
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RationalFunction::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.pretty(var);
  return "(" + num_.pretty(var) + ")/(" + den_.pretty(var) + ")";
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  Polynomial g = gcd(den_, o.den_);
  if (g.is_constant()) {
    // Coprime denominators: the sum is already reduced.
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = Polynomial(Rational(1));
    return *this;
  }
  Polynomial bg = exact_div(den_, g), dg = exact_div(o.den_, g);
  Polynomial t = num_ * dg + o.num_ * bg;
  if (t.is_zero()) return *this = RationalFunction();
  Polynomial g2 = gcd(t, g);
  if (!g2.is_constant()) {
    t = exact_div(t, g2);
    g = exact_div(g, g2);
  }
  num_ = std::move(t);
  den_ = bg * dg * g;
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Polynomial a = num_, b = den_, c = o.num_, d = o.den_;
  Polynomial g1 = gcd(a, d), g2 = gcd(c, b);
  if (!g1.is_constant()) {
    a = exact_div(a, g1);
    d = exact_div(d, g1);
  }
  if (!g2.is_constant()) {
    c = exact_div(c, g2);
    b = exact_div(b, g2);
  }
  // b and d are monic, so their product is monic.
  num_ = a * c;
  den_ = b * d;
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction operator-(const RationalFunction& a) {
  return RationalFunction(-a.num_, a.den_, RationalFunction::Canonical{});
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

}  // namespace kleind
