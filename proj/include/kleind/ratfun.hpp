#pragma once

#include <iosfwd>
#include <string>

#include "kleind/polynomial.hpp"

namespace kleind {

/// Element of Q(x) in canonical form: gcd(num, den) = 1 and den monic.
///
/// Canonical representatives are unique, so equality is field-wise.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(Polynomial num)  // NOLINT(google-explicit-constructor)
      : num_(std::move(num)), den_(Rational(1)) {}
  RationalFunction(Rational c) : RationalFunction(Polynomial(std::move(c))) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Polynomial(c)) {}                 // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  bool is_one() const { return is_polynomial() && num_ == Polynomial(Rational(1)); }

  /// f(a). A zero of the (reduced) denominator raises PoleEvaluation.
  Rational eval(const Rational& a) const;
  /// f(x + c)
  RationalFunction shift(const Rational& c) const;
  /// f(-x)
  RationalFunction negate_var() const;
  RationalFunction inverse() const;
  RationalFunction derivative() const;

  std::string to_string(std::string_view var = "x") const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a);

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  struct Canonical {};
  RationalFunction(Polynomial num, Polynomial den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace kleind
