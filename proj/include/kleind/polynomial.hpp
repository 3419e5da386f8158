#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kleind/rational.hpp"

namespace kleind {

/// Dense univariate polynomial over Q, ascending coefficients.
///
/// The zero polynomial has an empty coefficient list and degree
/// `kZeroDegree`; every other value has a nonzero leading coefficient.
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<Rational> ascending)
      : Polynomial(std::vector<Rational>(ascending)) {}

  static Polynomial monomial(unsigned degree, const Rational& coeff = Rational(1));
  static Polynomial variable() { return monomial(1); }

  /// Parses the ascending comma-separated form, e.g. "0,0,0,0,1" for t^4.
  static Polynomial parse(std::string_view text);
  /// Inverse of parse. The zero polynomial prints as "0".
  std::string to_string() const;
  /// Human-readable form in the given variable, e.g. "t^4 - 5*t^2 + 4".
  std::string pretty(std::string_view var = "t") const;

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_even() const;  // only even-degree terms
  bool is_odd() const;   // only odd-degree terms
  std::span<const Rational> coefficients() const noexcept { return c_; }
  Rational coeff(int degree) const;
  Rational leading() const;

  Rational operator()(const Rational& at) const { return eval(at); }
  Rational eval(const Rational& at) const;
  Polynomial derivative() const;

  /// p(t + c)
  Polynomial shift(const Rational& c) const;
  /// p(-t)
  Polynomial negate_var() const;
  /// p(t^2)
  Polynomial compose_square() const;
  /// (p0, p1) with p(t) = p0(t^2) + t * p1(t^2).
  std::pair<Polynomial, Polynomial> even_odd_split() const;

  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder with deg(remainder) < deg(divisor).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& n, const Polynomial& d);
/// Quotient of an exact division; throws NonExactDivision on a nonzero remainder.
Polynomial exact_div(const Polynomial& n, const Polynomial& d);
/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);
/// Every rational root of a nonzero polynomial, ascending, without multiplicity.
std::vector<Rational> rational_roots(const Polynomial& p);

Polynomial pow(const Polynomial& p, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace kleind
