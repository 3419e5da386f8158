#pragma once

#include <map>
#include <string>

#include "kleind/ratfun.hpp"
#include "kleind/skew.hpp"

namespace kleind {

/// Element of the generalized Weyl algebra Q(h)(sigma, s), sigma(h) = h - 1,
/// in the normal form sum_n f_n(h) x_n with x_n = a^n (n > 0), 1 (n = 0),
/// b^{|n|} (n < 0). Coefficients sit to the left of x_n.
class GwaElement {
 public:
  using Terms = std::map<long, RationalFunction>;

  GwaElement() = default;
  GwaElement(RationalFunction f, long n = 0);  // NOLINT(google-explicit-constructor)
  GwaElement(long c) : GwaElement(RationalFunction(c)) {}  // NOLINT

  static GwaElement h() { return GwaElement(RationalFunction::variable()); }
  static GwaElement a(long power = 1) { return GwaElement(RationalFunction(1), power); }
  static GwaElement b(long power = 1) { return GwaElement(RationalFunction(1), -power); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  RationalFunction coeff(long n) const;
  void add_term(long n, const RationalFunction& f);

  GwaElement& operator+=(const GwaElement& o);
  GwaElement& operator-=(const GwaElement& o);
  friend GwaElement operator+(GwaElement x, const GwaElement& y) { return x += y; }
  friend GwaElement operator-(GwaElement x, const GwaElement& y) { return x -= y; }
  friend GwaElement operator-(const GwaElement& x);
  friend bool operator==(const GwaElement&, const GwaElement&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

struct GwaParams {
  RationalFunction s;

  explicit GwaParams(RationalFunction s_);
};

/// x_n f(h) = f(h - n) x_n
RationalFunction gwa_commute_past(long n, const RationalFunction& f);

GwaElement gwa_mul(const GwaElement& X, const GwaElement& Y, const GwaParams& params);
/// The anti-automorphism h* = h, a* = b, b* = a.
GwaElement gwa_star(const GwaElement& X);

/// The isomorphism onto Q(x) # Z with h -> x, a -> f(x) delta,
/// b -> f(-x) delta^{-1}, f(x) = q(-x) / (2 (-x)(1/2 - x)).
class Psi {
 public:
  explicit Psi(const Polynomial& q);

  const RationalFunction& f() const noexcept { return f_; }
  SkewElement operator()(const GwaElement& X) const;
  /// Image of x_n alone.
  SkewElement image_of_basis(long n) const;

 private:
  RationalFunction f_;
};

SkewElement psi(const GwaElement& X, const Polynomial& q);

}  // namespace kleind
