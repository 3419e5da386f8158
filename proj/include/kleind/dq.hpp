#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <tuple>

#include "kleind/gwa.hpp"
#include "kleind/polynomial.hpp"
#include "kleind/skew.hpp"

namespace kleind {

/// Data derived from q for the algebra D(q) with generators u, v, w.
struct DqParams {
  Polynomial q;
  Rational rho;          // 2 q(-1/2)
  Polynomial p;          // (-4 q(t) q(-t-1) + rho^2) / (1 + 2t)^2
  Polynomial p0, p1;     // p(t) = p0(t^2) + t p1(t^2)
  RationalFunction s;    // q(t) q(-t-1) / (t (t+1) (1+2t)^2)
};

/// Throws DegreeTooSmall when deg q < 4.
DqParams params_from_q(const Polynomial& q);

/// Noncommutative polynomial in u, v, w with rational coefficients.
/// Words are strings over the alphabet {'u','v','w'}; "" is the unit.
class FreeExpression {
 public:
  using Word = std::string;
  using Terms = std::map<Word, Rational>;

  FreeExpression() = default;
  FreeExpression(Rational c);  // NOLINT(google-explicit-constructor)
  FreeExpression(long c) : FreeExpression(Rational(c)) {}  // NOLINT
  static FreeExpression word(Word w, Rational c = Rational(1));
  static FreeExpression u() { return word("u"); }
  static FreeExpression v() { return word("v"); }
  static FreeExpression w() { return word("w"); }

  /// Grammar: sums of products, e.g. "3/2*u*v*w - w*u". Factors are
  /// rationals, u, v, w or parenthesized sums; "^n" raises a factor.
  static FreeExpression parse(std::string_view text);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const Word& w, const Rational& c);

  FreeExpression& operator+=(const FreeExpression& o);
  FreeExpression& operator-=(const FreeExpression& o);
  friend FreeExpression operator+(FreeExpression a, const FreeExpression& b) { return a += b; }
  friend FreeExpression operator-(FreeExpression a, const FreeExpression& b) { return a -= b; }
  friend FreeExpression operator-(const FreeExpression& a);
  friend FreeExpression operator*(const FreeExpression& a, const FreeExpression& b);
  friend bool operator==(const FreeExpression&, const FreeExpression&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

FreeExpression pow(const FreeExpression& e, unsigned exponent);

/// Element in the basis u^i v^j w^k (k <= 1).
class PbwForm {
 public:
  using Key = std::tuple<unsigned, unsigned, unsigned>;
  using Terms = std::map<Key, Rational>;

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const Key& key, const Rational& c);
  FreeExpression to_expression() const;
  std::string to_string() const;

  friend bool operator==(const PbwForm&, const PbwForm&) = default;

 private:
  Terms terms_;
};

struct RewriteLimits {
  std::size_t max_steps = 20'000'000;
};

/// Rewrites with vu -> uv - 2w - v, wu -> uw - 2vu - w - rho,
/// wv -> vw + v^2 + p1(u), ww -> v^2 u + vw + rho v + p0(u) until every
/// monomial is u^i v^j w^k with k <= 1. Throws NonTermination past the
/// step limit.
PbwForm pbw_normal_form(const FreeExpression& X, const DqParams& params, RewriteLimits limits = {});

/// Anti-automorphism u* = u, v* = v, w* = -w - v.
FreeExpression star_free(const FreeExpression& X);

enum class Generator { kU, kV, kW };

/// Images of the generators in the generalized Weyl algebra:
/// u -> h^2, v -> a + b + 2 rho/(1 - 4h^2), w -> (a - b) h - rho/(1 - 4h^2).
GwaElement beta(Generator g, const DqParams& params);

/// The embedding of D(q) into Q(x) # Z, computed as psi(beta(.)).
class Embedding {
 public:
  explicit Embedding(DqParams params);

  const DqParams& params() const noexcept { return params_; }
  const GwaParams& gwa_params() const noexcept { return gwa_; }
  const Psi& psi() const noexcept { return psi_; }

  GwaElement beta_lift(const FreeExpression& X) const;
  SkewElement phi(const FreeExpression& X) const;
  const SkewElement& phi(Generator g) const;

 private:
  DqParams params_;
  GwaParams gwa_;
  Psi psi_;
  GwaElement beta_[3];
  SkewElement phi_[3];
};

SkewElement phi(const FreeExpression& X, const Polynomial& q);

/// LHS - RHS of the four defining relations, in order:
/// [u,v] = 2w + v; [u,w] = 2vu + w + rho; [v,w] = -v^2 - p1(u);
/// w^2 = v^2 u + vw + rho v + p0(u).
std::array<FreeExpression, 4> defining_relations(const DqParams& params);

/// p(u) as a free expression.
FreeExpression poly_in_u(const Polynomial& p);

}  // namespace kleind
