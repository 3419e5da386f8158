#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "kleind/ratfun.hpp"

namespace kleind {

/// delta^k tau^eps in the infinite dihedral group Z x| S2, written in the
/// normal order (delta before tau).
struct GroupElement {
  long k = 0;
  bool eps = false;

  static GroupElement identity() { return {}; }
  static GroupElement delta(long power = 1) { return {power, false}; }
  static GroupElement tau() { return {0, true}; }

  /// (k, e) * (k', e') = (k + (-1)^e k', e xor e')
  GroupElement operator*(const GroupElement& o) const { return {k + (eps ? -o.k : o.k), eps != o.eps}; }
  GroupElement inverse() const { return eps ? *this : GroupElement{-k, false}; }

  /// The automorphism of Q(x): f(x) -> f((-1)^eps (x - k)).
  RationalFunction act(const RationalFunction& f) const;
  Polynomial act(const Polynomial& p) const;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Element of the skew group algebra Q(x) # (Z x| S2): a finite sum of
/// f(x) * delta^k * tau^eps with no stored zero coefficients.
class SkewElement {
 public:
  using Terms = std::map<GroupElement, RationalFunction>;

  SkewElement() = default;
  SkewElement(RationalFunction f);  // NOLINT(google-explicit-constructor)
  SkewElement(long c) : SkewElement(RationalFunction(c)) {}  // NOLINT
  SkewElement(Rational c) : SkewElement(RationalFunction(std::move(c))) {}  // NOLINT
  SkewElement(RationalFunction f, GroupElement g);

  static SkewElement x() { return SkewElement(RationalFunction::variable()); }
  static SkewElement delta(long power = 1) { return SkewElement(RationalFunction(1), GroupElement::delta(power)); }
  static SkewElement tau() { return SkewElement(RationalFunction(1), GroupElement::tau()); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  RationalFunction coeff(const GroupElement& g) const;
  /// True when no term carries tau, i.e. the element lies in L # Z.
  bool in_l_sharp_m() const;

  void add_term(const GroupElement& g, const RationalFunction& f);

  SkewElement& operator+=(const SkewElement& o);
  SkewElement& operator-=(const SkewElement& o);
  friend SkewElement operator+(SkewElement a, const SkewElement& b) { return a += b; }
  friend SkewElement operator-(SkewElement a, const SkewElement& b) { return a -= b; }
  friend SkewElement operator-(const SkewElement& a);
  friend SkewElement operator*(const SkewElement& a, const SkewElement& b);

  friend bool operator==(const SkewElement&, const SkewElement&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

inline SkewElement skew_mul(const SkewElement& a, const SkewElement& b) { return a * b; }
SkewElement commutator(const SkewElement& a, const SkewElement& b);

/// The natural action on Q(x): sum of f_{k,e}(x) p((-1)^e (x - k)).
RationalFunction skew_act(const SkewElement& X, const RationalFunction& p);

/// tau X tau^{-1} == X for X in L # Z; throws NotInLSharpM otherwise.
bool is_tau_invariant(const SkewElement& X);

/// tau X tau^{-1}
SkewElement tau_conjugate(const SkewElement& X);

/// The augmentation onto L # S2: f delta^k tau^e -> f tau^e.
SkewElement augment(const SkewElement& X);

struct PreservationResult {
  bool preserved = true;
  /// Exponent of the first failing monomial and the image it produced.
  std::optional<unsigned> witness_exponent;
  std::optional<RationalFunction> witness_image;
};

/// Checks X.(x^{2m}) is an even polynomial for every m <= max_deg.
PreservationResult preserves_even_polys(const SkewElement& X, unsigned max_deg);
/// Checks X.(x^m) is a polynomial for every m <= max_deg.
PreservationResult preserves_polys(const SkewElement& X, unsigned max_deg);

}  // namespace kleind
