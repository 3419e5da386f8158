#pragma once

// Independent reference computations. Everything here works by evaluating
// operators at rational points with plain mpq arithmetic; none of it goes
// through the library's polynomial or skew-ring algorithms.

#include <functional>
#include <optional>

#include "kleind/dq.hpp"
#include "kleind/gwa.hpp"
#include "kleind/skew.hpp"

namespace testing_support {

using namespace kleind;

/// A function Q -> Q that may be undefined (pole) at a point.
using PointFn = std::function<std::optional<mpq_class>(const mpq_class&)>;

inline mpq_class horner(const Polynomial& p, const mpq_class& a) {
  mpq_class acc = 0;
  auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + it->value();
  return acc;
}

inline std::optional<mpq_class> eval_ratio(const RationalFunction& f, const mpq_class& a) {
  mpq_class den = horner(f.den(), a);
  if (den == 0) return std::nullopt;
  mpq_class out = horner(f.num(), a) / den;
  out.canonicalize();
  return out;
}

inline PointFn poly_fn(const Polynomial& p) {
  return [p](const mpq_class& a) -> std::optional<mpq_class> { return horner(p, a); };
}

inline PointFn ratio_fn(const RationalFunction& f) {
  return [f](const mpq_class& a) { return eval_ratio(f, a); };
}

/// (X.p)(a) = sum over terms f * delta^k tau^eps of f(a) p((-1)^eps (a - k)).
inline PointFn skew_apply(const SkewElement& X, PointFn p) {
  return [X, p](const mpq_class& a) -> std::optional<mpq_class> {
    mpq_class total = 0;
    for (const auto& [g, f] : X.terms()) {
      auto fa = eval_ratio(f, a);
      mpq_class moved = a - g.k;
      if (g.eps) moved = -moved;
      auto pa = p(moved);
      if (!fa || !pa) return std::nullopt;
      total += *fa * *pa;
    }
    return total;
  };
}

/// The GWA realized as operators: h acts as multiplication by x, a as
/// f(x) delta, b as f(-x) delta^{-1} with f(x) = q(-x) / (2x^2 - x), and
/// delta shifts p(x) to p(x - 1).
inline std::optional<mpq_class> psi_factor(const Polynomial& q, const mpq_class& x) {
  mpq_class den = 2 * x * x - x;
  if (den == 0) return std::nullopt;
  mpq_class out = horner(q, -x) / den;
  out.canonicalize();
  return out;
}

inline PointFn gwa_apply(const GwaElement& X, const Polynomial& q, PointFn p) {
  return [X, q, p](const mpq_class& a) -> std::optional<mpq_class> {
    mpq_class total = 0;
    for (const auto& [n, coeff] : X.terms()) {
      auto ca = eval_ratio(coeff, a);
      if (!ca) return std::nullopt;
      mpq_class prod = *ca;
      for (long j = 0; j < (n > 0 ? n : -n); ++j) {
        auto fj = n > 0 ? psi_factor(q, a - j) : psi_factor(q, -a - j);
        if (!fj) return std::nullopt;
        prod *= *fj;
      }
      auto pa = p(a - n);
      if (!pa) return std::nullopt;
      total += prod * *pa;
    }
    return total;
  };
}

/// Generators of D(q) as operators, from the closed-form displays:
///   u: p -> x^2 p
///   v: p -> (q(x)/(x(1/2+x)) p(x+1) + q(-x)/(-x(1/2-x)) p(x-1)) / 2 + c p / ((1/2+x)(1/2-x))
///   w: p -> (q(x)(-1-x)/(x(1/2+x)) p(x+1) + q(-x)(x-1)/(-x(1/2-x)) p(x-1)) / 2 - c p / (2(1/2+x)(1/2-x))
/// with c = q(-1/2).
inline PointFn generator_apply(char g, const Polynomial& q, PointFn p) {
  return [g, q, p](const mpq_class& a) -> std::optional<mpq_class> {
    auto p0 = p(a);
    if (!p0) return std::nullopt;
    if (g == 'u') return a * a * *p0;
    const mpq_class half(1, 2);
    const mpq_class plus = half + a, minus = half - a;
    if (a == 0 || plus == 0 || minus == 0) return std::nullopt;
    auto up = p(a + 1), down = p(a - 1);
    if (!up || !down) return std::nullopt;
    const mpq_class c = horner(q, -half);
    const mpq_class qa = horner(q, a), qm = horner(q, -a);
    mpq_class out;
    if (g == 'v') {
      out = half * (qa / (a * plus) * *up + qm / (-a * minus) * *down) + c / (plus * minus) * *p0;
    } else {
      out = half * (qa * (-1 - a) / (a * plus) * *up + qm * (a - 1) / (-a * minus) * *down) -
            c / (2 * plus * minus) * *p0;
    }
    out.canonicalize();
    return out;
  };
}

/// Applies a word right to left (the rightmost letter acts first).
inline PointFn word_apply(const std::string& word, const Polynomial& q, PointFn p) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = generator_apply(*it, q, p);
  return p;
}

inline PointFn expression_apply(const FreeExpression& X, const Polynomial& q, PointFn p) {
  std::vector<std::pair<mpq_class, PointFn>> parts;
  for (const auto& [word, c] : X.terms()) parts.emplace_back(c.value(), word_apply(word, q, p));
  return [parts](const mpq_class& a) -> std::optional<mpq_class> {
    mpq_class total = 0;
    for (const auto& [c, f] : parts) {
      auto v = f(a);
      if (!v) return std::nullopt;
      total += c * *v;
    }
    return total;
  };
}

/// True when f and g agree at every point of the list where both are defined,
/// and at least `needed` points were usable.
inline bool agree_at(const PointFn& f, const PointFn& g, const std::vector<mpq_class>& points, int needed = 4) {
  int used = 0;
  for (const auto& a : points) {
    auto x = f(a), y = g(a);
    if (!x || !y) continue;
    if (*x != *y) return false;
    ++used;
  }
  return used >= needed;
}

inline std::vector<mpq_class> default_points() {
  return {mpq_class(3, 7), mpq_class(-5, 11), mpq_class(13, 17), mpq_class(-29, 23), mpq_class(41, 19),
          mpq_class(7, 3), mpq_class(-101, 37), mpq_class(55, 89)};
}

}  // namespace testing_support
