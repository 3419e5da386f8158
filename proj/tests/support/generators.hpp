#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include "kleind/dq.hpp"
#include "kleind/gwa.hpp"
#include "kleind/skew.hpp"

namespace testing_support {

using namespace kleind;

inline constexpr std::array<const char*, 5> kBattery{
    "0,0,0,0,1",      // t^4
    "1,1,0,0,1",      // t^4 + t + 1
    "7,0,0,-2,0,1",   // t^5 - 2t^3 + 7
    "4,0,-5,0,1",     // t^4 - 5t^2 + 4
    "0,1,0,0,0,0,1",  // t^6 + t
};

/// Seeded sampler for the property tests.
class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long bound = 9, long max_den = 6) { return Rational(integer(-bound, bound), integer(1, max_den)); }
  Rational nonzero_rational(long bound = 9, long max_den = 6) {
    for (;;) {
      Rational r = rational(bound, max_den);
      if (!r.is_zero()) return r;
    }
  }

  Polynomial poly(int max_deg, long bound = 9) {
    std::vector<Rational> c;
    const long deg = integer(-1, max_deg);
    for (long i = 0; i <= deg; ++i) c.push_back(rational(bound));
    return Polynomial(std::move(c));
  }
  Polynomial nonzero_poly(int max_deg, long bound = 9) {
    for (;;) {
      Polynomial p = poly(max_deg, bound);
      if (!p.is_zero()) return p;
    }
  }

  RationalFunction ratfun(int max_deg) {
    Polynomial den = nonzero_poly(max_deg);
    return RationalFunction(poly(max_deg), den);
  }

  GroupElement group(long kmax) { return GroupElement{integer(-kmax, kmax), coin()}; }

  SkewElement skew(int max_terms, long kmax, int deg, bool allow_tau = true) {
    SkewElement out;
    for (long i = integer(1, max_terms); i > 0; --i) {
      GroupElement g{integer(-kmax, kmax), allow_tau && coin()};
      out.add_term(g, ratfun(deg));
    }
    return out;
  }

  GwaElement gwa(int max_terms, long nmax, int deg) {
    GwaElement out;
    for (long i = integer(1, max_terms); i > 0; --i) out.add_term(integer(-nmax, nmax), ratfun(deg));
    return out;
  }

  std::string word(unsigned max_len, unsigned min_len = 1) {
    std::string w;
    for (long i = integer(min_len, max_len); i > 0; --i) w.push_back("uvw"[integer(0, 2)]);
    return w;
  }

  FreeExpression expression(int max_terms, unsigned max_len) {
    FreeExpression e;
    for (long i = integer(1, max_terms); i > 0; --i) e.add_term(word(max_len), rational());
    return e;
  }

  /// A point unlikely to hit a pole of small-denominator rational functions.
  Rational sample_point() { return Rational(integer(-4000, 4000), 997); }

 private:
  std::mt19937 rng_;
};

}  // namespace testing_support
