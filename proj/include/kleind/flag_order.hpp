#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kleind/dq.hpp"
#include "kleind/skew.hpp"

namespace kleind {

enum class FlagName { kTau, kDelta, kE, kS0, kS1, kX, kD, kAImg, kBImg, kQS0 };

std::string_view flag_name_text(FlagName name);
std::optional<FlagName> flag_name_from_text(std::string_view text);

struct NamedElement {
  FlagName name;
  SkewElement value;
};

/// Elements of Q(x) # (Z x| S2) used by the nil-Hecke algebra and the flag
/// order generated by q(x) s0, s1 and x:
///
///   e  = (1 + tau) / 2                 s1 = (1 - tau) / (2x)
///   s0 = (1 - delta^{-1} tau)/(2x + 1) D  = (q(x) delta^{-1} - q(-1/2) tau)/(1/2 + x)
///   a_img = phi(-v/2 - w)              b_img = phi(-v - w)
///
/// The q-independent names accept any q; the others throw DegreeTooSmall
/// when deg q < 4.
NamedElement build(FlagName name, const Polynomial& q);

/// Divided difference on Q[x]: i = 1 gives (p(x) - p(-x)) / (2x),
/// i = 0 gives (p(x) - p(-1-x)) / (2x + 1).
Polynomial divided_difference(int i, const Polynomial& p);

struct IdentityResult {
  std::string identity;
  bool pass = false;
  std::optional<SkewElement> residual;  // set on failure
};

/// The nil-Hecke relations (q-independent).
std::vector<IdentityResult> verify_nil_hecke();
/// The flag-order generator identities for the given q.
std::vector<IdentityResult> verify_flag_order(const Polynomial& q);
/// Both of the above.
std::vector<IdentityResult> verify_identities(const Polynomial& q);

/// The four summands of q(x) delta^{-1} obtained by sandwiching it between
/// two copies of e + x e x^{-1}, each written in the symmetrized form
/// e * (Z + tau Z tau)/2 * e.
std::array<SkewElement, 4> sandwich_summands(const Polynomial& q);

}  // namespace kleind
