#include "kleind/hc_modules.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <sstream>

#include "kleind/error.hpp"

namespace kleind {

namespace {

Rational floor_of(const Rational& r) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), r.value().get_num_mpz_t(), r.value().get_den_mpz_t());
  return Rational(out);
}

Rational ceil_of(const Rational& r) { return -floor_of(-r); }

long to_long(const Rational& r) { return r.numerator().get_si(); }

// Coefficient of T_order(point) in d, respecting the fold T1(-l) = -T1(l).
Rational component(const Distribution& d, int order, const Rational& point) {
  Distribution probe = Distribution::tableau(order, point);
  if (probe.is_zero()) return Rational(0);
  const auto& [t, sign] = *probe.terms().begin();
  return sign * d.coeff(t);
}

// Solves the square system a * x = b in place by Gauss-Jordan elimination.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = a[col][col].inverse();
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

// T_order(point) applied to x^{2m}.
Rational on_even_monomial(int order, const Rational& point, unsigned m) {
  if (order == 0) return point.pow(2 * m);
  if (m == 0) return Rational(0);
  return Rational(2 * static_cast<long>(m)) * point.pow(2 * m - 1);
}

std::string point_text(const Rational& r) { return r.to_string(); }

}  // namespace

// --- tableaux -------------------------------------------------------------

std::string Tableau::to_string() const { return "T" + std::to_string(order) + "(" + point.to_string() + ")"; }

Distribution Distribution::tableau(int order, const Rational& point, const Rational& c) {
  Distribution d;
  d.add(order, point, c);
  return d;
}

Rational Distribution::coeff(const Tableau& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Distribution::add(int order, const Rational& point, const Rational& c) {
  if (order != 0 && order != 1) throw Error(ErrorCode::kInvalidArgument, "tableau order must be 0 or 1");
  if (c.is_zero()) return;
  Rational coeff = c;
  Rational at = point;
  if (at.sign() < 0) {
    at = -at;
    if (order == 1) coeff = -coeff;
  }
  if (order == 1 && at.is_zero()) return;
  Tableau key{order, at};
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Distribution& Distribution::operator+=(const Distribution& o) {
  for (const auto& [t, c] : o.terms_) add(t.order, t.point, c);
  return *this;
}

Distribution& Distribution::operator-=(const Distribution& o) {
  for (const auto& [t, c] : o.terms_) add(t.order, t.point, -c);
  return *this;
}

Distribution& Distribution::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= s;
  return *this;
}

std::string Distribution::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.to_string() + ")*" + t.to_string();
  }
  return out;
}

Rational eval_dist(const Distribution& d, const Polynomial& p) {
  if (!p.is_even()) throw Error(ErrorCode::kOddPolynomial, "tableaux are functionals on even polynomials only");
  Rational total(0);
  Polynomial dp;
  bool have_dp = false;
  for (const auto& [t, c] : d.terms()) {
    if (t.order == 0) {
      total += c * p.eval(t.point);
    } else {
      if (!have_dp) {
        dp = p.derivative();
        have_dp = true;
      }
      total += c * dp.eval(t.point);
    }
  }
  return total;
}

// --- generators -----------------------------------------------------------

std::string_view hc_generator_text(HcGenerator g) {
  switch (g) {
    case HcGenerator::kU: return "u";
    case HcGenerator::kV: return "v";
    case HcGenerator::kW: return "w";
    case HcGenerator::kHalfVPlusW: return "half_v_plus_w";
  }
  return "?";
}

std::optional<HcGenerator> hc_generator_from_text(std::string_view text) {
  for (HcGenerator g : {HcGenerator::kU, HcGenerator::kV, HcGenerator::kW, HcGenerator::kHalfVPlusW}) {
    if (hc_generator_text(g) == text) return g;
  }
  return std::nullopt;
}

FreeExpression generator_expression(HcGenerator g) {
  switch (g) {
    case HcGenerator::kU: return FreeExpression::u();
    case HcGenerator::kV: return FreeExpression::v();
    case HcGenerator::kW: return FreeExpression::w();
    case HcGenerator::kHalfVPlusW:
      return FreeExpression::v() * FreeExpression(Rational(1, 2)) + FreeExpression::w();
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown generator");
}

// --- closed form ----------------------------------------------------------
//
// v/2 + w acts on T0(l) through p -> [q(x) p(x+1) - q(-x) p(x-1)] / (2x), and
// w through p -> q(x) p(x+1)/(1+2x) + q(-x) p(x-1)/(1-2x) - 2c p(x)/(1-4x^2)
// with c = q(-1/2). Dualizing gives coefficients alpha, gamma, kappa on the
// shifted tableaux; T1 picks up their derivatives on the T0 terms. The points
// where a denominator vanishes are handled by the removable-limit formulas.

namespace {

Distribution act_half_v_plus_w(const Tableau& t, const Polynomial& q) {
  const Polynomial dq = q.derivative();
  const Rational& l = t.point;
  const Rational one(1);
  Distribution out;
  if (l.is_zero()) {
    out.add(1, one, q.eval(0));
    out.add(0, one, dq.eval(0));
    return out;
  }
  const Rational two_l = Rational(2) * l;
  const Rational alpha = q.eval(l) / two_l;
  const Rational gamma = -q.eval(-l) / two_l;
  if (t.order == 0) {
    out.add(0, l + one, alpha);
    out.add(0, l - one, gamma);
    return out;
  }
  const Rational l2 = Rational(2) * l * l;
  const Rational dalpha = (l * dq.eval(l) - q.eval(l)) / l2;
  const Rational dgamma = (l * dq.eval(-l) + q.eval(-l)) / l2;
  out.add(1, l + one, alpha);
  out.add(0, l + one, dalpha);
  out.add(1, l - one, gamma);
  out.add(0, l - one, dgamma);
  return out;
}

Distribution act_w(const Tableau& t, const Polynomial& q) {
  const Polynomial dq = q.derivative();
  const Rational& l = t.point;
  const Rational one(1), half(1, 2), two(2);
  const Rational c = q.eval(-half);
  Distribution out;
  if (l == half) {
    const Rational three_half(3, 2);
    if (t.order == 0) {
      out.add(0, three_half, half * q.eval(half));
      out.add(0, half, half * (dq.eval(-half) - c));
      out.add(1, half, c);
    } else {
      const Polynomial ddq = dq.derivative();
      out.add(1, three_half, half * q.eval(half));
      out.add(0, three_half, half * (dq.eval(half) - q.eval(half)));
      out.add(0, half, half * c - Rational(1, 4) * ddq.eval(-half));
      out.add(1, half, -half * (c + dq.eval(-half)));
    }
    return out;
  }
  const Rational plus = half + l, minus = half - l;  // 1 + 2l = 2 plus, 1 - 2l = 2 minus
  const Rational alpha = q.eval(l) / (two * plus);
  const Rational gamma = q.eval(-l) / (two * minus);
  const Rational kappa = -c / (two * plus * minus);
  const int o = t.order;
  out.add(o, l + one, alpha);
  out.add(o, l - one, gamma);
  out.add(o, l, kappa);
  if (o == 1) {
    const Rational dalpha = (dq.eval(l) * plus - q.eval(l)) / (two * plus * plus);
    const Rational dgamma = (q.eval(-l) - dq.eval(-l) * minus) / (two * minus * minus);
    const Rational one_minus = one - Rational(4) * l * l;
    const Rational dkappa = -Rational(16) * c * l / (one_minus * one_minus);
    out.add(0, l + one, dalpha);
    out.add(0, l - one, dgamma);
    out.add(0, l, dkappa);
  }
  return out;
}

Tableau canonical(const Tableau& t) {
  Distribution d = Distribution::of(t);
  if (d.is_zero()) return Tableau{1, Rational(0)};
  return d.terms().begin()->first;
}

}  // namespace

Distribution act_closed_form(HcGenerator g, const Tableau& t, const DqParams& params) {
  return act_closed_form(g, Distribution::of(t), params);
}

Distribution act_closed_form(HcGenerator g, const Distribution& d, const DqParams& params) {
  const Polynomial& q = params.q;
  Distribution out;
  for (const auto& [t, c] : d.terms()) {
    Distribution piece;
    switch (g) {
      case HcGenerator::kU:
        // u acts as x^2, so T1(l)(x^2 p) = l^2 p'(l) + 2 l p(l).
        piece.add(t.order, t.point, t.point * t.point);
        if (t.order == 1) piece.add(0, t.point, Rational(2) * t.point);
        break;
      case HcGenerator::kHalfVPlusW:
        piece = act_half_v_plus_w(t, q);
        break;
      case HcGenerator::kW:
        piece = act_w(t, q);
        break;
      case HcGenerator::kV:
        piece = Rational(2) * (act_half_v_plus_w(t, q) - act_w(t, q));
        break;
    }
    out += c * piece;
  }
  return out;
}

// --- oracle ---------------------------------------------------------------

std::vector<Polynomial> DualActionOracle::dual_images(const FreeExpression& X, unsigned count) const {
  const SkewElement op = embedding_->phi(star_free(X));
  std::vector<Polynomial> out;
  out.reserve(count);
  for (unsigned m = 0; m < count; ++m) {
    RationalFunction r = skew_act(op, RationalFunction(Polynomial::monomial(2 * m)));
    if (!r.is_polynomial()) {
      throw Error(ErrorCode::kOracleInconsistent,
                  "phi(X*) sends x^" + std::to_string(2 * m) + " outside Q[x]: " + r.to_string());
    }
    Polynomial p = r.num();
    p *= r.den().leading().inverse();
    out.push_back(std::move(p));
  }
  return out;
}

Distribution DualActionOracle::fit(const std::vector<Polynomial>& images, const Tableau& t, unsigned radius) {
  const Tableau target = canonical(t);
  if (target.order == 1 && target.point.is_zero()) return Distribution();

  std::vector<Tableau> unknowns;
  for (long d = -static_cast<long>(radius); d <= static_cast<long>(radius); ++d) {
    const Rational at = (target.point + Rational(d)).abs();
    for (int order : {0, 1}) {
      if (order == 1 && at.is_zero()) continue;
      Tableau u{order, at};
      if (std::find(unknowns.begin(), unknowns.end(), u) == unknowns.end()) unknowns.push_back(u);
    }
  }
  const std::size_t n = unknowns.size();
  const std::size_t total = n + 4;
  if (images.size() < total) {
    throw Error(ErrorCode::kInvalidArgument, "oracle needs " + std::to_string(total) + " images, got " +
                                                 std::to_string(images.size()));
  }

  std::vector<Rational> rhs(total);
  std::vector<std::vector<Rational>> rows(total, std::vector<Rational>(n));
  for (std::size_t m = 0; m < total; ++m) {
    rhs[m] = target.order == 0 ? images[m].eval(target.point) : images[m].derivative().eval(target.point);
    for (std::size_t j = 0; j < n; ++j) {
      rows[m][j] = on_even_monomial(unknowns[j].order, unknowns[j].point, static_cast<unsigned>(m));
    }
  }

  std::vector<std::vector<Rational>> square(rows.begin(), rows.begin() + static_cast<long>(n));
  std::vector<Rational> square_rhs(rhs.begin(), rhs.begin() + static_cast<long>(n));
  auto solution = solve_linear(std::move(square), std::move(square_rhs));
  if (!solution) throw Error(ErrorCode::kOracleInconsistent, "singular Hermite system at " + target.to_string());

  for (std::size_t m = n; m < total; ++m) {
    Rational predicted(0);
    for (std::size_t j = 0; j < n; ++j) predicted += rows[m][j] * (*solution)[j];
    if (predicted != rhs[m]) {
      throw Error(ErrorCode::kOracleInconsistent, "fit at " + target.to_string() + " disagrees on x^" +
                                                      std::to_string(2 * m) + ": expected " + rhs[m].to_string() +
                                                      ", fitted " + predicted.to_string());
    }
  }

  Distribution out;
  for (std::size_t j = 0; j < n; ++j) out.add(unknowns[j].order, unknowns[j].point, (*solution)[j]);
  return out;
}

Distribution DualActionOracle::act(const FreeExpression& X, const Tableau& t, unsigned radius) const {
  return act(X, Distribution::of(t), radius);
}

Distribution DualActionOracle::act(const FreeExpression& X, const Distribution& d, unsigned radius) const {
  if (d.is_zero()) return d;
  const auto images = dual_images(X, images_needed(radius));
  Distribution out;
  for (const auto& [t, c] : d.terms()) out += c * fit(images, t, radius);
  return out;
}

Distribution act_oracle(HcGenerator g, const Tableau& t, const Embedding& embedding) {
  return DualActionOracle(embedding).act(g, t);
}

// --- reachability ---------------------------------------------------------

bool reaches(const Tableau& src, const Tableau& dst, const Distribution& v_src, const Distribution& w_src) {
  const Tableau s = canonical(src), d = canonical(dst);
  if (s == d) return true;
  const Distribution self = Distribution::of(s);
  for (const Distribution* part : {&self, &v_src, &w_src}) {
    if (!component(*part, 1, d.point).is_zero()) return true;
    if (d.order == 0 && !component(*part, 0, d.point).is_zero()) return true;
  }
  return false;
}

bool reaches(const Tableau& src, const Tableau& dst, const DualActionOracle& oracle) {
  return reaches(src, dst, oracle.act(HcGenerator::kV, src), oracle.act(HcGenerator::kW, src));
}

// --- module graphs --------------------------------------------------------

std::string_view orbit_class_text(OrbitClass c) {
  switch (c) {
    case OrbitClass::kGeneric: return "generic";
    case OrbitClass::kIntegral: return "integral";
    case OrbitClass::kHalfIntegral: return "half_integral";
  }
  return "?";
}

std::string_view edge_kind_text(EdgeKind k) {
  switch (k) {
    case EdgeKind::kHorizontal: return "horizontal";
    case EdgeKind::kDiagonal: return "diagonal";
    case EdgeKind::kVertical: return "vertical";
    case EdgeKind::kBack: return "back";
  }
  return "?";
}

OrbitClass classify_orbit(const Rational& lambda0) {
  if (lambda0.is_integer()) return OrbitClass::kIntegral;
  if ((Rational(2) * lambda0).is_integer()) return OrbitClass::kHalfIntegral;
  return OrbitClass::kGeneric;
}

int ModuleGraph::index_of(int order, const Rational& orbit_point) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].tableau.order == order && vertices[i].orbit_point == orbit_point) return static_cast<int>(i);
  }
  return -1;
}

int minimal_window(const DqParams& params, const Rational& lambda0) {
  Rational bound(0);
  for (const Rational& r : rational_roots(params.q)) bound = std::max(bound, r.abs());
  for (const Rational& r : rational_roots(params.q.derivative())) bound = std::max(bound, r.abs());
  bound += lambda0.abs() + Rational(2);
  return static_cast<int>(to_long(floor_of(bound))) + 1;
}

namespace {

struct Label {
  EdgeKind kind;
  Rational value;
  std::string symbolic;
};

Label drawn_label(OrbitClass oc, const GraphVertex& s, const GraphVertex& d, const Polynomial& q) {
  const Polynomial dq = q.derivative();
  const int os = s.tableau.order, od = d.tableau.order;
  const Rational& ms = s.orbit_point;
  const Rational step = d.orbit_point - ms;
  const Rational one(1), half(1, 2);
  auto q_at = [&](const Rational& at) { return Label{EdgeKind::kHorizontal, q.eval(at), "q(" + point_text(at) + ")"}; };
  auto dq_at = [&](const Rational& at) {
    return Label{EdgeKind::kDiagonal, dq.eval(at), "q'(" + point_text(at) + ")"};
  };

  if (oc == OrbitClass::kIntegral && os == 0 && ms.is_zero() && step == one) {
    if (od == 0) return Label{EdgeKind::kHorizontal, dq.eval(0), "q'(0)"};
    return Label{EdgeKind::kDiagonal, q.eval(0), "q(0)"};
  }
  if (oc == OrbitClass::kHalfIntegral && os == 0 && od == 1 && ms == half && step.is_zero()) {
    return Label{EdgeKind::kBack, q.eval(-half), "q(-1/2)"};
  }
  if (os == od && step == one) return q_at(ms);
  if (os == od && step == -one) return q_at(-ms);
  if (os == 1 && od == 0) {
    if (step.is_zero()) return Label{EdgeKind::kVertical, one, "1"};
    if (step == one) return dq_at(ms);
    if (step == -one) return dq_at(-ms);
  }
  EdgeKind kind = os == od ? EdgeKind::kHorizontal
                           : (step.is_zero() ? (os == 1 ? EdgeKind::kVertical : EdgeKind::kBack) : EdgeKind::kDiagonal);
  return Label{kind, Rational(0), "0"};
}

}  // namespace

ModuleGraph module_graph(const Embedding& embedding, const Rational& lambda0, int window, bool full) {
  const DqParams& params = embedding.params();
  const int needed = minimal_window(params, lambda0);
  if (window < needed) {
    throw Error(ErrorCode::kWindowTooSmall,
                "window " + std::to_string(window) + " is too small; the minimal admissible window is " +
                    std::to_string(needed));
  }

  ModuleGraph g;
  g.orbit_class = classify_orbit(lambda0);
  g.lambda0 = lambda0;
  g.window = window;
  g.full = full;
  const Rational n(window);

  std::vector<Rational> points;
  bool both_rows = true;
  switch (g.orbit_class) {
    case OrbitClass::kIntegral:
      for (long k = 0; k <= window; ++k) points.emplace_back(k);
      break;
    case OrbitClass::kHalfIntegral:
      for (Rational p(1, 2); p <= n; p += Rational(1)) points.push_back(p);
      break;
    case OrbitClass::kGeneric: {
      const Rational frac = lambda0 - floor_of(lambda0);
      for (Rational p = frac + ceil_of(-n - frac); p <= n; p += Rational(1)) points.push_back(p);
      both_rows = full;
      break;
    }
  }
  for (int order = 0; order <= (both_rows ? 1 : 0); ++order) {
    for (const Rational& p : points) {
      if (order == 1 && p.is_zero()) continue;
      g.vertices.push_back(GraphVertex{Tableau{order, p.abs()}, p});
    }
  }

  const DualActionOracle oracle(embedding);
  const unsigned count = DualActionOracle::images_needed(1);
  const auto v_images = oracle.dual_images(FreeExpression::v(), count);
  const auto w_images = oracle.dual_images(FreeExpression::w(), count);
  std::vector<Distribution> v_of, w_of;
  for (const GraphVertex& vx : g.vertices) {
    v_of.push_back(DualActionOracle::fit(v_images, vx.tableau, 1));
    w_of.push_back(DualActionOracle::fit(w_images, vx.tableau, 1));
  }

  const Rational one(1);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = 0; j < g.vertices.size(); ++j) {
      if (i == j) continue;
      const GraphVertex& s = g.vertices[i];
      const GraphVertex& d = g.vertices[j];
      if ((d.orbit_point - s.orbit_point).abs() > one) continue;
      Label label = drawn_label(g.orbit_class, s, d, params.q);
      EdgeSlot slot;
      slot.src = static_cast<int>(i);
      slot.dst = static_cast<int>(j);
      slot.kind = label.kind;
      slot.label = label.value;
      slot.symbolic = std::move(label.symbolic);
      const Distribution none;
      if (reaches(s.tableau, d.tableau, none, none)) slot.via.emplace_back("1");
      if (reaches(s.tableau, d.tableau, v_of[i], none)) slot.via.emplace_back("v");
      if (reaches(s.tableau, d.tableau, none, w_of[i])) slot.via.emplace_back("w");
      slot.reaches = reaches(s.tableau, d.tableau, v_of[i], w_of[i]);
      if (slot.reaches) g.edges.push_back(static_cast<int>(g.slots.size()));
      g.slots.push_back(std::move(slot));
    }
  }
  return g;
}

ClosurePoset submodule_closures(const ModuleGraph& graph) {
  const std::size_t nv = graph.vertices.size();
  std::vector<std::vector<int>> adjacent(nv);
  for (int e : graph.edges) adjacent[graph.slots[e].src].push_back(graph.slots[e].dst);

  const Rational n(graph.window), one(1);
  ClosurePoset poset;
  std::map<std::vector<int>, std::size_t> seen;
  for (std::size_t start = 0; start < nv; ++start) {
    std::vector<bool> mark(nv, false);
    std::deque<int> queue{static_cast<int>(start)};
    mark[start] = true;
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      for (int next : adjacent[cur]) {
        if (!mark[next]) {
          mark[next] = true;
          queue.push_back(next);
        }
      }
    }
    std::vector<int> members;
    for (std::size_t i = 0; i < nv; ++i) {
      if (mark[i]) members.push_back(static_cast<int>(i));
    }
    auto [it, inserted] = seen.try_emplace(members, poset.closures.size());
    if (inserted) {
      Closure c;
      c.vertices = members;
      for (int i : members) {
        const Rational& p = graph.vertices[i].orbit_point;
        if (p + one > n) c.truncated_right = true;
        if (graph.orbit_class == OrbitClass::kGeneric && p - one < -n) c.truncated_left = true;
      }
      poset.closures.push_back(std::move(c));
    }
    poset.closures[it->second].generators.push_back(static_cast<int>(start));
  }

  auto strictly_inside = [&](std::size_t a, std::size_t b) {
    const auto& x = poset.closures[a].vertices;
    const auto& y = poset.closures[b].vertices;
    return x.size() < y.size() && std::includes(y.begin(), y.end(), x.begin(), x.end());
  };
  const std::size_t nc = poset.closures.size();
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t b = 0; b < nc; ++b) {
      if (!strictly_inside(a, b)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < nc && covered; ++k) {
        if (strictly_inside(a, k) && strictly_inside(k, b)) covered = false;
      }
      if (covered) poset.covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return poset;
}

std::string to_dot(const ModuleGraph& graph, const ClosurePoset& closures, bool symbolic) {
  std::ostringstream os;
  os << "digraph module {\n";
  os << "  // orbit " << orbit_class_text(graph.orbit_class) << ", lambda0 = " << graph.lambda0
     << ", window = " << graph.window << "\n";
  os << "  rankdir=LR;\n  node [shape=plaintext];\n";
  for (int order = 0; order <= 1; ++order) {
    std::ostringstream row;
    bool any = false;
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
      const GraphVertex& v = graph.vertices[i];
      if (v.tableau.order != order) continue;
      any = true;
      row << "    n" << i << " [label=\"T" << order << "(" << v.orbit_point << ")\"];\n";
    }
    if (any) os << "  subgraph row" << order << " {\n    rank=same;\n" << row.str() << "  }\n";
  }
  for (int e : graph.edges) {
    const EdgeSlot& s = graph.slots[e];
    const bool solid = graph.vertices[s.src].tableau.order == 0 && graph.vertices[s.dst].tableau.order == 0;
    os << "  n" << s.src << " -> n" << s.dst << " [label=\"" << (symbolic ? s.symbolic : s.label.to_string())
       << "\"" << (solid ? "" : ", style=dashed") << "];\n";
  }
  for (std::size_t c = 0; c < closures.closures.size(); ++c) {
    const Closure& cl = closures.closures[c];
    os << "  // closure " << c << ":";
    for (int v : cl.vertices) os << " n" << v;
    if (cl.truncated_left) os << " [truncated left]";
    if (cl.truncated_right) os << " [truncated right]";
    os << "\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace kleind
