#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kleind/dq.hpp"

namespace kleind {

/// T0(point): p -> p(point); T1(point): p -> p'(point), as functionals on Q[x^2].
///
/// Canonical form has point >= 0 and never (order 1, point 0): since
/// T0(-l) = T0(l) and T1(-l) = -T1(l), every functional folds onto a
/// canonical tableau times a sign (or vanishes).
struct Tableau {
  int order = 0;  // 0 or 1
  Rational point;

  friend auto operator<=>(const Tableau&, const Tableau&) = default;
  friend bool operator==(const Tableau&, const Tableau&) = default;

  std::string to_string() const;
};

/// Finite combination of canonical tableaux.
class Distribution {
 public:
  using Terms = std::map<Tableau, Rational>;

  Distribution() = default;
  /// c * T_order(point), folded onto the canonical representative.
  static Distribution tableau(int order, const Rational& point, const Rational& c = Rational(1));
  static Distribution of(const Tableau& t) { return tableau(t.order, t.point); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(const Tableau& t) const;
  void add(int order, const Rational& point, const Rational& c);

  Distribution& operator+=(const Distribution& o);
  Distribution& operator-=(const Distribution& o);
  Distribution& operator*=(const Rational& s);
  friend Distribution operator+(Distribution a, const Distribution& b) { return a += b; }
  friend Distribution operator-(Distribution a, const Distribution& b) { return a -= b; }
  friend Distribution operator*(const Rational& s, Distribution a) { return a *= s; }
  friend bool operator==(const Distribution&, const Distribution&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Sum of c0 p(l) + c1 p'(l). Throws OddPolynomial unless p lies in Q[x^2].
Rational eval_dist(const Distribution& d, const Polynomial& p);

enum class HcGenerator { kU, kV, kW, kHalfVPlusW };

std::string_view hc_generator_text(HcGenerator g);
std::optional<HcGenerator> hc_generator_from_text(std::string_view text);
FreeExpression generator_expression(HcGenerator g);

/// Structure constants of u, v, w and v/2 + w on the tableau basis, from
/// closed-form formulas (including the singular points 0 and 1/2).
Distribution act_closed_form(HcGenerator g, const Tableau& t, const DqParams& params);
Distribution act_closed_form(HcGenerator g, const Distribution& d, const DqParams& params);

/// Computes X.xi from the definition (X.xi)(p) = xi(phi(X*).p): pushes
/// x^{2m} through phi(X*), evaluates xi, and solves the Hermite
/// interpolation system on the candidate support {l - r, ..., l + r}.
/// The fit is rechecked on four extra monomials; a mismatch raises
/// OracleInconsistent.
class DualActionOracle {
 public:
  explicit DualActionOracle(const Embedding& embedding) : embedding_(&embedding) {}

  Distribution act(const FreeExpression& X, const Tableau& t, unsigned radius = 1) const;
  Distribution act(const FreeExpression& X, const Distribution& d, unsigned radius = 1) const;
  Distribution act(HcGenerator g, const Tableau& t) const { return act(generator_expression(g), t, 1); }

  /// phi(X*) . x^{2m} for m = 0 .. count-1.
  std::vector<Polynomial> dual_images(const FreeExpression& X, unsigned count) const;
  /// Number of images act() needs for the given radius.
  static unsigned images_needed(unsigned radius) { return 4 * radius + 6; }
  /// The Hermite fit alone, for callers that reuse one set of images
  /// across many tableaux.
  static Distribution fit(const std::vector<Polynomial>& images, const Tableau& t, unsigned radius);

 private:
  const Embedding* embedding_;
};

Distribution act_oracle(HcGenerator g, const Tableau& t, const Embedding& embedding);

/// Whether dst lies in (Q[u] + Q[u] v + Q[u] w) . src.
bool reaches(const Tableau& src, const Tableau& dst, const DualActionOracle& oracle);
/// The same test given the precomputed images v.src and w.src.
bool reaches(const Tableau& src, const Tableau& dst, const Distribution& v_src, const Distribution& w_src);

enum class OrbitClass { kGeneric, kIntegral, kHalfIntegral };
enum class EdgeKind { kHorizontal, kDiagonal, kVertical, kBack };

std::string_view orbit_class_text(OrbitClass c);
std::string_view edge_kind_text(EdgeKind k);
OrbitClass classify_orbit(const Rational& lambda0);

struct GraphVertex {
  Tableau tableau;
  /// Signed position on the orbit line as drawn; equals tableau.point
  /// except for generic orbits left of zero.
  Rational orbit_point;
};

/// A candidate edge between vertices whose orbit points differ by at most 1.
struct EdgeSlot {
  int src = 0;
  int dst = 0;
  EdgeKind kind = EdgeKind::kHorizontal;
  Rational label;            // value of the drawn label, 0 where nothing is drawn
  std::string symbolic;      // e.g. "q(3/2)", "q'(-2)", "1", "0"
  bool reaches = false;
  std::vector<std::string> via;  // which of "1", "v", "w" reach dst on their own
};

struct ModuleGraph {
  OrbitClass orbit_class = OrbitClass::kGeneric;
  Rational lambda0;
  int window = 0;
  bool full = false;
  std::vector<GraphVertex> vertices;
  std::vector<EdgeSlot> slots;
  /// Indices into slots of the stored edges (slots with reaches == true).
  std::vector<int> edges;

  int index_of(int order, const Rational& orbit_point) const;
};

/// Smallest admissible window for the given q and orbit representative.
int minimal_window(const DqParams& params, const Rational& lambda0);

/// Builds the vertex set of the orbit of lambda0 within |point| <= window,
/// every edge slot, and the stored edges. Generic orbits carry only the
/// T0 row unless full is set. Throws WindowTooSmall.
ModuleGraph module_graph(const Embedding& embedding, const Rational& lambda0, int window, bool full = false);

struct Closure {
  std::vector<int> vertices;  // sorted
  std::vector<int> generators;  // vertices whose closure this is
  bool truncated_left = false;
  bool truncated_right = false;
};

struct ClosurePoset {
  std::vector<Closure> closures;
  /// (i, j): closures[i] is covered by closures[j].
  std::vector<std::pair<int, int>> covers;
};

ClosurePoset submodule_closures(const ModuleGraph& graph);

std::string to_dot(const ModuleGraph& graph, const ClosurePoset& closures, bool symbolic);

}  // namespace kleind
