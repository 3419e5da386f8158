#include "kleind/dq.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>

#include "kleind/error.hpp"

namespace kleind {

DqParams params_from_q(const Polynomial& q) {
  if (q.degree() < 4) {
    throw Error(ErrorCode::kDegreeTooSmall, "q must have degree >= 4, got " + std::to_string(q.degree()));
  }
  DqParams d;
  d.q = q;
  d.rho = Rational(2) * q.eval(Rational(-1, 2));
  const Polynomial q_reflected = q.negate_var().shift(Rational(1));  // q(-t-1)
  const Polynomial one_plus_2t{Rational(1), Rational(2)};
  d.p = exact_div(Rational(-4) * (q * q_reflected) + Polynomial(d.rho * d.rho), one_plus_2t * one_plus_2t);
  std::tie(d.p0, d.p1) = d.p.even_odd_split();
  const Polynomial t_t1{Rational(0), Rational(1), Rational(1)};  // t(t+1)
  d.s = RationalFunction(q * q_reflected, t_t1 * one_plus_2t * one_plus_2t);
  return d;
}

// ---------------------------------------------------------------------------
// FreeExpression

FreeExpression::FreeExpression(Rational c) {
  if (!c.is_zero()) terms_.emplace(Word(), std::move(c));
}

FreeExpression FreeExpression::word(Word w, Rational c) {
  FreeExpression e;
  e.add_term(w, c);
  return e;
}

void FreeExpression::add_term(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FreeExpression& FreeExpression::operator+=(const FreeExpression& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeExpression& FreeExpression::operator-=(const FreeExpression& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FreeExpression operator-(const FreeExpression& a) {
  FreeExpression r;
  for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
  return r;
}

FreeExpression operator*(const FreeExpression& a, const FreeExpression& b) {
  FreeExpression r;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
  }
  return r;
}

FreeExpression pow(const FreeExpression& e, unsigned exponent) {
  FreeExpression r(1);
  for (unsigned i = 0; i < exponent; ++i) r = r * e;
  return r;
}

namespace {

std::string word_text(const std::string& w) {
  std::string out;
  for (char ch : w) {
    if (!out.empty()) out += '*';
    out += ch;
  }
  return out;
}

std::string sum_text(const std::vector<std::pair<std::string, Rational>>& monomials) {
  if (monomials.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : monomials) {
    const bool neg = c.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rational mag = c.abs();
    if (mono.empty()) {
      out += mag.to_string();
    } else {
      if (mag != Rational(1)) out += mag.to_string() + "*";
      out += mono;
    }
  }
  return out;
}

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  FreeExpression parse() {
    FreeExpression e = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::kExpressionParseError,
                why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  FreeExpression sum() {
    FreeExpression acc;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    FreeExpression t = product();
    acc = negate ? -t : t;
    while (true) {
      if (accept('+')) acc += product();
      else if (accept('-')) acc -= product();
      else break;
    }
    return acc;
  }

  FreeExpression product() {
    FreeExpression acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  FreeExpression power() {
    FreeExpression base = factor();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  FreeExpression factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == 'u' || ch == 'v' || ch == 'w') {
      ++pos_;
      return FreeExpression::word(std::string(1, ch));
    }
    if (ch == '(') {
      ++pos_;
      FreeExpression inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t den_start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (den_start == pos_) fail("expected denominator");
      }
      try {
        return FreeExpression(Rational::parse(text_.substr(start, pos_ - start)));
      } catch (const Error& e) {
        fail(e.what());
      }
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FreeExpression FreeExpression::parse(std::string_view text) { return ExpressionParser(text).parse(); }

std::string FreeExpression::to_string() const {
  std::vector<std::pair<std::string, Rational>> monos;
  for (const auto& [w, c] : terms_) monos.emplace_back(word_text(w), c);
  return sum_text(monos);
}

FreeExpression poly_in_u(const Polynomial& p) {
  FreeExpression r;
  auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) r.add_term(std::string(i, 'u'), c[i]);
  return r;
}

// ---------------------------------------------------------------------------
// PBW

void PbwForm::add_term(const Key& key, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FreeExpression PbwForm::to_expression() const {
  FreeExpression r;
  for (const auto& [key, c] : terms_) {
    auto [i, j, k] = key;
    r.add_term(std::string(i, 'u') + std::string(j, 'v') + std::string(k, 'w'), c);
  }
  return r;
}

std::string PbwForm::to_string() const {
  std::vector<std::pair<std::string, Rational>> monos;
  for (const auto& [key, c] : terms_) {
    auto [i, j, k] = key;
    std::string m;
    auto append = [&m](char g, unsigned e) {
      if (e == 0) return;
      if (!m.empty()) m += '*';
      m += g;
      if (e > 1) m += "^" + std::to_string(e);
    };
    append('u', i);
    append('v', j);
    append('w', k);
    monos.emplace_back(m, c);
  }
  return sum_text(monos);
}

namespace {

struct RewriteRules {
  // Right-hand sides of vu, wu, wv, ww.
  std::vector<std::pair<std::string, Rational>> vu, wu, wv, ww;

  explicit RewriteRules(const DqParams& d) {
    vu = {{"uv", Rational(1)}, {"w", Rational(-2)}, {"v", Rational(-1)}};
    wu = {{"uw", Rational(1)}, {"vu", Rational(-2)}, {"w", Rational(-1)}, {"", -d.rho}};
    wv = {{"vw", Rational(1)}, {"vv", Rational(1)}};
    for (std::size_t i = 0; i < d.p1.coefficients().size(); ++i) {
      if (!d.p1.coefficients()[i].is_zero()) wv.emplace_back(std::string(i, 'u'), d.p1.coefficients()[i]);
    }
    ww = {{"vvu", Rational(1)}, {"vw", Rational(1)}, {"v", d.rho}};
    for (std::size_t i = 0; i < d.p0.coefficients().size(); ++i) {
      if (!d.p0.coefficients()[i].is_zero()) ww.emplace_back(std::string(i, 'u'), d.p0.coefficients()[i]);
    }
  }

  const std::vector<std::pair<std::string, Rational>>* lookup(char first, char second) const {
    if (first == 'v' && second == 'u') return &vu;
    if (first == 'w' && second == 'u') return &wu;
    if (first == 'w' && second == 'v') return &wv;
    if (first == 'w' && second == 'w') return &ww;
    return nullptr;
  }
};

// Heavier words first so rewritten terms merge before being expanded.
struct FiltrationOrder {
  long deg_v, deg_w;
  long weight(const std::string& s) const {
    long total = 0;
    for (char ch : s) total += ch == 'u' ? 4 : (ch == 'v' ? deg_v : deg_w);
    return total;
  }
  bool operator()(const std::string& a, const std::string& b) const {
    long wa = weight(a), wb = weight(b);
    if (wa != wb) return wa > wb;
    return a < b;
  }
};

}  // namespace

PbwForm pbw_normal_form(const FreeExpression& X, const DqParams& params, RewriteLimits limits) {
  const RewriteRules rules(params);
  const long n = params.q.degree();
  std::map<std::string, Rational, FiltrationOrder> pending(FiltrationOrder{2 * n - 4, 2 * n - 2});
  auto push = [&pending](const std::string& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = pending.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) pending.erase(it);
  };
  for (const auto& [w, c] : X.terms()) push(w, c);

  PbwForm out;
  std::size_t steps = 0;
  while (!pending.empty()) {
    if (++steps > limits.max_steps) {
      throw Error(ErrorCode::kNonTermination, "PBW rewriting exceeded " + std::to_string(limits.max_steps) + " steps");
    }
    auto node = pending.extract(pending.begin());
    const std::string& w = node.key();
    const Rational& c = node.mapped();
    std::size_t pos = std::string::npos;
    const std::vector<std::pair<std::string, Rational>>* rhs = nullptr;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if ((rhs = rules.lookup(w[i], w[i + 1]))) {
        pos = i;
        break;
      }
    }
    if (!rhs) {
      unsigned i = 0, j = 0, k = 0;
      for (char ch : w) (ch == 'u' ? i : (ch == 'v' ? j : k))++;
      out.add_term({i, j, k}, c);
      continue;
    }
    const std::string prefix = w.substr(0, pos), suffix = w.substr(pos + 2);
    for (const auto& [mid, coeff] : *rhs) push(prefix + mid + suffix, c * coeff);
  }
  return out;
}

FreeExpression star_free(const FreeExpression& X) {
  const FreeExpression images[3] = {FreeExpression::u(), FreeExpression::v(),
                                    -FreeExpression::w() - FreeExpression::v()};
  FreeExpression r;
  for (const auto& [w, c] : X.terms()) {
    FreeExpression term(c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) term = term * images[*it - 'u'];
    r += term;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Embedding

GwaElement beta(Generator g, const DqParams& params) {
  const Polynomial h2 = Polynomial::monomial(2);
  // rho / (1 - 4h^2)
  const RationalFunction r(Polynomial(params.rho), Polynomial{Rational(1), Rational(0), Rational(-4)});
  switch (g) {
    case Generator::kU:
      return GwaElement(RationalFunction(h2));
    case Generator::kV:
      return GwaElement::a() + GwaElement::b() + GwaElement(r * RationalFunction(2));
    case Generator::kW: {
      // (a - b) h = (h - 1) a - (h + 1) b
      GwaElement e(RationalFunction(Polynomial{Rational(-1), Rational(1)}), 1);
      e.add_term(-1, RationalFunction(Polynomial{Rational(-1), Rational(-1)}));
      e.add_term(0, -r);
      return e;
    }
  }
  return {};
}

Embedding::Embedding(DqParams params)
    : params_(std::move(params)), gwa_(params_.s), psi_(params_.q) {
  for (int i = 0; i < 3; ++i) {
    beta_[i] = beta(static_cast<Generator>(i), params_);
    phi_[i] = psi_(beta_[i]);
  }
}

GwaElement Embedding::beta_lift(const FreeExpression& X) const {
  std::unordered_map<std::string, GwaElement> prefix_cache;
  auto word_image = [&](const std::string& w) -> GwaElement {
    GwaElement acc(1);
    for (std::size_t len = 1; len <= w.size(); ++len) {
      const std::string prefix = w.substr(0, len);
      auto it = prefix_cache.find(prefix);
      if (it == prefix_cache.end()) {
        acc = gwa_mul(acc, beta_[w[len - 1] - 'u'], gwa_);
        prefix_cache.emplace(prefix, acc);
      } else {
        acc = it->second;
      }
    }
    return acc;
  };
  GwaElement r;
  for (const auto& [w, c] : X.terms()) {
    GwaElement img = word_image(w);
    for (const auto& [n, f] : img.terms()) r.add_term(n, f * RationalFunction(c));
  }
  return r;
}

SkewElement Embedding::phi(const FreeExpression& X) const { return psi_(beta_lift(X)); }

const SkewElement& Embedding::phi(Generator g) const { return phi_[static_cast<int>(g)]; }

SkewElement phi(const FreeExpression& X, const Polynomial& q) { return Embedding(params_from_q(q)).phi(X); }

std::array<FreeExpression, 4> defining_relations(const DqParams& d) {
  const auto u = FreeExpression::u(), v = FreeExpression::v(), w = FreeExpression::w();
  const FreeExpression rho(d.rho);
  return {
      u * v - v * u - FreeExpression(2) * w - v,
      u * w - w * u - FreeExpression(2) * v * u - w - rho,
      v * w - w * v + v * v + poly_in_u(d.p1),
      w * w - v * v * u - v * w - rho * v - poly_in_u(d.p0),
  };
}

}  // namespace kleind
