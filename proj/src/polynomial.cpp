#include "kleind/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include "kleind/error.hpp"

namespace kleind {

Polynomial::Polynomial(Rational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monomial(unsigned degree, const Rational& coeff) {
  if (coeff.is_zero()) return {};
  std::vector<Rational> c(degree + 1);
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::parse(std::string_view text) {
  std::vector<Rational> c;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    c.push_back(Rational::parse(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += c_[i].to_string();
  }
  return out;
}

std::string Polynomial::pretty(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& a = c_[i];
    if (a.is_zero()) continue;
    Rational mag = a.abs();
    if (first) {
      if (a.sign() < 0) os << '-';
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (i == 0 || !unit) os << mag;
    if (i > 0) {
      if (!unit) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

bool Polynomial::is_even() const {
  for (std::size_t i = 1; i < c_.size(); i += 2) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

bool Polynomial::is_odd() const {
  for (std::size_t i = 0; i < c_.size(); i += 2) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

Rational Polynomial::coeff(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(c_.size())) return {};
  return c_[degree];
}

Rational Polynomial::leading() const { return c_.empty() ? Rational() : c_.back(); }

Rational Polynomial::eval(const Rational& at) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= at.value();
    acc += it->value();
  }
  return Rational(std::move(acc));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shift(const Rational& c) const {
  if (c.is_zero() || c_.size() <= 1) return *this;
  // Taylor shift by repeated synthetic division.
  std::vector<mpq_class> a(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) a[i] = c_[i].value();
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += c.value() * a[j];
  }
  std::vector<Rational> out;
  out.reserve(n);
  for (auto& v : a) out.emplace_back(std::move(v));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::negate_var() const {
  Polynomial r = *this;
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

Polynomial Polynomial::compose_square() const {
  if (c_.empty()) return {};
  std::vector<Rational> out(2 * c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) out[2 * i] = c_[i];
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::even_odd_split() const {
  std::vector<Rational> even, odd;
  for (std::size_t i = 0; i < c_.size(); ++i) (i % 2 ? odd : even).push_back(c_[i]);
  return {Polynomial(std::move(even)), Polynomial(std::move(odd))};
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return {};
  Polynomial r = *this;
  r *= c_.back().inverse();
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& a : c_) a *= s;
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

namespace {

// Splits p into (common denominator, integer numerators).
std::pair<mpz_class, std::vector<mpz_class>> integer_form(std::span<const Rational> c) {
  mpz_class den = 1;
  for (const auto& a : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.value().get_den_mpz_t());
  std::vector<mpz_class> num(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    num[i] = c[i].value().get_num() * (den / c[i].value().get_den());
  }
  return {den, std::move(num)};
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  if (a.c_.size() == 1) return b * a.c_[0];
  if (b.c_.size() == 1) return a * b.c_[0];
  // Multiply over Z and canonicalize once per coefficient.
  auto [da, na] = integer_form(a.c_);
  auto [db, nb] = integer_form(b.c_);
  std::vector<mpz_class> prod(na.size() + nb.size() - 1);
  for (std::size_t i = 0; i < na.size(); ++i) {
    if (na[i] == 0) continue;
    for (std::size_t j = 0; j < nb.size(); ++j) {
      mpz_addmul(prod[i + j].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
    }
  }
  mpz_class den = da * db;
  std::vector<Rational> out;
  out.reserve(prod.size());
  for (auto& p : prod) out.emplace_back(mpq_class(p, den));
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& n, const Polynomial& d) {
  if (d.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  if (n.degree() < d.degree()) return {Polynomial(), n};
  auto dc = d.coefficients();
  std::vector<mpq_class> r(n.coefficients().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = n.coefficients()[i].value();
  const int dd = d.degree();
  const mpq_class inv_lead = 1 / dc[dd].value();
  std::vector<Rational> q(n.degree() - dd + 1);
  for (int i = n.degree(); i >= dd; --i) {
    if (sgn(r[i]) == 0) continue;
    mpq_class f = r[i] * inv_lead;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * dc[j].value();
    q[i - dd] = Rational(std::move(f));
  }
  std::vector<Rational> rem;
  rem.reserve(dd);
  for (int i = 0; i < dd; ++i) rem.emplace_back(std::move(r[i]));
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& n, const Polynomial& d) {
  auto [q, r] = divmod(n, d);
  if (!r.is_zero()) {
    throw Error(ErrorCode::kNonExactDivision,
                "(" + n.pretty() + ") / (" + d.pretty() + ") leaves remainder " + r.pretty());
  }
  return q;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.is_constant()) return Polynomial(Rational(1));
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result(Rational(1)), base = p;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> divs{1};
  auto add_prime_power = [&divs](const mpz_class& prime, unsigned mult) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned e = 1; e <= mult; ++e) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  };
  for (mpz_class p = 2; p * p <= n; ++p) {
    unsigned mult = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++mult;
    }
    if (mult) add_prime_power(p, mult);
  }
  if (n > 1) add_prime_power(n, 1);
  return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "rational_roots of the zero polynomial");
  std::set<Rational> roots;
  auto coeffs = p.coefficients();
  std::size_t low = 0;
  while (coeffs[low].is_zero()) ++low;
  if (low > 0) roots.insert(Rational(0));
  auto [den, ints] = integer_form(coeffs.subspan(low));
  (void)den;
  if (ints.size() > 1) {
    Polynomial reduced(std::vector<Rational>(coeffs.begin() + low, coeffs.end()));
    for (const auto& num : positive_divisors(ints.front())) {
      for (const auto& dv : positive_divisors(ints.back())) {
        for (int s : {1, -1}) {
          Rational cand(mpq_class(num * s, dv));
          if (!roots.contains(cand) && reduced.eval(cand).is_zero()) roots.insert(cand);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.pretty(); }

}  // namespace kleind
