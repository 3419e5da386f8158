#include "kleind/rational.hpp"

#include <cctype>
#include <ostream>

#include "kleind/error.hpp"

namespace kleind {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kNonExactDivision: return "NonExactDivision";
    case ErrorCode::kPoleEvaluation: return "PoleEvaluation";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kNotInLSharpM: return "NotInLSharpM";
    case ErrorCode::kDegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::kNonTermination: return "NonTermination";
    case ErrorCode::kOracleInconsistent: return "OracleInconsistent";
    case ErrorCode::kOddPolynomial: return "OddPolynomial";
    case ErrorCode::kWindowTooSmall: return "WindowTooSmall";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kExpressionParseError: return "ExpressionParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  if (!is_integer_literal(num)) {
    throw Error(ErrorCode::kParseError, "malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  std::string_view den = trim(s.substr(slash + 1));
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::kParseError, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(parse_integer(num), d));
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), exponent);
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::kDivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace kleind
