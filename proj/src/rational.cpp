#include "nrs/rational.hpp"

#include <cctype>

#include "nrs/error.hpp"

namespace nrs {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::SingularCayley: return "SingularCayley";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::WrongSignature: return "WrongSignature";
    case ErrorKind::IrrationalInvariant: return "IrrationalInvariant";
    case ErrorKind::Unclassifiable: return "Unclassifiable";
    case ErrorKind::MetricMismatch: return "MetricMismatch";
    case ErrorKind::InvalidStructure: return "InvalidStructure";
    case ErrorKind::DegenerateW: return "DegenerateW";
    case ErrorKind::HNotClosed: return "HNotClosed";
    case ErrorKind::NotReductive: return "NotReductive";
    case ErrorKind::NotNaturallyReductive: return "NotNaturallyReductive";
    case ErrorKind::ParamOutOfDomain: return "ParamOutOfDomain";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorKind::Singular, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);

  const auto slash = trimmed.find('/');
  const auto num = trimmed.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : trimmed.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw Error(ErrorKind::Parse, "not a rational literal: \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den.front() == '+' ? den.substr(1) : den), 10);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in \"" + std::string(text) + "\"");
  Rational r;
  r.value_ = mpq_class(n, d);
  r.value_.canonicalize();
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::Singular, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::optional<Rational> Rational::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  const mpz_class num = value_.get_num();
  const mpz_class den = value_.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace nrs
