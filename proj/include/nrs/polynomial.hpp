#ifndef NRS_POLYNOMIAL_HPP
#define NRS_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "nrs/matrix.hpp"
#include "nrs/rational.hpp"

namespace nrs {

/// Univariate polynomial over Q. coeffs()[i] is the coefficient of x^i; no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
  /// x - r
  static Polynomial linear_root(const Rational& r) { return Polynomial({-r, Rational(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i (zero past the degree).
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  /// Coefficients from the leading one down to the constant term.
  std::vector<Rational> descending() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational operator()(const Rational& x) const;
  Matrix operator()(const Matrix& m) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form in the variable `var`, e.g. "x^4 + x^2".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws Error(Singular) on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
  Polynomial g, u, v;  ///< u·a + v·b = g, g monic
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

bool is_squarefree(const Polynomial& p);
/// Distinct rational roots, ascending (rational root theorem).
std::vector<Rational> rational_roots(const Polynomial& p);
/// Multiplicity of r as a root of p.
unsigned root_multiplicity(const Polynomial& p, const Rational& r);

/// det(xI - m) via Faddeev–LeVerrier.
Polynomial characteristic_polynomial(const Matrix& m);
/// Monic generator of {p : p(m) = 0}, found as the first linear dependence among powers of m.
Polynomial minimal_polynomial(const Matrix& m);

}  // namespace nrs

#endif
