#include "nrs/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nrs/error.hpp"

namespace nrs {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::vector<Rational> Polynomial::descending() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return (Rational(1) / leading()) * *this;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * coeffs_[i]);
  return Polynomial(std::move(d));
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Polynomial::operator()(const Matrix& m) const {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "polynomial of non-square matrix");
  Matrix acc(m.rows(), m.cols());
  const Matrix id = Matrix::identity(m.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + *it * id;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> c = p.coeffs_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != Rational(1)) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::Singular, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = rem[static_cast<std::size_t>(i)] / lead;
    quo[static_cast<std::size_t>(i - db)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational inv = Rational(1) / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

bool is_squarefree(const Polynomial& p) { return gcd(p, p.derivative()).degree() <= 0; }

namespace {

/// Positive divisors of |n| (n != 0), found by trial division.
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (mpz_class p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  std::set<Rational> roots;
  if (p.degree() <= 0) return {};
  // Strip the root at zero, then clear denominators.
  std::size_t low = 0;
  while (p.coeff(low).is_zero()) ++low;
  if (low > 0) roots.insert(Rational(0));
  std::vector<Rational> rest(p.coeffs().begin() + static_cast<std::ptrdiff_t>(low), p.coeffs().end());
  if (rest.size() > 1) {
    mpz_class lcm = 1;
    for (const auto& c : rest) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    const Polynomial q(rest);
    const mpz_class a0 = (rest.front() * Rational(mpq_class(lcm))).numerator();
    const mpz_class an = (rest.back() * Rational(mpq_class(lcm))).numerator();
    for (const auto& num : divisors(a0)) {
      for (const auto& den : divisors(an)) {
        for (int s : {1, -1}) {
          const Rational cand(mpq_class(s * num, den));
          if (q(cand).is_zero()) roots.insert(cand);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

unsigned root_multiplicity(const Polynomial& p, const Rational& r) {
  if (p.is_zero()) return 0;
  unsigned m = 0;
  Polynomial q = p;
  const Polynomial lin = Polynomial::linear_root(r);
  while (q.degree() > 0) {
    auto [quo, rem] = divmod(q, lin);
    if (!rem.is_zero()) break;
    q = quo;
    ++m;
  }
  return m;
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  const Matrix id = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Vector> powers{Matrix::identity(n).flatten()};
  Matrix p = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    p = p * m;
    const Vector target = p.flatten();
    const auto sol = solve_linear(Matrix::from_columns(powers, n * n), target);
    if (sol.particular) {
      std::vector<Rational> coeffs(k + 1);
      for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*sol.particular)[i];
      coeffs[k] = 1;
      return Polynomial(std::move(coeffs));
    }
    powers.push_back(target);
  }
  throw Error(ErrorKind::Singular, "minimal polynomial search exceeded the dimension");
}

}  // namespace nrs
