#include "nrs/invariant_splitting.hpp"

#include <random>

#include "nrs/error.hpp"
#include "nrs/polynomial.hpp"

namespace nrs {

std::vector<Matrix> self_adjoint_commutant(const MetricSpace& s, const std::vector<Matrix>& generators) {
  const std::size_t n = s.dim();
  const std::size_t unknowns = n * n;
  auto unit = [&](std::size_t idx) {
    Matrix e(n, n);
    e(idx / n, idx % n) = 1;
    return e;
  };
  // Each linear condition L(P) = 0 contributes n*n rows, column idx holding L(E_idx).
  std::vector<std::function<Matrix(const Matrix&)>> conditions;
  for (const auto& h : generators) conditions.emplace_back([&h](const Matrix& p) { return commutator(p, h); });
  const Matrix& g = s.gram();
  conditions.emplace_back([&g](const Matrix& p) { return g * p - p.transpose() * g; });

  Matrix sys(conditions.size() * unknowns, unknowns);
  for (std::size_t idx = 0; idx < unknowns; ++idx) {
    const Matrix e = unit(idx);
    for (std::size_t c = 0; c < conditions.size(); ++c) {
      const Vector col = conditions[c](e).flatten();
      for (std::size_t r = 0; r < unknowns; ++r) sys(c * unknowns + r, idx) = col[r];
    }
  }
  std::vector<Matrix> out;
  for (const auto& v : kernel(sys).vectors()) out.push_back(Matrix::unflatten(v, n, n));
  return out;
}

bool is_invariant(const Subspace& w, const std::vector<Matrix>& generators) {
  for (const auto& h : generators) {
    for (const auto& v : w.vectors()) {
      if (!w.contains(h * v)) return false;
    }
  }
  return true;
}

namespace {

Matrix jordan(const Matrix& a, const Matrix& b) { return Rational(1, 2) * (a * b + b * a); }

/// Idempotents built from coprime factorizations of the minimal polynomial of x.
std::vector<Matrix> idempotents_from(const Matrix& x) {
  std::vector<Matrix> out;
  const Polynomial m = minimal_polynomial(x);
  for (const auto& r : rational_roots(m)) {
    const unsigned k = root_multiplicity(m, r);
    Polynomial f = Polynomial::constant(1);
    for (unsigned i = 0; i < k; ++i) f = f * Polynomial::linear_root(r);
    const Polynomial g = divmod(m, f).first;
    if (g.degree() < 1) continue;
    const auto eg = extended_gcd(f, g);
    out.push_back((eg.v * g)(x));
  }
  return out;
}

Subspace image(const Matrix& p) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < p.cols(); ++c) cols.push_back(p.column(c));
  return Subspace::span(cols, p.rows());
}

/// Radical of the trace form tr(xy) restricted to the commutant, as flattened matrices.
std::vector<Vector> trace_form_radical(const std::vector<Matrix>& basis, std::size_t n) {
  const std::size_t k = basis.size();
  Matrix form(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) form(a, b) = form(b, a) = (basis[a] * basis[b]).trace();
  std::vector<Vector> radical;
  for (const auto& coeffs : kernel(form).vectors()) {
    Matrix r(n, n);
    for (std::size_t a = 0; a < k; ++a) r += coeffs[a] * basis[a];
    radical.push_back(r.flatten());
  }
  return radical;
}

/// Decides whether the commutant has a nontrivial idempotent over the reals from its quotient by
/// the nil radical; writes the justification to `certificate`.
bool real_idempotent_exists(const std::vector<Matrix>& basis, const std::vector<Vector>& radical, std::size_t n,
                            std::string& certificate) {
  const std::size_t k = basis.size();
  const Subspace rad = Subspace::span(radical, n * n);
  const std::size_t quotient_dim = k - radical.size();
  if (quotient_dim <= 1) {
    certificate = "self-adjoint commutant is scalars plus a nil ideal";
    return false;
  }
  // Traceless part of the commutant, reduced modulo the radical.
  std::vector<Vector> traceless;
  for (const auto& b : basis) {
    const Rational t = b.trace() / Rational(static_cast<long>(n));
    traceless.push_back((b - t * Matrix::identity(n)).flatten());
  }
  std::vector<Matrix> complement;
  Subspace acc = rad;
  for (const auto& v : traceless) {
    if (acc.contains(v)) continue;
    complement.push_back(Matrix::unflatten(v, n, n));
    acc = acc + Subspace::span(std::vector<Vector>{v}, n * n);
  }
  const Subspace scalars_plus_rad = rad + Subspace::span(std::vector<Vector>{Matrix::identity(n).flatten()}, n * n);
  const std::size_t d = complement.size();
  Matrix q(d, d);
  bool spin = true;
  for (std::size_t a = 0; a < d && spin; ++a) {
    for (std::size_t b = a; b < d && spin; ++b) {
      const Vector prod = jordan(complement[a], complement[b]).flatten();
      if (!scalars_plus_rad.contains(prod)) {
        spin = false;
        break;
      }
      // Coefficient of I: the radical part is traceless.
      q(a, b) = q(b, a) = Matrix::unflatten(prod, n, n).trace() / Rational(static_cast<long>(n));
    }
  }
  if (spin && signature_of(q) == Signature{d, 0}) {
    certificate = "commutant modulo its nil radical is a spin factor with negative-definite form (no idempotents)";
    return false;
  }
  certificate = "commutant modulo its nil radical has a nontrivial idempotent over the reals";
  return true;
}

}  // namespace

SplittingResult find_invariant_splitting(const MetricSpace& s, const std::vector<Matrix>& generators,
                                         const std::function<bool(const Subspace&)>& prefer) {
  const std::size_t n = s.dim();
  SplittingResult res;
  const auto basis = self_adjoint_commutant(s, generators);
  res.commutant_dim = basis.size();

  const std::size_t k = basis.size();
  const auto radical = trace_form_radical(basis, n);
  res.radical_dim = radical.size();

  // Rational witness search.
  std::vector<Matrix> candidates = basis;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      candidates.push_back(basis[a] + basis[b]);
      candidates.push_back(basis[a] - basis[b]);
      candidates.push_back(jordan(basis[a], basis[b]));
    }
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int t = 0; t < 24 && k > 1; ++t) {
    Matrix x(n, n);
    for (const auto& b : basis) x += Rational(coef(rng)) * b;
    candidates.push_back(x);
  }
  std::optional<Subspace> first;
  for (const auto& x : candidates) {
    for (const auto& e : idempotents_from(x)) {
      for (const Matrix& p : {e, Matrix::identity(n) - e}) {
        Subspace w = image(p);
        if (!first) first = w;
        if (prefer && prefer(w)) {
          res.exists = true;
          res.witness = std::move(w);
          res.witness_preferred = true;
          res.certificate = "self-adjoint idempotent in the commutant";
          return res;
        }
      }
    }
    if (first && !prefer) break;
  }
  if (first) {
    res.exists = true;
    res.witness = first;
    res.certificate = "self-adjoint idempotent in the commutant";
    return res;
  }

  res.exists = real_idempotent_exists(basis, radical, n, res.certificate);
  if (res.exists) res.certificate += "; no rational witness found";
  return res;
}

bool has_invariant_splitting(const MetricSpace& s, const std::vector<Matrix>& generators) {
  const auto basis = self_adjoint_commutant(s, generators);
  std::string certificate;
  return real_idempotent_exists(basis, trace_form_radical(basis, s.dim()), s.dim(), certificate);
}

}  // namespace nrs
