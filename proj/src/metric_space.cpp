#include "nrs/metric_space.hpp"

#include "nrs/error.hpp"

namespace nrs {

Signature signature_of(const Matrix& symmetric) {
  if (!symmetric.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "signature of a non-symmetric matrix");
  Matrix a = symmetric;
  const std::size_t n = a.rows();
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  Signature sig{0, 0};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, piv).is_zero()) ++piv;
    if (piv == n) {
      // No usable diagonal entry: combine two directions with a nonzero cross term.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i) {
        for (std::size_t j = i + 1; j < n && !found; ++j) {
          if (a(i, j).is_zero()) continue;
          for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
          for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
          piv = i;
          found = true;
        }
      }
      if (!found) break;
    }
    swap_index(k, piv);
    const Rational d = a(k, k);
    (d.sign() < 0 ? sig.first : sig.second) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      const Rational f = a(r, k) / d;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
      for (std::size_t c = k; c < n; ++c) a(c, r) = a(r, c);
    }
  }
  return sig;
}

MetricSpace validate_metric(const Matrix& gram, std::vector<std::string> labels) {
  if (!gram.is_square()) throw Error(ErrorKind::ShapeMismatch, "Gram matrix must be square");
  if (!gram.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "Gram matrix is not symmetric");
  if (determinant(gram).is_zero()) throw Error(ErrorKind::Degenerate, "Gram matrix has zero determinant");
  if (labels.empty()) {
    for (std::size_t i = 0; i < gram.rows(); ++i) labels.push_back("X" + std::to_string(i + 1));
  }
  if (labels.size() != gram.rows()) throw Error(ErrorKind::ShapeMismatch, "label count differs from dimension");
  MetricSpace s;
  s.gram_ = gram;
  s.labels_ = std::move(labels);
  s.signature_ = signature_of(gram);
  return s;
}

MetricSpace lorentz_orthonormal_metric() { return validate_metric(Matrix::diagonal({-1, 1, 1, 1})); }

MetricSpace neutral_orthonormal_metric() { return validate_metric(Matrix::diagonal({-1, -1, 1, 1})); }

MetricSpace neutral_witt_metric() {
  return validate_metric(Matrix{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}});
}

namespace {

void require_conforming(const MetricSpace& s, const Matrix& mat) {
  if (mat.rows() != s.dim() || mat.cols() != s.dim()) {
    throw Error(ErrorKind::ShapeMismatch, "operator does not conform to the metric space");
  }
}

}  // namespace

bool is_skew_adjoint(const MetricSpace& s, const Matrix& mat) {
  require_conforming(s, mat);
  return (mat.transpose() * s.gram() + s.gram() * mat).is_zero();
}

bool is_self_adjoint(const MetricSpace& s, const Matrix& mat) {
  require_conforming(s, mat);
  return (s.gram() * mat).is_symmetric();
}

Matrix adjoint(const MetricSpace& s, const Matrix& mat) {
  require_conforming(s, mat);
  return inverse(s.gram()) * mat.transpose() * s.gram();
}

Subspace perp(const Subspace& w, const MetricSpace& s) {
  if (w.ambient_dim() != s.dim()) throw Error(ErrorKind::ShapeMismatch, "perp: ambient dimension mismatch");
  if (w.dim() == 0) return Subspace::full(s.dim());
  return kernel(w.basis().transpose() * s.gram());
}

Matrix restricted_gram(const Subspace& w, const MetricSpace& s) {
  if (w.ambient_dim() != s.dim()) throw Error(ErrorKind::ShapeMismatch, "restricted Gram: ambient dimension mismatch");
  return w.basis().transpose() * s.gram() * w.basis();
}

bool is_nondegenerate_on(const Subspace& w, const MetricSpace& s) {
  if (w.dim() == 0) return true;
  return !determinant(restricted_gram(w, s)).is_zero();
}

Matrix cayley_orthogonal(const MetricSpace& s, const Matrix& skew) {
  if (!is_skew_adjoint(s, skew)) throw Error(ErrorKind::NotSkew, "Cayley transform needs a skew-adjoint operator");
  const Matrix id = Matrix::identity(s.dim());
  const Matrix plus = id + skew;
  if (determinant(plus).is_zero()) throw Error(ErrorKind::SingularCayley, "I + S is singular");
  return (id - skew) * inverse(plus);
}

Rational random_rational(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  const long n = num(rng);
  return Rational(n, den(rng));
}

Matrix random_skew(const MetricSpace& s, std::mt19937_64& rng, int bound) {
  const std::size_t n = s.dim();
  Matrix k(n, n);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      k(i, j) = random_rational(rng, bound);
      k(j, i) = -k(i, j);
    }
  }
  return inverse(s.gram()) * k;
}

Matrix orthogonal_projector(const Subspace& w, const MetricSpace& s) {
  if (w.dim() == 0) return Matrix(s.dim(), s.dim());
  const Matrix rg = restricted_gram(w, s);
  if (determinant(rg).is_zero()) throw Error(ErrorKind::DegenerateW, "subspace is degenerate");
  return w.basis() * inverse(rg) * w.basis().transpose() * s.gram();
}

}  // namespace nrs
