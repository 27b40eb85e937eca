#ifndef NRS_METRIC_SPACE_HPP
#define NRS_METRIC_SPACE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nrs/matrix.hpp"

namespace nrs {

/// (negative count, positive count)
using Signature = std::pair<std::size_t, std::size_t>;

/// Finite-dimensional real vector space with a symmetric nondegenerate rational Gram matrix.
class MetricSpace {
 public:
  MetricSpace() = default;

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Signature signature() const { return signature_; }

  Rational inner(const Vector& u, const Vector& v) const { return dot(u, gram_ * v); }

  friend bool operator==(const MetricSpace& a, const MetricSpace& b) {
    return a.gram_ == b.gram_ && a.labels_ == b.labels_;
  }

 private:
  friend MetricSpace validate_metric(const Matrix& gram, std::vector<std::string> labels);
  Matrix gram_;
  std::vector<std::string> labels_;
  Signature signature_{0, 0};
};

/// Sylvester counts of a symmetric matrix by exact congruence diagonalization.
/// Returns (negative, positive); zero directions are not counted.
Signature signature_of(const Matrix& symmetric);

/// Throws NotSymmetric, Degenerate. Empty labels default to X1..Xn.
MetricSpace validate_metric(const Matrix& gram, std::vector<std::string> labels = {});

/// diag(-1,1,1,1)
MetricSpace lorentz_orthonormal_metric();
/// diag(-1,-1,1,1)
MetricSpace neutral_orthonormal_metric();
/// <X2,X3> = 1, <X1,X4> = -1, all other pairs zero.
MetricSpace neutral_witt_metric();

/// True iff mat^T G + G mat = 0.
bool is_skew_adjoint(const MetricSpace& s, const Matrix& mat);
/// True iff G mat is symmetric.
bool is_self_adjoint(const MetricSpace& s, const Matrix& mat);
/// The metric adjoint G^{-1} mat^T G.
Matrix adjoint(const MetricSpace& s, const Matrix& mat);

Subspace perp(const Subspace& w, const MetricSpace& s);
/// basis^T G basis for the canonical basis of w.
Matrix restricted_gram(const Subspace& w, const MetricSpace& s);
bool is_nondegenerate_on(const Subspace& w, const MetricSpace& s);

/// Q = (I - S)(I + S)^{-1}. Throws NotSkew, SingularCayley.
Matrix cayley_orthogonal(const MetricSpace& s, const Matrix& skew);

/// Random skew-adjoint operator: G^{-1} K with K antisymmetric, entries p/q with |p| <= bound, 1 <= q <= bound.
Matrix random_skew(const MetricSpace& s, std::mt19937_64& rng, int bound = 3);
/// Random rational with numerator in [-bound, bound] and denominator in [1, bound].
Rational random_rational(std::mt19937_64& rng, int bound);

/// Orthogonal projector onto w along perp(w). Throws DegenerateW if w is degenerate.
Matrix orthogonal_projector(const Subspace& w, const MetricSpace& s);

}  // namespace nrs

#endif
