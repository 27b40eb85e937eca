#ifndef NRS_NR_STRUCTURE_HPP
#define NRS_NR_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "nrs/lie_algebra.hpp"
#include "nrs/matrix.hpp"
#include "nrs/metric_space.hpp"

namespace nrs {

/// Antisymmetric vector-valued bilinear map; value(i, j) = T(X_i, X_j).
class TorsionTensor {
 public:
  TorsionTensor() = default;
  explicit TorsionTensor(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Vector& value(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  /// Sets T(X_i, X_j) = v and T(X_j, X_i) = -v.
  void set(std::size_t i, std::size_t j, const Vector& v);
  Vector operator()(const Vector& x, const Vector& y) const;
  bool is_zero() const;

  friend bool operator==(const TorsionTensor& a, const TorsionTensor& b) { return a.table_ == b.table_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Vector> table_;
};

/// Antisymmetric endomorphism-valued bilinear map; value(i, j) = R(X_i, X_j).
class CurvatureTensor {
 public:
  CurvatureTensor() = default;
  explicit CurvatureTensor(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Matrix& value(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, const Matrix& m);
  Matrix operator()(const Vector& x, const Vector& y) const;
  bool is_zero() const;
  /// The values R(X_i, X_j), i < j.
  std::vector<Matrix> operators() const;

  friend bool operator==(const CurvatureTensor& a, const CurvatureTensor& b) { return a.table_ == b.table_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Matrix> table_;
};

/// A metric vector space with the torsion and curvature of a canonical connection.
struct NRStructure {
  MetricSpace space;
  TorsionTensor torsion;
  CurvatureTensor curvature;

  friend bool operator==(const NRStructure& a, const NRStructure& b) {
    return a.space == b.space && a.torsion == b.torsion && a.curvature == b.curvature;
  }
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  /// torsion_alternating, curvature_skew, derivation, h_closed, bianchi_first, bianchi_second
  std::vector<CheckResult> checks;
  bool valid() const;
  const CheckResult& check(const std::string& name) const;
};

ValidationReport validate_structure(const NRStructure& s);

/// Basis (canonical) of h = span{R(X_i, X_j)} as matrices.
std::vector<Matrix> curvature_span(const CurvatureTensor& r);

/// (A.T)(X,Y) = A T(X,Y) - T(AX,Y) - T(X,AY)
TorsionTensor derivation_action(const Matrix& a, const TorsionTensor& t);
/// (A.R)(X,Y) = [A, R(X,Y)] - R(AX,Y) - R(X,AY)
CurvatureTensor derivation_action(const Matrix& a, const CurvatureTensor& r);

enum class TorsionFamily { LorentzOrthonormal, NeutralOrthonormal, NeutralWitt };

const char* to_string(TorsionFamily f);
TorsionFamily torsion_family_from_string(const std::string& name);
MetricSpace family_metric(TorsionFamily f);
TorsionTensor torsion_from_family(TorsionFamily f, const Rational& a, const Rational& b, const Rational& c,
                                  const Rational& d);

/// On diag(-1,1,1,1): T12 = aX3+bX4, T13 = -aX2+cX4, T14 = -bX2-cX3, T23 = -aX1+dX4, T24 = -bX1-dX3, T34 = -cX1+dX2.
TorsionTensor torsion_lorentz_orthonormal(const Rational& a, const Rational& b, const Rational& c, const Rational& d);
/// On diag(-1,-1,1,1): T12 = aX3+bX4, T13 = aX2+cX4, T14 = bX2-cX3, T23 = -aX1+dX4, T24 = -bX1-dX3, T34 = -cX1-dX2.
TorsionTensor torsion_neutral_orthonormal(const Rational& a, const Rational& b, const Rational& c, const Rational& d);
/// On the Witt Gram: T12 = cX1-aX2, T13 = dX1+aX3, T14 = dX2+cX3, T23 = -bX1+aX4, T24 = -bX2+cX4, T34 = bX3+dX4.
TorsionTensor torsion_neutral_witt(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

/// Parameter tuples (a,b,c,d) with A.T(a,b,c,d) = 0. Throws MetricMismatch, NotSkew.
Subspace torsion_constraints(const MetricSpace& s, const Matrix& a_op, TorsionFamily family);

/// D_X as a matrix: D_X Y = -1/2 T(X, Y).
Matrix difference_operator(const TorsionTensor& t, const Vector& x);

/// R(X,Y) = R~(X,Y) + [D_X, D_Y] + D_{T(X,Y)}. Throws InvalidStructure.
CurvatureTensor levi_civita_curvature(const NRStructure& s);

/// Dense table of (nabla_{X_i} R)(X_j, X_k) X_l.
class CurvatureDerivative {
 public:
  explicit CurvatureDerivative(std::size_t dim = 0) : dim_(dim), table_(dim * dim * dim * dim, Vector(dim)) {}
  std::size_t dim() const { return dim_; }
  const Vector& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const { return table_[index(i, j, k, l)]; }
  Vector& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) { return table_[index(i, j, k, l)]; }
  bool is_zero() const;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return ((i * dim_ + j) * dim_ + k) * dim_ + l;
  }
  std::size_t dim_;
  std::vector<Vector> table_;
};

/// (nabla_X R)(Y,Z)W = -1/2 T(X, R(Y,Z)W) + 1/2 R(T(X,Y),Z)W + 1/2 R(Y,T(X,Z))W + 1/2 R(Y,Z)T(X,W).
/// Throws InvalidStructure.
CurvatureDerivative covariant_derivative_R(const NRStructure& s);

enum class SymmetryReason { None, NablaRZero, TorsionZero, IntrinsicCurvatureZero };
const char* to_string(SymmetryReason r);

struct GeometryVerdict {
  bool flat = false;
  bool locally_symmetric = false;
  SymmetryReason reason = SymmetryReason::None;
};

/// Throws InvalidStructure.
GeometryVerdict classify_geometry(const NRStructure& s);

/// Smallest space of operators containing the Levi-Civita curvature operators, closed under
/// commutators and under [D_{X_i}, .]. Basis matrices, canonical. Throws InvalidStructure.
std::vector<Matrix> holonomy(const NRStructure& s);
/// Subspace of flattened n x n matrices spanned by the given operators.
Subspace operator_span(const std::vector<Matrix>& ops, std::size_t dim);

/// Both projection identities for W and its orthogonal complement:
/// T(pX, pY) = p T(X,Y) and R~(pX, pY) pZ = p R~(X,Y) Z. Throws DegenerateW.
bool check_projection_conditions(const NRStructure& s, const Subspace& w);

enum class Decomposability { Decomposable, Indecomposable, Unknown };
const char* to_string(Decomposability d);

struct DecompositionVerdict {
  Decomposability verdict = Decomposability::Unknown;
  /// torsion_span, holonomy_commutant, given_subspace, or none
  std::string route = "none";
  std::optional<Subspace> witness;
  std::optional<bool> projection_conditions;
  std::string note;
};

/// W = span of torsion values; Decomposable when W is proper, nondegenerate and the projection
/// identities hold. Needs no validity (works on partial fixtures); otherwise Unknown.
DecompositionVerdict decompose_by_torsion_span(const NRStructure& s);
/// Same test on a caller-supplied subspace.
DecompositionVerdict decompose_along(const NRStructure& s, const Subspace& w);
/// Full pipeline: torsion span first, then the holonomy commutant. Throws InvalidStructure.
DecompositionVerdict decompose(const NRStructure& s);

/// g = m + h with h = span{R~(X_i, X_j)} realized as operators on m. An explicit `h_basis` may span a
/// larger space containing the curvature values; labels name the h elements (default A1, A2, ...).
/// Throws HNotClosed, InvalidStructure.
ReductiveSplit build_lie_algebra(const NRStructure& s, const std::vector<Matrix>& h_basis = {},
                                 const std::vector<std::string>& h_labels = {});

/// T(X,Y) = -[X,Y]_m and R~(X,Y) = ad([X,Y]_h) restricted to m. Throws NotReductive, NotNaturallyReductive.
NRStructure nr_from_split(const ReductiveSplit& split);

}  // namespace nrs

#endif
