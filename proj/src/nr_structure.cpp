#include "nrs/nr_structure.hpp"

#include <algorithm>

#include "nrs/error.hpp"
#include "nrs/invariant_splitting.hpp"

namespace nrs {

// ---------------------------------------------------------------- tensors

TorsionTensor::TorsionTensor(std::size_t dim) : dim_(dim), table_(dim * dim, Vector(dim)) {}

void TorsionTensor::set(std::size_t i, std::size_t j, const Vector& v) {
  if (i >= dim_ || j >= dim_ || v.size() != dim_) throw Error(ErrorKind::ShapeMismatch, "torsion index out of range");
  if (i == j) {
    if (!nrs::is_zero(v)) throw Error(ErrorKind::ShapeMismatch, "T(X_i, X_i) must vanish");
    return;
  }
  table_[i * dim_ + j] = v;
  table_[j * dim_ + i] = Rational(-1) * v;
}

Vector TorsionTensor::operator()(const Vector& x, const Vector& y) const {
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      out = out + (x[i] * y[j]) * value(i, j);
    }
  }
  return out;
}

bool TorsionTensor::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](const Vector& v) { return nrs::is_zero(v); });
}

CurvatureTensor::CurvatureTensor(std::size_t dim) : dim_(dim), table_(dim * dim, Matrix(dim, dim)) {}

void CurvatureTensor::set(std::size_t i, std::size_t j, const Matrix& m) {
  if (i >= dim_ || j >= dim_ || m.rows() != dim_ || m.cols() != dim_) {
    throw Error(ErrorKind::ShapeMismatch, "curvature index out of range");
  }
  if (i == j) {
    if (!m.is_zero()) throw Error(ErrorKind::ShapeMismatch, "R(X_i, X_i) must vanish");
    return;
  }
  table_[i * dim_ + j] = m;
  table_[j * dim_ + i] = -m;
}

Matrix CurvatureTensor::operator()(const Vector& x, const Vector& y) const {
  Matrix out(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      out += (x[i] * y[j]) * value(i, j);
    }
  }
  return out;
}

bool CurvatureTensor::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](const Matrix& m) { return m.is_zero(); });
}

std::vector<Matrix> CurvatureTensor::operators() const {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) out.push_back(value(i, j));
  return out;
}

Subspace operator_span(const std::vector<Matrix>& ops, std::size_t dim) {
  std::vector<Vector> flat;
  for (const auto& m : ops) flat.push_back(m.flatten());
  return Subspace::span(flat, dim * dim);
}

namespace {

std::vector<Matrix> as_operators(const Subspace& s, std::size_t dim) {
  std::vector<Matrix> out;
  for (const auto& v : s.vectors()) out.push_back(Matrix::unflatten(v, dim, dim));
  return out;
}

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

std::string pair_name(std::size_t i, std::size_t j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

std::string triple_name(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

void require_valid(const NRStructure& s) {
  const auto rep = validate_structure(s);
  if (!rep.valid()) {
    for (const auto& c : rep.checks) {
      if (!c.passed) throw Error(ErrorKind::InvalidStructure, c.name + ": " + c.detail);
    }
  }
}

}  // namespace

std::vector<Matrix> curvature_span(const CurvatureTensor& r) { return as_operators(operator_span(r.operators(), r.dim()), r.dim()); }

// ---------------------------------------------------------------- validation

bool ValidationReport::valid() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult& ValidationReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw Error(ErrorKind::ShapeMismatch, "no check named " + name);
}

TorsionTensor derivation_action(const Matrix& a, const TorsionTensor& t) {
  const std::size_t n = t.dim();
  TorsionTensor out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector xi = e(n, i), xj = e(n, j);
      out.set(i, j, a * t.value(i, j) - t(a * xi, xj) - t(xi, a * xj));
    }
  }
  return out;
}

CurvatureTensor derivation_action(const Matrix& a, const CurvatureTensor& r) {
  const std::size_t n = r.dim();
  CurvatureTensor out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector xi = e(n, i), xj = e(n, j);
      out.set(i, j, commutator(a, r.value(i, j)) - r(a * xi, xj) - r(xi, a * xj));
    }
  }
  return out;
}

ValidationReport validate_structure(const NRStructure& s) {
  const std::size_t n = s.space.dim();
  if (s.torsion.dim() != n || s.curvature.dim() != n) {
    throw Error(ErrorKind::ShapeMismatch, "tensor dimensions differ from the metric space");
  }
  const TorsionTensor& t = s.torsion;
  const CurvatureTensor& r = s.curvature;
  ValidationReport rep;

  CheckResult alt{"torsion_alternating", true, ""};
  for (std::size_t i = 0; i < n && alt.passed; ++i)
    for (std::size_t j = 0; j < n && alt.passed; ++j)
      for (std::size_t k = 0; k < n && alt.passed; ++k) {
        const Rational v = s.space.inner(t.value(i, j), e(n, k)) + s.space.inner(t.value(i, k), e(n, j));
        if (!v.is_zero()) {
          alt.passed = false;
          alt.detail = "<T(X_i,X_j),X_k> + <T(X_i,X_k),X_j> != 0 at " + triple_name(i, j, k);
        }
      }
  rep.checks.push_back(alt);

  CheckResult skew{"curvature_skew", true, ""};
  for (std::size_t i = 0; i < n && skew.passed; ++i)
    for (std::size_t j = i + 1; j < n && skew.passed; ++j)
      if (!is_skew_adjoint(s.space, r.value(i, j))) {
        skew.passed = false;
        skew.detail = "R(X_i,X_j) is not skew-adjoint at " + pair_name(i, j);
      }
  rep.checks.push_back(skew);

  const auto h = curvature_span(r);
  CheckResult der{"derivation", true, ""};
  for (std::size_t a = 0; a < h.size() && der.passed; ++a) {
    if (!derivation_action(h[a], t).is_zero()) {
      der.passed = false;
      der.detail = "A.T != 0 for curvature-span element " + std::to_string(a + 1);
    } else if (!derivation_action(h[a], r).is_zero()) {
      der.passed = false;
      der.detail = "A.R != 0 for curvature-span element " + std::to_string(a + 1);
    }
  }
  rep.checks.push_back(der);

  CheckResult closed{"h_closed", true, ""};
  const Subspace hs = operator_span(h, n);
  for (std::size_t a = 0; a < h.size() && closed.passed; ++a)
    for (std::size_t b = a + 1; b < h.size() && closed.passed; ++b)
      if (!hs.contains(commutator(h[a], h[b]).flatten())) {
        closed.passed = false;
        closed.detail = "commutator of curvature-span elements " + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                        " leaves the span";
      }
  rep.checks.push_back(closed);

  CheckResult b1{"bianchi_first", true, ""};
  CheckResult b2{"bianchi_second", true, ""};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector x = e(n, i), y = e(n, j), z = e(n, k);
        if (b1.passed) {
          const Vector lhs = r(x, y) * z + r(y, z) * x + r(z, x) * y;
          const Vector rhs = t(t(x, y), z) + t(t(y, z), x) + t(t(z, x), y);
          if (lhs != rhs) {
            b1.passed = false;
            b1.detail = "cyclic sum R(X,Y)Z != cyclic sum T(T(X,Y),Z) at " + triple_name(i, j, k);
          }
        }
        if (b2.passed) {
          const Matrix sum = r(t(x, y), z) + r(t(y, z), x) + r(t(z, x), y);
          if (!sum.is_zero()) {
            b2.passed = false;
            b2.detail = "cyclic sum R(T(X,Y),Z) != 0 at " + triple_name(i, j, k);
          }
        }
      }
    }
  }
  rep.checks.push_back(b1);
  rep.checks.push_back(b2);
  return rep;
}

// ---------------------------------------------------------------- torsion families

const char* to_string(TorsionFamily f) {
  switch (f) {
    case TorsionFamily::LorentzOrthonormal: return "lorentz";
    case TorsionFamily::NeutralOrthonormal: return "neutral-orthonormal";
    case TorsionFamily::NeutralWitt: return "neutral-witt";
  }
  return "unknown";
}

TorsionFamily torsion_family_from_string(const std::string& name) {
  for (auto f : {TorsionFamily::LorentzOrthonormal, TorsionFamily::NeutralOrthonormal, TorsionFamily::NeutralWitt})
    if (name == to_string(f)) return f;
  throw Error(ErrorKind::Parse, "unknown torsion family \"" + name + "\" (expected lorentz, neutral-orthonormal or neutral-witt)");
}

MetricSpace family_metric(TorsionFamily f) {
  switch (f) {
    case TorsionFamily::LorentzOrthonormal: return lorentz_orthonormal_metric();
    case TorsionFamily::NeutralOrthonormal: return neutral_orthonormal_metric();
    case TorsionFamily::NeutralWitt: return neutral_witt_metric();
  }
  throw Error(ErrorKind::Parse, "unknown torsion family");
}

namespace {

Vector combo(std::initializer_list<std::pair<std::size_t, Rational>> terms) {
  Vector v(4);
  for (const auto& [idx, c] : terms) v[idx - 1] += c;
  return v;
}

}  // namespace

TorsionTensor torsion_lorentz_orthonormal(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  TorsionTensor t(4);
  t.set(0, 1, combo({{3, a}, {4, b}}));
  t.set(0, 2, combo({{2, -a}, {4, c}}));
  t.set(0, 3, combo({{2, -b}, {3, -c}}));
  t.set(1, 2, combo({{1, -a}, {4, d}}));
  t.set(1, 3, combo({{1, -b}, {3, -d}}));
  t.set(2, 3, combo({{1, -c}, {2, d}}));
  return t;
}

TorsionTensor torsion_neutral_orthonormal(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  TorsionTensor t(4);
  t.set(0, 1, combo({{3, a}, {4, b}}));
  t.set(0, 2, combo({{2, a}, {4, c}}));
  t.set(0, 3, combo({{2, b}, {3, -c}}));
  t.set(1, 2, combo({{1, -a}, {4, d}}));
  t.set(1, 3, combo({{1, -b}, {3, -d}}));
  t.set(2, 3, combo({{1, -c}, {2, -d}}));
  return t;
}

TorsionTensor torsion_neutral_witt(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  TorsionTensor t(4);
  t.set(0, 1, combo({{1, c}, {2, -a}}));
  t.set(0, 2, combo({{1, d}, {3, a}}));
  t.set(0, 3, combo({{2, d}, {3, c}}));
  t.set(1, 2, combo({{1, -b}, {4, a}}));
  t.set(1, 3, combo({{2, -b}, {4, c}}));
  t.set(2, 3, combo({{3, b}, {4, d}}));
  return t;
}

TorsionTensor torsion_from_family(TorsionFamily f, const Rational& a, const Rational& b, const Rational& c,
                                  const Rational& d) {
  switch (f) {
    case TorsionFamily::LorentzOrthonormal: return torsion_lorentz_orthonormal(a, b, c, d);
    case TorsionFamily::NeutralOrthonormal: return torsion_neutral_orthonormal(a, b, c, d);
    case TorsionFamily::NeutralWitt: return torsion_neutral_witt(a, b, c, d);
  }
  throw Error(ErrorKind::Parse, "unknown torsion family");
}

Subspace torsion_constraints(const MetricSpace& s, const Matrix& a_op, TorsionFamily family) {
  if (s.gram() != family_metric(family).gram()) {
    throw Error(ErrorKind::MetricMismatch, std::string("metric differs from the Gram matrix of the ") + to_string(family) +
                                               " torsion family");
  }
  if (!is_skew_adjoint(s, a_op)) throw Error(ErrorKind::NotSkew, "operator is not skew-adjoint");
  // Columns: the derivation applied to the torsion of each unit parameter tuple.
  const std::size_t n = 4;
  Matrix sys(n * n * n, 4);
  for (std::size_t p = 0; p < 4; ++p) {
    Vector params(4);
    params[p] = 1;
    const auto t = derivation_action(a_op, torsion_from_family(family, params[0], params[1], params[2], params[3]));
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) sys(row++, p) = t.value(i, j)[k];
  }
  return kernel(sys);
}

// ---------------------------------------------------------------- Riemannian quantities

Matrix difference_operator(const TorsionTensor& t, const Vector& x) {
  const std::size_t n = t.dim();
  Matrix d(n, n);
  for (std::size_t j = 0; j < n; ++j) d.set_column(j, Rational(-1, 2) * t(x, e(n, j)));
  return d;
}

CurvatureTensor levi_civita_curvature(const NRStructure& s) {
  require_valid(s);
  const std::size_t n = s.space.dim();
  std::vector<Matrix> dx;
  for (std::size_t i = 0; i < n; ++i) dx.push_back(difference_operator(s.torsion, e(n, i)));
  CurvatureTensor out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.set(i, j, s.curvature.value(i, j) + commutator(dx[i], dx[j]) +
                        difference_operator(s.torsion, s.torsion.value(i, j)));
    }
  }
  return out;
}

bool CurvatureDerivative::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](const Vector& v) { return nrs::is_zero(v); });
}

CurvatureDerivative covariant_derivative_R(const NRStructure& s) {
  const CurvatureTensor r = levi_civita_curvature(s);
  const TorsionTensor& t = s.torsion;
  const std::size_t n = s.space.dim();
  const Rational half(1, 2);
  CurvatureDerivative out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = e(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector y = e(n, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector z = e(n, k);
        const Matrix ryz = r.value(j, k);
        const Matrix r1 = r(t(x, y), z);
        const Matrix r2 = r(y, t(x, z));
        for (std::size_t l = 0; l < n; ++l) {
          const Vector w = e(n, l);
          out.at(i, j, k, l) = Rational(-1, 2) * t(x, ryz * w) + half * (r1 * w) + half * (r2 * w) + half * (ryz * t(x, w));
        }
      }
    }
  }
  return out;
}

const char* to_string(SymmetryReason r) {
  switch (r) {
    case SymmetryReason::None: return "none";
    case SymmetryReason::NablaRZero: return "nabla_R_zero";
    case SymmetryReason::TorsionZero: return "null_torsion";
    case SymmetryReason::IntrinsicCurvatureZero: return "null_intrinsic_curvature";
  }
  return "none";
}

GeometryVerdict classify_geometry(const NRStructure& s) {
  GeometryVerdict v;
  v.flat = levi_civita_curvature(s).is_zero();
  v.locally_symmetric = covariant_derivative_R(s).is_zero();
  if (s.torsion.is_zero()) {
    v.reason = SymmetryReason::TorsionZero;
  } else if (s.curvature.is_zero()) {
    v.reason = SymmetryReason::IntrinsicCurvatureZero;
  } else if (v.locally_symmetric) {
    v.reason = SymmetryReason::NablaRZero;
  }
  return v;
}

std::vector<Matrix> holonomy(const NRStructure& s) {
  const CurvatureTensor r = levi_civita_curvature(s);
  const std::size_t n = s.space.dim();
  std::vector<Matrix> lambda;
  for (std::size_t i = 0; i < n; ++i) lambda.push_back(difference_operator(s.torsion, e(n, i)));
  Subspace cur = operator_span(r.operators(), n);
  while (true) {
    const auto ops = as_operators(cur, n);
    std::vector<Matrix> grown = ops;
    for (std::size_t a = 0; a < ops.size(); ++a) {
      for (std::size_t b = a + 1; b < ops.size(); ++b) grown.push_back(commutator(ops[a], ops[b]));
      for (const auto& l : lambda) grown.push_back(commutator(l, ops[a]));
    }
    Subspace next = operator_span(grown, n);
    if (next.dim() == cur.dim()) return ops;
    cur = std::move(next);
  }
}

// ---------------------------------------------------------------- decomposition

bool check_projection_conditions(const NRStructure& s, const Subspace& w) {
  const std::size_t n = s.space.dim();
  const Matrix p1 = orthogonal_projector(w, s.space);
  const Matrix p2 = Matrix::identity(n) - p1;
  for (const Matrix* p : {&p1, &p2}) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vector px = *p * e(n, i);
      for (std::size_t j = 0; j < n; ++j) {
        const Vector py = *p * e(n, j);
        if (s.torsion(px, py) != *p * s.torsion.value(i, j)) return false;
        const Matrix rp = s.curvature(px, py) * *p;
        const Matrix pr = *p * s.curvature.value(i, j);
        if (rp != pr) return false;
      }
    }
  }
  return true;
}

const char* to_string(Decomposability d) {
  switch (d) {
    case Decomposability::Decomposable: return "decomposable";
    case Decomposability::Indecomposable: return "indecomposable";
    case Decomposability::Unknown: return "unknown";
  }
  return "unknown";
}

DecompositionVerdict decompose_along(const NRStructure& s, const Subspace& w) {
  DecompositionVerdict v;
  v.route = "given_subspace";
  const std::size_t n = s.space.dim();
  if (w.dim() == 0 || w.dim() == n) {
    v.note = "subspace is not proper";
    return v;
  }
  if (!is_nondegenerate_on(w, s.space)) {
    v.note = "subspace is degenerate";
    return v;
  }
  v.projection_conditions = check_projection_conditions(s, w);
  if (*v.projection_conditions) {
    v.verdict = Decomposability::Decomposable;
    v.witness = w;
  } else {
    v.note = "projection identities fail for the subspace";
  }
  return v;
}

DecompositionVerdict decompose_by_torsion_span(const NRStructure& s) {
  const std::size_t n = s.space.dim();
  std::vector<Vector> values;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) values.push_back(s.torsion.value(i, j));
  auto v = decompose_along(s, Subspace::span(values, n));
  v.route = "torsion_span";
  return v;
}

DecompositionVerdict decompose(const NRStructure& s) {
  require_valid(s);
  if (s.torsion.is_zero()) {
    DecompositionVerdict v;
    v.note = "null torsion: locally symmetric; no splitting claimed";
    return v;
  }
  auto by_torsion = decompose_by_torsion_span(s);
  if (by_torsion.verdict == Decomposability::Decomposable) return by_torsion;

  const auto hol = holonomy(s);
  const auto split = find_invariant_splitting(s.space, hol, [&s](const Subspace& w) {
    return check_projection_conditions(s, w);
  });
  DecompositionVerdict v;
  v.route = "holonomy_commutant";
  v.note = split.certificate;
  if (!split.exists) {
    v.verdict = Decomposability::Indecomposable;
    return v;
  }
  v.verdict = Decomposability::Decomposable;
  v.witness = split.witness;
  if (split.witness) v.projection_conditions = split.witness_preferred;
  return v;
}

// ---------------------------------------------------------------- Lie algebra of the structure

ReductiveSplit build_lie_algebra(const NRStructure& s, const std::vector<Matrix>& h_basis,
                                 const std::vector<std::string>& h_labels) {
  const std::size_t n = s.space.dim();
  const Subspace h_span = operator_span(s.curvature.operators(), n);
  std::vector<Matrix> basis = h_basis.empty() ? as_operators(h_span, n) : h_basis;
  if (!h_basis.empty()) {
    const Subspace given = operator_span(basis, n);
    if (given.dim() != basis.size() || !given.contains(h_span)) {
      throw Error(ErrorKind::InvalidStructure, "supplied h basis is dependent or misses part of the curvature span");
    }
  }
  const std::size_t k = basis.size();
  // Coordinates of an operator in the chosen h basis.
  std::vector<Vector> flat;
  for (const auto& b : basis) flat.push_back(b.flatten());
  const Matrix coord_sys = Matrix::from_columns(flat, n * n);
  auto h_coords = [&](const Matrix& m) -> Vector {
    const auto sol = solve_linear(coord_sys, m.flatten());
    if (!sol.particular) throw Error(ErrorKind::HNotClosed, "operator leaves the curvature span");
    return *sol.particular;
  };

  std::vector<std::string> labels = s.space.labels();
  for (std::size_t a = 0; a < k; ++a) {
    labels.push_back(a < h_labels.size() ? h_labels[a] : "A" + std::to_string(a + 1));
  }
  LieAlgebra g(n + k, labels);
  auto embed = [&](const Vector& m_part, const Vector& h_part) {
    Vector v(n + k);
    for (std::size_t i = 0; i < n; ++i) v[i] = m_part[i];
    for (std::size_t a = 0; a < k; ++a) v[n + a] = h_part[a];
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      g.set_bracket(i, j, embed(Rational(-1) * s.torsion.value(i, j), h_coords(s.curvature.value(i, j))));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t i = 0; i < n; ++i) g.set_bracket(n + a, i, embed(basis[a].column(i), Vector(k)));
    for (std::size_t b = a + 1; b < k; ++b) g.set_bracket(n + a, n + b, embed(Vector(n), h_coords(commutator(basis[a], basis[b]))));
  }

  ReductiveSplit split;
  split.algebra = std::move(g);
  for (std::size_t i = 0; i < n; ++i) split.m_indices.push_back(i);
  for (std::size_t a = 0; a < k; ++a) split.h_indices.push_back(n + a);
  split.metric_on_m = s.space;
  return split;
}

NRStructure nr_from_split(const ReductiveSplit& split) {
  const LieAlgebra& g = split.algebra;
  const auto& mi = split.m_indices;
  const auto& hi = split.h_indices;
  const std::size_t n = mi.size();
  if (n + hi.size() != g.dim() || split.metric_on_m.dim() != n) {
    throw Error(ErrorKind::ShapeMismatch, "split indices do not partition the algebra or mismatch the metric");
  }
  auto m_part = [&](const Vector& v) {
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = v[mi[i]];
    return out;
  };
  auto h_only = [&](const Vector& v) {
    Vector out(g.dim());
    for (auto idx : hi) out[idx] = v[idx];
    return out;
  };
  auto is_in_m = [&](const Vector& v) { return is_zero(h_only(v)); };
  auto is_in_h = [&](const Vector& v) {
    for (auto idx : mi)
      if (!v[idx].is_zero()) return false;
    return true;
  };
  for (auto a : hi) {
    for (auto i : mi) {
      if (!is_in_m(g.bracket(a, i))) {
        throw Error(ErrorKind::NotReductive, "[" + g.labels()[a] + "," + g.labels()[i] + "] leaves m");
      }
    }
    for (auto b : hi) {
      if (!is_in_h(g.bracket(a, b))) {
        throw Error(ErrorKind::NotReductive, "[" + g.labels()[a] + "," + g.labels()[b] + "] leaves h");
      }
    }
  }
  const MetricSpace& s = split.metric_on_m;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Rational v = s.inner(m_part(g.bracket(mi[x], mi[y])), unit_vector(n, z)) +
                           s.inner(m_part(g.bracket(mi[x], mi[z])), unit_vector(n, y));
        if (!v.is_zero()) {
          throw Error(ErrorKind::NotNaturallyReductive, "<[X,Y]_m,Z> + <[X,Z]_m,Y> != 0 for " + g.labels()[mi[x]] + "," +
                                                            g.labels()[mi[y]] + "," + g.labels()[mi[z]]);
        }
      }

  NRStructure out;
  out.space = s;
  out.torsion = TorsionTensor(n);
  out.curvature = CurvatureTensor(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const Vector br = g.bracket(mi[x], mi[y]);
      out.torsion.set(x, y, Rational(-1) * m_part(br));
      const Vector hv = h_only(br);
      Matrix r(n, n);
      for (std::size_t z = 0; z < n; ++z) r.set_column(z, m_part(g.bracket(hv, unit_vector(g.dim(), mi[z]))));
      out.curvature.set(x, y, r);
    }
  }
  return out;
}

}  // namespace nrs
