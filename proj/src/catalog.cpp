#include "nrs/catalog.hpp"

#include <algorithm>

#include "nrs/error.hpp"

namespace nrs {

namespace {

struct FamilyInfo {
  std::string name;
  std::vector<std::string> params;
  std::string description;
};

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> table = {
      {"loren1", {"lambda"}, "signature (1,3), sl(2,R)+R^2 with h = span{A}; lambda != 0"},
      {"loren2", {"c", "alpha", "beta", "delta"}, "signature (1,3), 6-dim algebra with h = span{A,B}"},
      {"dosdos1", {"lambda"}, "signature (2,2), sl(2,R)+R^2 with h = span{A}; lambda != 0"},
      {"dosdos2", {"b", "alpha", "beta", "delta"}, "signature (2,2), 6-dim algebra with h = span{A,B}"},
      {"sl_lorentz", {"c", "eta", "alpha"}, "signature (1,3), T(X3,X4) = -cX1+eta cX2, R(X3,X4) = alpha A; c != 0, eta = +-1, alpha != 0"},
      {"sl_neutral", {"b", "eta", "alpha"}, "signature (2,2), T(X2,X4) = -bX1-eta bX3, R(X2,X4) = alpha A; b != 0, eta = +-1, alpha != 0"},
      {"oscillator", {"epsilon"}, "oscillator algebra with the epsilon-metric on (P,X,Y,Q); -1 < epsilon < 1; partial fixture"},
  };
  return table;
}

const FamilyInfo& info(const std::string& name) {
  for (const auto& f : families())
    if (f.name == name) return f;
  throw Error(ErrorKind::ParamOutOfDomain, "unknown family '" + name + "'");
}

/// Parameter values in canonical order; "c" is accepted for dosdos2's "b".
std::vector<Rational> read_params(const FamilySpec& spec) {
  const FamilyInfo& f = info(spec.name);
  std::map<std::string, Rational> given = spec.params;
  if (spec.name == "dosdos2" && given.count("c") && !given.count("b")) {
    given["b"] = given["c"];
    given.erase("c");
  }
  std::vector<Rational> out;
  for (const auto& p : f.params) {
    auto it = given.find(p);
    if (it == given.end()) throw Error(ErrorKind::ParamOutOfDomain, spec.name + ": missing parameter '" + p + "'");
    out.push_back(it->second);
  }
  for (const auto& [k, v] : given) {
    if (std::find(f.params.begin(), f.params.end(), k) == f.params.end()) {
      throw Error(ErrorKind::ParamOutOfDomain, spec.name + ": unknown parameter '" + k + "'");
    }
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ParamOutOfDomain, what);
}

bool is_unit(const Rational& eta) { return eta == Rational(1) || eta == Rational(-1); }

Vector vec(std::initializer_list<Rational> xs) { return Vector(xs); }

CurvatureTensor curvature(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, Matrix>> values) {
  CurvatureTensor r(n);
  for (const auto& [i, j, m] : values) r.set(i, j, m);
  return r;
}

/// Splits the basis of a 5-dim algebra as m = first four, h = last one.
ReductiveSplit split_four_plus_one(LieAlgebra g, MetricSpace metric) {
  ReductiveSplit split;
  split.algebra = std::move(g);
  split.m_indices = {0, 1, 2, 3};
  split.h_indices = {4};
  split.metric_on_m = std::move(metric);
  return split;
}

/// sl(2,R) + R^2 on (Y1,Y2,Y3,T1,T2) with [Y1,Y2] = s12 Y3, [Y1,Y3] = s13 Y2, [Y2,Y3] = Y1.
LieAlgebra sl2_plus_plane(const Rational& s12, const Rational& s13) {
  LieAlgebra g(5, {"Y1", "Y2", "Y3", "T1", "T2"});
  g.set_bracket(0, 1, s12 * unit_vector(5, 2));
  g.set_bracket(0, 2, s13 * unit_vector(5, 1));
  g.set_bracket(1, 2, unit_vector(5, 0));
  return g;
}

FamilyInstance make_loren2(const std::vector<Rational>& p) {
  const Rational &c = p[0], &alpha = p[1], &beta = p[2], &delta = p[3];
  const Matrix a = lorentz_generator_a(), b = lorentz_generator_b();
  NRStructure s{lorentz_orthonormal_metric(), torsion_lorentz_orthonormal(0, 0, c, -c),
                curvature(4, {{0, 2, alpha * a + beta * b},
                              {0, 3, beta * a + delta * b},
                              {1, 2, -(alpha * a + beta * b)},
                              {1, 3, -(beta * a + delta * b)}})};
  FamilyInstance out;
  out.split = build_lie_algebra(s, {a, b}, {"A", "B"});
  out.structure = std::move(s);
  return out;
}

FamilyInstance make_dosdos2(const std::vector<Rational>& p) {
  const Rational &b = p[0], &alpha = p[1], &beta = p[2], &delta = p[3];
  const Matrix a1 = neutral_generator_a(), bb = neutral_generator_b();
  const Matrix r13 = alpha * a1 + beta * bb;
  const Matrix r34 = delta * a1 - alpha * bb;
  NRStructure s{neutral_orthonormal_metric(), torsion_neutral_orthonormal(0, b, -b, 0),
                curvature(4, {{0, 1, -r13}, {0, 2, r13}, {1, 3, -r34}, {2, 3, r34}})};
  FamilyInstance out;
  out.split = build_lie_algebra(s, {a1, bb}, {"A", "B"});
  out.structure = std::move(s);
  return out;
}

FamilyInstance make_sl_lorentz(const std::vector<Rational>& p) {
  const Rational &c = p[0], &eta = p[1], &alpha = p[2];
  require(!c.is_zero(), "sl_lorentz: c must be nonzero");
  require(is_unit(eta), "sl_lorentz: eta must be 1 or -1");
  require(!alpha.is_zero(), "sl_lorentz: alpha must be nonzero");
  const Matrix a3{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
  NRStructure s{lorentz_orthonormal_metric(), torsion_lorentz_orthonormal(0, 0, c, eta * c),
                curvature(4, {{2, 3, alpha * a3}})};
  FamilyInstance out;
  out.split = build_lie_algebra(s, {a3}, {"A"});
  out.structure = std::move(s);
  return out;
}

FamilyInstance make_sl_neutral(const std::vector<Rational>& p) {
  const Rational &b = p[0], &eta = p[1], &alpha = p[2];
  require(!b.is_zero(), "sl_neutral: b must be nonzero");
  require(is_unit(eta), "sl_neutral: eta must be 1 or -1");
  require(!alpha.is_zero(), "sl_neutral: alpha must be nonzero");
  const Matrix a{{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 1, 0, 0}};
  NRStructure s{neutral_orthonormal_metric(), torsion_neutral_orthonormal(0, b, 0, eta * b),
                curvature(4, {{1, 3, alpha * a}})};
  FamilyInstance out;
  out.split = build_lie_algebra(s, {a}, {"A"});
  out.structure = std::move(s);
  out.notes.push_back("bracket table taken from the sl(2,R)+R^2 reduction: [X2,X4] = bX1 + eta bX3 + alpha A");
  return out;
}

FamilyInstance make_loren1(const std::vector<Rational>& p) {
  const Rational& lambda = p[0];
  require(!lambda.is_zero(), "loren1: lambda must be nonzero");
  const Rational mu = Rational(1) / lambda;
  const std::vector<Vector> cols = {
      vec({mu, 0, 0, Rational(1) - mu, mu}),  // X1
      vec({mu, 0, 0, -mu, Rational(1) + mu}), // X2
      vec({0, 1, 0, 0, 0}),                   // X3
      vec({0, 0, 1, 0, 0}),                   // X4
      vec({mu, 0, 0, -mu, mu}),               // A
  };
  const LieAlgebra g = change_basis(sl2_plus_plane(-lambda, lambda), Matrix::from_columns(cols, 5),
                                    {"X1", "X2", "X3", "X4", "A"});
  FamilyInstance out;
  out.split = split_four_plus_one(g, lorentz_orthonormal_metric());
  out.structure = nr_from_split(*out.split);
  return out;
}

FamilyInstance make_dosdos1(const std::vector<Rational>& p) {
  const Rational& lambda = p[0];
  require(!lambda.is_zero(), "dosdos1: lambda must be nonzero");
  const Rational mu = Rational(1) / lambda;
  const std::vector<Vector> cols = {
      vec({-mu, 0, 0, Rational(1) + mu, mu}), // X1
      vec({0, 1, 0, 0, 0}),                   // X2
      vec({mu, 0, 0, -mu, Rational(1) - mu}), // X3
      vec({0, 0, 1, 0, 0}),                   // X4
      vec({mu, 0, 0, -mu, -mu}),              // A
  };
  const LieAlgebra g = change_basis(sl2_plus_plane(lambda, lambda), Matrix::from_columns(cols, 5),
                                    {"X1", "X2", "X3", "X4", "A"});
  FamilyInstance out;
  out.split = split_four_plus_one(g, neutral_orthonormal_metric());
  out.structure = nr_from_split(*out.split);
  return out;
}

FamilyInstance make_oscillator(const std::vector<Rational>& p) {
  const Rational& eps = p[0];
  require(Rational(-1) < eps && eps < Rational(1), "oscillator: epsilon must satisfy -1 < epsilon < 1");
  const std::vector<std::string> labels = {"P", "X", "Y", "Q"};
  // [X,Y] = P, [Q,X] = Y, [Q,Y] = -X
  LieAlgebra g(4, labels);
  g.set_bracket(1, 2, unit_vector(4, 0));
  g.set_bracket(3, 1, unit_vector(4, 2));
  g.set_bracket(3, 2, Rational(-1) * unit_vector(4, 1));
  const MetricSpace metric = validate_metric(Matrix{{eps, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, eps}}, labels);

  FamilyInstance out;
  ReductiveSplit split;
  split.algebra = g;
  split.m_indices = {0, 1, 2, 3};
  split.metric_on_m = metric;
  out.split = std::move(split);

  TorsionTensor t(4);
  t.set(1, 2, Rational(-1) * unit_vector(4, 0));  // T(X,Y) = -P
  Matrix rxy(4, 4);
  rxy(2, 1) = -eps;     // R(X,Y)X = -eps Y
  rxy(1, 2) = 3 * eps;  // R(X,Y)Y = 3 eps X
  CurvatureTensor r(4);
  r.set(1, 2, rxy);
  if (eps.is_zero()) {
    // With h = 0 the split itself is naturally reductive here; its tensors extend the stated ones.
    out.structure = nr_from_split(*out.split);
    out.notes.push_back("epsilon = 0: full tensors from the split (h = 0)");
  } else {
    out.structure = NRStructure{metric, t, r};
    out.partial = true;
  }
  const std::vector<Vector> w = {unit_vector(4, 0), unit_vector(4, 1), unit_vector(4, 2)};
  out.suggested_witness = Subspace::span(w, 4);
  out.notes.push_back("only T(X,Y) and R(X,Y) on the X,Y-pair are given; the tensors are a partial fixture");
  if (!eps.is_zero()) {
    out.notes.push_back("the stated R(X,Y) is not skew-adjoint for epsilon != 0; validation reports curvature_skew");
  }
  return out;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& f : families()) out.push_back(f.name);
    return out;
  }();
  return names;
}

const std::vector<std::string>& family_parameters(const std::string& name) { return info(name).params; }

std::string family_description(const std::string& name) { return info(name).description; }

Matrix lorentz_generator_a() { return Matrix{{0, 0, 1, 0}, {0, 0, 1, 0}, {1, -1, 0, 0}, {0, 0, 0, 0}}; }
Matrix lorentz_generator_b() { return Matrix{{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}, {1, -1, 0, 0}}; }
Matrix neutral_generator_a() { return Matrix{{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}, {0, 1, -1, 0}}; }
Matrix neutral_generator_b() { return Matrix{{0, -1, 1, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}}; }

FamilyInstance make_family(const FamilySpec& spec) {
  const auto p = read_params(spec);
  if (spec.name == "loren1") return make_loren1(p);
  if (spec.name == "loren2") return make_loren2(p);
  if (spec.name == "dosdos1") return make_dosdos1(p);
  if (spec.name == "dosdos2") return make_dosdos2(p);
  if (spec.name == "sl_lorentz") return make_sl_lorentz(p);
  if (spec.name == "sl_neutral") return make_sl_neutral(p);
  return make_oscillator(p);
}

ExpectedProperties expected_properties(const FamilySpec& spec) {
  make_family(spec);  // domain checks
  const auto p = read_params(spec);
  ExpectedProperties e;
  const Rational quarter(1, 4);
  if (spec.name == "loren2" || spec.name == "dosdos2") {
    // loren2 (c, alpha, beta, delta); dosdos2 (b, alpha, beta, delta) with the roles of alpha and beta
    // exchanged: dosdos2's off-diagonal parameter is alpha.
    const bool lor = spec.name == "loren2";
    const Rational& c = p[0];
    const Rational& off = lor ? p[2] : p[1];
    const Rational& d1 = lor ? p[1] : p[2];
    const Rational& d2 = p[3];
    const Rational q = quarter * c * c;
    e.flat = off.is_zero() && d1 == q && d2 == q;
    e.locally_symmetric = c.is_zero() || (off.is_zero() && d1 == d2);
    const Rational det = lor ? d1 * d2 - off * off : d1 * d2 + off * off;
    if (!c.is_zero() && !det.is_zero() && !*e.locally_symmetric) e.decomposable = Decomposability::Indecomposable;
    const Rational shifted = lor ? (d1 - q) * (d2 - q) - off * off : (d1 - q) * (d2 - q) + off * off;
    if (!shifted.is_zero()) e.holonomy_dim = 2;
    if (*e.flat) e.holonomy_dim = 0;
  } else if (spec.name == "sl_lorentz" || spec.name == "sl_neutral") {
    e.flat = false;
    e.locally_symmetric = false;
    e.decomposable = Decomposability::Indecomposable;
    e.holonomy_dim = 3;
  } else if (spec.name == "loren1" || spec.name == "dosdos1") {
    e.flat = false;
    e.locally_symmetric = false;
    e.decomposable = Decomposability::Indecomposable;
  } else {
    e.locally_symmetric = p[0].is_zero();
    if (!p[0].is_zero()) e.decomposable = Decomposability::Decomposable;
  }
  return e;
}

}  // namespace nrs
