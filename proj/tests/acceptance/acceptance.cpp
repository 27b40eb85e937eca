// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are exact.
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "nrs/analysis.hpp"
#include "nrs/catalog.hpp"
#include "nrs/error.hpp"
#include "nrs/lie_algebra.hpp"
#include "nrs/normal_forms.hpp"
#include "nrs/nr_structure.hpp"

using namespace nrs;

namespace {

/// Collects failures of one criterion.
struct Criterion {
  std::ostringstream failures;
  int failed = 0;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failed < 5) failures << "\n    " << what;
    ++failed;
  }
};

Vector e(std::size_t i, std::size_t n = 4) { return oracle::e(n, i); }

Subspace span_of(std::initializer_list<Vector> vs, std::size_t n) {
  const std::vector<Vector> v(vs);
  return Subspace::span(v, n);
}

std::string str(const FamilySpec& s) {
  std::string out = s.name + "(";
  bool first = true;
  for (const auto& [k, v] : s.params) {
    out += (first ? "" : ",") + k + "=" + v.to_string();
    first = false;
  }
  return out + ")";
}

NRStructure loren2(Rational c, Rational a, Rational b, Rational d) {
  return *make_family({"loren2", {{"c", c}, {"alpha", a}, {"beta", b}, {"delta", d}}}).structure;
}
NRStructure dosdos2(Rational b, Rational a, Rational be, Rational d) {
  return *make_family({"dosdos2", {{"b", b}, {"alpha", a}, {"beta", be}, {"delta", d}}}).structure;
}

// 1 -------------------------------------------------------------------------------------------

void torsion_constraint_tables(Criterion& c) {
  const MetricSpace lor = lorentz_orthonormal_metric();
  const auto lf = TorsionFamily::LorentzOrthonormal;
  // (a,b,c,d) coordinates
  const Vector a{1, 0, 0, 0}, b{0, 1, 0, 0}, cc{0, 0, 1, 0}, d{0, 0, 0, 1};

  const Subspace s1 = torsion_constraints(lor, lorentz_generator_a(), lf);
  c.expect(s1 == span_of({a, cc - d}, 4) && s1.dim() == 2, "Lorentz type a: expected {b=0, c+d=0}");
  c.expect(torsion_constraints(lor, fixture::lorentz_boost(), lf) == span_of({a, b}, 4), "Lorentz boost: expected {c=d=0}");
  c.expect(torsion_constraints(lor, fixture::lorentz_rotation(), lf) == span_of({cc, d}, 4), "Lorentz rotation: expected {a=b=0}");
  for (const auto& [al, be] : std::vector<std::pair<Rational, Rational>>{{1, 1}, {2, -3}, {Rational(1, 2), 5}, {-1, Rational(7, 3)}}) {
    const Matrix op = al * fixture::lorentz_boost() + be * fixture::lorentz_rotation();
    c.expect(torsion_constraints(lor, op, lf).dim() == 0, "Lorentz boost+rotation with alpha beta != 0: expected {0}");
  }
  const Subspace s5 = torsion_constraints(neutral_orthonormal_metric(), neutral_generator_a(), TorsionFamily::NeutralOrthonormal);
  c.expect(s5 == span_of({b - cc, d}, 4), "neutral type a1: expected {a=0, c=-b}");
  for (const Rational l : {Rational(1), Rational(2), Rational(-1, 3)}) {
    c.expect(torsion_constraints(neutral_witt_metric(), fixture::witt_b2(l), TorsionFamily::NeutralWitt).dim() == 0,
             "Witt b2 (lambda=" + l.to_string() + "): expected {0}");
  }
}

// 2 -------------------------------------------------------------------------------------------

void flat_and_symmetric_loci(Criterion& c) {
  for (const Rational cc : {Rational(1), Rational(2)}) {
    const Rational q = cc * cc / 4;
    const std::vector<Rational> grid = {0, q, 1, 2};
    for (const auto& x : grid)
      for (const auto& y : grid)
        for (const auto& z : grid) {
          // loren2 (c, alpha=x, beta=y, delta=z)
          const auto v = classify_geometry(loren2(cc, x, y, z));
          const bool flat = y.is_zero() && x == q && z == q;
          const bool sym = y.is_zero() && x == z;
          c.expect(v.flat == flat && v.locally_symmetric == sym, "loren2 mismatch at " + cc.to_string() + "," + x.to_string() + "," + y.to_string() + "," + z.to_string());
          // dosdos2 (b, alpha=y, beta=x, delta=z): alpha is the off-diagonal parameter
          const auto w = classify_geometry(dosdos2(cc, y, x, z));
          c.expect(w.flat == flat && w.locally_symmetric == sym, "dosdos2 mismatch at " + cc.to_string() + "," + y.to_string() + "," + x.to_string() + "," + z.to_string());
        }
  }
}

// 3 -------------------------------------------------------------------------------------------

void covariant_derivative_spot_values(Criterion& c) {
  std::mt19937_64 rng(2024);
  auto nonzero = [&] {
    Rational r = 0;
    while (r.is_zero()) r = oracle::draw(rng, 5);
    return r;
  };
  const Rational half(1, 2);
  for (int t = 0; t < 5; ++t) {
    {
      const Rational cc = oracle::draw(rng, 5), al = oracle::draw(rng, 5), be = oracle::draw(rng, 5), de = oracle::draw(rng, 5);
      const auto d = covariant_derivative_R(loren2(cc, al, be, de));
      const Vector expect = (cc * be) * e(2) + (half * cc * (de - al)) * e(3);
      c.expect(d.at(0, 0, 2, 0) == expect, "(nabla_X1 R)(X1,X3)X1 for loren2");
    }
    {
      const Rational cc = nonzero(), eta = rng() % 2 ? Rational(1) : Rational(-1), al = nonzero();
      const auto s = *make_family({"sl_lorentz", {{"c", cc}, {"eta", eta}, {"alpha", al}}}).structure;
      const auto d = covariant_derivative_R(s);
      c.expect(d.at(2, 0, 2, 2) == (-half * cc * al) * e(3), "(nabla_X3 R)(X1,X3)X3 for sl_lorentz");
    }
    {
      const Rational b = oracle::draw(rng, 5), al = oracle::draw(rng, 5), be = oracle::draw(rng, 5), de = oracle::draw(rng, 5);
      const auto d = covariant_derivative_R(dosdos2(b, al, be, de));
      const Vector expect = (-b * al) * e(0) + (half * b * (be - de)) * e(3);
      c.expect(d.at(1, 2, 0, 1) == expect, "(nabla_X2 R)(X3,X1)X2 for dosdos2");
    }
  }
}

// 4 -------------------------------------------------------------------------------------------

void holonomy_dimensions(Criterion& c) {
  const Subspace ab = operator_span({lorentz_generator_a(), lorentz_generator_b()}, 4);
  std::mt19937_64 rng(7);
  int tested = 0;
  while (tested < 8) {
    const Rational cc = oracle::draw(rng), al = oracle::draw(rng), be = oracle::draw(rng), de = oracle::draw(rng);
    const Rational q = cc * cc / 4;
    if (((al - q) * (de - q) - be * be).is_zero()) continue;
    ++tested;
    const auto hol = holonomy(loren2(cc, al, be, de));
    c.expect(hol.size() == 2 && operator_span(hol, 4) == ab, "loren2 holonomy should be span{A,B}");
  }
  for (const Rational cc : {Rational(1), Rational(-2), Rational(1, 3)})
    for (const Rational eta : {Rational(1), Rational(-1)})
      for (const Rational al : {Rational(1), Rational(-5, 2)}) {
        const Matrix m{{0, 0, 1, 0}, {0, 0, -eta, 0}, {1, eta, 0, 0}, {0, 0, 0, 0}};
        const Matrix n{{0, 0, 0, 1}, {0, 0, 0, -eta}, {0, 0, 0, 0}, {1, eta, 0, 0}};
        const Matrix a3 = fixture::lorentz_rotation();
        const auto s = *make_family({"sl_lorentz", {{"c", cc}, {"eta", eta}, {"alpha", al}}}).structure;
        const auto hol = holonomy(s);
        c.expect(hol.size() == 3 && operator_span(hol, 4) == operator_span({m, n, a3}, 4), "sl_lorentz holonomy should be span{M,N,A}");
        // R(X1,X3) = -c^2/4 M
        c.expect(levi_civita_curvature(s).value(0, 2) == (-(cc * cc) / 4) * m, "sl_lorentz R(X1,X3) = -c^2/4 M");
      }
  for (const Rational cc : {Rational(0), Rational(1), Rational(2), Rational(-3)}) {
    const Rational q = cc * cc / 4;
    c.expect(holonomy(loren2(cc, q, 0, q)).empty(), "flat loren2 should have trivial holonomy");
    c.expect(holonomy(dosdos2(cc, 0, q, q)).empty(), "flat dosdos2 should have trivial holonomy");
  }
}

// 5 -------------------------------------------------------------------------------------------

void decomposability_verdicts(Criterion& c) {
  const Subspace w123 = span_of({e(0), e(1), e(2)}, 4);
  for (const Rational a : {Rational(1), Rational(-2), Rational(1, 3)})
    for (const Rational rho : {Rational(1), Rational(5, 2)}) {
      const NRStructure s = fixture::lorentz_su2_block(a, rho);
      c.expect(validate_structure(s).valid(), "a!=0, c=0 fixture should be valid");
      const auto d = decompose(s);
      c.expect(d.verdict == Decomposability::Decomposable && d.witness && *d.witness == w123,
               "a!=0, c=0 fixture should decompose along span{X1,X2,X3}");
    }
  for (const Rational cc : {Rational(1), Rational(-2)})
    for (const Rational eta : {Rational(1), Rational(-1)}) {
      const auto s = *make_family({"sl_lorentz", {{"c", cc}, {"eta", eta}, {"alpha", 3}}}).structure;
      c.expect(decompose(s).verdict == Decomposability::Indecomposable, "sl_lorentz should be indecomposable");
    }
  std::mt19937_64 rng(5);
  int generic = 0;
  while (generic < 6) {
    const Rational cc = oracle::draw(rng), al = oracle::draw(rng), be = oracle::draw(rng), de = oracle::draw(rng);
    if (cc.is_zero() || (al * de - be * be).is_zero() || (be.is_zero() && al == de)) continue;
    ++generic;
    c.expect(decompose(loren2(cc, al, be, de)).verdict == Decomposability::Indecomposable, "generic loren2 should be indecomposable");
  }
  const FamilyInstance osc = make_family({"oscillator", {{"epsilon", Rational(1, 2)}}});
  const Subspace w = span_of({e(1), e(2), e(0)}, 4);  // X, Y, P
  const auto dv = decompose_along(*osc.structure, w);
  c.expect(dv.verdict == Decomposability::Decomposable, "oscillator(1/2) should decompose along span{X,Y,P}");
  c.expect(!oracle::det(restricted_gram(w, osc.structure->space)).is_zero(), "oscillator(1/2): restricted Gram determinant should be nonzero");
  c.expect(osc.suggested_witness && *osc.suggested_witness == w, "oscillator witness hint");
  for (const Rational eps : {Rational(-3, 4), Rational(-1, 2), Rational(-1, 10), Rational(0), Rational(1, 10), Rational(1, 2), Rational(3, 4)}) {
    const MetricSpace m = make_family({"oscillator", {{"epsilon", eps}}}).structure->space;
    const Rational det = oracle::det(restricted_gram(w, m));
    c.expect(det == eps, "restricted Gram determinant should equal epsilon");
    c.expect(is_nondegenerate_on(w, m) == !eps.is_zero(), "W degenerate exactly at epsilon = 0");
  }
}

// 6 -------------------------------------------------------------------------------------------

void normal_form_stability(Criterion& c) {
  const MetricSpace lor = lorentz_orthonormal_metric(), neu = neutral_orthonormal_metric(), witt = neutral_witt_metric();
  struct Case {
    const MetricSpace* space;
    Matrix op;
    NormalFamily family;
  };
  const std::vector<Case> cases = {
      {&lor, Matrix(4, 4), NormalFamily::Zero},
      {&lor, lorentz_generator_a(), NormalFamily::Lor_a},
      {&lor, Rational(2) * fixture::lorentz_boost() + Rational(3) * fixture::lorentz_rotation(), NormalFamily::Lor_b},
      {&neu, neutral_generator_a(), NormalFamily::Neu_a1},
      {&neu, fixture::neutral_rotations(2, 3), NormalFamily::Neu_a2},
      {&neu, fixture::neutral_boosts(2, 1), NormalFamily::Neu_a3},
      {&witt, fixture::witt_b1(2), NormalFamily::Neu_b1},
      {&witt, fixture::witt_b2(3), NormalFamily::Neu_b2},
      {&witt, fixture::witt_b3(1, 2), NormalFamily::Neu_b3},
  };
  std::mt19937_64 rng(99);
  for (const auto& k : cases) {
    const NormalFormTag base = classify_operator(*k.space, k.op);
    c.expect(base.family == k.family, std::string("expected ") + to_string(k.family) + ", got " + to_string(base.family));
    int done = 0;
    while (done < 100) {
      Matrix q;
      try {
        q = cayley_orthogonal(*k.space, random_skew(*k.space, rng, 3));
      } catch (const Error&) {
        continue;
      }
      ++done;
      const NormalFormTag t = classify_operator(*k.space, inverse(q) * k.op * q);
      c.expect(t.family == base.family && t.parameters == base.parameters, std::string("conjugation changed the tag of ") + to_string(k.family));
    }
  }
  for (const auto& [al, be] : std::vector<std::pair<Rational, Rational>>{{2, 3}, {Rational(1, 2), 1}, {5, Rational(2, 7)}, {1, 1}}) {
    const NormalFormTag t = classify_lorentz(lor, al * fixture::lorentz_boost() + be * fixture::lorentz_rotation());
    const Rational a2 = t.parameters.at("alpha_sq"), b2 = t.parameters.at("beta_sq");
    c.expect(a2 == al * al && b2 == be * be, "Lor_b squares should be recovered");
    // (x^2 - alpha^2)(x^2 + beta^2)
    c.expect(t.char_poly == Polynomial({-a2 * b2, 0, b2 - a2, 0, 1}), "Lor_b parameters should rebuild the characteristic polynomial");
  }
}

// 7 -------------------------------------------------------------------------------------------

void structural_properties(Criterion& c) {
  std::mt19937_64 rng(777);
  for (int t = 0; t < 50; ++t) {
    const FamilySpec spec = oracle::random_family(rng);
    const NRStructure s = *make_family(spec).structure;
    const std::string name = str(spec);
    if (!validate_structure(s).valid()) {
      c.expect(false, name + " should be valid");
      continue;
    }
    const ReductiveSplit split = build_lie_algebra(s);
    c.expect(jacobi_check(split.algebra).holds && oracle::jacobi(split.algebra), name + ": Jacobi");
    c.expect(nr_from_split(split) == s, name + ": round trip");
    const Matrix g = s.space.gram();
    const CurvatureTensor r = levi_civita_curvature(s);
    bool riemann = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k)
          for (std::size_t l = 0; l < 4; ++l) {
            auto rr = [&](std::size_t a, std::size_t b, std::size_t x, std::size_t y) {
              return oracle::inner(g, oracle::act(r.value(a, b), e(x)), e(y));
            };
            riemann = riemann && rr(i, j, k, l) == -rr(j, i, k, l) && rr(i, j, k, l) == -rr(i, j, l, k) &&
                      rr(i, j, k, l) == rr(k, l, i, j) && (rr(i, j, k, l) + rr(j, k, i, l) + rr(k, i, j, l)).is_zero();
          }
    c.expect(riemann, name + ": Riemann symmetries");
    const auto hol = holonomy(s);
    const Subspace hs = operator_span(hol, 4);
    bool closed = true;
    for (const auto& x : hol) {
      for (const auto& y : hol) closed = closed && hs.contains(commutator(x, y).flatten());
      for (std::size_t i = 0; i < 4; ++i) closed = closed && hs.contains(commutator(difference_operator(s.torsion, e(i)), x).flatten());
    }
    c.expect(closed, name + ": holonomy closure");
  }
}

// 8 -------------------------------------------------------------------------------------------

void solvable_algebra_structure(Criterion& c) {
  const LieAlgebra g = make_family({"loren2", {{"c", 1}, {"alpha", 1}, {"beta", 0}, {"delta", 2}}}).split->algebra;
  const auto ds = derived_series(g);
  c.expect(ds == std::vector<std::size_t>{6, 5, 1, 0}, "derived series should be [6,5,1,0]");
  c.expect(oracle::derived_dims(g) == std::vector<std::size_t>{6, 5, 1, 0}, "oracle derived series should be [6,5,1,0]");
  bool found = false;
  for (const auto& ideal : nilpotent_ideal_search(g)) {
    if (ideal.dim() == 5 && !is_abelian(g, ideal) && is_nilpotent_ideal(g, ideal)) found = true;
  }
  c.expect(found, "a 5-dimensional non-abelian nilpotent ideal should exist");
}

// 9 -------------------------------------------------------------------------------------------

void sl2_identifications(Criterion& c) {
  for (const Rational cc : {Rational(1), Rational(-3, 2)})
    for (const Rational eta : {Rational(1), Rational(-1)})
      for (const Rational lam : {Rational(2), Rational(-1, 3)}) {
        // Lorentz: basis X1..X4, A. Y1 = cX1 - dX2 + lambda A, T1 = X1 - cA, T2 = X2 - dA.
        const Rational d = eta * cc;
        const LieAlgebra g = make_family({"sl_lorentz", {{"c", cc}, {"eta", eta}, {"alpha", lam}}}).split->algebra;
        const std::vector<Vector> cols = {Vector{cc, -d, 0, 0, lam}, e(2, 5), e(3, 5), Vector{1, 0, 0, 0, -cc}, Vector{0, 1, 0, 0, -d}};
        LieAlgebra pattern(5, {"Y1", "X3", "X4", "T1", "T2"});
        pattern.set_bracket(1, 0, lam * e(2, 5));  // [X3,Y1] = lambda X4
        pattern.set_bracket(0, 2, lam * e(1, 5));  // [Y1,X4] = lambda X3
        pattern.set_bracket(1, 2, e(0, 5));        // [X3,X4] = Y1
        c.expect(match_brackets(g, pattern, Matrix::from_columns(cols, 5)), "Lorentz sl(2,R)+R^2 identification");

        // Neutral: Y1 = bX1 + dX3 + lambda A, T1 = X1 + bA, T2 = X3 - dA.
        const LieAlgebra h = make_family({"sl_neutral", {{"b", cc}, {"eta", eta}, {"alpha", lam}}}).split->algebra;
        const std::vector<Vector> cols2 = {Vector{cc, 0, d, 0, lam}, e(1, 5), e(3, 5), Vector{1, 0, 0, 0, cc}, Vector{0, 0, 1, 0, -d}};
        LieAlgebra pattern2(5, {"Y1", "X2", "X4", "T1", "T2"});
        pattern2.set_bracket(0, 1, lam * e(2, 5));  // [Y1,X2] = lambda X4
        pattern2.set_bracket(0, 2, lam * e(1, 5));  // [Y1,X4] = lambda X2
        pattern2.set_bracket(1, 2, e(0, 5));        // [X2,X4] = Y1
        c.expect(match_brackets(h, pattern2, Matrix::from_columns(cols2, 5)), "neutral sl(2,R)+R^2 identification");
      }
}

// 10 ------------------------------------------------------------------------------------------

void oscillator_fixture(Criterion& c) {
  for (const Rational eps : {Rational(-1, 2), Rational(0), Rational(1, 2)}) {
    const FamilyInstance inst = make_family({"oscillator", {{"epsilon", eps}}});
    const NRStructure& s = *inst.structure;
    const LieAlgebra& g = inst.split->algebra;
    const Vector x = e(1), y = e(2), p = e(0);
    c.expect(s.torsion(x, y) == Rational(-1) * p, "T(X,Y) should be -P");
    c.expect(s.torsion(x, y) == Rational(-1) * g.bracket(x, y), "T(X,Y) should be -[X,Y]");
    c.expect(s.space.signature() == Signature{1, 3} && oracle::signature(s.space.gram()) == std::pair<std::size_t, std::size_t>{1, 3},
             "epsilon metric should have signature (1,3)");
    const Matrix rxy = s.curvature.value(1, 2);
    if (eps.is_zero()) {
      c.expect(rxy.is_zero() && validate_structure(s).valid(), "epsilon = 0: R(X,Y) vanishes and the structure is valid");
    } else {
      // The stated values R(X,Y)X = -eps Y, R(X,Y)Y = 3 eps X.
      c.expect(rxy * x == (-eps) * y && rxy * y == (3 * eps) * x, "stated R(X,Y) values");
      c.expect(!is_skew_adjoint(s.space, rxy) && !oracle::skew(s.space.gram(), rxy), "stated R(X,Y) should fail skew-adjointness");
      c.expect(!validate_structure(s).check("curvature_skew").passed, "validator should report curvature_skew");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"torsion constraint tables", torsion_constraint_tables},
      {"flat and locally symmetric loci", flat_and_symmetric_loci},
      {"covariant derivative spot values", covariant_derivative_spot_values},
      {"holonomy dimensions", holonomy_dimensions},
      {"decomposability verdicts", decomposability_verdicts},
      {"normal-form stability", normal_form_stability},
      {"structural property suite", structural_properties},
      {"derived series and nilpotent ideal", solvable_algebra_structure},
      {"sl(2,R)+R^2 identifications", sl2_identifications},
      {"oscillator fixture", oscillator_fixture},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const bool ok = c.failed == 0;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
    if (!ok) std::cout << " (" << c.failed << " failed checks)" << c.failures.str();
    std::cout << "\n";
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
