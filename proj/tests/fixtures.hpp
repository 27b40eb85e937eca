#ifndef NRS_TESTS_FIXTURES_HPP
#define NRS_TESTS_FIXTURES_HPP

// Operators and structures transcribed from their closed-form definitions.

#include "nrs/catalog.hpp"
#include "nrs/matrix.hpp"
#include "nrs/nr_structure.hpp"

namespace fixture {

using nrs::Matrix;
using nrs::Rational;

/// Lorentz boost in the X1X2 plane.
inline Matrix lorentz_boost() { return Matrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}; }
/// Lorentz rotation in the X3X4 plane: X3 -> -X4, X4 -> X3.
inline Matrix lorentz_rotation() { return Matrix{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}; }

/// Neutral orthonormal, rotations in the X1X2 and X3X4 planes.
inline Matrix neutral_rotations(const Rational& alpha, const Rational& beta) {
  return Matrix{{0, alpha, 0, 0}, {-alpha, 0, 0, 0}, {0, 0, 0, beta}, {0, 0, -beta, 0}};
}
/// Neutral orthonormal, boosts in the X1X3 and X2X4 planes.
inline Matrix neutral_boosts(const Rational& alpha, const Rational& beta) {
  return Matrix{{0, 0, beta, 0}, {0, 0, 0, alpha}, {beta, 0, 0, 0}, {0, alpha, 0, 0}};
}
/// Witt basis operators.
inline Matrix witt_b1(const Rational& nu) { return Matrix{{0, -nu, 1, 0}, {nu, 0, 0, 1}, {0, 0, 0, -nu}, {0, 0, nu, 0}}; }
inline Matrix witt_b2(const Rational& l) { return Matrix{{l, 0, 1, 0}, {0, -l, 0, 1}, {0, 0, l, 0}, {0, 0, 0, -l}}; }
inline Matrix witt_b3(const Rational& xi, const Rational& nu) {
  return Matrix{{xi, nu, 0, 0}, {-nu, xi, 0, 0}, {0, 0, -xi, nu}, {0, 0, -nu, -xi}};
}

/// Lorentz torsion with only a != 0 and curvature R(X1,X3) = -R(X2,X3) = rho A.
inline nrs::NRStructure lorentz_su2_block(const Rational& a, const Rational& rho) {
  nrs::CurvatureTensor r(4);
  r.set(0, 2, rho * nrs::lorentz_generator_a());
  r.set(1, 2, -rho * nrs::lorentz_generator_a());
  return nrs::NRStructure{nrs::lorentz_orthonormal_metric(), nrs::torsion_lorentz_orthonormal(a, 0, 0, 0), r};
}

}  // namespace fixture

#endif
