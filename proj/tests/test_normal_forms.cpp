#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "nrs/error.hpp"
#include "nrs/invariant_splitting.hpp"
#include "nrs/normal_forms.hpp"
#include "oracles.hpp"

using namespace nrs;

namespace {

const MetricSpace kLor = lorentz_orthonormal_metric();
const MetricSpace kNeu = neutral_orthonormal_metric();
const MetricSpace kWitt = neutral_witt_metric();

Rational param(const NormalFormTag& t, const std::string& k) {
  REQUIRE(t.parameters.count(k));
  return t.parameters.at(k);
}

/// Q^{-1} A Q for a random Cayley isometry Q.
Matrix conjugate(const MetricSpace& s, const Matrix& a, std::mt19937_64& rng) {
  for (;;) {
    try {
      const Matrix q = cayley_orthogonal(s, random_skew(s, rng));
      return inverse(q) * a * q;
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("Lorentz normal forms") {
  CHECK(classify_lorentz(kLor, Matrix(4, 4)).family == NormalFamily::Zero);
  const auto a = classify_lorentz(kLor, lorentz_generator_a());
  CHECK(a.family == NormalFamily::Lor_a);
  CHECK(a.nilpotency_index == 3u);
  CHECK(a.char_poly == Polynomial({0, 0, 0, 0, 1}));
  CHECK(classify_lorentz(kLor, -lorentz_generator_a()).family == NormalFamily::Lor_a);

  const auto b = classify_lorentz(kLor, Rational(2) * fixture::lorentz_boost() + Rational(3) * fixture::lorentz_rotation());
  CHECK(b.family == NormalFamily::Lor_b);
  CHECK(param(b, "alpha_sq") == Rational(4));
  CHECK(param(b, "beta_sq") == Rational(9));
  CHECK(param(b, "alpha") == Rational(2));
  // (x^2 - alpha^2)(x^2 + beta^2)
  CHECK(b.char_poly == Polynomial({-36, 0, 5, 0, 1}));
  CHECK(param(classify_lorentz(kLor, fixture::lorentz_boost()), "beta_sq") == Rational(0));
  CHECK(param(classify_lorentz(kLor, fixture::lorentz_rotation()), "alpha_sq") == Rational(0));
}

TEST_CASE("Lor_b parameters reproduce the characteristic polynomial") {
  std::mt19937_64 rng(33);
  int rational = 0, irrational = 0;
  for (int t = 0; t < 60; ++t) {
    const Matrix a = random_skew(kLor, rng, 3);
    const auto tag = classify_lorentz(kLor, a);
    if (tag.family != NormalFamily::Lor_b) continue;
    const auto cp = oracle::char_poly(a);
    if (tag.parameters.count("alpha_sq")) {
      ++rational;
      const Rational al = tag.parameters.at("alpha_sq"), be = tag.parameters.at("beta_sq");
      // (x^2 - alpha^2)(x^2 + beta^2)
      CHECK(cp[2] == be - al);
      CHECK(cp[0] == -al * be);
      CHECK(al >= Rational(0));
      CHECK(be >= Rational(0));
    } else {
      ++irrational;
      CHECK(tag.parameters.at("u_c2") == cp[2]);
      CHECK(tag.parameters.at("u_c0") == cp[0]);
    }
  }
  CHECK(rational + irrational > 0);
}

TEST_CASE("neutral normal forms") {
  const auto a1 = classify_neutral(kNeu, neutral_generator_a());
  CHECK(a1.family == NormalFamily::Neu_a1);
  CHECK(a1.nilpotency_index == 3u);

  const auto a2 = classify_neutral(kNeu, fixture::neutral_rotations(2, 3));
  CHECK(a2.family == NormalFamily::Neu_a2);
  CHECK(param(a2, "alpha_sq") == Rational(4));  // rotation in the negative-definite plane
  CHECK(param(a2, "beta_sq") == Rational(9));
  CHECK(param(classify_neutral(kNeu, fixture::neutral_rotations(3, 2)), "alpha_sq") == Rational(9));

  const auto a3 = classify_neutral(kNeu, fixture::neutral_boosts(2, 1));
  CHECK(a3.family == NormalFamily::Neu_a3);
  CHECK(param(a3, "alpha_sq") == Rational(4));
  CHECK(param(a3, "beta_sq") == Rational(1));
  CHECK(classify_neutral(kNeu, fixture::neutral_boosts(1, 2)).parameters == a3.parameters);

  const auto b1 = classify_neutral(kWitt, fixture::witt_b1(2));
  CHECK(b1.family == NormalFamily::Neu_b1);
  CHECK(param(b1, "nu_sq") == Rational(4));
  CHECK_FALSE(b1.reducible);

  const auto b2 = classify_neutral(kWitt, fixture::witt_b2(3));
  CHECK(b2.family == NormalFamily::Neu_b2);
  CHECK(param(b2, "lambda_sq") == Rational(9));
  CHECK_FALSE(b2.reducible);

  const auto b3 = classify_neutral(kWitt, fixture::witt_b3(1, 2));
  CHECK(b3.family == NormalFamily::Neu_b3);
  CHECK(param(b3, "xi_sq") == Rational(1));
  CHECK(param(b3, "nu_sq") == Rational(4));
  // ((x - xi)^2 + nu^2)((x + xi)^2 + nu^2)
  CHECK(b3.char_poly == Polynomial({25, 0, 6, 0, 1}));
}

TEST_CASE("B1 at nu = 0 is a boundary member with nilpotency index 2") {
  const auto t = classify_neutral(kWitt, fixture::witt_b1(0));
  CHECK(t.family == NormalFamily::Neu_b1);
  CHECK(t.nilpotency_index == 2u);
  CHECK(t.note.has_value());
  // The kernel span{X1, X2} is totally isotropic, so no nondegenerate subspace is invariant.
  CHECK_FALSE(t.reducible);
  CHECK_FALSE(find_invariant_splitting(kWitt, {fixture::witt_b1(0)}).exists);
  CHECK(classify_neutral(kNeu, neutral_generator_a()).nilpotency_index == 3u);
}

TEST_CASE("classification errors") {
  const Matrix not_skew = Matrix::identity(4);
  try {
    classify_lorentz(kLor, not_skew);
    FAIL("expected NotSkew");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSkew);
  }
  try {
    classify_lorentz(kNeu, neutral_generator_a());
    FAIL("expected WrongSignature");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongSignature);
  }
  try {
    classify_neutral(kLor, lorentz_generator_a());
    FAIL("expected WrongSignature");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongSignature);
  }
}

TEST_CASE("conjugation invariants are stable under isometries") {
  std::mt19937_64 rng(31);
  const Matrix a = fixture::witt_b2(2);
  const auto base = conjugation_invariants(a);
  for (int t = 0; t < 20; ++t) {
    const auto c = conjugation_invariants(conjugate(kWitt, a, rng));
    CHECK(c.char_poly == base.char_poly);
    CHECK(c.min_poly == base.min_poly);
    CHECK(c.power_ranks == base.power_ranks);
  }
}

TEST_CASE("classification is invariant under Cayley conjugation for random skew operators") {
  std::mt19937_64 rng(32);
  for (const auto* s : {&kLor, &kNeu, &kWitt}) {
    for (int t = 0; t < 15; ++t) {
      const Matrix a = random_skew(*s, rng, 2);
      NormalFormTag base;
      try {
        base = classify_operator(*s, a);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Unclassifiable);
        continue;
      }
      for (int k = 0; k < 5; ++k) {
        const auto c = classify_operator(*s, conjugate(*s, a, rng));
        CHECK(c.family == base.family);
        CHECK(c.parameters == base.parameters);
        CHECK(c.reducible == base.reducible);
      }
      CHECK(base.char_poly == Polynomial(oracle::char_poly(a)));
    }
  }
}

TEST_CASE("normal family names round-trip") {
  for (auto f : {NormalFamily::Zero, NormalFamily::Lor_a, NormalFamily::Lor_b, NormalFamily::Neu_a1, NormalFamily::Neu_a2,
                 NormalFamily::Neu_a3, NormalFamily::Neu_b1, NormalFamily::Neu_b2, NormalFamily::Neu_b3}) {
    CHECK(normal_family_from_string(to_string(f)) == f);
  }
  CHECK_THROWS(normal_family_from_string("Lor_c"));
}
