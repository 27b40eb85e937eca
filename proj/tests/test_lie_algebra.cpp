#include <doctest.h>

#include <random>

#include "nrs/error.hpp"
#include "nrs/lie_algebra.hpp"
#include "oracles.hpp"

using namespace nrs;

namespace {

/// sl(2): [H,E] = 2E, [H,F] = -2F, [E,F] = H
LieAlgebra sl2() {
  LieAlgebra g(3, {"H", "E", "F"});
  g.set_bracket(0, 1, Vector{0, 2, 0});
  g.set_bracket(0, 2, Vector{0, 0, -2});
  g.set_bracket(1, 2, Vector{1, 0, 0});
  return g;
}

/// Heisenberg: [X,Y] = Z
LieAlgebra heisenberg() {
  LieAlgebra g(3, {"X", "Y", "Z"});
  g.set_bracket(0, 1, Vector{0, 0, 1});
  return g;
}

Vector e(std::size_t n, std::size_t i) { return oracle::e(n, i); }

}  // namespace

TEST_CASE("brackets are antisymmetric and labels resolve") {
  const LieAlgebra g = sl2();
  CHECK(g.bracket(1, 0) == Vector{0, -2, 0});
  CHECK(is_zero(g.bracket(e(3, 1), e(3, 1))));
  CHECK(g.index_of("F") == 2);
  CHECK_THROWS(g.index_of("K"));
  LieAlgebra h(2);
  CHECK(h.labels() == std::vector<std::string>{"e1", "e2"});
  CHECK_THROWS_AS(h.set_bracket(0, 0, Vector{1, 0}), Error);
}

TEST_CASE("Jacobi identity") {
  CHECK(jacobi_check(sl2()).holds);
  CHECK(jacobi_check(heisenberg()).holds);
  LieAlgebra bad(3);
  bad.set_bracket(0, 1, Vector{0, 0, 1});
  bad.set_bracket(1, 2, Vector{1, 0, 0});
  bad.set_bracket(0, 2, Vector{0, 0, 1});
  CHECK(jacobi_check(bad).holds == oracle::jacobi(bad));
  CHECK_FALSE(jacobi_check(bad).holds);
  CHECK(jacobi_check(bad).failing_triple.has_value());
}

TEST_CASE("ad is a representation on valid algebras") {
  const LieAlgebra g = sl2();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(g.ad(g.bracket(i, j)) == commutator(g.ad(e(3, i)), g.ad(e(3, j))));
}

TEST_CASE("change of basis preserves Jacobi and inverts") {
  std::mt19937_64 rng(41);
  const LieAlgebra g = sl2();
  for (int t = 0; t < 10; ++t) {
    Matrix p(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) p(i, j) = random_rational(rng, 3);
    if (oracle::det(p).is_zero()) {
      CHECK_THROWS_AS(change_basis(g, p), Error);
      continue;
    }
    const LieAlgebra h = change_basis(g, p);
    CHECK(oracle::jacobi(h));
    CHECK(change_basis(h, inverse(p)) == g);
    CHECK(derived_series(h) == derived_series(g));
    CHECK(match_brackets(g, h, p));
  }
}

TEST_CASE("derived and lower central series") {
  CHECK(derived_series(sl2()) == std::vector<std::size_t>{3});
  CHECK(derived_series(heisenberg()) == std::vector<std::size_t>{3, 1, 0});
  CHECK(lower_central_series(heisenberg()) == std::vector<std::size_t>{3, 1, 0});
  CHECK(is_nilpotent(heisenberg()));
  CHECK(is_solvable(heisenberg()));
  CHECK_FALSE(is_solvable(sl2()));
  CHECK(derived_series(heisenberg()) == oracle::derived_dims(heisenberg()));
}

TEST_CASE("ideals and subalgebras") {
  const LieAlgebra h = heisenberg();
  const std::vector<Vector> center = {e(3, 2)};
  const Subspace z = Subspace::span(center, 3);
  CHECK(is_ideal(h, z));
  CHECK(is_abelian(h, z));
  CHECK(is_nilpotent_ideal(h, z));
  const std::vector<Vector> xline = {e(3, 0)};
  CHECK(is_subalgebra(h, Subspace::span(xline, 3)));
  CHECK_FALSE(is_ideal(h, Subspace::span(xline, 3)));
  CHECK(ideal_generated(h, xline).dim() == 2);

  const LieAlgebra s = sl2();
  const std::vector<Vector> borel = {e(3, 0), e(3, 1)};
  CHECK(is_subalgebra(s, Subspace::span(borel, 3)));
  CHECK_FALSE(is_ideal(s, Subspace::span(borel, 3)));
  CHECK(ideal_generated(s, {e(3, 1)}).dim() == 3);
  CHECK(nilpotent_ideal_search(s).empty());
  const auto found = nilpotent_ideal_search(h);
  REQUIRE_FALSE(found.empty());
  CHECK(found.front().dim() == 3);
}

TEST_CASE("match_brackets rejects a wrong identification") {
  const LieAlgebra g = sl2();
  CHECK_FALSE(match_brackets(g, heisenberg(), Matrix::identity(3)));
  CHECK(match_brackets(g, g, Matrix::identity(3)));
}
