#include "doctest.h"
#include "subcan/cohomology.hpp"

#include <climits>
#include <vector>

using namespace subcan;

namespace {

GradedPolynomial var(const PolyRing& R, int i) { return GradedPolynomial::variable(&R, i); }

Ideal twisted_cubic(const PolyRing& R) {
  GradedPolynomial x0 = var(R, 0), x1 = var(R, 1), x2 = var(R, 2), x3 = var(R, 3);
  return Ideal(&R, {x0 * x2 - x1 * x1, x0 * x3 - x1 * x2, x1 * x3 - x2 * x2});
}

Ideal skew_lines(const PolyRing& R) {
  GradedPolynomial x0 = var(R, 0), x1 = var(R, 1), x2 = var(R, 2), x3 = var(R, 3);
  return Ideal(&R, {x0 * x2, x0 * x3, x1 * x2, x1 * x3});
}

}  // namespace

TEST_CASE("local cohomology of the polynomial ring sits in the top index") {
  PolyRing R(32003, 3);
  PresentedModule F = free_presented(FreeModule(&R, {0}));
  for (int i = 0; i <= 3; ++i) {
    CHECK(LocalCohomology(F, i).is_zero());
  }
  LocalCohomology top(F, 4);
  CHECK_FALSE(top.is_zero());
  CHECK_FALSE(top.finite_length());
  CHECK(top.max_degree() == -4);
  CHECK(top.dim(-3) == 0);
  CHECK(top.dim(-4) == 1);
  CHECK(top.dim(-5) == 4);
  CHECK(top.dim(-6) == 10);
  // out-of-range indices give zero
  CHECK(LocalCohomology(F, 5).is_zero());
  CHECK(LocalCohomology(F, -1).is_zero());
}

TEST_CASE("finite level truncations reproduce the top cohomology of the ring") {
  PolyRing R(32003, 3);
  CechOracle cech(free_presented(FreeModule(&R, {0})));
  for (int i = 0; i <= 3; ++i) {
    CechValue v = cech.dim(i, 0);
    CHECK(v.stable);
    CHECK(v.dim == 0);
  }
  CechValue a = cech.dim(4, -4);
  CHECK(a.stable);
  CHECK(a.dim == 1);
  CechValue b = cech.dim(4, -5);
  CHECK(b.stable);
  CHECK(b.dim == 4);
}

TEST_CASE("residue field is its own degree zero local cohomology") {
  PolyRing R(32003, 3);
  PresentedModule k =
      quotient_module(Ideal(&R, {var(R, 0), var(R, 1), var(R, 2), var(R, 3)}));
  LocalCohomology H0(k, 0);
  CHECK(H0.finite_length());
  CHECK(H0.dim(0) == 1);
  CHECK(H0.dim(1) == 0);
  CHECK(H0.dim(-1) == 0);
  CHECK(H0.min_degree() == 0);
  CHECK(H0.max_degree() == 0);
  CHECK(H0.socle() == std::map<int, int64_t>{{0, 1}});
  for (int i = 1; i <= 4; ++i) CHECK(LocalCohomology(k, i).is_zero());
  CechOracle cech(k);
  CHECK(cech.dim(0, 0).dim == 1);
  CHECK(cech.dim(0, 0).stable);
  CHECK(cech.dim(1, 0).dim == 0);
}

TEST_CASE("degree zero local cohomology detects the unsaturated part") {
  PolyRing R(32003, 3);
  GradedPolynomial x0 = var(R, 0);
  Ideal I(&R, {x0 * var(R, 0), x0 * var(R, 1), x0 * var(R, 2), x0 * var(R, 3)});
  PresentedModule S = quotient_module(I);
  LocalCohomology H0(S, 0);
  CHECK(H0.finite_length());
  CHECK(H0.dim(0) == 0);
  CHECK(H0.dim(1) == 1);
  CHECK(H0.dim(2) == 0);
  CHECK(H0.socle() == std::map<int, int64_t>{{1, 1}});
  CechOracle cech(S);
  CechValue v = cech.dim(0, 1);
  CHECK(v.stable);
  CHECK(v.dim == 1);
  CHECK(cech.dim(0, 0).dim == 0);
}

TEST_CASE("arithmetically cohen-macaulay curves have no middle cohomology") {
  PolyRing R(32003, 3);
  PresentedModule S = quotient_module(twisted_cubic(R));
  CHECK(LocalCohomology(S, 0).is_zero());
  CHECK(deficiency_module(S).is_zero());
  LocalCohomology H2(S, 2);
  CHECK_FALSE(H2.is_zero());
  CHECK_FALSE(H2.finite_length());
  CHECK(H2.max_degree() == -1);
  CHECK(H2.dim(-1) == 2);
  CHECK(H2.dim(0) == 0);
  CHECK(H2.dim(-2) == 5);
  CHECK(H2.dim(-3) == 8);
  CHECK(LocalCohomology(S, 3).is_zero());
  CHECK(LocalCohomology(S, 4).is_zero());
}

TEST_CASE("truncated complex agrees with the duality route on a curve") {
  PolyRing R(32003, 3);
  PresentedModule S = quotient_module(twisted_cubic(R));
  CechOracle cech(S);
  for (int j = -3; j <= 1; ++j) {
    for (int i = 0; i <= 2; ++i) {
      LocalCohomology H(S, i);
      CechValue v = cech.dim(i, j);
      CHECK(v.stable);
      CHECK(v.dim == H.dim(j));
    }
  }
}

TEST_CASE("two skew lines carry a one dimensional deficiency module") {
  PolyRing R(32003, 3);
  PresentedModule S = quotient_module(skew_lines(R));
  LocalCohomology M1 = deficiency_module(S);
  CHECK(M1.finite_length());
  CHECK(M1.dim(0) == 1);
  CHECK(M1.dim(1) == 0);
  CHECK(M1.dim(-1) == 0);
  CHECK(M1.min_degree() == 0);
  CHECK(M1.max_degree() == 0);
  CHECK(M1.socle() == std::map<int, int64_t>{{0, 1}});
  Ideal m(&R, {var(R, 0), var(R, 1), var(R, 2), var(R, 3)});
  CHECK(ideal_equal(M1.annihilator_ideal(), m));

  CechOracle cech(S);
  CHECK(cech.dim(1, 0).dim == 1);
  CHECK(cech.dim(1, 0).stable);
  CHECK(cech.dim(1, 1).dim == 0);
  CHECK(cech.dim(1, -1).dim == 0);
  CHECK(cech.dim(0, 0).dim == 0);
}

TEST_CASE("a invariants of standard examples") {
  PolyRing R(32003, 3);
  // complete intersections: a = sum of the degrees - n - 1
  GradedPolynomial q = var(R, 0) * var(R, 1) - var(R, 2) * var(R, 3);
  GradedPolynomial c = poly_power(var(R, 0), 3) + poly_power(var(R, 1), 3) +
                       poly_power(var(R, 2), 3) + poly_power(var(R, 3), 3);
  CHECK(a_invariant(quotient_module(Ideal(&R, {q, c}))) == 1);
  GradedPolynomial q2 = var(R, 0) * var(R, 3) - var(R, 1) * var(R, 2);
  CHECK(a_invariant(quotient_module(Ideal(&R, {q, q2}))) == 0);
  CHECK(a_invariant(quotient_module(twisted_cubic(R))) == -1);
  CHECK(a_invariant(quotient_module(skew_lines(R))) == -2);
  // the ring itself
  CHECK(a_invariant(free_presented(FreeModule(&R, {0}))) == -4);
}

TEST_CASE("sheaf cohomology table of the twisted cubic") {
  PolyRing R(32003, 3);
  PresentedModule S = quotient_module(twisted_cubic(R));
  SheafCohomologyTable T = sheaf_cohomology(S, -2, 2);
  // h^0(O_X(j)) for the degree 3 rational normal curve
  CHECK(T.at(0, -2) == 0);
  CHECK(T.at(0, -1) == 0);
  CHECK(T.at(0, 0) == 1);
  CHECK(T.at(0, 1) == 4);
  CHECK(T.at(0, 2) == 7);
  // h^1(O_X(j)) = h^0(P^1, O(-3j - 2))
  CHECK(T.at(1, -2) == 5);
  CHECK(T.at(1, -1) == 2);
  CHECK(T.at(1, 0) == 0);
  CHECK(T.at(1, 1) == 0);
  // nothing above the dimension of X
  for (int j = -2; j <= 2; ++j) {
    CHECK(T.at(2, j) == 0);
    CHECK(T.at(3, j) == 0);
  }
}

TEST_CASE("sheaf cohomology table of the structure sheaf of projective space") {
  PolyRing R(32003, 3);
  SheafCohomologyTable T = sheaf_cohomology(free_presented(FreeModule(&R, {0})), -5, 2);
  for (int j = -5; j <= 2; ++j) {
    CHECK(T.at(0, j) == R.dim_degree(j));
    CHECK(T.at(1, j) == 0);
    CHECK(T.at(2, j) == 0);
  }
  CHECK(T.at(3, -4) == 1);
  CHECK(T.at(3, -5) == 4);
  CHECK(T.at(3, -3) == 0);
}

TEST_CASE("piece module of the skew lines deficiency module") {
  PolyRing R(32003, 3);
  LocalCohomology H(quotient_module(skew_lines(R)), 1);
  GradedPieceModule P = piece_module(H);
  CHECK(P.complete);
  CHECK(P.lo == 0);
  CHECK(P.hi == 0);
  CHECK(P.dim(0) == 1);
  CHECK(P.dim(5) == 0);
  // both socle routes: kernel of the actions vs generators of the dual
  std::map<int, int64_t> via_kernel = socle_degrees(P);
  CHECK(via_kernel == H.socle());
  // one-dimensional module killed by the maximal ideal
  CHECK(power_annihilates(P, 1));
  CHECK(power_annihilates(P, 3));
}

TEST_CASE("piece module of a fat point") {
  PolyRing R(32003, 3);
  std::vector<GradedPolynomial> cubes;
  for (int v = 0; v < 4; ++v)
    for (int w = v; w < 4; ++w)
      for (int u = w; u < 4; ++u)
        cubes.push_back(var(R, v) * var(R, w) * var(R, u));
  PresentedModule S = quotient_module(Ideal(&R, cubes));
  LocalCohomology H(S, 0);
  REQUIRE(H.finite_length());
  GradedPieceModule P = piece_module(H);
  CHECK(P.lo == 0);
  CHECK(P.hi == 2);
  CHECK(P.dim(0) == 1);
  CHECK(P.dim(1) == 4);
  CHECK(P.dim(2) == 10);
  // actions commute degree by degree
  for (int v = 0; v < 4; ++v)
    for (int w = 0; w < 4; ++w) {
      FpMatrix a = P.act(v, 1).multiply(P.act(w, 0));
      FpMatrix b = P.act(w, 1).multiply(P.act(v, 0));
      for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) CHECK(a.at(i, j) == b.at(i, j));
    }
  // socle is exactly the top degree piece
  std::map<int, int64_t> soc = socle_degrees(P);
  CHECK(soc == std::map<int, int64_t>{{2, 10}});
  CHECK(soc == H.socle());
  CHECK(power_annihilates(P, 3));
  CHECK_FALSE(power_annihilates(P, 2));
  CHECK_FALSE(power_annihilates(P, 1));
}
