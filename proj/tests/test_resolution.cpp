#include "doctest.h"
#include "subcan/resolution.hpp"

#include <map>

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

std::map<std::pair<int, int>, int64_t> as_map(const BettiTable& B) { return B.beta; }

void check_complex(const FreeResolution& C) {
  for (size_t k = 0; k + 1 < C.maps.size(); ++k) {
    CHECK(C.maps[k].compose(C.maps[k + 1]).is_zero());
  }
}

}  // namespace

TEST_CASE("graded pieces of a quotient module") {
  PolyRing R(32003, 3);
  ModulePieces M(quotient_module(twisted_cubic(R)));
  CHECK(M.dim(0) == 1);
  CHECK(M.dim(1) == 4);
  for (int d = 1; d <= 6; ++d) CHECK(M.dim(d) == 3 * d + 1);
  CHECK(M.dim(-1) == 0);

  // coordinates round-trip
  for (int d = 1; d <= 3; ++d) {
    const auto& bs = M.basis(d);
    std::vector<int64_t> c(bs.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = static_cast<int64_t>(2 * i + 1);
    ModuleElement v = M.element_from(c, d);
    CHECK(M.coordinates(v, d) == c);
  }

  // multiplication matrices compose: x1 * (x0 * -) == (x0*x1) * -
  FpMatrix a = M.multiplication(var(R, 0), 1);
  FpMatrix b = M.multiplication(var(R, 1), 2);
  FpMatrix ab = M.multiplication(var(R, 0) * var(R, 1), 1);
  FpMatrix ba = b.multiply(a);
  REQUIRE(ab.rows() == ba.rows());
  REQUIRE(ab.cols() == ba.cols());
  for (size_t i = 0; i < ab.rows(); ++i) {
    for (size_t j = 0; j < ab.cols(); ++j) CHECK(ab.at(i, j) == ba.at(i, j));
  }
}

TEST_CASE("zero module detection") {
  PolyRing R(32003, 3);
  Ideal unit(&R, {GradedPolynomial::constant(&R, 1)});
  CHECK(module_is_zero(quotient_module(unit)));
  CHECK_FALSE(module_is_zero(quotient_module(twisted_cubic(R))));
  ModulePieces Z(quotient_module(unit));
  for (int d = 0; d < 4; ++d) CHECK(Z.dim(d) == 0);
}

TEST_CASE("betti numbers of the twisted cubic") {
  PolyRing R(32003, 3);
  BettiTable B = betti_table(quotient_module(twisted_cubic(R)));
  std::map<std::pair<int, int>, int64_t> want = {{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}};
  CHECK(as_map(B) == want);
  CHECK(B.pd() == 2);
  CHECK(B.regularity() == 1);
  CHECK(B.total(1) == 3);
  CHECK(B.max_shift(2) == 3);

  HilbertData H = hilbert_data(B, &R);
  CHECK_FALSE(H.zero);
  CHECK(H.codim == 2);
  CHECK(H.dim == 2);
  CHECK(H.depth == 2);  // arithmetically Cohen-Macaulay
  CHECK(H.multiplicity == 3);
  CHECK(H.rank == 0);
  ModulePieces M(quotient_module(twisted_cubic(R)));
  for (int d = H.reg; d <= H.reg + 4; ++d) {
    CHECK(hilbert_polynomial_value(H, &R, d) == M.dim(d));
  }
  CHECK(hilbert_polynomial_value(H, &R, 10) == 31);
}

TEST_CASE("betti numbers of two skew lines") {
  PolyRing R(32003, 3);
  BettiTable B = betti_table(quotient_module(skew_lines(R)));
  std::map<std::pair<int, int>, int64_t> want = {
      {{0, 0}, 1}, {{1, 2}, 4}, {{2, 3}, 4}, {{3, 4}, 1}};
  CHECK(as_map(B) == want);
  CHECK(B.pd() == 3);
  CHECK(B.regularity() == 1);

  HilbertData H = hilbert_data(B, &R);
  CHECK(H.codim == 2);
  CHECK(H.dim == 2);
  CHECK(H.depth == 1);  // not Cohen-Macaulay
  CHECK(H.multiplicity == 2);

  // N(t) = 1 - 4t^2 + 4t^3 - t^4, Q(t) = 1 + 2t - t^2
  std::map<int, int64_t> N = {{0, 1}, {2, -4}, {3, 4}, {4, -1}};
  std::map<int, int64_t> Q = {{0, 1}, {1, 2}, {2, -1}};
  CHECK(H.numerator == N);
  CHECK(H.reduced == Q);

  // hilbert function equals the polynomial from reg on, differs below
  ModulePieces M(quotient_module(skew_lines(R)));
  CHECK(H.reg == 1);
  for (int d = 1; d <= 5; ++d) {
    CHECK(M.dim(d) == 2 * d + 2);
    CHECK(hilbert_polynomial_value(H, &R, d) == 2 * d + 2);
  }
  CHECK(M.dim(0) == 1);
  CHECK(hilbert_polynomial_value(H, &R, 0) == 2);
}

TEST_CASE("betti numbers of a complete intersection are koszul") {
  PolyRing R(32003, 3);
  GradedPolynomial f = var(R, 0) * var(R, 0) + var(R, 1) * var(R, 2);
  GradedPolynomial g =
      poly_power(var(R, 1), 3) + poly_power(var(R, 2), 3) + poly_power(var(R, 3), 3);
  BettiTable B = betti_table(quotient_module(Ideal(&R, {f, g})));
  std::map<std::pair<int, int>, int64_t> want = {{{0, 0}, 1}, {{1, 2}, 1}, {{1, 3}, 1}, {{2, 5}, 1}};
  CHECK(as_map(B) == want);
  HilbertData H = hilbert_data(B, &R);
  CHECK(H.codim == 2);
  CHECK(H.depth == 2);
  CHECK(H.multiplicity == 6);
  CHECK(H.reg == 3);
  // degree-6 genus-4 curve: HP(d) = 6d - 3
  CHECK(hilbert_polynomial_value(H, &R, 7) == 39);
}

TEST_CASE("resolution is a complex and minimization removes units") {
  PolyRing R(32003, 3);
  Ideal I = twisted_cubic(R);
  // fatten the presentation with redundant generators
  Ideal fat(&R, {I.gens[0], I.gens[1], I.gens[2], I.gens[0] + I.gens[1],
                 poly_multiply(I.gens[2], var(R, 0))});
  FreeResolution C = free_resolution(quotient_module(fat));
  check_complex(C);
  FreeResolution Cm = minimize_resolution(C);
  check_complex(Cm);
  for (const GradedMatrix& D : Cm.maps) {
    for (int i = 0; i < D.rows(); ++i) {
      for (int j = 0; j < D.cols(); ++j) {
        if (!D.at(i, j).is_zero()) CHECK(D.at(i, j).degree() > 0);
      }
    }
  }
  CHECK(as_map(betti_from_minimal(Cm)) == as_map(betti_table(quotient_module(I))));
}

TEST_CASE("minimal generator degrees see through redundancy") {
  PolyRing R(32003, 3);
  Ideal I = twisted_cubic(R);
  Ideal fat(&R, {I.gens[0], I.gens[1], I.gens[2], poly_multiply(I.gens[0], var(R, 3))});
  PresentedModule MI = ideal_module(fat);
  CHECK(minimal_generator_degrees(MI) == std::vector<int>{2, 2, 2});

  BettiTable B = betti_table(MI);
  std::map<std::pair<int, int>, int64_t> want = {{{0, 2}, 3}, {{1, 3}, 2}};
  CHECK(as_map(B) == want);
}

TEST_CASE("free and zero modules") {
  PolyRing R(32003, 3);
  PresentedModule F = free_presented(FreeModule(&R, {1, 3}));
  BettiTable B = betti_table(F);
  std::map<std::pair<int, int>, int64_t> want = {{{0, 1}, 1}, {{0, 3}, 1}};
  CHECK(as_map(B) == want);
  HilbertData H = hilbert_data(B, &R);
  CHECK(H.codim == 0);
  CHECK(H.dim == 4);
  CHECK(H.rank == 2);
  CHECK(hilbert_polynomial_value(H, &R, 5) == R.dim_degree(4) + R.dim_degree(2));

  Ideal unit(&R, {GradedPolynomial::constant(&R, 1)});
  BettiTable BZ = betti_table(quotient_module(unit));
  CHECK(BZ.beta.empty());
  CHECK(hilbert_data(BZ, &R).zero);

  // a unit relation cancels a generator against the shifted copy
  FreeModule F0(&R, {0, 1});
  FreeModule F1(&R, {1});
  GradedMatrix rel(F0, F1);
  rel.set(0, 0, var(R, 2));
  rel.set(1, 0, GradedPolynomial::constant(&R, -1));
  PresentedModule M = minimize_presentation(PresentedModule{F0, rel});
  CHECK(M.gens.rank() == 1);
  CHECK(M.gens.twists == std::vector<int>{0});
  CHECK(M.relations.cols() == 0);
}
