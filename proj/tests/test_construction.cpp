#include "doctest.h"
#include "subcan/construction.hpp"

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

Ideal ci_ideal(const PolyRing& R, int d1, int d2) {
  GradedPolynomial f = poly_power(var(R, 0), d1), g = poly_power(var(R, 1), d2);
  for (int v = 1; v < R.nvars(); ++v) f = f + poly_power(var(R, v), d1);
  for (int v = 2; v < R.nvars(); ++v) g = poly_combine(g, 1, poly_power(var(R, v), d2), v + 3);
  return Ideal(&R, {f, g});
}

Ideal double_line(const PolyRing& R, int m) {
  GradedPolynomial x0 = var(R, 0), x1 = var(R, 1);
  GradedPolynomial f = poly_power(var(R, 2), m), g = poly_power(var(R, 3), m);
  return Ideal(&R, {x0 * x0, x0 * x1, x1 * x1, x0 * f - x1 * g});
}

}  // namespace

TEST_CASE("extension package of a complete intersection is free of rank two") {
  PolyRing R(32003, 3);
  Ideal I = ci_ideal(R, 2, 3);
  SerrePackage pkg = serre_extension_module(I, 1);
  REQUIRE(pkg.certified);
  CHECK(pkg.a_x == 1);
  CHECK(pkg.c == 5);
  CHECK(pkg.rank == 2);
  CHECK(pkg.attempts_used == 1);
  CHECK(pkg.ext_infinite.empty());

  // the Koszul class gives the split-looking bundle: two free generators
  PresentedModule Mm = minimize_presentation(pkg.M);
  CHECK(Mm.gens.twists.size() == 2);
  CHECK(betti_table(Mm).pd() == 0);
  CHECK(verify_M_self_duality(pkg));

  ConstructionResult res = construct_Z(pkg);
  CHECK(res.hypothesis_met);
  CHECK(res.status == "ok");
  CHECK(res.d1 == 2);
  CHECK(res.degenerate);
  CHECK(ideal_is_unit(ideal_groebner(res.J)));
  CHECK(res.ann_saturated);
  CHECK_FALSE(verify_construction(res, I, pkg).applicable);
}

TEST_CASE("skew lines: certified package, unmet inequality, working construction") {
  PolyRing R(32003, 3);
  Ideal I = skew_lines(R);
  SerrePackage pkg = serre_extension_module(I, -2);
  REQUIRE(pkg.certified);
  CHECK(pkg.c == 2);
  CHECK(pkg.rank == 2);
  CHECK(verify_M_self_duality(pkg));

  ConstructionResult res = construct_Z(pkg);
  CHECK_FALSE(res.hypothesis_met);  // 2*2 > -2+3+2
  CHECK(res.status == "lemma-hypothesis-not-met");
  CHECK_FALSE(res.degenerate);
  CHECK(res.ann_saturated);
  CHECK(minimal_ideal_generators(res.J).size() == 4);

  ConstructionChecks ck = verify_construction(res, I, pkg);
  CHECK(ck.applicable);
  CHECK(ck.omega_twist);
  CHECK(ck.m1_translate);
  CHECK(ck.z_not_ci);
  CHECK(ck.no_linear_form);
  CHECK(ck.sequence_dims);
  CHECK(ck.all());
}

TEST_CASE("uncertified packages are reported, not thrown") {
  PolyRing R(32003, 3);

  // wrong twist: no degree-zero extension classes exist at all
  SerrePackage none = serre_extension_module(skew_lines(R), 0);
  CHECK_FALSE(none.certified);
  CHECK(none.attempts_used == 0);
  CHECK_THROWS_AS(construct_Z(none), std::invalid_argument);

  // the twisted cubic admits classes at this twist but none certify
  SerrePackage bad = serre_extension_module(twisted_cubic(R), -1);
  CHECK_FALSE(bad.certified);
  CHECK(bad.attempts_used == 32);
  CHECK_FALSE(bad.ext_infinite.empty());
}

TEST_CASE("double line: non-degenerate construction passes every check") {
  PolyRing R(32003, 3);
  Ideal I = double_line(R, 1);
  CHECK(ideal_equal(I, saturation_irrelevant(I)));

  AnalysisReport r = analyze({&R, I.gens});
  CHECK(r.codim == 2);
  REQUIRE(r.twist.twist.has_value());
  CHECK(*r.twist.twist == -2);
  REQUIRE(r.m1_finite);
  CHECK(r.m1_dims == std::map<int, int64_t>{{0, 1}});

  SerrePackage pkg = serre_extension_module(I, -2);
  REQUIRE(pkg.certified);
  CHECK(pkg.rank == 2);
  CHECK(verify_M_self_duality(pkg));

  ConstructionResult res = construct_Z(pkg);
  CHECK_FALSE(res.hypothesis_met);
  CHECK(res.status == "lemma-hypothesis-not-met");
  CHECK_FALSE(res.degenerate);
  CHECK(res.ann_saturated);
  CHECK(minimal_ideal_generators(res.J).size() == 4);

  ConstructionChecks ck = verify_construction(res, I, pkg);
  CHECK(ck.omega_twist);
  CHECK(ck.m1_translate);
  CHECK(ck.z_not_ci);
  CHECK(ck.no_linear_form);
  CHECK(ck.sequence_dims);

  CHECK(unmixed_probe(res.J, 2, 3));
}

TEST_CASE("three independent quadrics: multiplicity and depth probes") {
  PolyRing R(32003, 3);
  GradedPolynomial x0 = var(R, 0), x1 = var(R, 1), x2 = var(R, 2);

  // (x0,x1)^2: the non-reduced case the multiplicity bound speaks to
  QuadricProbe sq = lemma_3quad_probe(Ideal(&R, {x0 * x0, x0 * x1, x1 * x1}), false);
  CHECK(sq.dim_j2 == 3);
  CHECK(sq.multiplicity == 3);
  CHECK(sq.depth == 2);
  CHECK(sq.dim == 2);
  CHECK(sq.cm_demanded);
  CHECK(sq.cm_holds);

  // mixed: double line plus a transverse reduced line through it
  QuadricProbe mix = lemma_3quad_probe(Ideal(&R, {x0 * x1, x0 * x2, x1 * x1}), false);
  CHECK(mix.dim_j2 == 3);
  CHECK(mix.multiplicity == 3);
  CHECK(mix.depth == 2);
  CHECK(mix.dim == 2);
  CHECK(mix.cm_demanded);
  CHECK(mix.cm_holds);

  // triangle of lines: reduced, so no Cohen-Macaulay demand is made
  Ideal tri(&R, {x0 * x1, x0 * x2, x1 * x2});
  QuadricProbe t = lemma_3quad_probe(tri, true);
  CHECK(t.dim_j2 == 3);
  CHECK(t.multiplicity == 3);
  CHECK(t.depth == 2);
  CHECK(t.dim == 2);
  CHECK_FALSE(t.cm_demanded);
  CHECK(unmixed_probe(tri, 1, 4));
}

TEST_CASE("certification unlocks numeric verdicts") {
  PolyRing R(32003, 3);
  Ideal I = skew_lines(R);
  AnalysisReport r = analyze({&R, I.gens});
  CHECK(r.serre == SerreCertificate::not_checked);
  for (const TheoremVerdict& v : r.verdicts)
    CHECK(v.hypotheses == HypothesisStatus::not_certified);

  certify_and_refresh(r, I);
  CHECK(r.serre == SerreCertificate::certified);
  for (const TheoremVerdict& v : r.verdicts) {
    CHECK(v.hypotheses == HypothesisStatus::violated);
    CHECK(v.conclusion == ConclusionStatus::not_evaluated);
    CHECK(v.consistent);
  }
}
