#include "subcan/corpus.hpp"

#include <stdexcept>

#include "subcan/resolution.hpp"

namespace subcan {

namespace {

uint64_t rng_next(uint64_t& s) {
  s ^= s >> 12;
  s ^= s << 25;
  s ^= s >> 27;
  return s * 0x2545F4914F6CDD1DULL;
}

uint64_t seed_state(uint64_t seed) { return seed ? seed : 0x9e3779b97f4a7c15ULL; }

GradedPolynomial var(const PolyRing* R, int i) { return GradedPolynomial::variable(R, i); }

HilbertData quotient_hilbert(const Ideal& I) {
  return hilbert_data(betti_table(quotient_module(I)), I.ring);
}

// random element of I in the given degree: a random-form combination of the
// generators of degree at most `degree`
GradedPolynomial random_element_of(const Ideal& I, int degree, uint64_t& state) {
  GradedPolynomial out = GradedPolynomial::zero(I.ring);
  for (const GradedPolynomial& g : I.gens) {
    if (g.is_zero() || g.degree() > degree) continue;
    GradedPolynomial c = degree == g.degree()
                             ? GradedPolynomial::constant(
                                   I.ring, static_cast<int64_t>(rng_next(state) %
                                                                static_cast<uint64_t>(I.ring->p())))
                             : random_form(I.ring, degree - g.degree(), state);
    out = out + c * g;
  }
  return out;
}

}  // namespace

GradedPolynomial random_form(const PolyRing* R, int degree, uint64_t& state) {
  const std::vector<Monomial>& basis = R->monomials_of_degree(degree);
  std::vector<GradedPolynomial::Term> terms;
  for (const Monomial& m : basis) {
    int64_t c = static_cast<int64_t>(rng_next(state) % static_cast<uint64_t>(R->p()));
    if (c) terms.push_back({m, c});
  }
  if (terms.empty()) terms.push_back({basis.front(), 1});
  return GradedPolynomial::from_terms(R, std::move(terms));
}

std::vector<GradedPolynomial> gen_ci(const PolyRing* R, int d1, int d2, uint64_t seed) {
  uint64_t state = seed_state(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    GradedPolynomial f = random_form(R, d1, state);
    GradedPolynomial g = random_form(R, d2, state);
    if (quotient_hilbert(Ideal(R, {f, g})).codim == 2) return {f, g};
  }
  throw std::runtime_error("gen_ci: no regular sequence found within the retry cap");
}

std::vector<GradedPolynomial> gen_twisted_cubic(const PolyRing* R) {
  GradedPolynomial x0 = var(R, 0), x1 = var(R, 1), x2 = var(R, 2), x3 = var(R, 3);
  return {x0 * x2 - x1 * x1, x0 * x3 - x1 * x2, x1 * x3 - x2 * x2};
}

std::vector<GradedPolynomial> gen_skew_lines(const PolyRing* R) {
  GradedPolynomial x0 = var(R, 0), x1 = var(R, 1), x2 = var(R, 2), x3 = var(R, 3);
  return {x0 * x2, x0 * x3, x1 * x2, x1 * x3};
}

std::vector<GradedPolynomial> gen_double_line(const PolyRing* R, int m, uint64_t seed) {
  GradedPolynomial x0 = var(R, 0), x1 = var(R, 1);
  uint64_t state = seed_state(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    GradedPolynomial f, g;
    if (seed == 0 && attempt == 0) {
      f = poly_power(var(R, 2), m);
      g = poly_power(var(R, 3), m);
    } else {
      // binary forms in x2, x3 only
      std::vector<GradedPolynomial::Term> ft, gt;
      for (int e = 0; e <= m; ++e) {
        Monomial mono = Monomial::variable(R->nvars(), 2, e) * Monomial::variable(R->nvars(), 3, m - e);
        int64_t cf = static_cast<int64_t>(rng_next(state) % static_cast<uint64_t>(R->p()));
        int64_t cg = static_cast<int64_t>(rng_next(state) % static_cast<uint64_t>(R->p()));
        if (cf) ft.push_back({mono, cf});
        if (cg) gt.push_back({mono, cg});
      }
      if (ft.empty() || gt.empty()) continue;
      f = GradedPolynomial::from_terms(R, std::move(ft));
      g = GradedPolynomial::from_terms(R, std::move(gt));
    }
    // no common zero on the line x0 = x1 = 0
    if (quotient_hilbert(Ideal(R, {x0, x1, f, g})).dim == 0)
      return {x0 * x0, x0 * x1, x1 * x1, x0 * f - x1 * g};
  }
  throw std::runtime_error("gen_double_line: no coprime forms found within the retry cap");
}

std::vector<GradedPolynomial> gen_pfaffian_quintic(const PolyRing* R, uint64_t seed) {
  uint64_t state = seed_state(seed);
  Ideal lines(R, gen_skew_lines(R));
  for (int attempt = 0; attempt < 16; ++attempt) {
    GradedPolynomial f2 = random_element_of(lines, 2, state);
    GradedPolynomial f3 = random_element_of(lines, 3, state);
    Ideal ci1(R, {f2, f3});
    if (f2.is_zero() || f3.is_zero() || quotient_hilbert(ci1).codim != 2) continue;
    Ideal quartic = ideal_quotient_ideal(ci1, lines);

    GradedPolynomial g1 = random_element_of(quartic, 3, state);
    GradedPolynomial g2 = random_element_of(quartic, 3, state);
    Ideal ci2(R, {g1, g2});
    if (g1.is_zero() || g2.is_zero() || quotient_hilbert(ci2).codim != 2) continue;
    Ideal quintic = ideal_quotient_ideal(ci2, quartic);

    HilbertData h = quotient_hilbert(quintic);
    if (h.codim != 2 || h.multiplicity != 5) continue;
    std::vector<GradedPolynomial> gens = minimal_ideal_generators(quintic);
    bool cubics = gens.size() == 5;
    for (const GradedPolynomial& g : gens) cubics = cubics && g.degree() == 3;
    if (cubics) return gens;
  }
  throw std::runtime_error("gen_pfaffian_quintic: retry cap exceeded");
}

std::vector<GradedPolynomial> gen_three_quadric(const PolyRing* R, const std::string& pattern) {
  GradedPolynomial x0 = var(R, 0), x1 = var(R, 1), x2 = var(R, 2);
  if (pattern == "square") return {x0 * x0, x0 * x1, x1 * x1};
  if (pattern == "mixed") return {x0 * x1, x0 * x2, x1 * x1};
  if (pattern == "triangle") return {x0 * x1, x0 * x2, x1 * x2};
  throw std::invalid_argument("gen_three_quadric: unknown pattern " + pattern);
}

std::vector<GradedPolynomial> gen_random_ideal(const PolyRing* R, int max_gens, int max_degree,
                                               uint64_t seed) {
  uint64_t state = seed_state(seed);
  int count = 1 + static_cast<int>(rng_next(state) % static_cast<uint64_t>(max_gens));
  std::vector<GradedPolynomial> gens;
  for (int i = 0; i < count; ++i) {
    int d = 1 + static_cast<int>(rng_next(state) % static_cast<uint64_t>(max_degree));
    gens.push_back(random_form(R, d, state));
  }
  return gens;
}

}  // namespace subcan
