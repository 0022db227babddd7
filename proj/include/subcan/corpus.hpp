#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subcan/groebner.hpp"

namespace subcan {

// Reproducible example ideals.  Every generator is deterministic in
// (ring, params, seed); the randomized ones draw from the same xorshift
// stream the rest of the library uses.

// two random forms of degrees d1, d2 forming a regular sequence
// (codimension two); retries fresh draws up to 16 times
std::vector<GradedPolynomial> gen_ci(const PolyRing* R, int d1, int d2, uint64_t seed = 0);

// the standard three quadrics (n = 3)
std::vector<GradedPolynomial> gen_twisted_cubic(const PolyRing* R);

// two disjoint coordinate lines (n = 3)
std::vector<GradedPolynomial> gen_skew_lines(const PolyRing* R);

// (x0^2, x0*x1, x1^2, x0*f - x1*g) for degree-m forms f, g in x2, x3 with
// no common zero; seed 0 picks f = x2^m, g = x3^m (n = 3)
std::vector<GradedPolynomial> gen_double_line(const PolyRing* R, int m, uint64_t seed = 0);

// degree-5 curve with five cubic generators, obtained from the two skew
// lines by a random double link (2,3) then (3,3); retries up to 16 times
// until the result has codimension 2, multiplicity 5 and five cubics
std::vector<GradedPolynomial> gen_pfaffian_quintic(const PolyRing* R, uint64_t seed = 0);

// three independent quadrics: "square" (x0,x1)^2, "mixed" a double line plus
// a transverse line through it, "triangle" three pairwise meeting lines
std::vector<GradedPolynomial> gen_three_quadric(const PolyRing* R, const std::string& pattern);

// between 1 and max_gens random forms of degrees between 1 and max_degree
std::vector<GradedPolynomial> gen_random_ideal(const PolyRing* R, int max_gens, int max_degree,
                                               uint64_t seed);

// random nonzero homogeneous form, advancing the caller's state
GradedPolynomial random_form(const PolyRing* R, int degree, uint64_t& state);

}  // namespace subcan
