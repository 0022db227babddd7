#pragma once

#include <cstdint>
#include <optional>

#include "subcan/resolution.hpp"

namespace subcan {

// Ext^i(M, R(a)) together with the cocycle representatives of its
// generators inside the dualized resolution term F_i^*(a).  The embedding is
// what turns abstract Ext classes back into actual homomorphisms.
struct ExtModule {
  PresentedModule mod;
  GradedMatrix embedding;  // mod.gens -> F_i^*(a)
};

ExtModule ext_module_from(const FreeResolution& C, int i, int twist = 0);
ExtModule ext_module(const PresentedModule& M, int i, int twist = 0);
// Hom(M, R) computed on the presentation as given, so the embedding columns
// are homomorphisms F0 -> R expressed in the coordinates the caller passed in
ExtModule dual_module(const PresentedModule& M);

Ideal annihilator(const PresentedModule& M);

// all lifts F0(M) -> F0(N) of degree-0 homomorphisms M -> N, as a basis of
// the solution space of phi . rel_M  in  im(rel_N)
std::vector<GradedMatrix> hom_degree_zero_lifts(const PresentedModule& M,
                                                const PresentedModule& N);

bool hilbert_series_equal(const PresentedModule& M, const PresentedModule& N);
// phi must be a lift of a well-defined map M -> N; checked
bool is_isomorphism(const GradedMatrix& phi, const PresentedModule& M, const PresentedModule& N);
// deterministic search: basis lifts first, then seeded random combinations
std::optional<GradedMatrix> find_degree_zero_iso(const PresentedModule& M,
                                                 const PresentedModule& N, uint64_t seed = 1,
                                                 int attempts = 32);

}  // namespace subcan
