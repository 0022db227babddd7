#pragma once

#include <optional>
#include <vector>

#include "subcan/free_module.hpp"
#include "subcan/linalg.hpp"

namespace subcan {

// Reduced Groebner basis of a submodule of a graded free module, canonical
// for the fixed module order: interreduced, monic, sorted by ascending lead.
struct GroebnerBasis {
  FreeModule ambient;
  std::vector<ModuleElement> elems;

  bool operator==(const GroebnerBasis& o) const {
    return ambient == o.ambient && elems == o.elems;
  }
};

GroebnerBasis groebner_basis(const FreeModule& F, const std::vector<ModuleElement>& gens);
ModuleElement normal_form(const GroebnerBasis& G, ModuleElement v);
bool submodule_contains(const GroebnerBasis& G, const ModuleElement& v);

// generating set of { a in R^k : sum a_i gens_i = 0 }; the result lives in the
// free module with twists deg(gens_i) (zero generators get twist 0)
std::vector<ModuleElement> syzygy_module(const FreeModule& F,
                                         const std::vector<ModuleElement>& gens);
FreeModule syzygy_ambient(const FreeModule& F, const std::vector<ModuleElement>& gens);

// generators of { v in R^a : A v in im B }, columns of A and B in F
std::vector<ModuleElement> modulo_submodule(const FreeModule& F,
                                            const std::vector<ModuleElement>& a_cols,
                                            const std::vector<ModuleElement>& b_cols);

// matrix forms with the source twists threaded through, so zero columns keep
// their declared degrees
GradedMatrix kernel_matrix(const GradedMatrix& A);
GradedMatrix modulo_matrix(const GradedMatrix& A, const GradedMatrix& B);

// representation target = sum x_i gens_i, if target lies in the submodule
std::optional<ModuleElement> lift_through(const FreeModule& F,
                                          const std::vector<ModuleElement>& gens,
                                          const ModuleElement& target);

// minimal homogeneous generating set of the submodule spanned by cands,
// deterministic (degrees ascending)
std::vector<ModuleElement> minimal_module_generators(const FreeModule& F,
                                                     const std::vector<ModuleElement>& cands);

// ---- ideal layer -----------------------------------------------------------

struct Ideal {
  const PolyRing* ring = nullptr;
  std::vector<GradedPolynomial> gens;

  Ideal() = default;
  Ideal(const PolyRing* r, std::vector<GradedPolynomial> g) : ring(r), gens(std::move(g)) {}
};

FreeModule rank_one_ambient(const PolyRing* ring);
std::vector<ModuleElement> ideal_elements(const Ideal& I);
GroebnerBasis ideal_groebner(const Ideal& I);
Ideal ideal_from_gb(const GroebnerBasis& G);
bool ideal_contains(const GroebnerBasis& G, const GradedPolynomial& f);
bool ideal_is_unit(const GroebnerBasis& G);

// dim_k I_d via standard monomials of the lead-term module
int64_t ideal_piece_dim(const GroebnerBasis& G, int d);
// monomials of degree d not in the lead-term module, grevlex descending
std::vector<Monomial> standard_monomials(const GroebnerBasis& G, int d);

// minimal homogeneous generating set (degrees ascending, deterministic)
std::vector<GradedPolynomial> minimal_ideal_generators(const Ideal& I);

Ideal ideal_quotient(const Ideal& I, const GradedPolynomial& f);
Ideal ideal_quotient_ideal(const Ideal& I, const Ideal& J);
Ideal intersect(const Ideal& I, const Ideal& J);
Ideal saturation_irrelevant(const Ideal& I);
bool ideal_equal(const Ideal& I, const Ideal& J);

// Degree-d piece of the span of { m * g : g generator, m monomial } by plain
// row reduction over the monomial basis of R_d.  Deliberately ignorant of the
// Groebner layer; used to cross-check it.
struct MacaulayPiece {
  int degree = 0;
  int64_t dimension = 0;
  FpMatrix basis;  // RREF rows, columns indexed by ring.monomials_of_degree(d)
};
MacaulayPiece macaulay_graded_piece(const Ideal& I, int d);

}  // namespace subcan
