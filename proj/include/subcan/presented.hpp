#pragma once

#include <map>
#include <vector>

#include "subcan/groebner.hpp"

namespace subcan {

// Finitely presented graded module: coker(relations: F1 -> F0).
struct PresentedModule {
  FreeModule gens;         // F0
  GradedMatrix relations;  // F1 -> F0; zero columns allowed

  const PolyRing* ring() const { return gens.ring; }
};

PresentedModule make_presented(const FreeModule& F0, const GradedMatrix& rel);
PresentedModule free_presented(const FreeModule& F0);
// R/I as a module over R
PresentedModule quotient_module(const Ideal& I);
// I itself, presented by minimal generators and their syzygies
PresentedModule ideal_module(const Ideal& I);
PresentedModule shift_module(const PresentedModule& M, int a);

bool module_is_zero(const PresentedModule& M);

// Graded pieces of a presented module, via standard monomials of the
// leading-term module of im(relations).  All answers are exact.
class ModulePieces {
public:
  explicit ModulePieces(PresentedModule M);

  const PresentedModule& module() const { return M_; }
  const GroebnerBasis& gb() const { return gb_; }

  int64_t dim(int d) const;
  // basis of M_d as reduced monomial terms of F0, module order descending
  const std::vector<ModTerm>& basis(int d) const;
  // coordinates of [v] in M_d over basis(d); v must be homogeneous of degree d
  std::vector<int64_t> coordinates(const ModuleElement& v, int d) const;
  ModuleElement element_from(const std::vector<int64_t>& coords, int d) const;
  // matrix of multiplication by homogeneous f, M_d -> M_{d + deg f},
  // acting on coordinate columns
  FpMatrix multiplication(const GradedPolynomial& f, int d) const;

private:
  PresentedModule M_;
  GroebnerBasis gb_;
  mutable std::map<int, std::vector<ModTerm>> basis_;
};

}  // namespace subcan
