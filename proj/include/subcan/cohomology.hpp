#pragma once

#include <map>

#include "subcan/homology.hpp"

namespace subcan {

// H^i_m(M) for the irrelevant maximal ideal m, handled through its graded
// dual E = Ext^{n+1-i}(M, R(-n-1)): the piece H^i_m(M)_j is dual to E_{-j}.
// E is finitely generated, so every question about the (artinian) local
// cohomology turns into a finite one about E.
class LocalCohomology {
public:
  LocalCohomology(const PresentedModule& M, int i);

  int index() const { return i_; }
  int64_t dim(int j) const;
  bool is_zero() const;
  // total dimension finite, equivalently E has Krull dimension 0
  bool finite_length() const;
  // largest j with a nonzero piece; INT_MIN when zero
  int max_degree() const;
  // smallest such j; only meaningful for finite length (throws otherwise)
  int min_degree() const;
  // socle dimensions by degree: dual to the minimal generators of E
  std::map<int, int64_t> socle() const;
  Ideal annihilator_ideal() const;

  const PresentedModule& dual_presentation() const { return E_; }
  const ModulePieces& dual_pieces() const { return pieces_; }

private:
  const PolyRing* R_;
  int i_;
  PresentedModule E_;
  ModulePieces pieces_;
  HilbertData hd_;
  std::vector<int> gen_degrees_;
};

// deficiency module M_1(X) = H^1_m(R/I), the twisted ideal-sheaf H^1 table
LocalCohomology deficiency_module(const PresentedModule& S);

// A local cohomology module laid out degree by degree: bases sized by dims
// and, for each variable, the multiplication matrices piece_j -> piece_{j+1}
// (transposes of the action on the dual Ext module).  When `complete` is
// true the window provably contains the whole support.
struct GradedPieceModule {
  const PolyRing* ring = nullptr;
  int lo = 0, hi = -1;  // inclusive window; empty when hi < lo
  bool complete = false;
  std::vector<int64_t> dims;
  std::vector<std::vector<FpMatrix>> action;  // action[v][j - lo]

  int64_t dim(int j) const {
    return (j < lo || j > hi) ? 0 : dims[static_cast<size_t>(j - lo)];
  }
  const FpMatrix& act(int v, int j) const {
    return action[static_cast<size_t>(v)][static_cast<size_t>(j - lo)];
  }
  bool is_zero() const;
};

// window chosen automatically: the exact support for finite length, the top
// slab [-reg, max] otherwise (then complete = false)
GradedPieceModule piece_module(const LocalCohomology& H);
GradedPieceModule piece_module(const LocalCohomology& H, int lo, int hi);

// socle dims per degree from joint kernels of the variable actions;
// requires a complete window
std::map<int, int64_t> socle_degrees(const GradedPieceModule& P);
// does (R_+)^k annihilate the module? requires a complete window
bool power_annihilates(const GradedPieceModule& P, int k);

// a(S) = max degree of H^dim_m(S); S must be nonzero
int a_invariant(const PresentedModule& S);
// K_S = Ext^codim(S, R(-n-1)); presentation as computed (not minimized)
ExtModule canonical_module(const PresentedModule& S);

// Finite-level truncation of the stable Koszul (cech) complex on the
// variables, computed independently of the duality route.  Levels increase
// until two consecutive answers agree, starting where the slice degrees pass
// the regularity of M; `stable` reports whether agreement was reached within
// the level budget.  Exact for index 0, a strong heuristic above it.
struct CechValue {
  int64_t dim = 0;
  bool stable = false;
  int level = 0;
};

class CechOracle {
public:
  explicit CechOracle(const PresentedModule& M);
  CechValue dim(int i, int j) const;

private:
  int64_t level_dim(int t, int i, int j) const;
  ModulePieces P_;
  int reg_;
};

// h^i(F(j)) for F the sheaf associated with M, i = 0..n
struct SheafCohomologyTable {
  int lo = 0, hi = -1;
  std::vector<std::vector<int64_t>> h;  // h[i][j - lo]

  int64_t at(int i, int j) const { return h[static_cast<size_t>(i)][static_cast<size_t>(j - lo)]; }
};

SheafCohomologyTable sheaf_cohomology(const PresentedModule& M, int lo, int hi);

}  // namespace subcan
