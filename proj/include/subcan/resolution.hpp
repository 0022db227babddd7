#pragma once

#include <map>
#include <string>
#include <utility>

#include "subcan/presented.hpp"

namespace subcan {

// Chain of free modules F0 <- F1 <- ... <- Fl with maps[k]: modules[k+1] ->
// modules[k].  free_resolution guarantees exactness away from F0 and
// coker(maps[0]) = M.
struct FreeResolution {
  std::vector<FreeModule> modules;
  std::vector<GradedMatrix> maps;

  int length() const { return static_cast<int>(maps.size()); }
};

FreeResolution free_resolution(const PresentedModule& M);
// cancel all unit entries; the result is the minimal free resolution when the
// input resolves M
FreeResolution minimize_resolution(const FreeResolution& C);
PresentedModule minimize_presentation(const PresentedModule& M);
std::vector<int> minimal_generator_degrees(const PresentedModule& M);

struct BettiTable {
  // (homological index i, internal degree j) -> rank, only nonzero entries
  std::map<std::pair<int, int>, int64_t> beta;

  int64_t at(int i, int j) const;
  int64_t total(int i) const;
  int pd() const;               // largest i present; -1 for the zero module
  int max_shift(int i) const;   // t_i: largest j with beta(i,j) != 0; INT_MIN if none
  int min_shift(int i) const;
  int regularity() const;       // max j - i over nonzero entries
  std::string str() const;      // Macaulay-style display grid
};

BettiTable betti_from_minimal(const FreeResolution& minimized);
BettiTable betti_table(const PresentedModule& M);

// Numerical invariants extracted from the graded Betti numbers over
// k[x_0..x_n]: the Hilbert series numerator N(t), its (1-t)-free part Q(t),
// and the derived dimension data.
struct HilbertData {
  bool zero = false;
  std::map<int, int64_t> numerator;  // N(t), exponent -> coefficient
  std::map<int, int64_t> reduced;    // Q(t) with N = (1-t)^codim Q, Q(1) != 0
  int codim = 0;
  int dim = -1;        // Krull dimension of the module (affine)
  int depth = -1;
  int reg = 0;
  int64_t multiplicity = 0;  // Q(1)
  int64_t rank = 0;          // generic rank over R; 0 unless codim == 0
};

HilbertData hilbert_data(const BettiTable& B, const PolyRing* R);
// value of the Hilbert polynomial at d (agrees with dim M_d for d >= reg)
int64_t hilbert_polynomial_value(const HilbertData& H, const PolyRing* R, int64_t d);

}  // namespace subcan
