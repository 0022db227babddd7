#pragma once

#include <optional>
#include <vector>

#include "subcan/poly.hpp"

namespace subcan {

// Graded free module F = (+) R(-g_i); `twists` holds the generator degrees
// g_i, so the degree-d piece of summand i is R_{d-g_i}.
struct FreeModule {
  const PolyRing* ring = nullptr;
  std::vector<int> twists;

  FreeModule() = default;
  FreeModule(const PolyRing* r, std::vector<int> t) : ring(r), twists(std::move(t)) {}
  int rank() const { return static_cast<int>(twists.size()); }
  FreeModule dual() const {
    FreeModule d(ring, twists);
    for (int& t : d.twists) t = -t;
    return d;
  }
  FreeModule shifted(int a) const {  // F(a), generator degrees drop by a
    FreeModule s(ring, twists);
    for (int& t : s.twists) t -= a;
    return s;
  }
  bool operator==(const FreeModule& o) const { return ring == o.ring && twists == o.twists; }
};

struct ModTerm {
  Monomial mono;
  int comp = 0;
  int64_t coeff = 0;
};

// order used throughout: grevlex on the monomial, earlier component breaks
// ties; +1 / 0 / -1 as for grevlex_compare
inline int module_term_compare(const Monomial& am, int ac, const Monomial& bm, int bc) {
  int c = grevlex_compare(am, bm);
  if (c != 0) return c;
  if (ac != bc) return ac < bc ? 1 : -1;
  return 0;
}

// Homogeneous element of a free module: terms sorted descending under the
// module order, no zeros.  Degree of term = mono degree + twist of comp.
class ModuleElement {
public:
  ModuleElement() = default;

  static ModuleElement zero() { return ModuleElement(); }
  static ModuleElement from_terms(const FreeModule& F, std::vector<ModTerm> terms);
  // unit vector e_comp scaled
  static ModuleElement generator(const FreeModule& F, int comp, int64_t c = 1);
  // polynomial placed in one component
  static ModuleElement embed(const FreeModule& F, int comp, const GradedPolynomial& f);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<ModTerm>& terms() const { return terms_; }
  int degree(const FreeModule& F) const;  // homogeneous degree incl. twist
  const ModTerm& lead() const;

  GradedPolynomial component(const FreeModule& F, int comp) const;

  bool operator==(const ModuleElement& o) const;

private:
  std::vector<ModTerm> terms_;

  friend ModuleElement mod_combine(const PrimeField&, const ModuleElement&, int64_t,
                                   const ModuleElement&, int64_t);
  friend ModuleElement mod_monomial_multiply(const PrimeField&, const ModuleElement&,
                                             const Monomial&, int64_t);
};

ModuleElement mod_combine(const PrimeField& F, const ModuleElement& a, int64_t ca,
                          const ModuleElement& b, int64_t cb);
ModuleElement mod_monomial_multiply(const PrimeField& F, const ModuleElement& v, const Monomial& m,
                                    int64_t c);
ModuleElement mod_poly_multiply(const PrimeField& F, const ModuleElement& v,
                                const GradedPolynomial& f);

// Degree-0 map between graded free modules, columns are images of the source
// generators.  Entry (i,j) is zero or homogeneous of degree
// source.twists[j] - target.twists[i]; the constructor enforces this.
class GradedMatrix {
public:
  GradedMatrix() = default;
  GradedMatrix(FreeModule target, FreeModule source);

  const FreeModule& target() const { return target_; }
  const FreeModule& source() const { return source_; }
  int rows() const { return target_.rank(); }
  int cols() const { return source_.rank(); }

  const GradedPolynomial& at(int i, int j) const;
  void set(int i, int j, GradedPolynomial f);

  ModuleElement column(int j) const;
  void set_column(int j, const ModuleElement& v);
  std::vector<ModuleElement> columns() const;

  GradedMatrix transpose() const;  // the dual map between dual modules
  GradedMatrix shifted(int a) const;

  // composition this o other (this: F1 -> F0, other: F2 -> F1)
  GradedMatrix compose(const GradedMatrix& other) const;

  bool is_zero() const;

  static GradedMatrix from_columns(FreeModule target, const std::vector<ModuleElement>& cols,
                                   const std::vector<int>& col_degrees);

private:
  FreeModule target_, source_;
  std::vector<GradedPolynomial> e_;  // row major
};

// Pfaffian of a skew-symmetric matrix of polynomials (zero diagonal), given
// as a plain square entry grid; expansion along the first remaining index.
GradedPolynomial pfaffian(const std::vector<std::vector<GradedPolynomial>>& a);

// image of v under the map, v read in A.source()
ModuleElement apply_map(const GradedMatrix& A, const ModuleElement& v);
GradedMatrix identity_matrix(const FreeModule& F);

}  // namespace subcan
