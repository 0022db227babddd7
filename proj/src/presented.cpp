#include "subcan/presented.hpp"

#include <algorithm>
#include <stdexcept>

namespace subcan {

PresentedModule make_presented(const FreeModule& F0, const GradedMatrix& rel) {
  if (!(rel.target() == F0)) throw std::invalid_argument("presentation target mismatch");
  return PresentedModule{F0, rel};
}

PresentedModule free_presented(const FreeModule& F0) {
  return PresentedModule{F0, GradedMatrix(F0, FreeModule(F0.ring, {}))};
}

PresentedModule quotient_module(const Ideal& I) {
  FreeModule F0(I.ring, {0});
  std::vector<ModuleElement> cols;
  std::vector<int> degs;
  for (const GradedPolynomial& g : I.gens) {
    if (g.is_zero()) continue;
    cols.push_back(ModuleElement::embed(F0, 0, g));
    degs.push_back(g.degree());
  }
  return PresentedModule{F0, GradedMatrix::from_columns(F0, cols, degs)};
}

PresentedModule ideal_module(const Ideal& I) {
  std::vector<GradedPolynomial> min = minimal_ideal_generators(I);
  FreeModule amb = rank_one_ambient(I.ring);
  std::vector<ModuleElement> gens;
  std::vector<int> twists;
  for (const GradedPolynomial& g : min) {
    gens.push_back(ModuleElement::embed(amb, 0, g));
    twists.push_back(g.degree());
  }
  FreeModule F0(I.ring, twists);
  std::vector<ModuleElement> syz = syzygy_module(amb, gens);
  std::vector<ModuleElement> cols;
  std::vector<int> degs;
  for (const ModuleElement& s : syz) {
    ModuleElement v = ModuleElement::from_terms(F0, s.terms());
    degs.push_back(v.degree(F0));
    cols.push_back(std::move(v));
  }
  return PresentedModule{F0, GradedMatrix::from_columns(F0, cols, degs)};
}

PresentedModule shift_module(const PresentedModule& M, int a) {
  return PresentedModule{M.gens.shifted(a), M.relations.shifted(a)};
}

bool module_is_zero(const PresentedModule& M) {
  GroebnerBasis G = groebner_basis(M.gens, M.relations.columns());
  for (int i = 0; i < M.gens.rank(); ++i) {
    if (!submodule_contains(G, ModuleElement::generator(M.gens, i))) return false;
  }
  return true;
}

ModulePieces::ModulePieces(PresentedModule M)
    : M_(std::move(M)), gb_(groebner_basis(M_.gens, M_.relations.columns())) {}

const std::vector<ModTerm>& ModulePieces::basis(int d) const {
  auto it = basis_.find(d);
  if (it != basis_.end()) return it->second;

  const PolyRing* R = M_.ring();
  std::vector<ModTerm> out;
  for (int c = 0; c < M_.gens.rank(); ++c) {
    const int md = d - M_.gens.twists[static_cast<size_t>(c)];
    if (md < 0) continue;
    for (const Monomial& m : R->monomials_of_degree(md)) {
      bool in_lt = false;
      for (const ModuleElement& g : gb_.elems) {
        const ModTerm& l = g.lead();
        if (l.comp == c && l.mono.divides(m)) {
          in_lt = true;
          break;
        }
      }
      if (!in_lt) out.push_back(ModTerm{m, c, 1});
    }
  }
  std::sort(out.begin(), out.end(), [](const ModTerm& a, const ModTerm& b) {
    return module_term_compare(a.mono, a.comp, b.mono, b.comp) > 0;
  });
  return basis_.emplace(d, std::move(out)).first->second;
}

int64_t ModulePieces::dim(int d) const { return static_cast<int64_t>(basis(d).size()); }

std::vector<int64_t> ModulePieces::coordinates(const ModuleElement& v, int d) const {
  const std::vector<ModTerm>& bs = basis(d);
  std::vector<int64_t> out(bs.size(), 0);
  if (v.is_zero()) return out;
  if (v.degree(M_.gens) != d) throw std::invalid_argument("coordinates: degree mismatch");
  ModuleElement nf = normal_form(gb_, v);
  for (const ModTerm& t : nf.terms()) {
    auto it = std::lower_bound(bs.begin(), bs.end(), t, [](const ModTerm& a, const ModTerm& b) {
      return module_term_compare(a.mono, a.comp, b.mono, b.comp) > 0;
    });
    if (it == bs.end() || !(it->mono == t.mono) || it->comp != t.comp) {
      throw std::logic_error("normal form term outside the standard basis");
    }
    out[static_cast<size_t>(it - bs.begin())] = t.coeff;
  }
  return out;
}

ModuleElement ModulePieces::element_from(const std::vector<int64_t>& coords, int d) const {
  const std::vector<ModTerm>& bs = basis(d);
  if (coords.size() != bs.size()) throw std::invalid_argument("element_from: size mismatch");
  std::vector<ModTerm> terms;
  const PrimeField& k = M_.ring()->field();
  for (size_t i = 0; i < bs.size(); ++i) {
    const int64_t c = k.reduce(coords[i]);
    if (c != 0) terms.push_back(ModTerm{bs[i].mono, bs[i].comp, c});
  }
  return ModuleElement::from_terms(M_.gens, std::move(terms));
}

FpMatrix ModulePieces::multiplication(const GradedPolynomial& f, int d) const {
  if (f.is_zero()) {
    // convention: zero map into the same degree
    return FpMatrix(&M_.ring()->field(), basis(d).size(), basis(d).size());
  }
  const int e = d + f.degree();
  const std::vector<ModTerm>& src = basis(d);
  const std::vector<ModTerm>& dst = basis(e);
  FpMatrix A(&M_.ring()->field(), dst.size(), src.size());
  const PrimeField& k = M_.ring()->field();
  for (size_t j = 0; j < src.size(); ++j) {
    ModuleElement v = ModuleElement::from_terms(M_.gens, {src[j]});
    std::vector<int64_t> col = coordinates(mod_poly_multiply(k, v, f), e);
    for (size_t i = 0; i < dst.size(); ++i) A.set(i, j, col[i]);
  }
  return A;
}

}  // namespace subcan
