#include "subcan/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace subcan {

namespace {

ExtModule zero_ext(const PolyRing* R) {
  FreeModule none(R, {});
  return ExtModule{free_presented(none), GradedMatrix(none, none)};
}

}  // namespace

ExtModule ext_module_from(const FreeResolution& C, int i, int twist) {
  const PolyRing* R = C.modules.front().ring;
  if (i < 0) throw std::invalid_argument("ext index must be nonnegative");
  const int len = C.length();
  if (i > len) return zero_ext(R);

  if (i == len) {
    FreeModule top = C.modules[static_cast<size_t>(len)].dual().shifted(twist);
    if (len == 0) {
      return ExtModule{free_presented(top), identity_matrix(top)};
    }
    GradedMatrix rel = C.maps[static_cast<size_t>(len - 1)].transpose().shifted(twist);
    return ExtModule{PresentedModule{top, rel}, identity_matrix(top)};
  }

  GradedMatrix d_next = C.maps[static_cast<size_t>(i)].transpose().shifted(twist);
  GradedMatrix K = kernel_matrix(d_next);
  GradedMatrix rel = (i == 0)
                         ? kernel_matrix(K)
                         : modulo_matrix(K, C.maps[static_cast<size_t>(i - 1)].transpose().shifted(twist));
  return ExtModule{PresentedModule{K.source(), rel}, K};
}

ExtModule ext_module(const PresentedModule& M, int i, int twist) {
  if (M.gens.rank() == 0) return zero_ext(M.ring());
  return ext_module_from(free_resolution(M), i, twist);
}

ExtModule dual_module(const PresentedModule& M) {
  if (M.gens.rank() == 0) return zero_ext(M.ring());
  if (M.relations.cols() == 0) {
    FreeModule d = M.gens.dual();
    return ExtModule{free_presented(d), identity_matrix(d)};
  }
  GradedMatrix K = kernel_matrix(M.relations.transpose());
  return ExtModule{PresentedModule{K.source(), kernel_matrix(K)}, K};
}

Ideal annihilator(const PresentedModule& M) {
  const PolyRing* R = M.ring();
  if (M.gens.rank() == 0) {
    return Ideal(R, {GradedPolynomial::constant(R, 1)});
  }
  std::vector<ModuleElement> rel = M.relations.columns();
  bool first = true;
  Ideal acc;
  for (int i = 0; i < M.gens.rank(); ++i) {
    std::vector<ModuleElement> pre =
        modulo_submodule(M.gens, {ModuleElement::generator(M.gens, i)}, rel);
    Ideal Ji(R, {});
    FreeModule Fa(R, {M.gens.twists[static_cast<size_t>(i)]});
    for (const ModuleElement& v : pre) {
      GradedPolynomial f = v.component(Fa, 0);
      if (!f.is_zero()) Ji.gens.push_back(f);
    }
    Ji.gens = minimal_ideal_generators(Ji);
    if (first) {
      acc = Ji;
      first = false;
    } else {
      acc = intersect(acc, Ji);
    }
    if (acc.gens.empty()) return acc;  // annihilator is already zero
  }
  return acc;
}

std::vector<GradedMatrix> hom_degree_zero_lifts(const PresentedModule& M,
                                                const PresentedModule& N) {
  const PolyRing* R = M.ring();
  const PrimeField& k = R->field();
  const FreeModule& F0 = M.gens;
  const FreeModule& G0 = N.gens;

  struct Unknown {
    int i, j;
    Monomial m;
  };
  std::vector<Unknown> unknowns;
  for (int i = 0; i < G0.rank(); ++i) {
    for (int j = 0; j < F0.rank(); ++j) {
      const int delta = F0.twists[static_cast<size_t>(j)] - G0.twists[static_cast<size_t>(i)];
      if (delta < 0) continue;
      for (const Monomial& m : R->monomials_of_degree(delta)) unknowns.push_back({i, j, m});
    }
  }
  if (unknowns.empty()) return {};

  ModulePieces PN(N);
  std::vector<ModuleElement> rel_cols = M.relations.columns();

  // rows: coordinates of the image of each relation column in N, per unknown
  size_t total_rows = 0;
  std::vector<int> col_deg(rel_cols.size());
  for (size_t c = 0; c < rel_cols.size(); ++c) {
    col_deg[c] = M.relations.source().twists[c];
    total_rows += static_cast<size_t>(PN.dim(col_deg[c]));
  }

  FpMatrix A(&k, total_rows, unknowns.size());
  for (size_t u = 0; u < unknowns.size(); ++u) {
    size_t row0 = 0;
    for (size_t c = 0; c < rel_cols.size(); ++c) {
      const int64_t dim = PN.dim(col_deg[c]);
      if (dim == 0) continue;
      // image of the relation column under the single-entry map m*E_{i,j}
      std::vector<ModTerm> img;
      for (const ModTerm& t : rel_cols[c].terms()) {
        if (t.comp == unknowns[u].j) {
          img.push_back(ModTerm{t.mono * unknowns[u].m, unknowns[u].i, t.coeff});
        }
      }
      if (!img.empty()) {
        ModuleElement e = ModuleElement::from_terms(G0, std::move(img));
        std::vector<int64_t> coords = PN.coordinates(e, col_deg[c]);
        for (size_t r = 0; r < coords.size(); ++r) A.set(row0 + r, u, coords[r]);
      }
      row0 += static_cast<size_t>(dim);
    }
  }

  FpMatrix ker = A.kernel();
  std::vector<GradedMatrix> out;
  for (size_t r = 0; r < ker.rows(); ++r) {
    GradedMatrix phi(G0, F0);
    for (int i = 0; i < G0.rank(); ++i) {
      for (int j = 0; j < F0.rank(); ++j) {
        std::vector<GradedPolynomial::Term> terms;
        for (size_t u = 0; u < unknowns.size(); ++u) {
          if (unknowns[u].i == i && unknowns[u].j == j && ker.at(r, u) != 0) {
            terms.push_back({unknowns[u].m, ker.at(r, u)});
          }
        }
        if (!terms.empty()) phi.set(i, j, GradedPolynomial::from_terms(R, terms));
      }
    }
    out.push_back(std::move(phi));
  }
  return out;
}

bool hilbert_series_equal(const PresentedModule& M, const PresentedModule& N) {
  HilbertData a = hilbert_data(betti_table(M), M.ring());
  HilbertData b = hilbert_data(betti_table(N), N.ring());
  return a.numerator == b.numerator;
}

bool is_isomorphism(const GradedMatrix& phi, const PresentedModule& M,
                    const PresentedModule& N) {
  // well-defined on M
  GroebnerBasis GN = groebner_basis(N.gens, N.relations.columns());
  for (const ModuleElement& a : M.relations.columns()) {
    if (!submodule_contains(GN, apply_map(phi, a))) return false;
  }
  if (!hilbert_series_equal(M, N)) return false;

  // surjectivity in the generator degrees of N kills the cokernel, and equal
  // Hilbert functions then force bijectivity everywhere
  ModulePieces PM(M), PN(N);
  std::vector<int> degs = minimal_generator_degrees(N);
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
  for (int d : degs) {
    const auto& src = PM.basis(d);
    const int64_t want = PN.dim(d);
    if (want == 0) continue;
    FpMatrix img(&M.ring()->field(), want, src.size());
    for (size_t j = 0; j < src.size(); ++j) {
      ModuleElement v = ModuleElement::from_terms(M.gens, {src[j]});
      std::vector<int64_t> col = PN.coordinates(apply_map(phi, v), d);
      for (size_t i = 0; i < col.size(); ++i) img.set(i, j, col[i]);
    }
    if (static_cast<int64_t>(img.rank()) != want) return false;
  }
  return true;
}

std::optional<GradedMatrix> find_degree_zero_iso(const PresentedModule& M,
                                                 const PresentedModule& N, uint64_t seed,
                                                 int attempts) {
  if (!hilbert_series_equal(M, N)) return std::nullopt;
  std::vector<GradedMatrix> lifts = hom_degree_zero_lifts(M, N);
  if (lifts.empty()) {
    GradedMatrix zero(N.gens, M.gens);
    if (is_isomorphism(zero, M, N)) return zero;
    return std::nullopt;
  }
  for (const GradedMatrix& phi : lifts) {
    if (is_isomorphism(phi, M, N)) return phi;
  }

  const PrimeField& k = M.ring()->field();
  uint64_t s = seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL;
  auto next = [&s]() {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 0x2545F4914F6CDD1DULL;
  };
  for (int t = 0; t < attempts; ++t) {
    GradedMatrix phi(N.gens, M.gens);
    bool any = false;
    for (size_t l = 0; l < lifts.size(); ++l) {
      const int64_t c = static_cast<int64_t>(next() % static_cast<uint64_t>(k.p()));
      if (c == 0) continue;
      any = true;
      for (int i = 0; i < phi.rows(); ++i) {
        for (int j = 0; j < phi.cols(); ++j) {
          if (lifts[l].at(i, j).is_zero()) continue;
          phi.set(i, j, poly_combine(phi.at(i, j), 1, lifts[l].at(i, j), c));
        }
      }
    }
    if (any && is_isomorphism(phi, M, N)) return phi;
  }
  return std::nullopt;
}

}  // namespace subcan
