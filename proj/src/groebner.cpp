#include "subcan/groebner.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace subcan {

namespace {

// Interned basis entry.  Elements are kept monic; aug carries the coordinates
// of the (monic) element with respect to the original generator list.
struct BasisElem {
  ModuleElement v;
  ModuleElement aug;
};

struct Reducer {
  const FreeModule* F = nullptr;
  const FreeModule* aug_ambient = nullptr;
  std::vector<BasisElem>* basis = nullptr;
  bool tracked = false;

  // Full normal form.  If rep != nullptr it accumulates r with
  //   input = result + sum_i r_i * gens_i
  // (only meaningful when the basis augs are maintained).
  ModuleElement reduce(ModuleElement v, ModuleElement* aug, ModuleElement* rep) const {
    const PrimeField& k = F->ring->field();
    std::vector<ModTerm> rem;
    while (!v.is_zero()) {
      const ModTerm lt = v.lead();
      int hit = -1;
      for (size_t i = 0; i < basis->size(); ++i) {
        const ModTerm& bl = (*basis)[i].v.lead();
        if (bl.comp == lt.comp && bl.mono.divides(lt.mono)) {
          hit = static_cast<int>(i);
          break;
        }
      }
      if (hit < 0) {
        rem.push_back(lt);
        std::vector<ModTerm> tail(v.terms().begin() + 1, v.terms().end());
        v = ModuleElement::from_terms(*F, std::move(tail));
        continue;
      }
      const BasisElem& b = (*basis)[static_cast<size_t>(hit)];
      const Monomial m = lt.mono / b.v.lead().mono;
      const int64_t c = lt.coeff;  // basis is monic
      v = mod_combine(k, v, 1, mod_monomial_multiply(k, b.v, m, c), -1);
      if (tracked && aug != nullptr) {
        *aug = mod_combine(k, *aug, 1, mod_monomial_multiply(k, b.aug, m, c), -1);
      }
      if (rep != nullptr) {
        *rep = mod_combine(k, *rep, 1, mod_monomial_multiply(k, b.aug, m, c), 1);
      }
    }
    return ModuleElement::from_terms(*F, std::move(rem));
  }
};

struct BuchbergerResult {
  std::vector<BasisElem> basis;
  std::vector<ModuleElement> syzygies;
  FreeModule aug_ambient;
};

// Extended Buchberger.  With track_syzygies the augmentation vectors of all
// zero reductions are collected; in that mode no pair criteria may be used
// and nothing is ever discarded from the basis, otherwise the collected
// vectors would not generate the full syzygy module of the input list.
BuchbergerResult buchberger(const FreeModule& F, const std::vector<ModuleElement>& gens,
                            bool track_syzygies) {
  const PrimeField& k = F.ring->field();
  BuchbergerResult out;

  std::vector<int> aug_twists;
  aug_twists.reserve(gens.size());
  for (const ModuleElement& g : gens) aug_twists.push_back(g.is_zero() ? 0 : g.degree(F));
  out.aug_ambient = FreeModule(F.ring, aug_twists);

  std::vector<BasisElem>& basis = out.basis;
  // pair key: (degree of the S-element, i, j) for determinism
  using PairKey = std::tuple<int, int, int>;
  std::priority_queue<PairKey, std::vector<PairKey>, std::greater<PairKey>> pairs;

  auto push_pairs_with = [&](int j) {
    const ModTerm& lj = basis[static_cast<size_t>(j)].v.lead();
    for (int i = 0; i < j; ++i) {
      const ModTerm& li = basis[static_cast<size_t>(i)].v.lead();
      if (li.comp != lj.comp) continue;
      if (!track_syzygies && F.rank() == 1 && li.mono.coprime(lj.mono)) continue;
      const int deg = li.mono.lcm(lj.mono).degree() + F.twists[static_cast<size_t>(li.comp)];
      pairs.emplace(deg, i, j);
    }
  };

  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) {
      if (track_syzygies) {
        out.syzygies.push_back(
            ModuleElement::generator(out.aug_ambient, static_cast<int>(i)));
      }
      continue;
    }
    const int64_t c = gens[i].lead().coeff;
    BasisElem e;
    e.v = mod_monomial_multiply(k, gens[i], Monomial::one(F.ring->nvars()), k.inv(c));
    e.aug = ModuleElement::generator(out.aug_ambient, static_cast<int>(i), k.inv(c));
    basis.push_back(std::move(e));
    push_pairs_with(static_cast<int>(basis.size()) - 1);
  }

  Reducer red{&F, &out.aug_ambient, &basis, track_syzygies};

  size_t budget = size_t(1) << 22;
  while (!pairs.empty()) {
    if (budget-- == 0) throw std::runtime_error("groebner: pair budget exceeded");
    auto [deg, i, j] = pairs.top();
    pairs.pop();
    (void)deg;
    const BasisElem& bi = basis[static_cast<size_t>(i)];
    const BasisElem& bj = basis[static_cast<size_t>(j)];
    const Monomial l = bi.v.lead().mono.lcm(bj.v.lead().mono);
    const Monomial mi = l / bi.v.lead().mono;
    const Monomial mj = l / bj.v.lead().mono;
    ModuleElement s = mod_combine(k, mod_monomial_multiply(k, bi.v, mi, 1), 1,
                                  mod_monomial_multiply(k, bj.v, mj, 1), -1);
    ModuleElement aug;
    if (track_syzygies) {
      aug = mod_combine(k, mod_monomial_multiply(k, bi.aug, mi, 1), 1,
                        mod_monomial_multiply(k, bj.aug, mj, 1), -1);
    }
    s = red.reduce(std::move(s), track_syzygies ? &aug : nullptr, nullptr);
    if (s.is_zero()) {
      if (track_syzygies && !aug.is_zero()) out.syzygies.push_back(std::move(aug));
      continue;
    }
    const int64_t c = s.lead().coeff;
    BasisElem e;
    e.v = mod_monomial_multiply(k, s, Monomial::one(F.ring->nvars()), k.inv(c));
    if (track_syzygies) {
      e.aug = mod_monomial_multiply(k, aug, Monomial::one(F.ring->nvars()), k.inv(c));
    }
    basis.push_back(std::move(e));
    push_pairs_with(static_cast<int>(basis.size()) - 1);
  }
  return out;
}

bool lead_less(const ModuleElement& a, const ModuleElement& b) {
  const ModTerm& la = a.lead();
  const ModTerm& lb = b.lead();
  return module_term_compare(la.mono, la.comp, lb.mono, lb.comp) < 0;
}

}  // namespace

GroebnerBasis groebner_basis(const FreeModule& F, const std::vector<ModuleElement>& gens) {
  BuchbergerResult raw = buchberger(F, gens, false);

  // minimize: drop any element whose lead is divisible by another kept lead
  std::vector<ModuleElement> elems;
  for (const BasisElem& b : raw.basis) elems.push_back(b.v);
  std::sort(elems.begin(), elems.end(), lead_less);
  std::vector<ModuleElement> kept;
  for (const ModuleElement& g : elems) {
    bool redundant = false;
    for (const ModuleElement& h : kept) {
      if (h.lead().comp == g.lead().comp && h.lead().mono.divides(g.lead().mono)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }

  // tail-reduce each element against the others
  GroebnerBasis G{F, kept};
  std::vector<ModuleElement> reduced;
  for (size_t i = 0; i < kept.size(); ++i) {
    std::vector<BasisElem> others;
    for (size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(BasisElem{kept[j], ModuleElement::zero()});
    }
    Reducer red{&F, &F, &others, false};
    reduced.push_back(red.reduce(kept[i], nullptr, nullptr));
  }
  std::sort(reduced.begin(), reduced.end(), lead_less);
  return GroebnerBasis{F, std::move(reduced)};
}

ModuleElement normal_form(const GroebnerBasis& G, ModuleElement v) {
  std::vector<BasisElem> basis;
  basis.reserve(G.elems.size());
  for (const ModuleElement& g : G.elems) basis.push_back(BasisElem{g, ModuleElement::zero()});
  Reducer red{&G.ambient, &G.ambient, &basis, false};
  return red.reduce(std::move(v), nullptr, nullptr);
}

bool submodule_contains(const GroebnerBasis& G, const ModuleElement& v) {
  return normal_form(G, v).is_zero();
}

std::vector<ModuleElement> syzygy_module(const FreeModule& F,
                                         const std::vector<ModuleElement>& gens) {
  return buchberger(F, gens, true).syzygies;
}

FreeModule syzygy_ambient(const FreeModule& F, const std::vector<ModuleElement>& gens) {
  std::vector<int> twists;
  twists.reserve(gens.size());
  for (const ModuleElement& g : gens) twists.push_back(g.is_zero() ? 0 : g.degree(F));
  return FreeModule(F.ring, twists);
}

std::vector<ModuleElement> modulo_submodule(const FreeModule& F,
                                            const std::vector<ModuleElement>& a_cols,
                                            const std::vector<ModuleElement>& b_cols) {
  std::vector<ModuleElement> all = a_cols;
  all.insert(all.end(), b_cols.begin(), b_cols.end());
  std::vector<ModuleElement> syz = syzygy_module(F, all);

  std::vector<int> twists;
  for (const ModuleElement& a : a_cols) twists.push_back(a.is_zero() ? 0 : a.degree(F));
  FreeModule Fa(F.ring, twists);

  std::vector<ModuleElement> out;
  const int na = static_cast<int>(a_cols.size());
  for (const ModuleElement& s : syz) {
    std::vector<ModTerm> head;
    for (const ModTerm& t : s.terms()) {
      if (t.comp < na) head.push_back(t);
    }
    ModuleElement proj = ModuleElement::from_terms(Fa, std::move(head));
    if (!proj.is_zero()) out.push_back(std::move(proj));
  }
  return out;
}

GradedMatrix kernel_matrix(const GradedMatrix& A) {
  const FreeModule& F = A.target();
  std::vector<ModuleElement> cols = A.columns();
  std::vector<ModuleElement> syz;
  {
    // thread the declared column degrees through so zero columns of A still
    // contribute correctly twisted coordinates
    BuchbergerResult raw = [&] {
      std::vector<ModuleElement> gens = cols;
      return buchberger(F, gens, true);
    }();
    syz = raw.syzygies;
  }
  FreeModule source_of_A = A.source();
  // a zero column of A yields the syzygy e_i, whose degree should be the
  // declared twist rather than 0; rebuild coordinates in source_of_A
  std::vector<int> degs;
  std::vector<ModuleElement> fixed;
  for (const ModuleElement& s : syz) {
    ModuleElement v = ModuleElement::from_terms(source_of_A, s.terms());
    degs.push_back(v.degree(source_of_A));
    fixed.push_back(std::move(v));
  }
  return GradedMatrix::from_columns(source_of_A, fixed, degs);
}

GradedMatrix modulo_matrix(const GradedMatrix& A, const GradedMatrix& B) {
  if (!(A.target() == B.target())) {
    throw std::invalid_argument("modulo_matrix: target mismatch");
  }
  const FreeModule& F = A.target();
  std::vector<ModuleElement> all = A.columns();
  {
    std::vector<ModuleElement> bc = B.columns();
    all.insert(all.end(), bc.begin(), bc.end());
  }
  // zero columns must keep their declared twists, so run the tracked pass on
  // an ambient built from the matrix sources
  std::vector<ModuleElement> syz = syzygy_module(F, all);
  const int na = A.cols();
  std::vector<ModuleElement> cols;
  std::vector<int> degs;
  for (const ModuleElement& s : syz) {
    std::vector<ModTerm> head;
    for (const ModTerm& t : s.terms()) {
      if (t.comp < na) head.push_back(t);
    }
    ModuleElement proj = ModuleElement::from_terms(A.source(), std::move(head));
    if (proj.is_zero()) continue;
    degs.push_back(proj.degree(A.source()));
    cols.push_back(std::move(proj));
  }
  return GradedMatrix::from_columns(A.source(), cols, degs);
}

std::optional<ModuleElement> lift_through(const FreeModule& F,
                                          const std::vector<ModuleElement>& gens,
                                          const ModuleElement& target) {
  BuchbergerResult raw = buchberger(F, gens, true);
  Reducer red{&F, &raw.aug_ambient, &raw.basis, true};
  ModuleElement rep;  // zero
  ModuleElement rem = red.reduce(target, nullptr, &rep);
  if (!rem.is_zero()) return std::nullopt;
  if (rep.is_zero()) return ModuleElement::zero();
  return ModuleElement::from_terms(raw.aug_ambient, rep.terms());
}

namespace {

bool elem_canonical_less(const ModuleElement& a, const ModuleElement& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const size_t n = std::min(ta.size(), tb.size());
  for (size_t i = 0; i < n; ++i) {
    int c = module_term_compare(ta[i].mono, ta[i].comp, tb[i].mono, tb[i].comp);
    if (c != 0) return c < 0;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

}  // namespace

std::vector<ModuleElement> minimal_module_generators(const FreeModule& F,
                                                     const std::vector<ModuleElement>& cands) {
  const PrimeField& k = F.ring->field();
  std::vector<ModuleElement> cs;
  for (const ModuleElement& v : cands) {
    if (v.is_zero()) continue;
    cs.push_back(mod_monomial_multiply(k, v, Monomial::one(F.ring->nvars()),
                                       k.inv(v.lead().coeff)));
  }
  std::sort(cs.begin(), cs.end(), [&](const ModuleElement& a, const ModuleElement& b) {
    if (a.degree(F) != b.degree(F)) return a.degree(F) < b.degree(F);
    return elem_canonical_less(a, b);
  });
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());

  std::vector<ModuleElement> kept;
  for (const ModuleElement& v : cs) {
    if (kept.empty()) {
      kept.push_back(v);
      continue;
    }
    GroebnerBasis G = groebner_basis(F, kept);
    if (!submodule_contains(G, v)) kept.push_back(v);
  }
  return kept;
}

// ---- ideal layer -----------------------------------------------------------

FreeModule rank_one_ambient(const PolyRing* ring) { return FreeModule(ring, {0}); }

std::vector<ModuleElement> ideal_elements(const Ideal& I) {
  FreeModule F = rank_one_ambient(I.ring);
  std::vector<ModuleElement> out;
  for (const GradedPolynomial& g : I.gens) {
    if (!g.is_zero()) out.push_back(ModuleElement::embed(F, 0, g));
  }
  return out;
}

GroebnerBasis ideal_groebner(const Ideal& I) {
  return groebner_basis(rank_one_ambient(I.ring), ideal_elements(I));
}

Ideal ideal_from_gb(const GroebnerBasis& G) {
  Ideal I;
  I.ring = G.ambient.ring;
  for (const ModuleElement& e : G.elems) I.gens.push_back(e.component(G.ambient, 0));
  return I;
}

bool ideal_contains(const GroebnerBasis& G, const GradedPolynomial& f) {
  if (f.is_zero()) return true;
  return submodule_contains(G, ModuleElement::embed(G.ambient, 0, f));
}

bool ideal_is_unit(const GroebnerBasis& G) {
  for (const ModuleElement& e : G.elems) {
    if (e.lead().mono.is_one()) return true;
  }
  return false;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& G, int d) {
  const PolyRing* R = G.ambient.ring;
  if (G.ambient.rank() != 1) throw std::invalid_argument("standard_monomials: rank-1 only");
  std::vector<Monomial> out;
  if (d < 0) return out;
  for (const Monomial& m : R->monomials_of_degree(d)) {
    bool in_lt = false;
    for (const ModuleElement& g : G.elems) {
      if (g.lead().mono.divides(m)) {
        in_lt = true;
        break;
      }
    }
    if (!in_lt) out.push_back(m);
  }
  return out;
}

int64_t ideal_piece_dim(const GroebnerBasis& G, int d) {
  if (d < 0) return 0;
  const PolyRing* R = G.ambient.ring;
  return R->dim_degree(d) - static_cast<int64_t>(standard_monomials(G, d).size());
}

namespace {

// deterministic total order on nonzero homogeneous polynomials
bool poly_canonical_less(const GradedPolynomial& a, const GradedPolynomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const size_t n = std::min(ta.size(), tb.size());
  for (size_t i = 0; i < n; ++i) {
    int c = grevlex_compare(ta[i].first, tb[i].first);
    if (c != 0) return c < 0;
    if (ta[i].second != tb[i].second) return ta[i].second < tb[i].second;
  }
  return ta.size() < tb.size();
}

}  // namespace

std::vector<GradedPolynomial> minimal_ideal_generators(const Ideal& I) {
  std::vector<GradedPolynomial> cands;
  for (const GradedPolynomial& g : I.gens) {
    if (!g.is_zero()) cands.push_back(g.monic());
  }
  std::sort(cands.begin(), cands.end(), [](const GradedPolynomial& a, const GradedPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return poly_canonical_less(a, b);
  });
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  std::vector<GradedPolynomial> kept;
  for (const GradedPolynomial& g : cands) {
    if (kept.empty()) {
      kept.push_back(g);
      continue;
    }
    GroebnerBasis G = ideal_groebner(Ideal(I.ring, kept));
    if (!ideal_contains(G, g)) kept.push_back(g);
  }
  return kept;
}

Ideal ideal_quotient(const Ideal& I, const GradedPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("ideal_quotient: zero divisor polynomial");
  FreeModule F = rank_one_ambient(I.ring);
  std::vector<ModuleElement> list;
  list.push_back(ModuleElement::embed(F, 0, f));
  for (const GradedPolynomial& g : I.gens) {
    if (!g.is_zero()) list.push_back(ModuleElement::embed(F, 0, g));
  }
  std::vector<ModuleElement> syz = syzygy_module(F, list);
  FreeModule Fs = syzygy_ambient(F, list);
  Ideal out;
  out.ring = I.ring;
  for (const ModuleElement& s : syz) {
    GradedPolynomial a = s.component(Fs, 0);
    if (!a.is_zero()) out.gens.push_back(a);
  }
  out.gens = minimal_ideal_generators(out);
  return out;
}

Ideal ideal_quotient_ideal(const Ideal& I, const Ideal& J) {
  bool first = true;
  Ideal acc;
  for (const GradedPolynomial& f : J.gens) {
    if (f.is_zero()) continue;
    Ideal q = ideal_quotient(I, f);
    if (first) {
      acc = q;
      first = false;
    } else {
      acc = intersect(acc, q);
    }
  }
  if (first) throw std::invalid_argument("ideal_quotient_ideal: zero ideal divisor");
  return acc;
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  FreeModule F = rank_one_ambient(I.ring);
  std::vector<GradedPolynomial> fi, gj;
  for (const GradedPolynomial& f : I.gens)
    if (!f.is_zero()) fi.push_back(f);
  for (const GradedPolynomial& g : J.gens)
    if (!g.is_zero()) gj.push_back(g);

  std::vector<ModuleElement> list;
  for (const GradedPolynomial& f : fi) list.push_back(ModuleElement::embed(F, 0, f));
  for (const GradedPolynomial& g : gj) list.push_back(ModuleElement::embed(F, 0, g));
  std::vector<ModuleElement> syz = syzygy_module(F, list);
  FreeModule Fs = syzygy_ambient(F, list);

  Ideal out;
  out.ring = I.ring;
  for (const ModuleElement& s : syz) {
    GradedPolynomial h = GradedPolynomial::zero(I.ring);
    for (size_t i = 0; i < fi.size(); ++i) {
      GradedPolynomial a = s.component(Fs, static_cast<int>(i));
      if (!a.is_zero()) h = h + poly_multiply(a, fi[i]);
    }
    if (!h.is_zero()) out.gens.push_back(h);
  }
  out.gens = minimal_ideal_generators(out);
  return out;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  return ideal_groebner(I) == ideal_groebner(J);
}

Ideal saturation_irrelevant(const Ideal& I) {
  const PolyRing* R = I.ring;
  bool first = true;
  Ideal acc;
  for (int i = 0; i < R->nvars(); ++i) {
    GradedPolynomial xi = GradedPolynomial::variable(R, i);
    Ideal cur = I;
    for (;;) {
      Ideal next = ideal_quotient(cur, xi);
      if (ideal_equal(next, cur)) break;
      cur = next;
    }
    if (first) {
      acc = cur;
      first = false;
    } else {
      acc = intersect(acc, cur);
    }
  }
  acc.gens = minimal_ideal_generators(acc);
  return acc;
}

MacaulayPiece macaulay_graded_piece(const Ideal& I, int d) {
  const PolyRing* R = I.ring;
  MacaulayPiece out;
  out.degree = d;
  if (d < 0) {
    out.basis = FpMatrix(&R->field(), 0, 0);
    return out;
  }
  const std::vector<Monomial>& basis_monos = R->monomials_of_degree(d);
  const size_t width = basis_monos.size();
  FpMatrix M(&R->field(), 0, width);

  auto col_of = [&](const Monomial& m) -> size_t {
    auto it = std::lower_bound(basis_monos.begin(), basis_monos.end(), m, GrevlexGreater{});
    return static_cast<size_t>(it - basis_monos.begin());
  };

  for (const GradedPolynomial& g : I.gens) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const Monomial& m : R->monomials_of_degree(d - g.degree())) {
      std::vector<int64_t> row(width, 0);
      for (const auto& t : g.terms()) row[col_of(m * t.first)] = t.second;
      M.append_row(row);
    }
  }
  size_t rank = M.rref(nullptr);
  FpMatrix basis(&R->field(), rank, width);
  for (size_t i = 0; i < rank; ++i) {
    for (size_t j = 0; j < width; ++j) basis.set(i, j, M.at(i, j));
  }
  out.dimension = static_cast<int64_t>(rank);
  out.basis = std::move(basis);
  return out;
}

}  // namespace subcan
