#include "subcan/construction.hpp"

#include <algorithm>
#include <stdexcept>

namespace subcan {

namespace {

uint64_t xorshift_next(uint64_t& s) {
  s ^= s >> 12;
  s ^= s << 25;
  s ^= s >> 27;
  return s * 0x2545F4914F6CDD1DULL;
}

// extension module for one cocycle psi: F1 -> R(-c), presented on the
// generators of I plus the extra R(-c) generator
PresentedModule realize_extension(const PresentedModule& PI, const ModuleElement& w,
                                  const FreeModule& W, int c) {
  const PolyRing* R = PI.ring();
  FreeModule G = PI.gens;
  G.twists.push_back(c);
  const int extra = G.rank() - 1;
  const GradedMatrix& phi = PI.relations;
  std::vector<ModuleElement> cols;
  std::vector<int> degs;
  cols.reserve(static_cast<size_t>(phi.cols()));
  for (int s = 0; s < phi.cols(); ++s) {
    ModuleElement lifted = ModuleElement::from_terms(G, phi.column(s).terms());
    ModuleElement tail = ModuleElement::embed(G, extra, w.component(W, s));
    cols.push_back(mod_combine(R->field(), lifted, 1, tail, 1));
    degs.push_back(phi.source().twists[static_cast<size_t>(s)]);
  }
  return make_presented(G, GradedMatrix::from_columns(G, cols, degs));
}

bool ext_finite_length(const PresentedModule& Mm, int i, std::vector<int>& fin,
                       std::vector<int>& inf) {
  const PolyRing* R = Mm.ring();
  ExtModule E = ext_module(Mm, i, 0);
  HilbertData h = hilbert_data(betti_table(minimize_presentation(E.mod)), R);
  bool finite = h.zero || h.dim <= 0;
  (finite ? fin : inf).push_back(i);
  return finite;
}

}  // namespace

SerrePackage serre_extension_module(const Ideal& saturated, int a_x, uint64_t seed) {
  const PolyRing* R = saturated.ring;
  SerrePackage pkg;
  pkg.a_x = a_x;
  pkg.c = a_x + R->n() + 1;
  pkg.ideal_gens = minimal_ideal_generators(saturated);
  PresentedModule PI = ideal_module(Ideal(R, pkg.ideal_gens));

  ExtModule E1 = ext_module(PI, 1, -pkg.c);
  const FreeModule& W = E1.embedding.target();
  ModulePieces classes(E1.mod);
  const int64_t k = classes.dim(0);
  if (k == 0) return pkg;

  uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ULL;
  const int attempts = 32;
  for (int t = 0; t < attempts; ++t) {
    std::vector<int64_t> coords(static_cast<size_t>(k), 0);
    if (t < k) {
      coords[static_cast<size_t>(t)] = 1;
    } else {
      bool nonzero = false;
      for (auto& x : coords) {
        x = static_cast<int64_t>(xorshift_next(state) % static_cast<uint64_t>(R->p()));
        nonzero = nonzero || x != 0;
      }
      if (!nonzero) continue;
    }
    ModuleElement w = apply_map(E1.embedding, classes.element_from(coords, 0));
    PresentedModule M = realize_extension(PI, w, W, pkg.c);
    pkg.attempts_used = t + 1;

    PresentedModule Mm = minimize_presentation(M);
    BettiTable B = betti_table(Mm);
    HilbertData h = hilbert_data(B, R);
    pkg.rank = h.rank;
    if (h.rank != 2) continue;
    pkg.ext_finite.clear();
    pkg.ext_infinite.clear();
    bool ok = true;
    for (int i = 1; ok && i <= B.pd(); ++i) {
      ok = ext_finite_length(Mm, i, pkg.ext_finite, pkg.ext_infinite);
    }
    if (ok) {
      pkg.M = M;
      pkg.r_component = M.gens.rank() - 1;
      pkg.certified = true;
      return pkg;
    }
  }
  return pkg;
}

bool verify_M_self_duality(const SerrePackage& pkg, uint64_t seed) {
  if (!pkg.certified) return false;
  PresentedModule Mm = minimize_presentation(pkg.M);
  PresentedModule Ms = minimize_presentation(dual_module(Mm).mod);
  PresentedModule Mc = minimize_presentation(shift_module(Mm, pkg.c));
  if (!hilbert_series_equal(Ms, Mc)) return false;
  return find_degree_zero_iso(Ms, Mc, seed).has_value() ||
         find_degree_zero_iso(Mc, Ms, seed).has_value();
}

ConstructionResult construct_Z(const SerrePackage& pkg) {
  if (!pkg.certified) throw std::invalid_argument("construct_Z: package not certified");
  const PolyRing* R = pkg.M.ring();
  ConstructionResult res;

  res.d1 = pkg.ideal_gens.front().degree();
  for (const GradedPolynomial& g : pkg.ideal_gens) res.d1 = std::min(res.d1, g.degree());
  res.hypothesis_met = 2 * res.d1 <= pkg.a_x + R->n() + 2;
  res.status = res.hypothesis_met ? "ok" : "lemma-hypothesis-not-met";
  for (int j = 0; j < static_cast<int>(pkg.ideal_gens.size()); ++j) {
    if (pkg.ideal_gens[static_cast<size_t>(j)].degree() == res.d1) {
      res.xi_component = j;
      break;
    }
  }

  // i*: M* -> R(d1) evaluates a functional at xi, so its entries are the
  // xi-components of the dual module's cocycle representatives
  ExtModule dual = dual_module(pkg.M);
  FreeModule target(R, {-res.d1});
  std::vector<ModuleElement> cols;
  std::vector<int> degs;
  for (int t = 0; t < dual.embedding.cols(); ++t) {
    cols.push_back(ModuleElement::embed(target, 0, dual.embedding.at(res.xi_component, t)));
    degs.push_back(dual.mod.gens.twists[static_cast<size_t>(t)]);
  }
  PresentedModule coker =
      make_presented(target, GradedMatrix::from_columns(target, cols, degs));

  res.degenerate = module_is_zero(coker);
  res.ann = annihilator(coker);
  res.J = saturation_irrelevant(res.ann);
  res.ann_saturated = ideal_equal(res.ann, res.J);
  return res;
}

ConstructionChecks verify_construction(const ConstructionResult& res, const Ideal& saturated_input,
                                       const SerrePackage& pkg, uint64_t seed) {
  const PolyRing* R = saturated_input.ring;
  const int n = R->n();
  ConstructionChecks out;
  if (res.degenerate) return out;
  out.applicable = true;

  TwistSearch tz = subcanonical_twist(res.J, seed);
  out.omega_twist = tz.twist.has_value() && *tz.twist == 2 * res.d1 - pkg.a_x - 2 * n - 2;

  const int shift = pkg.c - res.d1;
  LocalCohomology MX(quotient_module(saturated_input), 1);
  LocalCohomology MZ(quotient_module(res.J), 1);
  if (MX.finite_length() && MZ.finite_length()) {
    out.m1_translate = true;
    int lo = -3, hi = 3;
    if (!MX.is_zero()) {
      lo = std::min(lo, MX.min_degree() - shift - 1);
      hi = std::max(hi, MX.max_degree() - shift + 1);
    }
    if (!MZ.is_zero()) {
      lo = std::min(lo, MZ.min_degree() - 1);
      hi = std::max(hi, MZ.max_degree() + 1);
    }
    for (int j = lo; j <= hi; ++j) {
      if (MZ.dim(j) != MX.dim(j + shift)) out.m1_translate = false;
    }
  }

  try {
    out.z_not_ci = !is_complete_intersection(res.J).is_ci;
  } catch (const std::invalid_argument&) {
    out.z_not_ci = false;  // wrong codimension counts as failure
  }

  out.no_linear_form = ideal_piece_dim(ideal_groebner(res.J), 1) == 0;

  BettiTable BJ = betti_table(quotient_module(res.J));
  ModulePieces SZ(quotient_module(res.J));
  ModulePieces MM(pkg.M);
  int hi = std::max({BJ.regularity() + 2, res.d1 + 2, 2 * res.d1 - pkg.c + 2});
  out.sequence_dims = true;
  for (int j = 0; j <= hi; ++j) {
    int64_t iz = R->dim_degree(j) - SZ.dim(j);
    int64_t rhs = MM.dim(j + shift) - R->dim_degree(j + pkg.c - 2 * res.d1);
    if (iz != rhs) out.sequence_dims = false;
  }
  return out;
}

QuadricProbe lemma_3quad_probe(const Ideal& saturated, bool reduced) {
  const PolyRing* R = saturated.ring;
  QuadricProbe q;
  q.reduced = reduced;
  q.dim_j2 = ideal_piece_dim(ideal_groebner(saturated), 2);
  HilbertData h = hilbert_data(betti_table(quotient_module(saturated)), R);
  q.multiplicity = h.multiplicity;
  q.depth = h.depth;
  q.dim = h.dim;
  q.cm_demanded = !reduced && q.dim_j2 >= 3;
  if (q.cm_demanded) {
    q.cm_holds = q.multiplicity <= 3 && q.depth == q.dim && q.dim == R->n() - 1;
  }
  return q;
}

bool unmixed_probe(const Ideal& saturated, int degree, int trials, uint64_t seed) {
  const PolyRing* R = saturated.ring;
  GroebnerBasis gb = ideal_groebner(saturated);
  uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ULL;
  int done = 0;
  for (int t = 0; t < 8 * trials && done < trials; ++t) {
    std::vector<GradedPolynomial::Term> terms;
    for (const Monomial& m : R->monomials_of_degree(degree)) {
      int64_t cfe = static_cast<int64_t>(xorshift_next(state) % static_cast<uint64_t>(R->p()));
      if (cfe != 0) terms.emplace_back(m, cfe);
    }
    GradedPolynomial f = GradedPolynomial::from_terms(R, std::move(terms));
    if (f.is_zero() || ideal_contains(gb, f)) continue;
    ++done;
    if (!ideal_equal(ideal_quotient(saturated, f), saturated)) return false;
  }
  return done == trials;
}

void certify_and_refresh(AnalysisReport& r, const Ideal& saturated, uint64_t seed) {
  if (r.codim != 2 || !r.twist.twist.has_value()) return;
  SerrePackage pkg = serre_extension_module(saturated, *r.twist.twist, seed);
  r.serre = pkg.certified ? SerreCertificate::certified : SerreCertificate::failed;
  refresh_verdicts(r);
}

}  // namespace subcan
