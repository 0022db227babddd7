#include "subcan/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <stdexcept>

namespace subcan {

namespace {

PresentedModule dual_of_local_cohomology(const PresentedModule& M, int i) {
  const PolyRing* R = M.ring();
  int k = R->nvars() - i;
  if (i < 0 || i > R->nvars()) {
    return free_presented(FreeModule{R, {}});
  }
  return minimize_presentation(ext_module(M, k, -R->nvars()).mod);
}

}  // namespace

LocalCohomology::LocalCohomology(const PresentedModule& M, int i)
    : R_(M.ring()),
      i_(i),
      E_(dual_of_local_cohomology(M, i)),
      pieces_(E_),
      hd_(hilbert_data(betti_table(E_), M.ring())),
      gen_degrees_(E_.gens.twists) {
  std::sort(gen_degrees_.begin(), gen_degrees_.end());
}

int64_t LocalCohomology::dim(int j) const { return pieces_.dim(-j); }

bool LocalCohomology::is_zero() const { return hd_.zero; }

bool LocalCohomology::finite_length() const { return hd_.zero || hd_.dim <= 0; }

int LocalCohomology::max_degree() const {
  if (hd_.zero) return INT_MIN;
  return -gen_degrees_.front();
}

int LocalCohomology::min_degree() const {
  if (hd_.zero) return INT_MAX;
  if (!finite_length()) {
    throw std::logic_error("local cohomology: degrees unbounded below");
  }
  // finite length, so the top nonzero degree of the dual is its regularity
  return -hd_.reg;
}

std::map<int, int64_t> LocalCohomology::socle() const {
  std::map<int, int64_t> s;
  for (int d : gen_degrees_) ++s[-d];
  return s;
}

Ideal LocalCohomology::annihilator_ideal() const { return annihilator(E_); }

bool GradedPieceModule::is_zero() const {
  for (int64_t d : dims) {
    if (d != 0) return false;
  }
  return true;
}

GradedPieceModule piece_module(const LocalCohomology& H, int lo, int hi) {
  GradedPieceModule P;
  P.ring = H.dual_presentation().ring();
  P.lo = lo;
  P.hi = hi;
  P.complete = H.finite_length() && (H.is_zero() || (lo <= H.min_degree() && H.max_degree() <= hi));
  if (hi < lo) return P;
  const ModulePieces& E = H.dual_pieces();
  int nv = P.ring->nvars();
  P.dims.reserve(static_cast<size_t>(hi - lo + 1));
  for (int j = lo; j <= hi; ++j) P.dims.push_back(E.dim(-j));
  P.action.assign(static_cast<size_t>(nv), {});
  for (int v = 0; v < nv; ++v) {
    GradedPolynomial xv = GradedPolynomial::variable(P.ring, v);
    for (int j = lo; j <= hi; ++j) {
      // x_v on the dual of E in degree -j is the transpose of
      // x_v: E_{-j-1} -> E_{-j}
      P.action[static_cast<size_t>(v)].push_back(E.multiplication(xv, -j - 1).transpose());
    }
  }
  return P;
}

GradedPieceModule piece_module(const LocalCohomology& H) {
  if (H.is_zero()) {
    GradedPieceModule P;
    P.ring = H.dual_presentation().ring();
    P.complete = true;
    return P;
  }
  if (H.finite_length()) return piece_module(H, H.min_degree(), H.max_degree());
  // unbounded below: expose the top slab, flagged incomplete
  const BettiTable B = betti_table(H.dual_presentation());
  return piece_module(H, -B.regularity(), H.max_degree());
}

std::map<int, int64_t> socle_degrees(const GradedPieceModule& P) {
  if (!P.complete) throw std::logic_error("socle needs a complete window");
  std::map<int, int64_t> out;
  if (P.hi < P.lo) return out;
  const PrimeField& F = P.ring->field();
  int nv = P.ring->nvars();
  for (int j = P.lo; j <= P.hi; ++j) {
    int64_t d = P.dim(j);
    if (d == 0) continue;
    // stack all variable actions; the socle piece is their joint kernel
    size_t total_rows = 0;
    for (int v = 0; v < nv; ++v) total_rows += P.act(v, j).rows();
    FpMatrix stacked(&F, total_rows, static_cast<size_t>(d));
    size_t r0 = 0;
    for (int v = 0; v < nv; ++v) {
      const FpMatrix& A = P.act(v, j);
      for (size_t r = 0; r < A.rows(); ++r) {
        for (size_t c = 0; c < A.cols(); ++c) {
          if (A.at(r, c) != 0) stacked.set(r0 + r, c, A.at(r, c));
        }
      }
      r0 += A.rows();
    }
    int64_t s = d - static_cast<int64_t>(stacked.rank());
    if (s > 0) out[j] = s;
  }
  return out;
}

bool power_annihilates(const GradedPieceModule& P, int k) {
  if (!P.complete) throw std::logic_error("power check needs a complete window");
  if (k <= 0) return P.is_zero();
  const PrimeField& F = P.ring->field();
  int nv = P.ring->nvars();
  for (int j = P.lo; j <= P.hi; ++j) {
    int64_t d = P.dim(j);
    if (d == 0) continue;
    // composite actions along all nondecreasing variable words of length k;
    // by commutativity these are exactly the degree-k monomials
    FpMatrix id(&F, static_cast<size_t>(d), static_cast<size_t>(d));
    for (size_t r = 0; r < id.rows(); ++r) id.set(r, r, 1);
    std::vector<std::pair<FpMatrix, int>> frontier;
    frontier.emplace_back(std::move(id), 0);
    for (int step = 0; step < k; ++step) {
      int at = j + step;  // degree the composites currently land in
      std::vector<std::pair<FpMatrix, int>> next;
      if (at <= P.hi) {
        for (const auto& entry : frontier) {
          for (int v = entry.second; v < nv; ++v) {
            next.emplace_back(P.act(v, at).multiply(entry.first), v);
          }
        }
      }
      // past the window everything is zero, so the frontier just empties
      frontier = std::move(next);
    }
    for (const auto& entry : frontier) {
      const FpMatrix& mat = entry.first;
      for (size_t r = 0; r < mat.rows(); ++r) {
        for (size_t c = 0; c < mat.cols(); ++c) {
          if (mat.at(r, c) != 0) return false;
        }
      }
    }
  }
  return true;
}

LocalCohomology deficiency_module(const PresentedModule& S) { return LocalCohomology(S, 1); }

ExtModule canonical_module(const PresentedModule& S) {
  const PolyRing* R = S.ring();
  HilbertData hd = hilbert_data(betti_table(S), R);
  if (hd.zero) throw std::invalid_argument("canonical module of the zero module");
  return ext_module(S, hd.codim, -R->nvars());
}

int a_invariant(const PresentedModule& S) {
  ExtModule K = canonical_module(S);
  std::vector<int> degs = minimal_generator_degrees(K.mod);
  if (degs.empty()) throw std::logic_error("canonical module vanished");
  return -degs.front();
}

CechOracle::CechOracle(const PresentedModule& M) : P_(M) {
  BettiTable B = betti_table(M);
  reg_ = B.beta.empty() ? 0 : B.regularity();
}

namespace {

std::vector<uint32_t> subsets_of_size(int n, int k) {
  std::vector<uint32_t> out;
  for (uint32_t m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) == k) out.push_back(m);
  }
  return out;
}

}  // namespace

// dim of the degree-j slice at one truncation level t.  The slice of the
// k-th term is one copy of M_{j+tk} per k-subset of the variables, and the
// component maps are multiplication by x_v^t with the usual alternating
// signs, so the answer is a kernel/image dimension count of two block
// matrices over the prime field.
int64_t CechOracle::level_dim(int t, int i, int j) const {
  const PolyRing* R = P_.module().ring();
  const PrimeField& F = R->field();
  int nv = R->nvars();
  if (i < 0 || i > nv) return 0;

  auto boundary_rank = [&](int k) -> int64_t {
    // D_k: sum over |S| = k of M_{j+tk}  ->  sum over |S| = k+1 of M_{j+t(k+1)}
    if (k < 0 || k >= nv) return 0;
    int64_t ds = P_.dim(j + t * k);
    int64_t dt = P_.dim(j + t * (k + 1));
    if (ds == 0 || dt == 0) return 0;
    std::vector<uint32_t> src = subsets_of_size(nv, k);
    std::vector<uint32_t> dst = subsets_of_size(nv, k + 1);
    std::map<uint32_t, size_t> dst_index;
    for (size_t b = 0; b < dst.size(); ++b) dst_index[dst[b]] = b;

    std::vector<FpMatrix> mult;
    mult.reserve(static_cast<size_t>(nv));
    for (int v = 0; v < nv; ++v) {
      mult.push_back(P_.multiplication(poly_power(GradedPolynomial::variable(R, v), t), j + t * k));
    }

    FpMatrix D(&F, dst.size() * static_cast<size_t>(dt), src.size() * static_cast<size_t>(ds));
    for (size_t b = 0; b < src.size(); ++b) {
      uint32_t S = src[b];
      for (int v = 0; v < nv; ++v) {
        if (S & (1u << v)) continue;
        size_t b2 = dst_index.at(S | (1u << v));
        bool negate = (std::popcount(S & ((1u << v) - 1)) % 2) != 0;
        const FpMatrix& X = mult[static_cast<size_t>(v)];
        for (size_t r = 0; r < static_cast<size_t>(dt); ++r) {
          for (size_t c = 0; c < static_cast<size_t>(ds); ++c) {
            int64_t x = X.at(r, c);
            if (x == 0) continue;
            D.set(b2 * static_cast<size_t>(dt) + r, b * static_cast<size_t>(ds) + c,
                  negate ? F.neg(x) : x);
          }
        }
      }
    }
    return static_cast<int64_t>(D.rank());
  };

  std::vector<uint32_t> here = subsets_of_size(nv, i);
  int64_t ci = static_cast<int64_t>(here.size()) * P_.dim(j + t * i);
  return ci - boundary_rank(i) - boundary_rank(i - 1);
}

// For i = 0 the level values are the kernels of (x_0^t,..,x_n^t) acting on
// M_j; they increase with t and once two consecutive levels agree they are
// stationary for good (x_v m in ker_t for all v forces m into ker_{t+1}), so
// stopping there is exact.  For i >= 1 agreement of consecutive levels is
// trusted only after the middle slice degree j + t*i has passed the
// regularity of M; below that the early slices are still filling in and can
// agree by accident.
CechValue CechOracle::dim(int i, int j) const {
  CechValue out;
  int t = 1;
  if (i >= 1) {
    int need = reg_ + 1 - j;
    t = std::max(1, (need + i - 1) / i);
  }
  int64_t prev = -1;
  for (int steps = 0; steps < 33; ++steps, ++t) {
    int64_t d = level_dim(t, i, j);
    out.dim = d;
    out.level = t;
    if (d == prev) {
      out.stable = true;
      return out;
    }
    prev = d;
  }
  return out;
}

SheafCohomologyTable sheaf_cohomology(const PresentedModule& M, int lo, int hi) {
  const PolyRing* R = M.ring();
  int nv = R->nvars();
  SheafCohomologyTable T;
  T.lo = lo;
  T.hi = hi;
  T.h.assign(static_cast<size_t>(nv), {});
  if (hi < lo) return T;
  ModulePieces P(M);
  std::vector<LocalCohomology> H;
  H.reserve(static_cast<size_t>(nv) + 1);
  for (int i = 0; i <= nv; ++i) H.emplace_back(M, i);
  for (auto& row : T.h) row.assign(static_cast<size_t>(hi - lo + 1), 0);
  for (int j = lo; j <= hi; ++j) {
    // global sections of the sheaf versus the module: corrected by H^0 and H^1
    T.h[0][static_cast<size_t>(j - lo)] = P.dim(j) - H[0].dim(j) + H[1].dim(j);
    for (int i = 1; i < nv; ++i) {
      T.h[static_cast<size_t>(i)][static_cast<size_t>(j - lo)] = H[static_cast<size_t>(i) + 1].dim(j);
    }
  }
  return T;
}

}  // namespace subcan
