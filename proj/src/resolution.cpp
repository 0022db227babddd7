#include "subcan/resolution.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace subcan {

namespace {

// working form of a chain during unit cancellation
struct Chain {
  const PolyRing* ring = nullptr;
  std::vector<std::vector<int>> twists;                       // one list per module
  std::vector<std::vector<std::vector<GradedPolynomial>>> e;  // e[k][row][col]
};

Chain to_chain(const FreeResolution& C) {
  Chain ch;
  ch.ring = C.modules.front().ring;
  for (const FreeModule& F : C.modules) ch.twists.push_back(F.twists);
  for (const GradedMatrix& D : C.maps) {
    std::vector<std::vector<GradedPolynomial>> grid;
    for (int i = 0; i < D.rows(); ++i) {
      std::vector<GradedPolynomial> row;
      for (int j = 0; j < D.cols(); ++j) row.push_back(D.at(i, j));
      grid.push_back(std::move(row));
    }
    ch.e.push_back(std::move(grid));
  }
  return ch;
}

FreeResolution from_chain(const Chain& ch) {
  FreeResolution C;
  for (const auto& t : ch.twists) C.modules.emplace_back(ch.ring, t);
  for (size_t k = 0; k < ch.e.size(); ++k) {
    GradedMatrix D(C.modules[k], C.modules[k + 1]);
    for (size_t i = 0; i < ch.e[k].size(); ++i) {
      for (size_t j = 0; j < ch.e[k][i].size(); ++j) {
        if (!ch.e[k][i][j].is_zero()) {
          D.set(static_cast<int>(i), static_cast<int>(j), ch.e[k][i][j]);
        }
      }
    }
    C.maps.push_back(std::move(D));
  }
  return C;
}

bool is_unit_entry(const GradedPolynomial& f) {
  return !f.is_zero() && f.degree() == 0;
}

// cancel the unit at position (i, j) of map k
void cancel(Chain& ch, size_t k, size_t i, size_t j) {
  const PrimeField& F = ch.ring->field();
  auto& D = ch.e[k];
  const size_t rows = D.size();
  const size_t cols = D[0].size();
  const int64_t inv_u = F.inv(D[i][j].lead_coefficient());

  // q[j'] = D(i, j') / u drives both the column operations on map k and the
  // induced row operations on map k+1
  std::vector<GradedPolynomial> q(cols, GradedPolynomial::zero(ch.ring));
  for (size_t jp = 0; jp < cols; ++jp) {
    if (jp != j && !D[i][jp].is_zero()) q[jp] = D[i][jp].scaled(inv_u);
  }

  for (size_t jp = 0; jp < cols; ++jp) {
    if (jp == j || q[jp].is_zero()) continue;
    for (size_t ip = 0; ip < rows; ++ip) {
      if (D[ip][j].is_zero()) continue;
      D[ip][jp] = poly_combine(D[ip][jp], 1, poly_multiply(q[jp], D[ip][j]), -1);
    }
  }

  if (k + 1 < ch.e.size()) {
    auto& E = ch.e[k + 1];
    const size_t ecols = E.empty() ? 0 : E[0].size();
    for (size_t w = 0; w < ecols; ++w) {
      GradedPolynomial acc = E[j][w];
      for (size_t jp = 0; jp < cols; ++jp) {
        if (jp == j || q[jp].is_zero() || E[jp][w].is_zero()) continue;
        acc = poly_combine(acc, 1, poly_multiply(q[jp], E[jp][w]), 1);
      }
      if (!acc.is_zero()) throw std::logic_error("cancellation left a nonzero row");
      E[j][w] = acc;
    }
    E.erase(E.begin() + static_cast<long>(j));
  }

  if (k > 0) {
    for (auto& row : ch.e[k - 1]) row.erase(row.begin() + static_cast<long>(i));
  }

  D.erase(D.begin() + static_cast<long>(i));
  for (auto& row : D) row.erase(row.begin() + static_cast<long>(j));
  ch.twists[k].erase(ch.twists[k].begin() + static_cast<long>(i));
  ch.twists[k + 1].erase(ch.twists[k + 1].begin() + static_cast<long>(j));
}

}  // namespace

FreeResolution free_resolution(const PresentedModule& M) {
  FreeResolution C;
  C.modules.push_back(M.gens);
  if (M.relations.cols() == 0) return C;
  C.modules.push_back(M.relations.source());
  C.maps.push_back(M.relations);

  const int cap = M.ring()->nvars() + 2;
  for (int step = 0; step <= cap; ++step) {
    GradedMatrix K = kernel_matrix(C.maps.back());
    if (K.cols() == 0) return C;
    // a minimal generating set of each kernel keeps the chain within the
    // bound given by the syzygy theorem
    std::vector<ModuleElement> min = minimal_module_generators(K.target(), K.columns());
    std::vector<int> degs;
    degs.reserve(min.size());
    for (const ModuleElement& v : min) degs.push_back(v.degree(K.target()));
    GradedMatrix D = GradedMatrix::from_columns(K.target(), min, degs);
    C.modules.push_back(D.source());
    C.maps.push_back(std::move(D));
  }
  throw std::logic_error("free resolution exceeded the length bound");
}

FreeResolution minimize_resolution(const FreeResolution& C) {
  if (C.maps.empty()) return C;
  Chain ch = to_chain(C);
  for (;;) {
    bool found = false;
    for (size_t k = 0; k < ch.e.size() && !found; ++k) {
      const auto& D = ch.e[k];
      for (size_t i = 0; i < D.size() && !found; ++i) {
        for (size_t j = 0; j < D[i].size() && !found; ++j) {
          if (is_unit_entry(D[i][j])) {
            cancel(ch, k, i, j);
            found = true;
          }
        }
      }
    }
    if (!found) break;
  }
  while (ch.twists.size() >= 2 && ch.twists.back().empty()) {
    ch.twists.pop_back();
    ch.e.pop_back();
  }
  return from_chain(ch);
}

PresentedModule minimize_presentation(const PresentedModule& M) {
  FreeResolution C;
  C.modules.push_back(M.gens);
  if (M.relations.cols() > 0) {
    C.modules.push_back(M.relations.source());
    C.maps.push_back(M.relations);
  }
  FreeResolution m = minimize_resolution(C);
  if (m.maps.empty()) return free_presented(m.modules[0]);
  return PresentedModule{m.modules[0], m.maps[0]};
}

std::vector<int> minimal_generator_degrees(const PresentedModule& M) {
  std::vector<int> t = minimize_presentation(M).gens.twists;
  std::sort(t.begin(), t.end());
  return t;
}

int64_t BettiTable::at(int i, int j) const {
  auto it = beta.find({i, j});
  return it == beta.end() ? 0 : it->second;
}

int64_t BettiTable::total(int i) const {
  int64_t s = 0;
  for (const auto& [k, v] : beta) {
    if (k.first == i) s += v;
  }
  return s;
}

int BettiTable::pd() const {
  int p = -1;
  for (const auto& [k, v] : beta) {
    if (v != 0) p = std::max(p, k.first);
  }
  return p;
}

int BettiTable::max_shift(int i) const {
  int m = INT_MIN;
  for (const auto& [k, v] : beta) {
    if (k.first == i && v != 0) m = std::max(m, k.second);
  }
  return m;
}

int BettiTable::min_shift(int i) const {
  int m = INT_MAX;
  for (const auto& [k, v] : beta) {
    if (k.first == i && v != 0) m = std::min(m, k.second);
  }
  return m;
}

int BettiTable::regularity() const {
  int r = INT_MIN;
  for (const auto& [k, v] : beta) {
    if (v != 0) r = std::max(r, k.second - k.first);
  }
  return r;
}

std::string BettiTable::str() const {
  if (beta.empty()) return "(zero module)\n";
  const int p = pd();
  int lo = INT_MAX, hi = INT_MIN;
  for (const auto& [k, v] : beta) {
    if (v == 0) continue;
    lo = std::min(lo, k.second - k.first);
    hi = std::max(hi, k.second - k.first);
  }
  std::ostringstream os;
  os << "      ";
  for (int i = 0; i <= p; ++i) os << i << "\t";
  os << "\n";
  for (int r = lo; r <= hi; ++r) {
    os << r << ":    ";
    for (int i = 0; i <= p; ++i) {
      const int64_t b = at(i, i + r);
      if (b == 0) {
        os << ".\t";
      } else {
        os << b << "\t";
      }
    }
    os << "\n";
  }
  return os.str();
}

BettiTable betti_from_minimal(const FreeResolution& minimized) {
  BettiTable B;
  for (size_t i = 0; i < minimized.modules.size(); ++i) {
    for (int t : minimized.modules[i].twists) {
      B.beta[{static_cast<int>(i), t}] += 1;
    }
  }
  return B;
}

BettiTable betti_table(const PresentedModule& M) {
  return betti_from_minimal(minimize_resolution(free_resolution(M)));
}

HilbertData hilbert_data(const BettiTable& B, const PolyRing* R) {
  HilbertData H;
  std::map<int, int64_t> N;
  for (const auto& [k, v] : B.beta) {
    if (v == 0) continue;
    N[k.second] += (k.first % 2 == 0) ? v : -v;
  }
  for (auto it = N.begin(); it != N.end();) {
    it = it->second == 0 ? N.erase(it) : std::next(it);
  }
  H.numerator = N;
  if (N.empty()) {
    H.zero = true;
    return H;
  }

  auto value_at_one = [](const std::map<int, int64_t>& f) {
    int64_t s = 0;
    for (const auto& [e, c] : f) {
      (void)e;
      s += c;
    }
    return s;
  };

  // strip all factors of (1 - t)
  std::map<int, int64_t> Q = N;
  int codim = 0;
  while (value_at_one(Q) == 0) {
    // Q = (1 - t) * Q' with q'_j = q_j + q'_{j-1}, running from the bottom
    std::map<int, int64_t> Qn;
    int64_t carry = 0;
    const int lo = Q.begin()->first;
    const int hi = Q.rbegin()->first;
    for (int j = lo; j < hi; ++j) {
      auto it = Q.find(j);
      carry += (it == Q.end() ? 0 : it->second);
      if (carry != 0) Qn[j] = carry;
    }
    Q = std::move(Qn);
    ++codim;
    if (Q.empty()) break;  // should not happen: N != 0
  }

  H.codim = codim;
  H.reduced = Q;
  H.dim = R->nvars() - codim;
  H.depth = R->nvars() - std::max(B.pd(), 0);
  H.reg = B.regularity();
  H.multiplicity = value_at_one(Q);
  H.rank = codim == 0 ? H.multiplicity : 0;
  return H;
}

int64_t hilbert_polynomial_value(const HilbertData& H, const PolyRing* R, int64_t d) {
  if (H.zero) return 0;
  const int n = R->n();
  auto binom_poly = [n](int64_t m) -> int64_t {
    __int128 num = 1;
    for (int i = 0; i < n; ++i) num *= (m - i);
    __int128 den = 1;
    for (int i = 2; i <= n; ++i) den *= i;
    return static_cast<int64_t>(num / den);
  };
  int64_t s = 0;
  for (const auto& [j, c] : H.numerator) s += c * binom_poly(d - j + n);
  return s;
}

}  // namespace subcan
