#pragma once

#include <optional>
#include <string>

#include "subcan/cohomology.hpp"

namespace subcan {

// A codimension-two subscheme, given by any homogeneous generating set of
// its ideal.  Analysis always passes to the saturation first.
struct SchemeInput {
  const PolyRing* ring = nullptr;
  std::vector<GradedPolynomial> generators;
};

struct CIStatus {
  bool is_ci = false;
  std::vector<int> degrees;  // the two generator degrees when is_ci
};

// A saturated height-two ideal cuts out a complete intersection exactly when
// it has two minimal generators.  Throws unless the codimension is two.
CIStatus is_complete_intersection(const Ideal& saturated);

// Presentation of the truncation M_{>=T}, the submodule generated by the
// degree T piece.  For T above the regularity of M this is the honest
// truncation, generated in a single degree.
PresentedModule truncate_at(const PresentedModule& M, int T);

// Search for a twist a with omega_X = O_X(a), for X the codimension-two
// subscheme cut out by a saturated ideal.  Candidates come from matching
// Hilbert polynomials of the canonical module K against shifts of S = R/I;
// a candidate is confirmed by an isomorphism of truncations, which compares
// the two sheaves directly.  `twist` is set only on a confirmed candidate.
struct TwistSearch {
  std::optional<int> twist;
  std::vector<int> candidates;      // Hilbert polynomial matches, by |a|
  bool multiple_confirmed = false;  // anomaly flag, never expected
};
TwistSearch subcanonical_twist(const Ideal& saturated, uint64_t seed = 1);

enum class HypothesisStatus { satisfied, violated, not_certified };
enum class ConclusionStatus { holds, fails, not_evaluated };

// One criterion checked against computed invariants.  `consistent` is false
// only when the hypotheses are satisfied and the conclusion fails, which
// would mean a counterexample or a bug in this library.
struct TheoremVerdict {
  std::string name;
  HypothesisStatus hypotheses = HypothesisStatus::not_certified;
  ConclusionStatus conclusion = ConclusionStatus::not_evaluated;
  bool consistent = true;
  std::vector<std::string> notes;
};

// Everything the criteria consume, decoupled from how it was computed so the
// checker can also be driven by synthetic inputs in tests.
struct TheoremInputs {
  int n = 0;                       // ambient projective dimension
  std::vector<int> d_vector;       // minimal generator degrees, ascending
  bool codim2 = false;
  std::optional<int> a_x;            // confirmed subcanonical twist
  bool not_subcanonical = false;     // no twist candidate exists at all
  bool lci_certified = false;        // local complete intersection certificate
  bool ci = false;
  bool m1_finite = false;          // deficiency module has finite length
  std::map<int, int64_t> m1_dims;  // complete when m1_finite
  std::map<int, int64_t> socle;
  bool r3_kills_m1 = false;        // cube of the irrelevant ideal kills M1
};

std::vector<TheoremVerdict> check_theorems(const TheoremInputs& in);

enum class SerreCertificate { not_checked, certified, failed };

struct AnalysisReport {
  int64_t p = 0;
  int n = 0;
  bool input_saturated = false;
  std::vector<GradedPolynomial> saturated_gens;
  std::vector<int> d_vector;
  int codim = -1;
  int dim = -1;  // affine Krull dimension of R/I
  BettiTable betti;
  HilbertData hilbert;
  CIStatus ci;
  TwistSearch twist;
  bool m1_finite = false;
  std::map<int, int64_t> m1_dims;
  std::map<int, int64_t> m1_socle;
  bool r3_kills_m1 = false;
  SerreCertificate serre = SerreCertificate::not_checked;
  std::vector<TheoremVerdict> verdicts;
};

// Full analysis except the locally-free certificate, which lives a layer up;
// callers that obtain one set `serre` and call refresh_verdicts.
AnalysisReport analyze(const SchemeInput& in, uint64_t seed = 1);
void refresh_verdicts(AnalysisReport& r);

}  // namespace subcan
