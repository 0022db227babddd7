#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "subcan/construction.hpp"

namespace subcan {

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int col, const std::string& message);
  int line() const { return line_; }
  int column() const { return col_; }

private:
  int line_;
  int col_;
};

// A parsed input: ring parameters plus homogeneous generators.  The ring is
// owned by the document so the polynomials stay valid as it is passed around.
struct InputDocument {
  std::shared_ptr<const PolyRing> ring;
  std::vector<GradedPolynomial> gens;

  Ideal ideal() const { return Ideal(ring.get(), gens); }
};

InputDocument make_document(int64_t p, int n, std::vector<std::string> var_names = {});

// Line-oriented grammar ('#' starts a comment anywhere):
//   p <prime>
//   n <integer, 3..7>
//   vars <n+1 distinct identifiers>     optional, default x0..xn
//   gen <expression>                    one per line, at least one
// Expressions combine integers, variables, '+', '-', '*', '^' and
// parentheses; '*' is required between factors and every generator must be
// homogeneous.  Errors carry a 1-based line and column.
InputDocument parse_input(const std::string& text);

// canonical text form; parse_input(print_input(doc)) reproduces doc
std::string print_input(const InputDocument& doc);

// Report rendering.  The machine variants return one deterministic JSON
// document (stable key order, two-space indent, trailing newline) with
// "schema" and "version" fields; byte-identical inputs give byte-identical
// output.  See README for the field list.
constexpr int kReportVersion = 1;

std::string analysis_report_text(const AnalysisReport& r, uint64_t seed);
std::string analysis_report_machine(const AnalysisReport& r, uint64_t seed);

// Everything the construct command produced; `constructed` is false when the
// extension could not be certified and `res`/`checks` are then meaningless.
struct ConstructOutcome {
  SerrePackage pkg;
  bool constructed = false;
  ConstructionResult res;
  bool checked = false;
  ConstructionChecks checks;
};

std::string construct_report_text(const ConstructOutcome& out, uint64_t seed);
std::string construct_report_machine(const ConstructOutcome& out, uint64_t seed);

// the constructed ideal as a feedable input document; requires a
// non-degenerate constructed result
std::string constructed_ideal_document(const ConstructOutcome& out, const InputDocument& in);

std::string betti_report_text(const AnalysisReport& r);
std::string cohomology_report_text(const SheafCohomologyTable& t, int max_i);

// Process exit discipline, shared by the command line tool and its tests.
// 3 means the engine contradicted itself or a proved statement failed on a
// concrete input; it is unreachable while both stay correct.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotCertified = 2;
constexpr int kExitCounterexample = 3;
constexpr int kExitInternal = 4;

int analysis_exit_code(const AnalysisReport& r);
int construct_exit_code(const ConstructOutcome& out);

}  // namespace subcan
