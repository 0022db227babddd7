#include "CLI11.hpp"
#include "subcan/cohomology.hpp"
#include "subcan/construction.hpp"
#include "subcan/corpus.hpp"
#include "subcan/io.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

using namespace subcan;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open '" + path + "'");
    os << f.rdbuf();
  }
  return os.str();
}

std::pair<int, int> parse_window(const std::string& s) {
  size_t colon = s.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == s.size())
    throw UsageError("--window expects LO:HI");
  try {
    size_t used = 0;
    int lo = std::stoi(s.substr(0, colon), &used);
    if (used != colon) throw UsageError("--window expects LO:HI");
    std::string rest = s.substr(colon + 1);
    int hi = std::stoi(rest, &used);
    if (used != rest.size()) throw UsageError("--window expects LO:HI");
    if (lo > hi) throw UsageError("--window expects LO <= HI");
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw UsageError("--window expects LO:HI");
  } catch (const std::out_of_range&) {
    throw UsageError("--window bounds are out of range");
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

int run_analyze(const std::string& text, uint64_t seed, bool machine,
                const std::optional<std::pair<int, int>>& window) {
  InputDocument doc = parse_input(text);
  SchemeInput in{doc.ring.get(), doc.gens};
  AnalysisReport r = analyze(in, seed);
  Ideal sat(doc.ring.get(), r.saturated_gens);
  certify_and_refresh(r, sat, seed);
  if (window) {
    PresentedModule S = quotient_module(sat);
    LocalCohomology M1(S, 1);
    r.m1_dims.clear();
    if (M1.finite_length()) {
      GradedPieceModule P = piece_module(M1, window->first, window->second);
      for (int j = window->first; j <= window->second; ++j) r.m1_dims[j] = P.dim(j);
    }
  }
  std::cout << (machine ? analysis_report_machine(r, seed) : analysis_report_text(r, seed));
  return analysis_exit_code(r);
}

int run_construct(const std::string& text, uint64_t seed, bool machine,
                  const std::string& out_path) {
  InputDocument doc = parse_input(text);
  SchemeInput in{doc.ring.get(), doc.gens};
  AnalysisReport r = analyze(in, seed);
  Ideal sat(doc.ring.get(), r.saturated_gens);
  if (r.codim != 2 || !r.twist.twist) {
    std::cerr << "no confirmed subcanonical twist; nothing to build on\n";
    return kExitNotCertified;
  }
  ConstructOutcome out;
  out.pkg = serre_extension_module(sat, *r.twist.twist, seed);
  if (out.pkg.certified) {
    out.res = construct_Z(out.pkg);
    out.constructed = true;
    if (!out.res.degenerate) {
      out.checks = verify_construction(out.res, sat, out.pkg, seed);
      out.checked = true;
    }
  }
  std::cout << (machine ? construct_report_machine(out, seed) : construct_report_text(out, seed));
  if (!out.pkg.certified) return kExitNotCertified;
  if (!out_path.empty()) {
    if (out.res.degenerate) {
      std::cerr << "degenerate construction; no document written\n";
    } else {
      write_output(out_path, constructed_ideal_document(out, doc));
    }
  }
  if (out.res.status != "ok") return kExitNotCertified;
  if (out.res.degenerate) return kExitOk;
  return out.checks.all() ? kExitOk : kExitCounterexample;
}

int run_betti(const std::string& text) {
  InputDocument doc = parse_input(text);
  const PolyRing* R = doc.ring.get();
  AnalysisReport r;
  r.p = R->p();
  r.n = R->n();
  Ideal sat = saturation_irrelevant(doc.ideal());
  r.betti = betti_table(quotient_module(sat));
  r.hilbert = hilbert_data(r.betti, R);
  r.codim = r.hilbert.zero ? R->nvars() : r.hilbert.codim;
  std::cout << betti_report_text(r);
  return kExitOk;
}

int run_cohom(const std::string& text, int max_i, const std::pair<int, int>& window) {
  InputDocument doc = parse_input(text);
  if (max_i < 0 || max_i > doc.ring->n())
    throw UsageError("--max-i must lie between 0 and n");
  PresentedModule S = quotient_module(saturation_irrelevant(doc.ideal()));
  SheafCohomologyTable t = sheaf_cohomology(S, window.first, window.second);
  std::cout << cohomology_report_text(t, max_i);
  return kExitOk;
}

int run_gen(const std::string& kind, int64_t p, int nval, int d1, int d2, int m,
            const std::string& pattern, uint64_t seed, const std::string& out_path) {
  if (!PrimeField::is_prime(p) || p == 2 || p >= (int64_t{1} << 30))
    throw UsageError("p must be an odd prime below 2^30");
  if (nval < 3 || nval > kMaxVars - 1)
    throw UsageError("n must be between 3 and " + std::to_string(kMaxVars - 1));
  InputDocument doc = make_document(p, nval);
  const PolyRing* R = doc.ring.get();
  if (kind == "ci") {
    if (d1 < 1 || d2 < 1) throw UsageError("ci needs positive degrees");
    doc.gens = gen_ci(R, d1, d2, seed);
  } else if (kind == "twisted-cubic") {
    doc.gens = gen_twisted_cubic(R);
  } else if (kind == "skew-lines") {
    doc.gens = gen_skew_lines(R);
  } else if (kind == "double-line") {
    if (m < 1) throw UsageError("double-line needs m >= 1");
    doc.gens = gen_double_line(R, m, seed);
  } else if (kind == "pfaffian-quintic") {
    doc.gens = gen_pfaffian_quintic(R, seed);
  } else if (kind == "three-quadric") {
    try {
      doc.gens = gen_three_quadric(R, pattern);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else if (kind == "random") {
    doc.gens = gen_random_ideal(R, d1 < 1 ? 4 : d1, d2 < 1 ? 3 : d2, seed);
  } else {
    throw UsageError("unknown kind '" + kind + "'");
  }
  std::ostringstream os;
  os << "# " << kind << " (seed " << seed << ")\n" << print_input(doc);
  write_output(out_path, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded analysis of codimension-two subschemes of projective space"};
  app.require_subcommand(1);

  std::string in_path, window_arg, out_path, kind, pattern = "square";
  uint64_t seed = 0;
  bool machine = false;
  int max_i = -1, d1 = 0, d2 = 0, m = 1, nval = 3;
  int64_t p = 32003;

  CLI::App* c_analyze = app.add_subcommand("analyze", "saturate, measure and certify a scheme");
  c_analyze->add_option("input", in_path, "input file, or - for stdin")->required();
  c_analyze->add_option("--seed", seed, "seed for randomized certificates");
  c_analyze->add_flag("--machine", machine, "emit a JSON report");
  c_analyze->add_option("--window", window_arg, "report deficiency dims over LO:HI");

  CLI::App* c_construct =
      app.add_subcommand("construct", "build the degenerating subscheme from a certified input");
  c_construct->add_option("input", in_path, "input file, or - for stdin")->required();
  c_construct->add_option("--seed", seed, "seed for randomized certificates");
  c_construct->add_flag("--machine", machine, "emit a JSON report");
  c_construct->add_option("--out", out_path, "write the constructed ideal as an input document");

  CLI::App* c_betti = app.add_subcommand("betti", "graded betti table of the saturated input");
  c_betti->add_option("input", in_path, "input file, or - for stdin")->required();

  CLI::App* c_cohom = app.add_subcommand("cohom", "sheaf cohomology of the structure sheaf");
  c_cohom->add_option("input", in_path, "input file, or - for stdin")->required();
  c_cohom->add_option("--max-i", max_i, "highest cohomological index to print")->required();
  c_cohom->add_option("--window", window_arg, "twist range LO:HI")->required();

  CLI::App* c_gen = app.add_subcommand("gen", "write a sample input document");
  c_gen->add_option("kind", kind,
                    "ci | twisted-cubic | skew-lines | double-line | pfaffian-quintic | "
                    "three-quadric | random")
      ->required();
  c_gen->add_option("--p", p, "coefficient prime");
  c_gen->add_option("--n", nval, "projective dimension");
  c_gen->add_option("--d1", d1, "first degree (ci, random)");
  c_gen->add_option("--d2", d2, "second degree (ci, random)");
  c_gen->add_option("--m", m, "thickening degree (double-line)");
  c_gen->add_option("--pattern", pattern, "square | mixed | triangle (three-quadric)");
  c_gen->add_option("--seed", seed, "generator seed");
  c_gen->add_option("--out", out_path, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(c_analyze)) {
      std::optional<std::pair<int, int>> window;
      if (!window_arg.empty()) window = parse_window(window_arg);
      return run_analyze(read_input(in_path), seed, machine, window);
    }
    if (app.got_subcommand(c_construct))
      return run_construct(read_input(in_path), seed, machine, out_path);
    if (app.got_subcommand(c_betti)) return run_betti(read_input(in_path));
    if (app.got_subcommand(c_cohom))
      return run_cohom(read_input(in_path), max_i, parse_window(window_arg));
    if (app.got_subcommand(c_gen))
      return run_gen(kind, p, nval, d1, d2, m, pattern, seed, out_path);
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
