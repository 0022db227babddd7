#include "doctest.h"
#include "json.hpp"
#include "subcan/cohomology.hpp"
#include "subcan/construction.hpp"
#include "subcan/corpus.hpp"
#include "subcan/io.hpp"

#include <string>
#include <vector>

using namespace subcan;

namespace {

GradedPolynomial var(const PolyRing& R, int i) { return GradedPolynomial::variable(&R, i); }

std::vector<std::string> rendered(const std::vector<GradedPolynomial>& gens) {
  std::vector<std::string> out;
  for (const GradedPolynomial& g : gens) out.push_back(g.str());
  return out;
}

ParseError parse_fail(const std::string& text) {
  try {
    parse_input(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("the input grammar builds rings and generators") {
  InputDocument doc = parse_input(
      "# a twisted cubic\n"
      "p 32003\n"
      "n 3\n"
      "\n"
      "gen x0*x2 - x1^2\n"
      "gen x0*x3 - x1*x2  # trailing comment\n"
      "gen x1*x3 - x2^2\n");
  const PolyRing& R = *doc.ring;
  CHECK(R.p() == 32003);
  CHECK(R.n() == 3);
  CHECK(R.var_name(0) == "x0");
  REQUIRE(doc.gens.size() == 3);
  GradedPolynomial x0 = var(R, 0), x1 = var(R, 1), x2 = var(R, 2), x3 = var(R, 3);
  CHECK(doc.gens[0] == x0 * x2 - x1 * x1);
  CHECK(doc.gens[1] == x0 * x3 - x1 * x2);
  CHECK(doc.gens[2] == x1 * x3 - x2 * x2);

  InputDocument named = parse_input(
      "p 101\n"
      "n 3\n"
      "vars w x y z\n"
      "gen w*y - x^2\n");
  CHECK(named.ring->var_name(0) == "w");
  CHECK(named.ring->var_name(3) == "z");
  GradedPolynomial w = var(*named.ring, 0), x = var(*named.ring, 1), y = var(*named.ring, 2);
  CHECK(named.gens[0] == w * y - x * x);

  // coefficients reduce mod p, parentheses group, scalars may follow variables
  InputDocument tricky = parse_input(
      "p 32003\n"
      "n 3\n"
      "gen (x0 + x1)*(x0 - x1) + x1^2\n"
      "gen 32004*x0*x3\n"
      "gen x2^2*2\n");
  GradedPolynomial t0 = var(*tricky.ring, 0), t1 = var(*tricky.ring, 1),
                   t2 = var(*tricky.ring, 2), t3 = var(*tricky.ring, 3);
  CHECK(tricky.gens[0] == t0 * t0);
  CHECK(tricky.gens[1] == t0 * t3);
  CHECK(tricky.gens[2] == t2 * t2 + t2 * t2);
}

TEST_CASE("printing and parsing are mutually inverse") {
  PolyRing probe(32003, 3);
  std::vector<std::vector<GradedPolynomial>> corpus = {
      gen_twisted_cubic(&probe),     gen_skew_lines(&probe),   gen_double_line(&probe, 2),
      gen_three_quadric(&probe, "mixed"), gen_ci(&probe, 2, 3, 1), gen_random_ideal(&probe, 4, 3, 9),
  };
  for (const auto& gens : corpus) {
    InputDocument doc = make_document(32003, 3);
    for (const GradedPolynomial& g : gens)
      doc.gens.push_back(GradedPolynomial::from_terms(doc.ring.get(), g.terms()));
    std::string text = print_input(doc);
    InputDocument back = parse_input(text);
    CHECK(rendered(back.gens) == rendered(doc.gens));
    CHECK(print_input(back) == text);
  }

  InputDocument named = make_document(101, 3, {"a", "b", "c", "d"});
  named.gens.push_back(var(*named.ring, 0) * var(*named.ring, 3));
  std::string text = print_input(named);
  CHECK(text.find("vars a b c d\n") != std::string::npos);
  InputDocument back = parse_input(text);
  CHECK(back.ring->var_name(2) == "c");
  CHECK(rendered(back.gens) == rendered(named.gens));

  // symmetric residues survive the round trip
  InputDocument neg = make_document(32003, 3);
  GradedPolynomial x0 = var(*neg.ring, 0), x1 = var(*neg.ring, 1);
  neg.gens.push_back(x0 * x0 - x1 * x1);
  std::string printed = print_input(neg);
  CHECK(printed.find("gen x0^2 - x1^2\n") != std::string::npos);
  CHECK(rendered(parse_input(printed).gens) == rendered(neg.gens));
}

TEST_CASE("parse errors point at the offending line and column") {
  ParseError inhomog = parse_fail("p 32003\nn 3\ngen x0 + x1^2\n");
  CHECK(inhomog.line() == 3);
  CHECK(std::string(inhomog.what()).find("not homogeneous") != std::string::npos);

  ParseError composite = parse_fail("p 32004\nn 3\ngen x0\n");
  CHECK(composite.line() == 1);
  CHECK(composite.column() == 3);
  CHECK(std::string(composite.what()).find("odd prime") != std::string::npos);

  ParseError unknown = parse_fail("p 32003\nn 3\ngen y0*x1\n");
  CHECK(unknown.line() == 3);
  CHECK(unknown.column() == 5);
  CHECK(std::string(unknown.what()).find("unknown variable 'y0'") != std::string::npos);

  ParseError missing_star = parse_fail("p 32003\nn 3\ngen x0 x1\n");
  CHECK(missing_star.line() == 3);
  CHECK(missing_star.column() == 8);
  CHECK(std::string(missing_star.what()).find("expected an operator") != std::string::npos);

  ParseError exponent = parse_fail("p 32003\nn 3\ngen x0^300\n");
  CHECK(std::string(exponent.what()).find("exponent exceeds") != std::string::npos);

  ParseError bad_n = parse_fail("p 32003\nn 2\ngen x0\n");
  CHECK(bad_n.line() == 2);
  CHECK(std::string(bad_n.what()).find("between 3 and") != std::string::npos);

  ParseError early_gen = parse_fail("gen x0\n");
  CHECK(early_gen.line() == 1);
  CHECK(std::string(early_gen.what()).find("'gen' before") != std::string::npos);

  ParseError dup = parse_fail("p 32003\np 101\nn 3\ngen x0\n");
  CHECK(dup.line() == 2);
  CHECK(std::string(dup.what()).find("duplicate 'p'") != std::string::npos);

  ParseError zero = parse_fail("p 32003\nn 3\ngen x0 - x0\n");
  CHECK(zero.line() == 3);
  CHECK(std::string(zero.what()).find("generator is zero") != std::string::npos);

  ParseError nogens = parse_fail("p 32003\nn 3\n");
  CHECK(nogens.line() == 3);
  CHECK(std::string(nogens.what()).find("no generators") != std::string::npos);

  ParseError noheader = parse_fail("# nothing here\n");
  CHECK(std::string(noheader.what()).find("missing 'p' or 'n'") != std::string::npos);

  ParseError empty_gen = parse_fail("p 32003\nn 3\ngen\n");
  CHECK(std::string(empty_gen.what()).find("empty generator") != std::string::npos);

  ParseError stray = parse_fail("p 32003\nn 3\ngen x0 @ x1\n");
  CHECK(stray.line() == 3);
  CHECK(std::string(stray.what()).find("unexpected character '@'") != std::string::npos);

  ParseError vars_first = parse_fail("p 32003\nvars a b c d\nn 3\ngen a\n");
  CHECK(std::string(vars_first.what()).find("'vars' must come after 'n'") != std::string::npos);

  ParseError dup_var = parse_fail("p 32003\nn 3\nvars a b a c\ngen a\n");
  CHECK(dup_var.line() == 3);
  CHECK(std::string(dup_var.what()).find("duplicate variable name 'a'") != std::string::npos);

  ParseError overflow = parse_fail("p 99999999999999999999\nn 3\ngen x0\n");
  CHECK(std::string(overflow.what()).find("integer literal too large") != std::string::npos);

  ParseError unclosed = parse_fail("p 32003\nn 3\ngen (x0 + x1\n");
  CHECK(std::string(unclosed.what()).find("expected ')'") != std::string::npos);

  ParseError bad_exp = parse_fail("p 32003\nn 3\ngen x0^x1\n");
  CHECK(std::string(bad_exp.what()).find("expected an integer exponent") != std::string::npos);

  ParseError bad_directive = parse_fail("p 32003\nn 3\nideal x0\n");
  CHECK(std::string(bad_directive.what()).find("unknown directive 'ideal'") != std::string::npos);
}

TEST_CASE("machine reports are deterministic, valid JSON and schema-tagged") {
  PolyRing R(32003, 3);
  SchemeInput in{&R, gen_skew_lines(&R)};
  AnalysisReport r = analyze(in, 1);
  Ideal sat(&R, r.saturated_gens);
  certify_and_refresh(r, sat, 1);

  std::string once = analysis_report_machine(r, 7);
  std::string twice = analysis_report_machine(r, 7);
  CHECK(once == twice);

  auto j = nlohmann::ordered_json::parse(once);
  CHECK(j.dump(2) + "\n" == once);
  CHECK(j["schema"] == "subcan.report");
  CHECK(j["version"] == kReportVersion);
  CHECK(j["command"] == "analyze");
  CHECK(j["seed"] == 7);
  CHECK(j["p"] == 32003);
  CHECK(j["codim"] == 2);
  CHECK(j["subcanonical"]["twist"] == -2);
  CHECK(j["m1"]["dims"] == nlohmann::ordered_json::parse("[[0, 1]]"));
  CHECK(j["certificate"] == "certified");
  REQUIRE(j["verdicts"].size() == 4);
  CHECK(j["verdicts"][0]["name"] == "min-h1-bound");
  CHECK(j["verdicts"][0]["consistent"] == true);

  std::string text = analysis_report_text(r, 7);
  CHECK(text.find("subcanonical twist: -2") != std::string::npos);
  CHECK(text.find("certificate: certified") != std::string::npos);
}

TEST_CASE("construct reports cover both the degenerate and the working case") {
  PolyRing R(32003, 3);

  SchemeInput ci_in{&R, gen_ci(&R, 2, 3, 0)};
  AnalysisReport ci_r = analyze(ci_in, 1);
  Ideal ci_sat(&R, ci_r.saturated_gens);
  ConstructOutcome degenerate;
  degenerate.pkg = serre_extension_module(ci_sat, *ci_r.twist.twist, 1);
  degenerate.res = construct_Z(degenerate.pkg);
  degenerate.constructed = true;
  auto jd = nlohmann::ordered_json::parse(construct_report_machine(degenerate, 0));
  CHECK(jd["command"] == "construct");
  CHECK(jd["certified"] == true);
  CHECK(jd["rank"] == 2);
  CHECK(jd["construction"]["degenerate"] == true);
  CHECK(!jd.contains("checks"));

  SchemeInput sl_in{&R, gen_skew_lines(&R)};
  AnalysisReport sl_r = analyze(sl_in, 1);
  Ideal sl_sat(&R, sl_r.saturated_gens);
  ConstructOutcome working;
  working.pkg = serre_extension_module(sl_sat, *sl_r.twist.twist, 1);
  working.res = construct_Z(working.pkg);
  working.constructed = true;
  working.checks = verify_construction(working.res, sl_sat, working.pkg, 1);
  working.checked = true;
  std::string report = construct_report_machine(working, 3);
  CHECK(report == construct_report_machine(working, 3));
  auto jw = nlohmann::ordered_json::parse(report);
  CHECK(jw["construction"]["status"] == "lemma-hypothesis-not-met");
  CHECK(jw["construction"]["degenerate"] == false);
  CHECK(jw["construction"]["ann_saturated"] == true);
  CHECK(jw["construction"]["j_generators"].size() == 4);
  CHECK(jw["checks"]["omega_twist"] == true);
  CHECK(jw["checks"]["sequence_dims"] == true);

  InputDocument doc = make_document(32003, 3);
  for (const GradedPolynomial& g : sl_r.saturated_gens)
    doc.gens.push_back(GradedPolynomial::from_terms(doc.ring.get(), g.terms()));
  std::string out_doc = constructed_ideal_document(working, doc);
  InputDocument parsed = parse_input(out_doc);
  CHECK(parsed.gens.size() == 4);
  CHECK(ideal_equal(parsed.ideal(), Ideal(parsed.ring.get(), parsed.gens)));

  std::string text = construct_report_text(working, 3);
  CHECK(text.find("status: lemma-hypothesis-not-met") != std::string::npos);
  CHECK(text.find("sequence-dims ok") != std::string::npos);
}

TEST_CASE("betti and cohomology reports render the tables") {
  PolyRing R(32003, 3);
  SchemeInput in{&R, gen_skew_lines(&R)};
  AnalysisReport r = analyze(in, 1);
  std::string betti = betti_report_text(r);
  CHECK(betti.find("pd 3") != std::string::npos);
  CHECK(betti == betti_report_text(r));

  PresentedModule S = quotient_module(Ideal(&R, r.saturated_gens));
  SheafCohomologyTable t = sheaf_cohomology(S, -2, 2);
  std::string grid = cohomology_report_text(t, 2);
  CHECK(grid.find("h^0:") != std::string::npos);
  CHECK(grid.find("h^2:") != std::string::npos);
  CHECK(grid.find("h^3:") == std::string::npos);
  // two disjoint lines: h^0(O_X(0)) = 2, h^1(O_X(-2)) = 2 lines * 1
  CHECK(t.at(0, 0) == 2);
  CHECK(t.at(1, -2) == 2);
}
