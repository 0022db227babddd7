#include "subcan/io.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace subcan {

namespace {

using OrderedJson = nlohmann::ordered_json;

struct Token {
  enum Kind { kInt, kIdent, kOp, kEnd } kind = kEnd;
  std::string text;
  int64_t value = 0;
  char op = 0;
  int col = 0;
};

std::vector<Token> lex_line(const std::string& line, int lineno) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int64_t v = 0;
      size_t start = i;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
        if (v > (INT64_MAX - 9) / 10) throw ParseError(lineno, col, "integer literal too large");
        v = v * 10 + (line[i] - '0');
        ++i;
      }
      out.push_back({Token::kInt, line.substr(start, i - start), v, 0, col});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = i;
      while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_'))
        ++i;
      out.push_back({Token::kIdent, line.substr(start, i - start), 0, 0, col});
      continue;
    }
    if (c == '+' || c == '-' || c == '*' || c == '^' || c == '(' || c == ')') {
      out.push_back({Token::kOp, std::string(1, c), 0, c, col});
      ++i;
      continue;
    }
    throw ParseError(lineno, col, std::string("unexpected character '") + c + "'");
  }
  return out;
}

// dense exponent-vector polynomial used only while parsing; converted to the
// canonical homogeneous form at the end of each generator line
struct RawPoly {
  std::map<std::vector<int>, int64_t> terms;
};

RawPoly raw_add(const PrimeField& F, const RawPoly& a, const RawPoly& b, int64_t bscale) {
  RawPoly r = a;
  for (const auto& [m, c] : b.terms) {
    int64_t v = F.add(r.terms.count(m) ? r.terms[m] : 0, F.mul(F.reduce(bscale), c));
    if (v)
      r.terms[m] = v;
    else
      r.terms.erase(m);
  }
  return r;
}

RawPoly raw_mul(const PrimeField& F, const RawPoly& a, const RawPoly& b, int lineno, int col) {
  RawPoly r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      std::vector<int> m(ma.size());
      for (size_t i = 0; i < m.size(); ++i) {
        m[i] = ma[i] + mb[i];
        if (m[i] > 255) throw ParseError(lineno, col, "exponent exceeds the supported limit");
      }
      int64_t v = F.add(r.terms.count(m) ? r.terms[m] : 0, F.mul(ca, cb));
      if (v)
        r.terms[m] = v;
      else
        r.terms.erase(m);
    }
  return r;
}

class ExprParser {
public:
  ExprParser(const PolyRing* R, const std::vector<Token>& toks, size_t pos, int lineno)
      : R_(R), toks_(toks), pos_(pos), lineno_(lineno) {}

  RawPoly parse() {
    RawPoly r = expr();
    if (!at_end()) throw ParseError(lineno_, cur().col, "expected an operator");
    return r;
  }

private:
  bool at_end() const { return pos_ >= toks_.size(); }
  const Token& cur() const { return toks_[pos_]; }
  bool is_op(char c) const { return !at_end() && cur().kind == Token::kOp && cur().op == c; }

  RawPoly expr() {
    int64_t sign = 1;
    if (is_op('-')) {
      sign = -1;
      ++pos_;
    } else if (is_op('+')) {
      ++pos_;
    }
    RawPoly r = raw_add(R_->field(), RawPoly{}, term(), sign);
    while (is_op('+') || is_op('-')) {
      int64_t s = cur().op == '+' ? 1 : -1;
      ++pos_;
      r = raw_add(R_->field(), r, term(), s);
    }
    return r;
  }

  RawPoly term() {
    RawPoly r = factor();
    while (is_op('*')) {
      int col = cur().col;
      ++pos_;
      r = raw_mul(R_->field(), r, factor(), lineno_, col);
    }
    return r;
  }

  RawPoly factor() {
    RawPoly base = primary();
    if (is_op('^')) {
      int col = cur().col;
      ++pos_;
      if (at_end() || cur().kind != Token::kInt)
        throw ParseError(lineno_, at_end() ? col + 1 : cur().col, "expected an integer exponent");
      int64_t e = cur().value;
      if (e > 255) throw ParseError(lineno_, cur().col, "exponent exceeds the supported limit");
      ++pos_;
      RawPoly r;
      r.terms[std::vector<int>(static_cast<size_t>(R_->nvars()), 0)] = 1;
      for (int64_t i = 0; i < e; ++i) r = raw_mul(R_->field(), r, base, lineno_, col);
      return r;
    }
    return base;
  }

  RawPoly primary() {
    if (at_end()) throw ParseError(lineno_, toks_.empty() ? 1 : toks_.back().col + 1,
                                   "unexpected end of expression");
    const Token& t = cur();
    if (t.kind == Token::kInt) {
      ++pos_;
      RawPoly r;
      int64_t c = R_->field().reduce(t.value);
      if (c) r.terms[std::vector<int>(static_cast<size_t>(R_->nvars()), 0)] = c;
      return r;
    }
    if (t.kind == Token::kIdent) {
      int v = R_->var_index(t.text);
      if (v < 0) throw ParseError(lineno_, t.col, "unknown variable '" + t.text + "'");
      ++pos_;
      RawPoly r;
      std::vector<int> m(static_cast<size_t>(R_->nvars()), 0);
      m[static_cast<size_t>(v)] = 1;
      r.terms[m] = 1;
      return r;
    }
    if (t.kind == Token::kOp && t.op == '(') {
      ++pos_;
      RawPoly r = expr();
      if (!is_op(')')) throw ParseError(lineno_, at_end() ? t.col : cur().col, "expected ')'");
      ++pos_;
      return r;
    }
    throw ParseError(lineno_, t.col, "expected an integer, variable or '('");
  }

  const PolyRing* R_;
  const std::vector<Token>& toks_;
  size_t pos_;
  int lineno_;
};

GradedPolynomial finish_generator(const PolyRing* R, const RawPoly& raw, int lineno, int col) {
  if (raw.terms.empty()) throw ParseError(lineno, col, "generator is zero");
  int degree = -1;
  std::vector<GradedPolynomial::Term> terms;
  for (const auto& [m, c] : raw.terms) {
    int d = 0;
    Monomial mono(R->nvars());
    for (int i = 0; i < R->nvars(); ++i) {
      mono.set_exponent(i, m[static_cast<size_t>(i)]);
      d += m[static_cast<size_t>(i)];
    }
    if (degree < 0) degree = d;
    if (d != degree) throw ParseError(lineno, col, "generator is not homogeneous");
    terms.push_back({mono, c});
  }
  return GradedPolynomial::from_terms(R, std::move(terms));
}

std::string verdict_word(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::satisfied:
      return "satisfied";
    case HypothesisStatus::violated:
      return "violated";
    default:
      return "not-certified";
  }
}

std::string verdict_word(ConclusionStatus s) {
  switch (s) {
    case ConclusionStatus::holds:
      return "holds";
    case ConclusionStatus::fails:
      return "fails";
    default:
      return "not-evaluated";
  }
}

std::string certificate_word(SerreCertificate s) {
  switch (s) {
    case SerreCertificate::certified:
      return "certified";
    case SerreCertificate::failed:
      return "failed";
    default:
      return "not-checked";
  }
}

OrderedJson degree_table(const std::map<int, int64_t>& t) {
  OrderedJson a = OrderedJson::array();
  for (const auto& [j, d] : t) a.push_back({j, d});
  return a;
}

OrderedJson report_header(const char* command, uint64_t seed) {
  OrderedJson j;
  j["schema"] = "subcan.report";
  j["version"] = kReportVersion;
  j["command"] = command;
  j["seed"] = seed;
  return j;
}

std::string dump(const OrderedJson& j) { return j.dump(2) + "\n"; }

OrderedJson construction_json(const ConstructOutcome& out) {
  OrderedJson j;
  const SerrePackage& pkg = out.pkg;
  j["a_x"] = pkg.a_x;
  j["c"] = pkg.c;
  j["certified"] = pkg.certified;
  j["attempts"] = pkg.attempts_used;
  j["rank"] = pkg.rank;
  j["ext_finite"] = pkg.ext_finite;
  j["ext_infinite"] = pkg.ext_infinite;
  j["constructed"] = out.constructed;
  if (out.constructed) {
    const ConstructionResult& res = out.res;
    OrderedJson c;
    c["status"] = res.status;
    c["hypothesis_met"] = res.hypothesis_met;
    c["d1"] = res.d1;
    c["xi_component"] = res.xi_component;
    c["degenerate"] = res.degenerate;
    if (!res.degenerate) {
      c["ann_saturated"] = res.ann_saturated;
      OrderedJson gens = OrderedJson::array();
      for (const GradedPolynomial& g : minimal_ideal_generators(res.J)) gens.push_back(g.str());
      c["j_generators"] = gens;
    }
    j["construction"] = c;
  }
  if (out.checked) {
    OrderedJson c;
    c["applicable"] = out.checks.applicable;
    c["omega_twist"] = out.checks.omega_twist;
    c["m1_translate"] = out.checks.m1_translate;
    c["z_not_ci"] = out.checks.z_not_ci;
    c["no_linear_form"] = out.checks.no_linear_form;
    c["sequence_dims"] = out.checks.sequence_dims;
    j["checks"] = c;
  }
  return j;
}

}  // namespace

ParseError::ParseError(int line, int col, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) +
                         ": " + message),
      line_(line),
      col_(col) {}

InputDocument make_document(int64_t p, int n, std::vector<std::string> var_names) {
  InputDocument doc;
  doc.ring = std::make_shared<const PolyRing>(p, n, std::move(var_names));
  return doc;
}

InputDocument parse_input(const std::string& text) {
  std::optional<int64_t> p;
  std::optional<int> n;
  std::vector<std::string> names;
  InputDocument doc;
  std::vector<std::pair<std::vector<Token>, int>> pending_gens;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<Token> toks = lex_line(line, lineno);
    if (toks.empty()) continue;
    const Token& head = toks.front();
    if (head.kind != Token::kIdent)
      throw ParseError(lineno, head.col, "expected a directive (p, n, vars, gen)");

    if (head.text == "p" || head.text == "n") {
      if (toks.size() != 2 || toks[1].kind != Token::kInt)
        throw ParseError(lineno, head.col, "expected a single integer after '" + head.text + "'");
      if (head.text == "p") {
        if (p) throw ParseError(lineno, head.col, "duplicate 'p'");
        if (toks[1].value < 3 || !PrimeField::is_prime(toks[1].value) ||
            toks[1].value > (int64_t(1) << 30))
          throw ParseError(lineno, toks[1].col, "p must be an odd prime below 2^30");
        p = toks[1].value;
      } else {
        if (n) throw ParseError(lineno, head.col, "duplicate 'n'");
        if (toks[1].value < 3 || toks[1].value > kMaxVars - 1)
          throw ParseError(lineno, toks[1].col,
                           "n must be between 3 and " + std::to_string(kMaxVars - 1));
        n = static_cast<int>(toks[1].value);
      }
      continue;
    }
    if (head.text == "vars") {
      if (!n) throw ParseError(lineno, head.col, "'vars' must come after 'n'");
      if (!names.empty()) throw ParseError(lineno, head.col, "duplicate 'vars'");
      for (size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].kind != Token::kIdent)
          throw ParseError(lineno, toks[i].col, "variable names must be identifiers");
        for (const std::string& seen : names)
          if (seen == toks[i].text)
            throw ParseError(lineno, toks[i].col, "duplicate variable name '" + toks[i].text + "'");
        names.push_back(toks[i].text);
      }
      if (static_cast<int>(names.size()) != *n + 1)
        throw ParseError(lineno, head.col,
                         "expected " + std::to_string(*n + 1) + " variable names");
      continue;
    }
    if (head.text == "gen") {
      if (!p || !n) throw ParseError(lineno, head.col, "'gen' before 'p' and 'n'");
      if (toks.size() == 1) throw ParseError(lineno, head.col, "empty generator");
      if (!doc.ring) doc.ring = std::make_shared<const PolyRing>(*p, *n, names);
      std::vector<Token> expr(toks.begin() + 1, toks.end());
      int col = expr.front().col;
      RawPoly raw = ExprParser(doc.ring.get(), expr, 0, lineno).parse();
      doc.gens.push_back(finish_generator(doc.ring.get(), raw, lineno, col));
      continue;
    }
    throw ParseError(lineno, head.col, "unknown directive '" + head.text + "'");
  }
  if (!p || !n) throw ParseError(lineno + 1, 1, "missing 'p' or 'n'");
  if (doc.gens.empty()) throw ParseError(lineno + 1, 1, "no generators");
  return doc;
}

std::string print_input(const InputDocument& doc) {
  const PolyRing* R = doc.ring.get();
  std::ostringstream os;
  os << "p " << R->p() << "\n";
  os << "n " << R->n() << "\n";
  bool default_names = true;
  for (int i = 0; i <= R->n(); ++i)
    default_names = default_names && R->var_name(i) == "x" + std::to_string(i);
  if (!default_names) {
    os << "vars";
    for (int i = 0; i <= R->n(); ++i) os << " " << R->var_name(i);
    os << "\n";
  }
  for (const GradedPolynomial& g : doc.gens) os << "gen " << g.str() << "\n";
  return os.str();
}

std::string analysis_report_machine(const AnalysisReport& r, uint64_t seed) {
  OrderedJson j = report_header("analyze", seed);
  j["p"] = r.p;
  j["n"] = r.n;
  j["input_saturated"] = r.input_saturated;
  OrderedJson gens = OrderedJson::array();
  for (const GradedPolynomial& g : r.saturated_gens) gens.push_back(g.str());
  j["generators"] = gens;
  j["d_vector"] = r.d_vector;
  j["codim"] = r.codim;
  j["dim"] = r.dim;
  j["depth"] = r.hilbert.depth;
  j["regularity"] = r.hilbert.reg;
  j["multiplicity"] = r.hilbert.multiplicity;
  OrderedJson betti = OrderedJson::array();
  for (const auto& [ij, v] : r.betti.beta) betti.push_back({ij.first, ij.second, v});
  j["betti"] = betti;
  j["ci"] = {{"is_ci", r.ci.is_ci}, {"degrees", r.ci.degrees}};
  OrderedJson sub;
  if (r.twist.twist)
    sub["twist"] = *r.twist.twist;
  else
    sub["twist"] = nullptr;
  sub["candidates"] = r.twist.candidates;
  sub["multiple_confirmed"] = r.twist.multiple_confirmed;
  j["subcanonical"] = sub;
  OrderedJson m1;
  m1["finite"] = r.m1_finite;
  m1["dims"] = degree_table(r.m1_dims);
  m1["socle"] = degree_table(r.m1_socle);
  m1["r3_annihilates"] = r.r3_kills_m1;
  j["m1"] = m1;
  j["certificate"] = certificate_word(r.serre);
  OrderedJson verdicts = OrderedJson::array();
  for (const TheoremVerdict& v : r.verdicts) {
    OrderedJson e;
    e["name"] = v.name;
    e["hypotheses"] = verdict_word(v.hypotheses);
    e["conclusion"] = verdict_word(v.conclusion);
    e["consistent"] = v.consistent;
    e["notes"] = v.notes;
    verdicts.push_back(e);
  }
  j["verdicts"] = verdicts;
  return dump(j);
}

std::string analysis_report_text(const AnalysisReport& r, uint64_t seed) {
  std::ostringstream os;
  os << "p " << r.p << "  n " << r.n << "  seed " << seed << "\n";
  os << "input saturated: " << (r.input_saturated ? "yes" : "no") << "\n";
  os << "d-vector:";
  for (int d : r.d_vector) os << " " << d;
  os << "\n";
  os << "codim " << r.codim << "  dim " << r.dim << "  depth " << r.hilbert.depth << "  reg "
     << r.hilbert.reg << "  mult " << r.hilbert.multiplicity << "\n";
  os << "complete intersection: " << (r.ci.is_ci ? "yes" : "no");
  if (r.ci.is_ci) {
    os << " (degrees";
    for (int d : r.ci.degrees) os << " " << d;
    os << ")";
  }
  os << "\n";
  if (r.twist.twist)
    os << "subcanonical twist: " << *r.twist.twist << "\n";
  else if (r.codim == 2)
    os << "subcanonical twist: none" << (r.twist.candidates.empty() ? " (no candidates)" : "")
       << "\n";
  if (!r.m1_finite) {
    os << "deficiency module: not finite length\n";
  } else if (r.m1_dims.empty()) {
    os << "deficiency module: zero\n";
  } else {
    os << "deficiency module dims:";
    for (const auto& [j, d] : r.m1_dims) os << "  " << j << ": " << d;
    os << "\n";
    os << "socle:";
    for (const auto& [j, d] : r.m1_socle) os << "  " << j << ": " << d;
    os << "\n";
    os << "cube of the irrelevant ideal annihilates: " << (r.r3_kills_m1 ? "yes" : "no") << "\n";
  }
  os << "certificate: " << certificate_word(r.serre) << "\n";
  os << "verdicts:\n";
  for (const TheoremVerdict& v : r.verdicts) {
    os << "  " << v.name << ": hypotheses " << verdict_word(v.hypotheses) << ", conclusion "
       << verdict_word(v.conclusion) << ", " << (v.consistent ? "consistent" : "INCONSISTENT")
       << "\n";
    for (const std::string& note : v.notes) os << "    note: " << note << "\n";
  }
  return os.str();
}

std::string construct_report_machine(const ConstructOutcome& out, uint64_t seed) {
  OrderedJson j = report_header("construct", seed);
  OrderedJson body = construction_json(out);
  for (auto& [k, v] : body.items()) j[k] = v;
  return dump(j);
}

std::string construct_report_text(const ConstructOutcome& out, uint64_t seed) {
  std::ostringstream os;
  const SerrePackage& pkg = out.pkg;
  os << "seed " << seed << "\n";
  os << "a_X " << pkg.a_x << "  c " << pkg.c << "\n";
  os << "extension certified: " << (pkg.certified ? "yes" : "no") << " (attempts "
     << pkg.attempts_used << ", rank " << pkg.rank << ")\n";
  if (!out.constructed) return os.str();
  const ConstructionResult& res = out.res;
  os << "status: " << res.status << "\n";
  os << "d1 " << res.d1 << " (generator " << res.xi_component << ")\n";
  os << "degenerate: " << (res.degenerate ? "yes" : "no") << "\n";
  if (!res.degenerate) {
    os << "annihilator saturated: " << (res.ann_saturated ? "yes" : "no") << "\n";
    os << "J generators:\n";
    for (const GradedPolynomial& g : minimal_ideal_generators(res.J)) os << "  " << g.str() << "\n";
  }
  if (out.checked) {
    os << "checks: omega-twist " << (out.checks.omega_twist ? "ok" : "FAIL") << ", m1-translate "
       << (out.checks.m1_translate ? "ok" : "FAIL") << ", not-ci "
       << (out.checks.z_not_ci ? "ok" : "FAIL") << ", no-linear-form "
       << (out.checks.no_linear_form ? "ok" : "FAIL") << ", sequence-dims "
       << (out.checks.sequence_dims ? "ok" : "FAIL") << "\n";
  }
  return os.str();
}

std::string constructed_ideal_document(const ConstructOutcome& out, const InputDocument& in) {
  InputDocument doc;
  doc.ring = in.ring;
  doc.gens = minimal_ideal_generators(out.res.J);
  return print_input(doc);
}

std::string betti_report_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "p " << r.p << "  n " << r.n << "\n";
  os << "graded betti numbers of R/I (saturated input):\n";
  os << r.betti.str();
  os << "pd " << r.betti.pd() << "  reg " << r.betti.regularity() << "  codim " << r.codim
     << "  depth " << r.hilbert.depth << "\n";
  return os.str();
}

int analysis_exit_code(const AnalysisReport& r) {
  for (const TheoremVerdict& v : r.verdicts)
    if (!v.consistent) return kExitCounterexample;
  for (const TheoremVerdict& v : r.verdicts)
    if (v.hypotheses == HypothesisStatus::not_certified) return kExitNotCertified;
  return kExitOk;
}

int construct_exit_code(const ConstructOutcome& out) {
  if (!out.pkg.certified || !out.constructed) return kExitNotCertified;
  if (out.res.status != "ok") return kExitNotCertified;
  if (out.res.degenerate) return kExitOk;
  if (!out.checked) return kExitNotCertified;
  return out.checks.all() ? kExitOk : kExitCounterexample;
}

std::string cohomology_report_text(const SheafCohomologyTable& t, int max_i) {
  std::ostringstream os;
  os << "j:";
  for (int j = t.lo; j <= t.hi; ++j) os << "\t" << j;
  os << "\n";
  for (int i = 0; i <= max_i && i < static_cast<int>(t.h.size()); ++i) {
    os << "h^" << i << ":";
    for (int j = t.lo; j <= t.hi; ++j) os << "\t" << t.at(i, j);
    os << "\n";
  }
  return os.str();
}

}  // namespace subcan
