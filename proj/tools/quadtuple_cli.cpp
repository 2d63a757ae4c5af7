// quadtuple: command-line front end for the Z[sqrt(d)] quadruple toolkit.
//
// Exit codes: 0 success / proved, 1 disproved / found, 2 usage, 3 inconclusive
// or unsolvable, 4 invalid ring, 5 hypothesis not met, 6 retry budget.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "quadtuple/construct.hpp"
#include "quadtuple/counterex.hpp"
#include "quadtuple/errors.hpp"
#include "quadtuple/json_io.hpp"
#include "quadtuple/pellsolve.hpp"
#include "quadtuple/quadring.hpp"
#include "quadtuple/repr.hpp"

namespace {

using namespace quadtuple;
using json::Json;

enum Exit : int {
  kOk = 0,
  kFound = 1,
  kUsage = 2,
  kInconclusive = 3,
  kBadRing = 4,
  kHypothesis = 5,
  kBudget = 6,
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  std::string format = "text";
  bool allow_nonsquarefree = false;
  bool json() const { return format == "json"; }
};

Integer integer_arg(const std::string& text, const char* flag) {
  try {
    return parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(flag) + ": expected an integer, got '" + text + "'");
  }
}

QuadInt element_arg(const std::string& text, const char* flag) {
  try {
    return parse_quadint(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(flag) + ": expected 'a,b', got '" + text + "'");
  }
}

RingCtx ring_arg(const std::string& d, const Globals& g) {
  try {
    return RingCtx(integer_arg(d, "--d"), g.allow_nonsquarefree);
  } catch (const NonSquareFreeError&) {
    throw;
  } catch (const RingError& e) {
    throw UsageError(e.what());
  }
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

// ---------------------------------------------------------------------------

struct PellArgs {
  std::string d, norm;
  long limit = 10;
};

int run_pell(const PellArgs& args, const Globals& g) {
  const RingCtx ctx = ring_arg(args.d, g);
  const Integer N = integer_arg(args.norm, "--norm");
  if (args.limit < 1) throw UsageError("--limit must be at least 1");
  NormEqClasses classes;
  try {
    classes = solve_norm_eq(ctx, N);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  const auto sols = enumerate_solutions(ctx, classes, static_cast<std::size_t>(args.limit));
  if (g.json()) {
    Json j = json::norm_classes(classes);
    j["solutions"] = Json::array();
    for (const QuadInt& s : sols) j["solutions"].push_back(json::quadint(s));
    j["solvable"] = classes.solvable();
    emit(j);
  } else {
    std::cout << "d = " << ctx.d() << ", N = " << N << "\n";
    std::cout << "fundamental unit: " << format_quadint(ctx.fundamental_unit()) << "\n";
    if (!classes.solvable()) {
      std::cout << "x^2 - d*y^2 = " << N << " has no solution\n";
    } else {
      std::cout << "class representatives:";
      for (const QuadInt& r : classes.representatives) std::cout << " " << format_quadint(r);
      std::cout << "\nfirst " << sols.size() << " solutions:";
      for (const QuadInt& s : sols) std::cout << " " << format_quadint(s);
      std::cout << "\n";
    }
  }
  return classes.solvable() ? kOk : kInconclusive;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string d, m, k;
  int unit_index = 0;
  std::string factorization = "first";
};

void print_quadruple_text(const Quadruple& q) {
  std::cout << "n = " << format_quadint(q.n) << "\n";
  for (std::size_t i = 0; i < 4; ++i)
    std::cout << "a" << i + 1 << " = " << format_quadint(q.elements[i]) << "\n";
  for (std::size_t slot = 0; slot < kPairs.size(); ++slot) {
    if (q.witnesses[slot])
      std::cout << "w" << pair_label(slot) << " = " << format_quadint(*q.witnesses[slot]) << "\n";
  }
}

int run_construct(const ConstructArgs& args, const Globals& g) {
  const RingCtx ctx = ring_arg(args.d, g);
  const Integer m = integer_arg(args.m, "--m");
  const Integer k = integer_arg(args.k, "--k");
  if (args.unit_index < 0) throw UsageError("--unit-index must be nonnegative");
  const Factorization choice =
      args.factorization == "second" ? Factorization::second : Factorization::first;
  const auto [quad, trace] = construct_quadruple(ctx, m, k, args.unit_index, choice);
  const VerificationReport report = verify_quadruple(ctx, quad);
  if (!report.all_pass()) {
    std::cerr << "error: constructed quadruple failed verification\n";
    return kFound;
  }
  if (g.json()) {
    Json j = json::quadruple(ctx.d(), quad);
    j["trace"] = json::trace(trace);
    emit(j);
  } else {
    std::cout << "D(" << format_quadint(quad.n) << ") quadruple in Z[sqrt(" << ctx.d()
              << ")], unit index " << trace.unit_index << ", verified\n";
    print_quadruple_text(quad);
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string d, n;
  std::vector<std::string> elements;
  std::vector<std::string> witnesses;
};

int run_verify(const VerifyArgs& args, const Globals& g) {
  const RingCtx ctx = ring_arg(args.d, g);
  Quadruple q;
  q.n = element_arg(args.n, "--n");
  if (args.elements.size() != 4) throw UsageError("--elements takes exactly four 'a,b' values");
  for (std::size_t i = 0; i < 4; ++i) q.elements[i] = element_arg(args.elements[i], "--elements");
  if (!args.witnesses.empty()) {
    if (args.witnesses.size() != 6)
      throw UsageError("--witnesses takes six 'a,b' values (pairs 12 13 14 23 24 34)");
    for (std::size_t i = 0; i < 6; ++i) q.witnesses[i] = element_arg(args.witnesses[i], "--witnesses");
  }
  const VerificationReport report = verify_quadruple(ctx, q);
  if (g.json()) {
    Json j = json::verification(report);
    emit(j);
  } else {
    std::cout << "pair  product+n                      witness  sqrt_in_ring      status\n";
    for (std::size_t slot = 0; slot < report.pairs.size(); ++slot) {
      const PairCheck& p = report.pairs[slot];
      std::cout << pair_label(slot) << "    " << format_quadint(p.value) << "  "
                << (p.witness_ok ? (*p.witness_ok ? "ok" : "BAD") : "-") << "  "
                << (p.root ? format_quadint(*p.root) : "none") << "  "
                << (p.pass ? "pass" : "FAIL") << "\n";
    }
    std::cout << (report.nondegenerate ? "elements nonzero and distinct\n"
                                       : "elements not nonzero and distinct\n");
    std::cout << (report.all_pass() ? "verified" : "NOT verified") << "\n";
  }
  return report.all_pass() ? kOk : kFound;
}

// ---------------------------------------------------------------------------

struct CheckReprArgs {
  std::string d, n;
  long bound = 500;
  bool parity_pruning = false;
};

int run_checkrepr(const CheckReprArgs& args, const Globals& g) {
  const RingCtx ctx = ring_arg(args.d, g);
  const QuadInt n = element_arg(args.n, "--n");
  if (args.bound < 1) throw UsageError("--bound must be at least 1");
  if (const auto cert = certify_nonrepresentable(ctx, n)) {
    if (g.json()) {
      Json j;
      j["status"] = "certified";
      j["certificate"] = json::certificate(*cert);
      emit(j);
    } else {
      std::cout << format_quadint(n) << " = 2 * (" << format_quadint(cert->u)
                << ") with norm 1: not a difference of two squares in Z[sqrt(" << ctx.d()
                << ")]\n";
    }
    return kOk;
  }
  SearchOptions opts;
  opts.parity_pruning = args.parity_pruning;
  const auto hit = search_repr(ctx, n, args.bound, opts);
  if (g.json()) {
    Json j;
    j["status"] = hit ? "found" : "inconclusive";
    j["bound"] = args.bound;
    if (hit) {
      j["p"] = json::quadint(hit->p);
      j["q"] = json::quadint(hit->q);
    }
    emit(j);
  } else if (hit) {
    std::cout << format_quadint(n) << " = (" << format_quadint(hit->p) << ")^2 - ("
              << format_quadint(hit->q) << ")^2\n";
  } else {
    std::cout << "none within bound " << args.bound << "\n";
  }
  return hit ? kFound : kInconclusive;
}

// ---------------------------------------------------------------------------

struct CounterexamplesArgs {
  std::string alpha;
  long t = 0;
  std::string out;
};

int run_counterexamples(const CounterexamplesArgs& args, const Globals& g) {
  static const std::regex range_re(R"(^(-?[0-9]+)\.\.(-?[0-9]+)$)");
  std::smatch match;
  if (!std::regex_match(args.alpha, match, range_re))
    throw UsageError("--alpha expects <lo>..<hi>, got '" + args.alpha + "'");
  long lo = 0, hi = 0;
  try {
    lo = std::stol(match[1].str());
    hi = std::stol(match[2].str());
  } catch (const std::exception&) {
    throw UsageError("--alpha bounds out of range");
  }
  if (lo > hi) throw UsageError("--alpha range is empty: " + args.alpha);
  if (args.t < 0) throw UsageError("--t must be nonnegative");

  const auto outcomes = build_family_reports(lo, hi, args.t);
  long eligible = 0, ineligible = 0, verified = 0;
  Json reports = Json::array();
  std::vector<std::string> failures;
  for (const FamilyOutcome& o : outcomes) {
    if (!o.candidate.square_free) {
      ++ineligible;
      continue;
    }
    ++eligible;
    if (o.report) {
      if (o.report->verified) ++verified;
      reports.push_back(json::report(*o.report));
    } else {
      failures.push_back("alpha " + to_string(o.candidate.alpha) + ": " + o.error);
    }
  }
  Json summary;
  summary["alpha_lo"] = lo;
  summary["alpha_hi"] = hi;
  summary["t"] = args.t;
  summary["eligible"] = eligible;
  summary["ineligible"] = ineligible;
  summary["verified"] = verified;

  if (!args.out.empty()) {
    std::ofstream file(args.out);
    if (!file) throw UsageError("cannot open --out file '" + args.out + "'");
    for (const Json& r : reports) file << r.dump() << "\n";
  }

  if (g.json()) {
    Json j;
    if (args.out.empty()) j["reports"] = reports;
    else j["out"] = args.out;
    j["summary"] = summary;
    emit(j);
  } else {
    for (const FamilyOutcome& o : outcomes) {
      std::cout << "alpha " << o.candidate.alpha << "  d = " << o.candidate.d;
      if (!o.candidate.square_free) std::cout << "  ineligible (not square-free)\n";
      else if (o.report)
        std::cout << "  n = " << format_quadint(o.report->n) << "  "
                  << (o.report->verified ? "verified" : "NOT verified") << "\n";
      else std::cout << "  failed: " << o.error << "\n";
    }
    std::cout << "eligible " << eligible << ", ineligible " << ineligible << ", verified "
              << verified << "\n";
  }
  for (const std::string& f : failures) std::cerr << "error: " << f << "\n";
  return verified == eligible ? kOk : kFound;
}

void apply_seed_from_env() {
  const char* seed = std::getenv("QUADTUPLE_RHO_SEED");
  if (seed == nullptr || *seed == '\0') return;
  try {
    set_rho_seed(std::stoull(seed));
  } catch (const std::exception&) {
    throw UsageError(std::string("QUADTUPLE_RHO_SEED is not an unsigned integer: ") + seed);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diophantine quadruples with property D(n) in Z[sqrt(d)]"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--allow-nonsquarefree", g.allow_nonsquarefree,
               "Accept radicands that are not square-free");

  PellArgs pell;
  auto* pell_cmd = app.add_subcommand("pell", "Solve x^2 - d*y^2 = N");
  pell_cmd->add_option("--d", pell.d, "Radicand")->required();
  pell_cmd->add_option("--norm", pell.norm, "Target norm N")->required();
  pell_cmd->add_option("--limit", pell.limit, "Number of solutions to list");

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build a D(4m+2+4k*sqrt(d)) quadruple");
  construct_cmd->add_option("--d", construct.d, "Radicand")->required();
  construct_cmd->add_option("--m", construct.m, "m")->required();
  construct_cmd->add_option("--k", construct.k, "k")->required();
  construct_cmd->add_option("--unit-index", construct.unit_index, "Index into the unit schedule");
  construct_cmd->add_option("--factorization", construct.factorization, "first|second")
      ->check(CLI::IsMember({"first", "second"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a D(n) quadruple");
  verify_cmd->add_option("--d", verify.d, "Radicand")->required();
  verify_cmd->add_option("--n", verify.n, "n as a,b")->required();
  verify_cmd->add_option("--elements", verify.elements, "Four elements a,b")->required();
  verify_cmd->add_option("--witnesses", verify.witnesses, "Six roots for pairs 12 13 14 23 24 34");

  CheckReprArgs checkrepr;
  auto* checkrepr_cmd = app.add_subcommand("checkrepr", "Is n a difference of two squares?");
  checkrepr_cmd->add_option("--d", checkrepr.d, "Radicand")->required();
  checkrepr_cmd->add_option("--n", checkrepr.n, "n as a,b")->required();
  checkrepr_cmd->add_option("--bound", checkrepr.bound, "Coordinate bound for the search");
  checkrepr_cmd->add_flag("--parity-pruning", checkrepr.parity_pruning,
                          "Skip y1 + y2 even (certified shape only)");

  CounterexamplesArgs cx;
  auto* cx_cmd = app.add_subcommand("counterexamples", "Counterexample reports over the d family");
  cx_cmd->add_option("--alpha", cx.alpha, "Range lo..hi")->required();
  cx_cmd->add_option("--t", cx.t, "Exponent t in n = 2 eps^(2t)");
  cx_cmd->add_option("--out", cx.out, "Write reports as JSON lines to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    apply_seed_from_env();
    if (*pell_cmd) return run_pell(pell, g);
    if (*construct_cmd) return run_construct(construct, g);
    if (*verify_cmd) return run_verify(verify, g);
    if (*checkrepr_cmd) return run_checkrepr(checkrepr, g);
    if (*cx_cmd) return run_counterexamples(cx, g);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NonSquareFreeError& e) {
    std::cerr << "error: " << e.what() << " (pass --allow-nonsquarefree to override)\n";
    return kBadRing;
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kHypothesis;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFound;
  }
  return kUsage;
}
