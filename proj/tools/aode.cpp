// Command-line front end: solve, bound, gen, verify, param-import, implicitize.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <json.hpp>
#include <sstream>

#include "aode/harness.hpp"
#include "aode/parse.hpp"
#include "aode/solver.hpp"

using namespace aode;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kNull = 1, kUnsupported = 2, kInputError = 3, kInternal = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_rational(const SRatFunc& r) {
  for (const auto* p : {&r.num(), &r.den()})
    for (const auto& c : p->coeffs())
      if (!c.is_rational()) return false;
  return true;
}

// Integer-coefficient numerator and denominator when over Q.
std::pair<std::string, std::string> num_den(const SRatFunc& r, const std::string& var) {
  if (is_rational(r)) {
    auto [n, d] = integer_form(to_rational(r));
    return {format_poly(n, var), format_poly(d, var)};
  }
  return {format_poly(r.num(), var), format_poly(r.den(), var)};
}

std::string show(const SRatFunc& r, const std::string& var) {
  return is_rational(r) ? format_ratfunc(to_rational(r), var) : format_ratfunc(r, var);
}

ordered_json scalar_json(const Scalar& s) {
  ordered_json j;
  j["value"] = to_string(s);
  if (!s.is_rational()) j["minimal_polynomial"] = format_poly(minimal_polynomial(s), "c");
  return j;
}

ordered_json report_json(const SolutionReport& r, long long ms) {
  ordered_json j;
  j["status"] = to_string(r.status);
  if (!r.reason.empty()) j["reason"] = r.reason;
  ordered_json sols = ordered_json::array();
  for (const auto& s : r.solutions) {
    auto [n, d] = num_den(s.y, "x");
    sols.push_back({{"num", n}, {"den", d}, {"degree", s.y.degree()}, {"verified", s.verified}, {"family", s.family}});
  }
  j["solutions"] = sols;
  if (r.shift_family_note) j["shift_family"] = "y(x + c) is a strong rational general solution for each listed y";
  j["certificate"] = r.certificate;
  if (r.bound_computed) {
    j["bounds"] = {{"N", r.N}, {"M", r.M}, {"capped", r.capped}};
    ordered_json cs = ordered_json::array();
    if (!r.candidates.finite) {
      j["candidates"] = "all";
    } else {
      for (const auto& c : r.candidates.values) {
        ordered_json e = scalar_json(c.value);
        e["rules"] = c.rules;
        cs.push_back(e);
      }
      j["candidates"] = cs;
    }
    ordered_json tr = ordered_json::array();
    for (const auto& t : r.trace)
      tr.push_back({{"c", to_string(t.c)}, {"DA", t.DA}, {"DB", t.DB}, {"route_a", t.route_a}, {"route_b", t.route_b}});
    j["candidate_trace"] = tr;
  }
  if (r.genus) {
    ordered_json g{{"value", r.genus->genus}, {"supported", r.genus->supported}, {"degree", r.genus->degree}};
    ordered_json pts = ordered_json::array();
    for (const auto& p : r.genus->singular)
      pts.push_back({{"point", to_string(p.coords[0]) + " : " + to_string(p.coords[1]) + " : " + to_string(p.coords[2])},
                     {"multiplicity", p.multiplicity},
                     {"ordinary", p.ordinary},
                     {"conjugates", p.conjugates}});
    g["singular_points"] = pts;
    j["genus"] = g;
  }
  if (r.parametrization)
    j["parametrization"] = {{"p1", show(r.parametrization->p1, "t")},
                            {"p2", show(r.parametrization->p2, "t")},
                            {"source", r.parametrization->source}};
  ordered_json cst;
  cst["all"] = r.constants.all;
  ordered_json roots = ordered_json::array();
  for (const auto& root : r.constants.roots) roots.push_back(scalar_json(root.value));
  cst["roots"] = roots;
  j["constant_solutions"] = cst;
  j["timing_ms"] = ms;
  return j;
}

int exit_code(const SolutionReport& r, bool bound_only) {
  if (bound_only && r.bound_computed) return kOk;
  switch (r.status) {
    case Status::Solved:
      return kOk;
    case Status::Null:
    case Status::ConstantsOnly:
      return kNull;
    case Status::UnsupportedParametrization:
      return kUnsupported;
  }
  return kInternal;
}

int run_solve(const std::string& file, const std::string& pfile, bool bound_only, Search search) {
  const InstanceText inst = parse_instance(read_file(file));
  SolveOptions opt;
  opt.max_degree = max_degree_from_env();
  opt.stop_after_bound = bound_only;
  opt.search = search;
  if (!pfile.empty()) {
    opt.import = parse_parametrization_file(read_file(pfile));
  } else if (inst.has_parametrization) {
    opt.import = std::make_pair(inst.p1, inst.p2);
  }
  const auto t0 = std::chrono::steady_clock::now();
  const SolutionReport r = solve_autonomous(inst.F, opt);
  const auto t1 = std::chrono::steady_clock::now();
  // Re-check every certificate before anything is printed.
  for (const auto& s : r.solutions)
    if (!verify_solution(inst.F, s.y)) throw InvariantViolation("certificate re-check failed for " + show(s.y, "x"));
  if (r.status == Status::Solved && !r.certificate) throw InvariantViolation("Solved report without certificate");
  std::cout << report_json(r, std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()).dump(2) << "\n";
  return exit_code(r, bound_only);
}

int run_verify(const std::string& file, const std::string& candidate) {
  const InstanceText inst = parse_instance(read_file(file));
  const QRatFunc y = parse_ratfunc(candidate, "x");
  const bool ok = verify_solution(inst.F, y);
  ordered_json j{{"candidate", format_ratfunc(y, "x")}, {"verified", ok}};
  std::cout << j.dump(2) << "\n";
  return ok ? kOk : kNull;
}

int run_gen(std::uint64_t seed, int deg) {
  std::cout << format_harness(harness_instance(seed, deg));
  return kOk;
}

int run_implicitize(const std::string& u) {
  std::cout << format_instance(implicitize(parse_ratfunc(u, "x")));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational solutions of autonomous first-order algebraic difference equations F(y(x), y(x+1)) = 0"};
  app.require_subcommand(1);

  std::string file, pfile, candidate, u;
  std::uint64_t seed = 0;
  int deg = 3;
  Search search = Search::Direct;
  const std::map<std::string, Search> searches{{"direct", Search::Direct}, {"parameter", Search::Parameter}};

  auto* solve = app.add_subcommand("solve", "Decide and compute non-constant rational solutions");
  solve->add_option("file", file, "Instance file (F: ... line, optional p1/p2 lines)")->required();
  solve->add_option("--search", search, "Ansatz in y (direct) or in the parameter (parameter)")
      ->transform(CLI::CheckedTransformer(searches, CLI::ignore_case));
  auto* bound = app.add_subcommand("bound", "Stop after the degree bounds N and M");
  bound->add_option("file", file, "Instance file")->required();
  auto* gen = app.add_subcommand("gen", "Print a seeded instance with a planted rational solution");
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("--deg", deg, "Maximal degree of numerator and denominator")->check(CLI::Range(1, 6));
  auto* verify = app.add_subcommand("verify", "Check a candidate solution by substitution");
  verify->add_option("file", file, "Instance file")->required();
  verify->add_option("--candidate", candidate, "Rational function in x")->required();
  auto* pimport = app.add_subcommand("param-import", "Solve with a user-supplied parametrization");
  pimport->add_option("file", file, "Instance file")->required();
  pimport->add_option("--parametrization", pfile, "File with p1 = ... and p2 = ... lines")->required();
  pimport->add_option("--search", search, "Ansatz in y (direct) or in the parameter (parameter)")
      ->transform(CLI::CheckedTransformer(searches, CLI::ignore_case));
  auto* impl = app.add_subcommand("implicitize", "Print the instance whose curve is (u(t), u(t+1))");
  impl->add_option("--u", u, "Rational function in x")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*solve) return run_solve(file, "", false, search);
    if (*bound) return run_solve(file, "", true, search);
    if (*gen) return run_gen(seed, deg);
    if (*verify) return run_verify(file, candidate);
    if (*pimport) return run_solve(file, pfile, false, search);
    if (*impl) return run_implicitize(u);
  } catch (const InputError& e) {
    std::cerr << "input error";
    if (e.line()) std::cerr << " at line " << e.line() << ", column " << e.column();
    std::cerr << ": " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
