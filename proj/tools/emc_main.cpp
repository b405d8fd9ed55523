// emc - exact toolkit for extremal matching numbers of triple systems.
//
// Subcommands:
//   nu FILE          matching number of an edge-list file, with a witness
//   shift FILE       stabilize a family (shift to a fixpoint)
//   verify           compare m(n,s) against max{a(s), b(n,s)}
//   n1               threshold table: exact search vs closed form + bounds
//   facts            batch identity / inequality checks
//   board-check      exhaustive 11-vertex board verification
//
// Exit codes: 0 all checks passed, 1 a violation/counterexample was found
// (witness emitted), 2 usage, input or budget errors.

#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "emc/arith.hpp"
#include "emc/board.hpp"
#include "emc/core.hpp"
#include "emc/extremal.hpp"
#include "emc/matching.hpp"
#include "emc/search.hpp"
#include "emc/shifting.hpp"
#include "emc/version.hpp"
#include "emc/weights.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

json rat_json(const emc::Rat& q) {
  return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

json report_head(const std::string& command) {
  return json{{"command", command}, {"version", emc::kVersion}};
}

int cmd_nu(const std::string& file) {
  emc::TripleSystem f = emc::read_edge_list_file(file);
  emc::Matching w;
  int k = emc::nu(emc::MixedFamily::from_system(f), w);
  std::cout << "nu = " << k << "\n";
  for (const emc::SmallSet& m : w.members) std::cout << m.str() << "\n";
  return kExitOk;
}

int cmd_shift(const std::string& file, const std::string& out) {
  emc::TripleSystem f = emc::read_edge_list_file(file);
  emc::TripleSystem g = emc::stabilize(f);
  if (out.empty()) {
    emc::write_edge_list(std::cout, g);
  } else {
    emc::write_edge_list_file(out, g);
    std::cerr << "stabilized " << f.size() << " edges -> " << out << "\n";
  }
  return kExitOk;
}

int cmd_verify(int n, int s, const std::string& mode, bool one,
               bool force_budget, bool as_json,
               const std::string& witness_out) {
  Timer timer;
  if (n < 3 * s + 2) {
    std::cerr << "error: verify needs n >= 3s+2 (below that every family "
                 "fits inside the clique construction)\n";
    return kExitError;
  }
  long long m = 0;
  emc::TripleSystem witness;
  std::uint64_t nodes = 0;
  if (mode == "brute") {
    emc::BruteForceTable t = emc::m_bruteforce(n);
    if (s >= static_cast<int>(t.m.size())) {
      std::cerr << "error: no family on " << n << " vertices has matching number "
                << s << "\n";
      return kExitError;
    }
    m = t.m[s];
    emc::SearchResult sr =
        emc::m_shifted(n, s, false, emc::SearchLimits{.force = true});
    witness = sr.witness;  // brute force confirms the value; stable witness
    nodes = 1ULL << (n >= 3 ? emc::all_triples(n).size() : 0);
  } else if (mode == "shifted") {
    emc::SearchLimits lim;
    lim.force = force_budget;
    emc::SearchResult sr = emc::m_shifted(n, s, one, lim);
    m = sr.m;
    witness = sr.witness;
    nodes = sr.nodes_explored;
  } else {
    std::cerr << "error: --mode must be brute or shifted\n";
    return kExitError;
  }
  emc::Int big_m = emc::M_of(n, s);
  bool equal = (emc::Int(static_cast<long>(m)) == big_m);
  bool exceeded = (emc::Int(static_cast<long>(m)) > big_m);
  if (!witness_out.empty()) emc::write_edge_list_file(witness_out, witness);
  if (as_json) {
    json j = report_head("verify");
    j["n"] = n;
    j["s"] = s;
    j["mode"] = mode;
    j["one"] = one;
    j["m"] = std::to_string(m);
    j["M"] = big_m.get_str();
    j["equal"] = equal;
    j["nodes"] = nodes;
    if (!witness_out.empty()) j["witness_file"] = witness_out;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "m" << (one ? "_ONE" : "") << "(" << n << "," << s
              << ") = " << m << "  M = " << big_m.get_str() << "  "
              << (exceeded ? "COUNTEREXAMPLE"
                           : (equal ? "OK" : "OK (strict, ONE-restricted)"))
              << "  [" << timer.ms() << " ms]\n";
    if (exceeded) {
      std::cout << "witness:\n";
      emc::write_edge_list(std::cout, witness);
    }
  }
  return exceeded ? kExitViolation : kExitOk;
}

int cmd_n1(long s_max, bool as_json) {
  json rows = json::array();
  bool all_ok = true;
  long prev = 0;
  for (long s = 1; s <= s_max; ++s) {
    long exact = emc::n1_exact(s);
    long formula = emc::n1_formula(s);
    emc::N1Bounds b = emc::n1_bounds_check(s);
    bool ok = exact == formula && b.upper && b.lower && (s < 2 || b.gap);
    all_ok = all_ok && ok;
    if (as_json) {
      rows.push_back(json{{"s", s},
                          {"n1", exact},
                          {"formula", formula},
                          {"bounds_ok", json::array({b.upper, b.lower,
                                                     s < 2 ? true : b.gap})}});
    } else {
      std::cout << "s=" << s << "  n1=" << exact << "  formula=" << formula
                << "  bounds=" << (b.upper ? "U" : "u")
                << (b.lower ? "L" : "l")
                << (s < 2 ? "-" : (b.gap ? "G" : "g"))
                << (ok ? "" : "  MISMATCH") << "\n";
    }
    prev = exact;
  }
  (void)prev;
  if (as_json) {
    json j = report_head("n1");
    j["s_max"] = s_max;
    j["rows"] = rows;
    j["all_ok"] = all_ok;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (all_ok ? "all rows consistent" : "MISMATCH found") << "\n";
  }
  return all_ok ? kExitOk : kExitViolation;
}

int cmd_facts(long s_max, bool weights, bool as_json) {
  Timer timer;
  json checks;
  bool all_ok = true;
  auto put = [&](const std::string& name, bool ok, const std::string& detail) {
    checks[name] = json{{"ok", ok}, {"detail", detail}};
    all_ok = all_ok && ok;
    if (!as_json)
      std::cout << (ok ? "  ok    " : "  FAIL  ") << name << "  (" << detail
                << ")\n";
  };

  {
    bool ok = true;
    long bad = 0;
    for (long s = 1; s <= s_max && ok; ++s)
      if (emc::n1_formula(s) != emc::n1_exact(s)) {
        ok = false;
        bad = s;
      }
    put("n1-formula-vs-search", ok,
        ok ? "s = 1.." + std::to_string(s_max)
           : "first mismatch at s = " + std::to_string(bad));
  }
  {
    long bad = emc::n1_bounds_sweep(s_max);
    put("n1-threshold-bounds", bad == 0,
        bad == 0 ? "s = 1.." + std::to_string(s_max)
                 : "fails at s = " + std::to_string(bad));
  }
  {
    bool ok = true;
    long s_hi = std::min<long>(s_max, 200);
    for (long s = 1; s <= s_hi && ok; ++s)
      for (long n = 3 * s + 3; n <= 800 && ok; ++n)
        ok = emc::b_recurrence_identity(n, s);
    put("cover-count-recurrence", ok,
        "s <= " + std::to_string(s_hi) + ", n <= 800");
  }
  put("prefix-depth-bound", emc::prefix_depth_bound_check(s_max),
      "s <= " + std::to_string(s_max));
  {
    bool ok = true;
    for (long s = 3; s <= s_max && ok; ++s) ok = emc::narrow_swap_bound_ok(s);
    put("narrow-swap-bound", ok, "s = 3.." + std::to_string(s_max));
  }
  {
    bool ok = true;
    for (long s = 3; s <= s_max && ok; ++s)
      ok = emc::board::narrow_pair_tradeoff_ok(s);
    put("narrow-pair-tradeoff", ok, "s = 3.." + std::to_string(s_max));
  }
  {
    long first = 0;
    for (long s = 3; s <= std::max<long>(s_max, 30); ++s)
      if (emc::board::pair_budget_ok(12, 9, s)) {
        first = s;
        break;
      }
    put("pair-budget(12,9)", first == 14,
        "first true at s = " + std::to_string(first));
  }
  {
    long first = 0;
    for (long s = 3; s <= std::max<long>(s_max, 30); ++s)
      if (emc::board::full_pair_tradeoff_ok(s)) {
        first = s;
        break;
      }
    bool mono = true;
    for (long s = first; s <= s_max && mono; ++s)
      mono = emc::board::full_pair_tradeoff_ok(s);
    put("full-pair-tradeoff", first != 0 && first <= 25 && mono,
        "first true at s = " + std::to_string(first));
  }
  if (weights) {
    bool ok = true;
    long s_hi = std::min<long>(s_max, 1000);
    for (long s = 3; s <= s_hi && ok; ++s)
      ok = emc::Rat(emc::binom(s, 3)) * emc::W_complete(s) ==
           emc::Rat(emc::a_of(s));
    put("board-weight-identity", ok,
        "C(s,3)*W = a(s) for s = 3.." + std::to_string(s_hi));
    if (!as_json)
      std::cout << "  W(25) = " << emc::rat_str(emc::W_complete(25)) << "\n";
  }

  if (as_json) {
    json j = report_head("facts");
    j["s_max"] = s_max;
    j["weights"] = weights;
    j["checks"] = checks;
    j["all_ok"] = all_ok;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (all_ok ? "all checks passed" : "CHECK FAILED") << "  ["
              << timer.ms() << " ms]\n";
  }
  return all_ok ? kExitOk : kExitViolation;
}

json board_report_json(const emc::board::CaseReport& r) {
  json j;
  j["s"] = r.s;
  if (r.mode == emc::board::WeightMode::ExactN)
    j["n"] = r.n;
  else
    j["n"] = nullptr;
  j["mode"] = r.mode == emc::board::WeightMode::ExactN ? "exact" : "bound";
  j["verified"] = r.verified;
  j["max_weight"] = rat_json(r.max_weight);
  j["W"] = rat_json(r.total_weight_W);
  j["configs_explored"] = r.configs_explored;
  if (r.witness) {
    json ms = json::array();
    for (const auto& m : r.witness->members) ms.push_back(m.str());
    j["witness"] = ms;
  }
  return j;
}

int cmd_board(long s_min, long s_max, const std::string& mode, bool as_json,
              int threads) {
  Timer timer;
  if (s_min < 4 || s_max < s_min) {
    std::cerr << "error: need 4 <= s-min <= s-max\n";
    return kExitError;
  }
  if (mode != "exact" && mode != "bound") {
    std::cerr << "error: --mode must be exact or bound\n";
    return kExitError;
  }
  struct Job {
    long s;
    emc::board::WeightMode mode;
    long n;
  };
  std::vector<Job> jobs;
  for (long s = s_min; s <= s_max; ++s) {
    if (mode == "bound") {
      jobs.push_back({s, emc::board::WeightMode::BoundForm, 0});
    } else {
      long n1 = emc::n1_exact(s);
      jobs.push_back({s, emc::board::WeightMode::ExactN, n1 - 1});
      jobs.push_back({s, emc::board::WeightMode::ExactN, n1});
    }
  }
  std::vector<emc::board::CaseReport> reports(jobs.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i)
      reports[i] =
          emc::board::verify_board_bound(jobs[i].s, jobs[i].mode, jobs[i].n);
  } else {
    std::size_t next = 0;
    while (next < jobs.size()) {
      std::size_t batch =
          std::min<std::size_t>(static_cast<std::size_t>(threads),
                                jobs.size() - next);
      std::vector<std::future<emc::board::CaseReport>> fs;
      for (std::size_t k = 0; k < batch; ++k) {
        Job job = jobs[next + k];
        fs.push_back(std::async(std::launch::async, [job] {
          return emc::board::verify_board_bound(job.s, job.mode, job.n);
        }));
      }
      for (std::size_t k = 0; k < batch; ++k)
        reports[next + k] = fs[k].get();
      next += batch;
    }
  }
  bool all_verified = true;
  json arr = json::array();
  for (const auto& r : reports) {
    all_verified = all_verified && r.verified;
    if (as_json) {
      arr.push_back(board_report_json(r));
    } else {
      std::cout << "s=" << r.s;
      if (r.mode == emc::board::WeightMode::ExactN) std::cout << " n=" << r.n;
      std::cout << " mode="
                << (r.mode == emc::board::WeightMode::ExactN ? "exact"
                                                             : "bound")
                << " verified=" << (r.verified ? "true" : "false")
                << " max=" << emc::rat_str(r.max_weight)
                << " W=" << emc::rat_str(r.total_weight_W)
                << " configs=" << r.configs_explored << "\n";
      if (!r.verified && r.witness) {
        std::cout << "  witness:";
        for (const auto& m : r.witness->members) std::cout << " " << m.str();
        std::cout << "\n";
      }
    }
  }
  if (as_json) {
    json j = report_head("board-check");
    j["s_min"] = s_min;
    j["s_max"] = s_max;
    j["mode"] = mode;
    j["reports"] = arr;
    j["all_verified"] = all_verified;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (all_verified ? "all cases verified" : "VIOLATION found")
              << "  [" << timer.ms() << " ms]\n";
  }
  return all_verified ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact extremal-matching toolkit for triple systems"};
  app.require_subcommand(1);

  std::string nu_file;
  auto* nu_cmd = app.add_subcommand("nu", "matching number of an edge list");
  nu_cmd->add_option("file", nu_file, "edge-list file")->required();

  std::string shift_file, shift_out;
  auto* shift_cmd = app.add_subcommand("shift", "stabilize a family");
  shift_cmd->add_option("file", shift_file, "edge-list file")->required();
  shift_cmd->add_option("-o,--out", shift_out, "output file (default stdout)");

  int v_n = 0, v_s = 0;
  std::string v_mode = "shifted", v_witness;
  bool v_one = false, v_force = false, v_json = false;
  auto* v_cmd = app.add_subcommand("verify", "compare m(n,s) with M(n,s)");
  v_cmd->add_option("--n", v_n, "vertex count")->required();
  v_cmd->add_option("--s", v_s, "matching number")->required();
  v_cmd->add_option("--mode", v_mode, "brute|shifted (default shifted)");
  v_cmd->add_flag("--one", v_one, "restrict to families with property ONE");
  v_cmd->add_flag("--force-budget", v_force, "override the search budget");
  v_cmd->add_flag("--json", v_json, "machine-readable output");
  v_cmd->add_option("--witness-out", v_witness, "write the witness family");

  long n1_smax = 0;
  bool n1_json = false;
  auto* n1_cmd = app.add_subcommand("n1", "threshold table");
  n1_cmd->add_option("--s-max", n1_smax, "largest s")->required();
  n1_cmd->add_flag("--json", n1_json, "machine-readable output");

  long f_smax = 0;
  bool f_weights = false, f_json = false;
  auto* f_cmd = app.add_subcommand("facts", "batch identity checks");
  f_cmd->add_option("--s-max", f_smax, "largest s")->required();
  f_cmd->add_flag("--weights", f_weights, "include board-weight identities");
  f_cmd->add_flag("--json", f_json, "machine-readable output");

  long b_smin = 0, b_smax = 0;
  std::string b_mode = "bound";
  bool b_json = false;
  int b_threads = 1;
  auto* b_cmd = app.add_subcommand("board-check", "11-vertex board verification");
  b_cmd->add_option("--s-min", b_smin, "first s")->required();
  b_cmd->add_option("--s-max", b_smax, "last s")->required();
  b_cmd->add_option("--mode", b_mode, "exact|bound (default bound)");
  b_cmd->add_flag("--json", b_json, "machine-readable output");
  b_cmd->add_option("--threads", b_threads, "parallel s-jobs (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  try {
    if (nu_cmd->parsed()) return cmd_nu(nu_file);
    if (shift_cmd->parsed()) return cmd_shift(shift_file, shift_out);
    if (v_cmd->parsed())
      return cmd_verify(v_n, v_s, v_mode, v_one, v_force, v_json, v_witness);
    if (n1_cmd->parsed()) return cmd_n1(n1_smax, n1_json);
    if (f_cmd->parsed()) return cmd_facts(f_smax, f_weights, f_json);
    if (b_cmd->parsed())
      return cmd_board(b_smin, b_smax, b_mode, b_json, b_threads);
  } catch (const emc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const emc::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
