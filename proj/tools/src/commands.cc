// Copyright 2026 The gsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gsp/cli/commands.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "gsp/bounds.h"
#include "gsp/enumerate.h"
#include "gsp/error.h"
#include "gsp/oracle.h"
#include "gsp/qsim/algorithms.h"
#include "gsp/solvers.h"

namespace gsp::cli {

namespace {

// Oracle calls allowed per unit of n-k for the quantum solver.
constexpr std::uint64_t kQuantumCallsPerRank = 8;

struct InstanceArgs {
  std::string in;
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> label_seed;
  int obfuscate = 1;

  void attach(CLI::App* app) {
    app->add_option("--in", in, "instance file written by gen");
    app->add_option("--p", p, "prime modulus");
    app->add_option("--n", n, "dimension");
    app->add_option("--k", k, "rank of the hidden subgroup");
    app->add_option("--seed", seed, "subgroup seed");
    app->add_option("--label-seed", label_seed, "label obfuscation seed (default: --seed)");
    app->add_option("--obfuscate", obfuscate, "obfuscate labels")->check(CLI::Range(0, 1));
  }

  HiddenInstance load() const {
    if (!in.empty()) {
      std::ifstream f(in);
      if (!f) throw ParameterError("cannot read instance file '" + in + "'");
      return read_instance(f);
    }
    if (p == 0 || n == 0) throw ParameterError("need --in or --p, --n and --k");
    return HiddenInstance::generate(Modulus(p), n, k, seed, label_seed.value_or(seed), obfuscate != 0);
  }
};

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ParameterError("cannot write '" + path + "'");
  return f;
}

void report_solution(std::ostream& out, const SolverResult& r) {
  out << "recovered " << r.recovered.serialize() << '\n';
  out << "queries " << r.queries << '\n';
}

void report_bound(std::ostream& out, std::uint64_t queries, std::uint64_t bound,
                  std::string_view rel = "<=") {
  const bool ok = rel == "<=" ? queries <= bound : queries == bound;
  out << "bound " << bound << '\n';
  out << "verdict " << (ok ? "PASS" : "FAIL") << " queries " << rel << ' ' << bound << '\n';
}

int report_check(std::ostream& out, bool enabled, const HiddenInstance& inst, const Subgroup& got) {
  if (!enabled) return kExitOk;
  const bool ok = got == inst.secret();
  out << "check " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

void write_trace_file(const std::string& path, const std::vector<TraceEntry>& trace) {
  if (path.empty()) return;
  auto f = open_out(path);
  write_trace(f, trace);
}

std::uint64_t birthday_budget(std::uint32_t p, std::size_t n, std::size_t k, double mult) {
  const double work = static_cast<double>(k) * std::pow(static_cast<double>(p), double(n - k));
  return static_cast<std::uint64_t>(std::ceil(mult * std::sqrt(work)));
}

// ---- bench ----

struct BenchArgs {
  std::string p = "2";
  std::string n = "3..8";
  std::string k;
  std::uint64_t seeds = 20;
  std::string solver = "det";
  std::optional<std::size_t> d;
  std::string csv;
  std::size_t threads = 1;
  bool no_wall = false;
  double multiplier = 4.0;
  int obfuscate = 1;
};

struct Cell {
  std::uint32_t p;
  std::size_t n;
  std::size_t k;
};

struct Job {
  Cell cell;
  std::uint64_t seed;
};

const std::vector<std::string> kSolvers = {"det", "brute", "birthday", "quantum"};

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<BenchRow> run_job(const Job& job, const std::vector<std::string>& solvers,
                              const BenchArgs& args) {
  const auto [p, n, k] = job.cell;
  const Modulus m(p);
  const HiddenInstance inst = HiddenInstance::generate(m, n, k, job.seed, job.seed, args.obfuscate != 0);
  std::vector<BenchRow> rows;
  for (const auto& name : solvers) {
    BenchRow row{p, n, k, 0, name, job.seed};
    const auto t0 = std::chrono::steady_clock::now();
    if (name == "det") {
      row.d = args.d.value_or(choose_d(p, n, k));
      QueryLog log(inst);
      const auto r = find_s(log, row.d);
      row.queries = r.queries;
      row.recovered_ok = r.recovered == inst.secret();
      row.bound = det_query_bound(p, n, k, row.d);
    } else if (name == "brute") {
      QueryLog log(inst);
      const auto r = brute_force_solve(log);
      row.queries = r.queries;
      row.recovered_ok = r.recovered == inst.secret();
      row.bound = *checked_pow(p, n);
    } else if (name == "birthday") {
      QueryLog log(inst);
      const auto r = birthday_solve(log, job.seed, args.multiplier);
      row.queries = r.run.queries;
      row.recovered_ok = r.success && r.run.recovered == inst.secret();
      row.bound = birthday_budget(p, n, k, args.multiplier);
    } else {
      qsim::QCounter counter;
      qsim::QuantumOptions opts;
      opts.measure_seed = job.seed;
      const auto r = qsim::quantum_find_s(inst, counter, opts);
      row.queries = r.solve.queries;
      row.recovered_ok = r.solve.recovered == inst.secret();
      row.bound = kQuantumCallsPerRank * (n - k);
    }
    row.wall_ms = args.no_wall ? 0.0 : elapsed_ms(t0);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Solvers that can run on a cell, plus a reason for each one that cannot.
std::vector<std::string> feasible_solvers(const Cell& c, const std::vector<std::string>& wanted,
                                          const BenchArgs& args, std::vector<std::string>& skipped) {
  std::vector<std::string> out;
  const auto order = checked_pow(c.p, c.n);
  for (const auto& s : wanted) {
    std::string why;
    if (!order) {
      why = "p^n overflows";
    } else if (s == "brute" && *order > kDefaultEnumerationCap) {
      why = "p^n exceeds the enumeration cap";
    } else if (s == "quantum" && *order > qsim::QuantumOptions{}.max_group_order) {
      why = "p^n exceeds the simulation budget";
    } else if (s == "det" && args.d && *args.d > c.n - c.k) {
      why = "d exceeds n-k";
    } else if (s == "det" && !checked_pow(c.p, c.n - c.k)) {
      why = "p^(n-k) overflows";
    }
    if (why.empty()) {
      out.push_back(s);
    } else {
      skipped.push_back("warning: skipped p=" + std::to_string(c.p) + " n=" + std::to_string(c.n) +
                        " k=" + std::to_string(c.k) + " solver=" + s + ": " + why);
    }
  }
  return out;
}

void print_summaries(std::ostream& os, const std::vector<Cell>& cells,
                     const std::vector<std::string>& solvers, const std::vector<BenchRow>& rows) {
  for (const auto& c : cells) {
    for (const auto& s : solvers) {
      std::uint64_t count = 0, max_q = 0, ok = 0;
      double sum = 0, worst_ratio = 0;
      for (const auto& r : rows) {
        if (r.p != c.p || r.n != c.n || r.k != c.k || r.solver != s) continue;
        ++count;
        ok += r.recovered_ok;
        max_q = std::max(max_q, r.queries);
        sum += static_cast<double>(r.queries);
        if (r.bound > 0) worst_ratio = std::max(worst_ratio, double(r.queries) / double(r.bound));
      }
      if (count == 0) continue;
      os << "summary p=" << c.p << " n=" << c.n << " k=" << c.k << " solver=" << s
         << " runs=" << count << " ok=" << ok << " max_queries=" << max_q << std::fixed
         << std::setprecision(3) << " mean_queries=" << sum / double(count)
         << " max_ratio=" << worst_ratio << std::defaultfloat << '\n';
    }
  }
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> solvers;
  if (args.solver == "all") {
    solvers = kSolvers;
  } else if (std::find(kSolvers.begin(), kSolvers.end(), args.solver) != kSolvers.end()) {
    solvers = {args.solver};
  } else {
    throw ParameterError("unknown solver '" + args.solver + "'");
  }
  if (args.threads == 0) throw ParameterError("--threads must be positive");

  std::vector<Cell> cells;
  for (auto p : parse_list(args.p)) {
    static_cast<void>(Modulus(static_cast<std::uint32_t>(p)));
    for (auto n : parse_list(args.n)) {
      if (n > kMaxDimension) throw ParameterError("n must be at most 64");
      std::vector<std::uint64_t> ks;
      if (args.k.empty()) {
        for (std::uint64_t k = 1; k < n; ++k) ks.push_back(k);
      } else {
        for (auto k : parse_list(args.k)) {
          if (k >= 1 && k < n) ks.push_back(k);
        }
      }
      for (auto k : ks) cells.push_back({static_cast<std::uint32_t>(p), n, k});
    }
  }

  std::vector<Job> jobs;
  std::vector<std::vector<std::string>> job_solvers;
  std::vector<std::string> warnings;
  for (const auto& c : cells) {
    const auto usable = feasible_solvers(c, solvers, args, warnings);
    if (usable.empty()) continue;
    for (std::uint64_t s = 0; s < args.seeds; ++s) {
      jobs.push_back({c, s});
      job_solvers.push_back(usable);
    }
  }

  std::vector<std::vector<BenchRow>> results(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        results[i] = run_job(jobs[i], job_solvers[i], args);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const std::size_t width = std::min(args.threads, std::max<std::size_t>(jobs.size(), 1));
    for (std::size_t t = 0; t < width; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw Error("bench job failed: " + e);
  }

  std::vector<BenchRow> rows;
  for (auto& r : results) rows.insert(rows.end(), r.begin(), r.end());

  std::ofstream file;
  std::ostream* csv = &out;
  std::ostream* notes = &err;
  if (!args.csv.empty()) {
    file = open_out(args.csv);
    csv = &file;
    notes = &out;
  }
  *csv << kBenchHeader << '\n';
  for (const auto& r : rows) *csv << to_csv(r) << '\n';
  for (const auto& w : warnings) err << w << '\n';
  print_summaries(*notes, cells, solvers, rows);
  return kExitOk;
}

// ---- verify-bounds ----

int cmd_verify_bounds(const std::string& p_list, const std::string& n_list,
                      const std::string& k_list, std::uint64_t enum_cap, std::ostream& out) {
  out << "p n k t1 t2 lower_adaptive lower_nonadaptive upper_det best_d enum_t1 enum_t2 verdict\n";
  bool all_ok = true;
  for (auto p64 : parse_list(p_list)) {
    const auto p = static_cast<std::uint32_t>(p64);
    const Modulus m(p);
    for (auto n : parse_list(n_list)) {
      std::vector<std::uint64_t> ks;
      if (k_list.empty()) {
        for (std::uint64_t k = 1; k < n; ++k) ks.push_back(k);
      } else {
        for (auto k : parse_list(k_list)) {
          if (k >= 1 && k < n) ks.push_back(k);
        }
      }
      for (auto k : ks) {
        const auto r = bound_report(p, n, k);
        std::string e1 = "-", e2 = "-", verdict = "skipped";
        const auto order = checked_pow(p, n);
        if (order && *order <= enum_cap) {
          std::uint64_t c1 = 0, c2 = 0;
          const VectorP e = VectorP::unit(m, n, n - 1);
          for_each_subgroup(
              m, n, k,
              [&](const Subgroup& h) {
                ++c1;
                c2 += contains(h, e);
                return true;
              },
              enum_cap);
          e1 = std::to_string(c1);
          e2 = std::to_string(c2);
          const bool ok = r.t1 == c1 && r.t2 == c2;
          verdict = ok ? "ok" : "MISMATCH";
          all_ok = all_ok && ok;
        }
        out << p << ' ' << n << ' ' << k << ' ' << r.t1 << ' ' << r.t2 << ' ' << std::fixed
            << std::setprecision(3) << r.lower_adaptive << ' ' << r.lower_nonadaptive
            << std::defaultfloat << ' ' << r.upper_det << ' ' << r.best_d << ' ' << e1 << ' '
            << e2 << ' ' << verdict << '\n';
      }
    }
  }
  return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::vector<std::uint64_t> parse_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    if (s.empty()) throw ParameterError("bad list '" + std::string(text) + "'");
    for (char c : s) {
      if (c < '0' || c > '9') throw ParameterError("bad list '" + std::string(text) + "'");
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
  };
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto part = text.substr(start, end - start);
    if (const auto dots = part.find(".."); dots != std::string_view::npos) {
      const auto lo = number(part.substr(0, dots));
      const auto hi = number(part.substr(dots + 2));
      for (auto v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(number(part));
    }
    start = end + 1;
  }
  return out;
}

std::string to_csv(const BenchRow& r) {
  std::ostringstream os;
  os << r.p << ',' << r.n << ',' << r.k << ',' << r.d << ',' << r.solver << ',' << r.seed << ','
     << r.queries << ',' << (r.recovered_ok ? "true" : "false") << ',' << r.bound << ','
     << std::fixed << std::setprecision(3) << r.wall_ms;
  return os.str();
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hidden subgroup recovery over Z_p^n", "gsp"};
  app.require_subcommand(1);

  // gen
  InstanceArgs gen_args;
  std::string gen_out;
  bool reveal = false;
  auto* gen = app.add_subcommand("gen", "write a random instance");
  gen->add_option("--p", gen_args.p, "prime modulus")->required();
  gen->add_option("--n", gen_args.n, "dimension")->required();
  gen->add_option("--k", gen_args.k, "rank of the hidden subgroup")->required();
  gen->add_option("--seed", gen_args.seed, "subgroup seed");
  gen->add_option("--label-seed", gen_args.label_seed, "label seed (default: --seed)");
  gen->add_option("--obfuscate", gen_args.obfuscate, "obfuscate labels")->check(CLI::Range(0, 1));
  gen->add_option("--out", gen_out, "output file (default: stdout)");
  gen->add_flag("--reveal", reveal, "print the secret subgroup");

  // solve
  InstanceArgs solve_args;
  std::optional<std::size_t> solve_d;
  bool solve_check = false, strict = false;
  std::string trace_path;
  auto* solve = app.add_subcommand("solve", "deterministic classical solver");
  solve_args.attach(solve);
  solve->add_option("--d", solve_d, "rank of the second search group (default: choose_d)");
  solve->add_flag("--check", solve_check, "compare against the secret; exit 4 on mismatch");
  solve->add_option("--trace", trace_path, "write the query trace");
  solve->add_flag("--strict-count", strict, "count every oracle call");

  // qsolve
  InstanceArgs q_args;
  std::uint64_t measure_seed = 0;
  std::string dump_path;
  bool q_check = false;
  auto* qsolve = app.add_subcommand("qsolve", "exact quantum solver (simulated)");
  q_args.attach(qsolve);
  qsolve->add_option("--measure-seed", measure_seed, "seed for measurement outcomes");
  qsolve->add_option("--dump-state", dump_path, "write pre-measurement states");
  qsolve->add_flag("--check", q_check, "compare against the secret; exit 4 on mismatch");

  // brute
  InstanceArgs b_args;
  bool b_check = false, b_strict = false;
  std::string b_trace;
  auto* brute = app.add_subcommand("brute", "query every element");
  b_args.attach(brute);
  brute->add_flag("--check", b_check, "compare against the secret; exit 4 on mismatch");
  brute->add_option("--trace", b_trace, "write the query trace");
  brute->add_flag("--strict-count", b_strict, "count every oracle call");

  // birthday
  InstanceArgs bd_args;
  std::uint64_t sample_seed = 0;
  double multiplier = 4.0;
  bool bd_check = false;
  std::string bd_trace;
  auto* birthday = app.add_subcommand("birthday", "random-sampling collision baseline");
  bd_args.attach(birthday);
  birthday->add_option("--sample-seed", sample_seed, "sampling seed");
  birthday->add_option("--multiplier", multiplier, "budget multiplier")->check(CLI::NonNegativeNumber);
  birthday->add_flag("--check", bd_check, "compare against the secret; exit 4 on mismatch");
  birthday->add_option("--trace", bd_trace, "write the query trace");

  // bench
  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "run a parameter grid and write CSV");
  bench->add_option("--p", bench_args.p, "primes, e.g. 2,3 or 2..5");
  bench->add_option("--n", bench_args.n, "dimensions, e.g. 3..8");
  bench->add_option("--k", bench_args.k, "ranks (default: 1..n-1)");
  bench->add_option("--seeds", bench_args.seeds, "seeds per cell");
  bench->add_option("--solver", bench_args.solver, "all|det|brute|birthday|quantum");
  bench->add_option("--d", bench_args.d, "fixed d for det (default: choose_d)");
  bench->add_option("--csv", bench_args.csv, "CSV output file (default: stdout)");
  bench->add_option("--threads", bench_args.threads, "worker threads");
  bench->add_flag("--no-wall", bench_args.no_wall, "write 0 for wall_ms");
  bench->add_option("--multiplier", bench_args.multiplier, "birthday budget multiplier");
  bench->add_option("--obfuscate", bench_args.obfuscate, "obfuscate labels")->check(CLI::Range(0, 1));

  // verify-bounds
  std::string vb_p = "2,3", vb_n = "2..4", vb_k;
  std::uint64_t vb_cap = 1u << 12;
  auto* verify = app.add_subcommand("verify-bounds", "print bound formulas and enumeration checks");
  verify->add_option("--p", vb_p, "primes");
  verify->add_option("--n", vb_n, "dimensions");
  verify->add_option("--k", vb_k, "ranks (default: 1..n-1)");
  verify->add_option("--cap", vb_cap, "largest p^n to enumerate");

  std::vector<std::string> args(argv.rbegin(), argv.rend() - 1);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  }

  try {
    if (*gen) {
      const auto inst = gen_args.load();
      if (gen_out.empty()) {
        out << inst.to_text();
      } else {
        auto f = open_out(gen_out);
        write_instance(f, inst);
      }
      if (reveal) out << "secret " << inst.secret().serialize() << '\n';
      return kExitOk;
    }
    if (*solve) {
      const auto inst = solve_args.load();
      const std::size_t d = solve_d.value_or(choose_d(inst.p(), inst.n(), inst.k()));
      QueryLog log(inst, strict ? CountMode::kStrict : CountMode::kDedup, !trace_path.empty());
      const auto r = find_s(log, d);
      report_solution(out, r);
      out << "d " << r.d_used << '\n';
      report_bound(out, r.queries, det_query_bound(inst.p(), inst.n(), inst.k(), d));
      write_trace_file(trace_path, r.trace);
      return report_check(out, solve_check, inst, r.recovered);
    }
    if (*qsolve) {
      const auto inst = q_args.load();
      std::ofstream dump;
      if (!dump_path.empty()) dump = open_out(dump_path);
      qsim::QCounter counter;
      qsim::QuantumOptions opts;
      opts.measure_seed = measure_seed;
      opts.dump = dump_path.empty() ? nullptr : &dump;
      const auto r = qsim::quantum_find_s(inst, counter, opts);
      out << "recovered " << r.solve.recovered.serialize() << '\n';
      out << "oracle_calls " << r.solve.queries << '\n';
      out << "rounds " << r.rounds.size() << '\n';
      double worst = 0;
      for (const auto& round : r.rounds) worst = std::max(worst, round.bad_amplitude);
      out << "max_bad_amplitude " << worst << '\n';
      report_bound(out, r.solve.queries, kQuantumCallsPerRank * (inst.n() - inst.k()));
      return report_check(out, q_check, inst, r.solve.recovered);
    }
    if (*brute) {
      const auto inst = b_args.load();
      QueryLog log(inst, b_strict ? CountMode::kStrict : CountMode::kDedup, !b_trace.empty());
      const auto r = brute_force_solve(log);
      report_solution(out, r);
      report_bound(out, r.queries, *checked_pow(inst.p(), inst.n()), "=");
      write_trace_file(b_trace, r.trace);
      return report_check(out, b_check, inst, r.recovered);
    }
    if (*birthday) {
      const auto inst = bd_args.load();
      QueryLog log(inst, CountMode::kDedup, !bd_trace.empty());
      const auto r = birthday_solve(log, sample_seed, multiplier);
      report_solution(out, r.run);
      out << "success " << (r.success ? "yes" : "no") << '\n';
      report_bound(out, r.run.queries, birthday_budget(inst.p(), inst.n(), inst.k(), multiplier));
      write_trace_file(bd_trace, r.run.trace);
      return report_check(out, bd_check, inst, r.run.recovered);
    }
    if (*bench) return cmd_bench(bench_args, out, err);
    if (*verify) return cmd_verify_bounds(vb_p, vb_n, vb_k, vb_cap, out);
  } catch (const PromiseViolation& e) {
    err << "promise violation: " << e.what() << '\n';
    return kExitPromise;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  }
  return kExitParameter;
}

}  // namespace gsp::cli
