// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every command is deterministic given its full flag
// set: primary output files are byte-identical across reruns, timestamps are
// quarantined into "<output>.meta.json" side files. Exit codes: 0 success or
// verified, 1 verification failed, 2 usage or input error, 3 extraction
// shortfall (result still written).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "rota/coupling.hpp"
#include "rota/extractor.hpp"
#include "rota/instance_io.hpp"
#include "rota/probability.hpp"

namespace {

using nlohmann::json;
using namespace rota;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitShortfall = 3;

// Relative output paths land under $ROTA_OUT_DIR when it is set.
std::string resolve_out(const std::string& path) {
  const char* dir = std::getenv("ROTA_OUT_DIR");
  std::filesystem::path p(path);
  if (dir != nullptr && *dir != '\0' && p.is_relative()) {
    p = std::filesystem::path(dir) / p;
  }
  if (p.has_parent_path()) {
    std::filesystem::create_directories(p.parent_path());
  }
  return p.string();
}

// The primary file stays timestamp-free; the side file takes the clock.
void write_primary(const std::string& path, const std::string& content,
                   const std::string& command) {
  const std::string resolved = resolve_out(path);
  write_text_file(resolved, content);
  const std::time_t now = std::time(nullptr);
  char stamp[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  json meta;
  meta["command"] = command;
  meta["written_at"] = stamp;
  write_text_file(resolved + ".meta.json", canonical_dump(meta) + "\n");
}

struct SweepRow {
  unsigned long n, k, alpha;
  BigRat q, bound, qn;
  bool holds;
};

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,k,alpha,q_exact,q_exact_decimal,q_upper_bound,q_upper_bound_decimal,"
         "qn_sum,qn_sum_decimal,bound_holds\n";
  for (const SweepRow& r : rows) {
    out << r.n << ',' << r.k << ',' << r.alpha << ',' << r.q.fraction_string() << ','
        << r.q.decimal_string(30) << ',' << r.bound.fraction_string() << ','
        << r.bound.decimal_string(30) << ',' << r.qn.fraction_string() << ','
        << r.qn.decimal_string(30) << ',' << (r.holds ? "true" : "false") << '\n';
  }
  return std::move(out).str();
}

int run_gen(unsigned long n, unsigned long p, std::uint64_t seed, const std::string& out_path) {
  const Instance inst = random_instance(n, static_cast<std::uint32_t>(p), seed);
  const json j = instance_to_json(inst);
  write_primary(out_path, canonical_dump(j) + "\n", "gen");
  std::printf("instance n=%lu p=%lu seed=%llu digest=%s\n", n, p,
              static_cast<unsigned long long>(seed), json_digest(j).c_str());
  return kExitOk;
}

int run_extract(const std::string& instance_path, std::optional<unsigned long> alpha,
                std::optional<unsigned long> m, unsigned long max_rounds, std::uint64_t seed,
                const std::string& out_path, const std::string& csv_path) {
  const Instance inst = instance_from_json(json::parse(read_text_file(instance_path)));
  ExtractionParams params;
  params.alpha_override = alpha;
  params.m_override = m;
  params.max_rounds = max_rounds;
  params.seed = seed;
  const ExtractionResult result = extract(inst, params);

  write_primary(out_path, canonical_dump(extraction_result_to_json(result)) + "\n", "extract");
  std::ostringstream csv;
  csv << "n,alpha,m,rounds_used,successes\n"
      << inst.n() << ',' << result.alpha << ',' << result.m << ',' << result.rounds_used << ','
      << result.transversals.size() << '\n';
  write_primary(csv_path, std::move(csv).str(), "extract");

  std::printf("extract n=%zu alpha=%lu m=%lu columns=%lu rounds=%lu transversals=%zu%s%s\n",
              inst.n(), result.alpha, result.m, result.columns, result.rounds_used,
              result.transversals.size(), result.shortfall ? " (shortfall)" : "",
              result.vacuous ? " (vacuous)" : "");
  return result.shortfall ? kExitShortfall : kExitOk;
}

int run_verify_qn(unsigned long lo, unsigned long hi, const std::string& csv_path) {
  if (lo < 2 || hi < lo) {
    throw std::invalid_argument("verify-qn: require 2 <= lo <= hi");
  }
  const BigRat half(1, 2);
  bool all_ok = true;
  std::ostringstream csv;
  csv << "n,alpha,qn_sum,qn_sum_decimal,le_half\n";
  for (unsigned long n = lo; n <= hi; ++n) {
    const BigRat v = qn_sum(n);
    const bool ok = v <= half;
    all_ok = all_ok && ok;
    csv << n << ',' << default_alpha(n) << ',' << v.fraction_string() << ','
        << v.decimal_string(30) << ',' << (ok ? "true" : "false") << '\n';
    std::printf("n=%lu qn_sum=%s le_half=%s\n", n, v.decimal_string(12).c_str(),
                ok ? "true" : "false");
  }
  write_primary(csv_path, std::move(csv).str(), "verify-qn");
  std::printf("verify-qn [%lu,%lu]: %s\n", lo, hi, all_ok ? "all pass" : "FAILED");
  return all_ok ? kExitOk : kExitVerifyFailed;
}

int run_verify_claim(unsigned long n, long start_bits, long max_bits,
                     const std::string& out_path) {
  const InequalityReport report = evaluate_claim_checks(n, start_bits, max_bits);
  write_primary(out_path, canonical_dump(inequality_report_to_json(report)) + "\n",
                "verify-claim");
  for (const InequalityCheck& c : report.checks) {
    const char* status = c.status == CheckStatus::kPass
                             ? "pass"
                             : (c.status == CheckStatus::kFail ? "fail" : "inconclusive");
    std::printf("%-26s %-12s bits=%-5ld [%s, %s]\n", c.name.c_str(), status, c.precision_bits,
                c.lower.c_str(), c.upper.c_str());
  }
  std::printf("verify-claim n=%lu: %s\n", n, report.all_pass ? "all pass" : "FAILED");
  return report.all_pass ? kExitOk : kExitVerifyFailed;
}

int run_qkn(unsigned long k, unsigned long n, unsigned long alpha, const std::string& csv_path) {
  std::vector<SweepRow> rows;
  const BigRat q = q_exact(k, n, alpha);
  const BigRat bound = q_upper_bound(k, n, alpha);
  rows.push_back({n, k, alpha, q, bound, qn_sum(n), q <= bound});
  write_primary(csv_path, sweep_csv(rows), "qkn");
  std::printf("k=%lu n=%lu alpha=%lu q_exact=%s q_upper_bound=%s holds=%s\n", k, n, alpha,
              q.fraction_string().c_str(), bound.fraction_string().c_str(),
              rows[0].holds ? "true" : "false");
  return rows[0].holds ? kExitOk : kExitVerifyFailed;
}

int run_sweep(unsigned long lo, unsigned long hi, const std::vector<unsigned long>& extra_alphas,
              const std::string& csv_path) {
  if (lo < 2 || hi < lo) {
    throw std::invalid_argument("sweep: require 2 <= lo <= hi");
  }
  bool all_ok = true;
  std::vector<SweepRow> rows;
  for (unsigned long n = lo; n <= hi; ++n) {
    const BigRat qn = qn_sum(n);
    std::vector<unsigned long> alphas{static_cast<unsigned long>(default_alpha(n))};
    for (unsigned long a : extra_alphas) alphas.push_back(a);
    for (unsigned long alpha : alphas) {
      if (alpha < 1 || alpha > n) continue;  // default alpha exceeds n for small n
      const std::vector<BigRat> q_all = q_exact_all(n, alpha);
      for (unsigned long k = 1; k <= n; ++k) {
        const BigRat bound = q_upper_bound(k, n, alpha);
        const bool holds = q_all[k] <= bound;
        all_ok = all_ok && holds;
        rows.push_back({n, k, alpha, q_all[k], bound, qn, holds});
      }
    }
  }
  write_primary(csv_path, sweep_csv(rows), "sweep");
  std::printf("sweep n in [%lu,%lu]: %zu rows, %s\n", lo, hi, rows.size(),
              all_ok ? "bound holds row-by-row" : "BOUND VIOLATED");
  return all_ok ? kExitOk : kExitVerifyFailed;
}

int run_coupling_cmd(const std::string& instance_path, unsigned long k, unsigned long alpha,
                     std::uint64_t trials, std::uint64_t seed, const std::string& out_path,
                     const std::string& dump_trace_path) {
  const Instance inst = instance_from_json(json::parse(read_text_file(instance_path)));
  const std::size_t n = inst.n();
  if (k < 1 || k > n) throw std::invalid_argument("coupling: require 1 <= k <= n");
  if (alpha == 0) alpha = static_cast<unsigned long>(default_alpha(n));
  const std::vector<std::vector<ElementId>> bases(inst.bases.begin(),
                                                  inst.bases.begin() + static_cast<long>(k));

  const RankDominationReport dom = coupling_rank_domination(inst.matroid, bases, alpha, trials, seed);
  const MCReport mc = estimate_q(inst.matroid, bases, alpha, trials, seed);
  const BigRat qe = q_exact(k, n, alpha);
  const double q = qe.to_double();
  const double sigma = std::sqrt(q * (1.0 - q) / static_cast<double>(trials));
  const double empirical_q = mc.estimate.to_double();
  const double ik_small_freq =
      static_cast<double>(dom.ik_lt_k) / static_cast<double>(dom.trials);

  const bool rank_ok = dom.rank_ge_ik == dom.trials;
  const bool estimate_ok = empirical_q <= q + 4.0 * sigma;
  const bool ik_freq_ok = std::abs(ik_small_freq - q) <= 4.0 * sigma;

  json j;
  j["k"] = k;
  j["n"] = n;
  j["alpha"] = alpha;
  j["q_exact"] = qe.fraction_string();
  j["q_exact_decimal"] = qe.decimal_string(30);
  j["sigma"] = sigma;
  j["estimate"] = mc_report_to_json(mc);
  j["rank_domination"] = rank_domination_to_json(dom);
  j["rank_holds_every_run"] = rank_ok;
  j["estimate_within_bound"] = estimate_ok;
  j["ik_frequency_within_bound"] = ik_freq_ok;
  write_primary(out_path, canonical_dump(j) + "\n", "coupling");

  if (!dump_trace_path.empty()) {
    const CouplingTrace trace = run_coupling(inst.matroid, bases, alpha, seed);
    write_primary(dump_trace_path, canonical_dump(coupling_trace_to_json(trace)) + "\n",
                  "coupling");
  }

  std::printf("empirical Q       = %.6f +- %.6f\n", empirical_q, mc.std_error);
  std::printf("freq(|I_k| < k)   = %.6f\n", ik_small_freq);
  std::printf("exact Q           = %.6f (sigma %.6f)\n", q, sigma);
  std::printf("rank >= |I_k| in %llu/%llu runs\n",
              static_cast<unsigned long long>(dom.rank_ge_ik),
              static_cast<unsigned long long>(dom.trials));
  const bool ok = rank_ok && estimate_ok && ik_freq_ok;
  std::printf("coupling: %s\n", ok ? "verified" : "FAILED");
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid transversal-basis toolkit"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = library default)")
      ->check(CLI::NonNegativeNumber);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random linear-matroid instance");
  unsigned long gen_n = 0, gen_p = 1009;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "instance.json";
  gen->add_option("--n", gen_n, "rank and basis count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--p", gen_p, "field prime")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "rng seed");
  gen->add_option("--out", gen_out, "output path for instance json");

  // extract
  auto* ext = app.add_subcommand("extract", "harvest disjoint transversal bases");
  std::string ext_instance, ext_out = "extract_result.json", ext_csv = "extract_summary.csv";
  unsigned long ext_alpha = 0, ext_m = 0, ext_rounds = 32;
  std::uint64_t ext_seed = 0;
  ext->add_option("--instance", ext_instance, "instance json path")->required();
  ext->add_option("--alpha", ext_alpha, "subset size override")->check(CLI::PositiveNumber);
  ext->add_option("--m", ext_m, "target count override")->check(CLI::PositiveNumber);
  ext->add_option("--max-rounds", ext_rounds, "resampling cap")->check(CLI::PositiveNumber);
  ext->add_option("--seed", ext_seed, "rng seed");
  ext->add_option("--out", ext_out, "output path for result json");
  ext->add_option("--csv", ext_csv, "output path for summary csv");

  // verify-qn
  auto* vqn = app.add_subcommand("verify-qn", "certify the union-bound sum stays below 1/2");
  unsigned long vqn_lo = 2, vqn_hi = 59;
  std::string vqn_csv = "qn_sums.csv";
  vqn->add_option("--lo", vqn_lo, "first n");
  vqn->add_option("--hi", vqn_hi, "last n");
  vqn->add_option("--csv", vqn_csv, "output path for csv");

  // verify-claim
  auto* vcl = app.add_subcommand("verify-claim", "certify the tail-term inequalities");
  unsigned long vcl_n = 60;
  long vcl_start_bits = 128, vcl_max_bits = 1024;
  std::string vcl_out = "claim_report.json";
  vcl->add_option("--n", vcl_n, "evaluation point")->check(CLI::PositiveNumber);
  vcl->add_option("--start-bits", vcl_start_bits, "initial interval precision");
  vcl->add_option("--max-bits", vcl_max_bits, "precision cap");
  vcl->add_option("--out", vcl_out, "output path for report json");

  // qkn
  auto* qkn = app.add_subcommand("qkn", "exact small-union probability at one parameter triple");
  unsigned long qkn_k = 0, qkn_n = 0, qkn_alpha = 0;
  std::string qkn_csv = "qkn.csv";
  qkn->add_option("--k", qkn_k, "number of subsets")->required()->check(CLI::PositiveNumber);
  qkn->add_option("--n", qkn_n, "ground size")->required()->check(CLI::PositiveNumber);
  qkn->add_option("--alpha", qkn_alpha, "subset size")->required()->check(CLI::PositiveNumber);
  qkn->add_option("--csv", qkn_csv, "output path for csv");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "exact probability vs bound over a parameter grid");
  unsigned long sweep_lo = 5, sweep_hi = 30;
  std::vector<unsigned long> sweep_extra;
  std::string sweep_csv_path = "sweep.csv";
  sweep->add_option("--lo", sweep_lo, "first n");
  sweep->add_option("--hi", sweep_hi, "last n");
  sweep->add_option("--extra-alphas", sweep_extra, "additional alpha values per n");
  sweep->add_option("--csv", sweep_csv_path, "output path for csv");

  // coupling
  auto* coup = app.add_subcommand("coupling", "coupled-process statistics on an instance");
  std::string coup_instance, coup_out = "coupling_report.json", coup_trace;
  unsigned long coup_k = 0, coup_alpha = 0;
  std::uint64_t coup_trials = 10000, coup_seed = 0;
  coup->add_option("--instance", coup_instance, "instance json path")->required();
  coup->add_option("--k", coup_k, "number of bases to couple")->required()->check(CLI::PositiveNumber);
  coup->add_option("--alpha", coup_alpha, "subset size (0 = default 3⌈log n⌉)");
  coup->add_option("--trials", coup_trials, "number of runs")->check(CLI::PositiveNumber);
  coup->add_option("--seed", coup_seed, "rng seed");
  coup->add_option("--out", coup_out, "output path for report json");
  coup->add_option("--dump-trace", coup_trace, "also dump one full trace json here");

  for (CLI::App* sub : {gen, ext, vqn, vcl, qkn, sweep, coup}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (gen->parsed()) return run_gen(gen_n, gen_p, gen_seed, gen_out);
    if (ext->parsed()) {
      return run_extract(ext_instance,
                         ext->count("--alpha") ? std::optional<unsigned long>(ext_alpha)
                                               : std::nullopt,
                         ext->count("--m") ? std::optional<unsigned long>(ext_m) : std::nullopt,
                         ext_rounds, ext_seed, ext_out, ext_csv);
    }
    if (vqn->parsed()) return run_verify_qn(vqn_lo, vqn_hi, vqn_csv);
    if (vcl->parsed()) return run_verify_claim(vcl_n, vcl_start_bits, vcl_max_bits, vcl_out);
    if (qkn->parsed()) return run_qkn(qkn_k, qkn_n, qkn_alpha, qkn_csv);
    if (sweep->parsed()) return run_sweep(sweep_lo, sweep_hi, sweep_extra, sweep_csv_path);
    if (coup->parsed()) {
      return run_coupling_cmd(coup_instance, coup_k, coup_alpha, coup_trials, coup_seed, coup_out,
                              coup_trace);
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "error: malformed json: %s\n", e.what());
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
