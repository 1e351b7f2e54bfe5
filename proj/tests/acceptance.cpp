// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "crossfree/certification.hpp"
#include "crossfree/cli.hpp"
#include "crossfree/extremal.hpp"
#include "crossfree/pipeline.hpp"
#include "crossfree/report_json.hpp"
#include "crossfree/rng.hpp"
#include "oracles.hpp"

#ifndef CROSSFREE_CLI_PATH
#error "CROSSFREE_CLI_PATH must name the crossfree executable"
#endif

using namespace crossfree;

namespace {

struct Verdict {
  bool passed = true;
  std::string detail;
};

std::filesystem::path scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto p = std::filesystem::temp_directory_path() / ("crossfree-acceptance-" + std::to_string(::getpid()));
    std::filesystem::create_directories(p);
    return p;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto p = scratch_dir() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// 1. No crossing pair on n <= 3: every family over 2^[n] is 2-cross-free.
Verdict small_ground_sets() {
  std::size_t families = 0;
  for (int n = 1; n <= 3; ++n) {
    const GroundSet g(n);
    const std::uint64_t universe = g.full_mask() + 1;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << universe); ++pick) {
      std::vector<Subset> sets;
      for (std::uint64_t w = 0; w < universe; ++w)
        if (pick >> w & 1U) sets.emplace_back(g, w);
      ++families;
      if (!certify(Family(g, sets), 2, CrossMode::crossing).cross_free())
        return {false, "witness found on n=" + std::to_string(n)};
    }
  }
  std::vector<Subset> all;
  for (std::uint64_t w = 0; w < 8; ++w) all.emplace_back(GroundSet(3), w);
  if (!certify(Family(GroundSet(3), all), 2, CrossMode::crossing).cross_free()) return {false, "2^[3] not cross-free"};
  return {true, std::to_string(families) + " families on n <= 3 certified cross-free"};
}

Verdict solver_vs_oracle(int n, int k, extremal::Universe u, long long bound, std::ostringstream& detail) {
  const auto space = extremal::SearchSpace::make(GroundSet(n), u, CrossMode::crossing, k);
  const auto solved = extremal::max_cross_free(space);
  const auto expected = oracle::max_free_exhaustive(space.universe, k, CrossMode::crossing);
  detail << "n=" << n << ' ' << extremal::to_string(u) << ": " << solved.max_size << " (oracle " << expected.max_size
         << ", bound " << bound << ") ";
  const bool ok = solved.optimal && solved.max_size == expected.max_size &&
                  static_cast<long long>(solved.max_size) <= bound &&
                  certify(solved.witness, k, CrossMode::crossing).cross_free();
  return {ok, ""};
}

// 2. Exact k = 2 maxima for n = 4, 5 under both conventions, <= 4n - 2.
Verdict two_cross_free_bound() {
  std::ostringstream detail;
  bool ok = true;
  for (int n = 4; n <= 5; ++n)
    for (auto u : {extremal::Universe::all_subsets, extremal::Universe::proper_nonempty})
      ok &= solver_vs_oracle(n, 2, u, 4LL * n - 2, detail).passed;
  return {ok, detail.str()};
}

// 3. Exact k = 3 maximum for n = 5, <= 6n.
Verdict three_cross_free_bound() {
  std::ostringstream detail;
  bool ok = true;
  for (auto u : {extremal::Universe::all_subsets, extremal::Universe::proper_nonempty})
    ok &= solver_vs_oracle(5, 3, u, 30, detail).passed;
  return {ok, detail.str()};
}

// 4. Cyclic intervals, k = 2: the maximum equals 4n - 6 for n = 5, 6, 7.
Verdict interval_tightness() {
  std::ostringstream detail;
  bool ok = true;
  for (int n = 5; n <= 7; ++n) {
    const auto space = extremal::SearchSpace::make(GroundSet(n), extremal::Universe::cyclic_intervals,
                                                   CrossMode::crossing, 2);
    const auto r = extremal::max_cross_free(space);
    const auto bound = extremal::capoyleas_pach_bound(n, 2);
    detail << "n=" << n << ": " << r.max_size << ' ';
    ok &= r.optimal && bound && static_cast<long long>(r.max_size) == 4LL * n - 6 &&
          static_cast<long long>(r.max_size) == *bound;
  }
  return {ok, detail.str()};
}

// 5. Normalization of 100 k-cross-free families.
Verdict normalization() {
  Rng rng(2024);
  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const GroundSet g(rng.between(4, 30));
    const int k = rng.between(2, 4);
    const auto target = static_cast<std::size_t>(rng.between(g.size(), 5 * g.size()));
    const Family f = extremal::gen_random_crossfree(g, k, target, CrossMode::crossing, rng.next());
    const Family normalized = pipeline::normalize_weakly(f);
    const bool ok = certify(f, k, CrossMode::crossing).cross_free() &&
                    certify(normalized, k, CrossMode::weakly_crossing).cross_free() &&
                    2 * normalized.size() >= f.size();
    failures += ok ? 0 : 1;
  }
  return {failures == 0, "100 families, " + std::to_string(failures) + " failures"};
}

// 6. Full schedule on 200 weakly k-cross-free families through the CLI.
Verdict claims_suite() {
  Rng rng(77);
  int failed_runs = 0;
  std::size_t checks = 0;
  std::uint64_t claim5_violations = 0;
  bool identity_exact = true;
  for (int trial = 0; trial < 200; ++trial) {
    const GroundSet g(rng.between(2, 40));
    const int k = 2 + trial % 3;
    const auto target = static_cast<std::size_t>(rng.between(g.size(), 6 * g.size()));
    const Family f = extremal::gen_random_crossfree(g, k, target, CrossMode::weakly_crossing, rng.next());
    const std::string path = write_file("claims.txt", serialize_family(f));
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"pipeline", path, "--k", std::to_string(k), "--schedule"}, out, err);
    if (code != cli::kOk) {
      ++failed_runs;
      continue;
    }
    const auto run = json::Json::parse(out.str());
    if (run["partition"]["passed"] != true) ++failed_runs;
    for (const auto& w : run["windows"]) {
      for (const auto& c : w["checks"]) {
        ++checks;
        if (c["applicable"] == true && c["passed"] != true) ++failed_runs;
        if (c["name"] == "claim5.elements_per_tuple" && c["passed"] != true) ++claim5_violations;
      }
      if (w["degree_total"] != w["chain_length_total"]) identity_exact = false;
    }
  }
  std::ostringstream detail;
  detail << "200 families, " << checks << " checks, " << failed_runs << " failing runs, " << claim5_violations
         << " claim-5 violations, identity " << (identity_exact ? "exact" : "BROKEN");
  return {failed_runs == 0 && claim5_violations == 0 && identity_exact, detail.str()};
}

// 7. g(y), N, M against the definitional enumerator.
Verdict tuple_oracle() {
  Rng rng(99);
  int mismatches = 0;
  std::uint64_t nonzero = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const GroundSet g(rng.between(4, 10));
    const int k = rng.between(2, 3);
    Family f(g);
    if (trial % 2 == 0) {
      f = extremal::gen_random_crossfree(g, k, static_cast<std::size_t>(rng.between(4, 12)),
                                         CrossMode::weakly_crossing, rng.next());
    } else {
      const int m = rng.between(4, 12);
      for (int i = 0; i < m; ++i) f.insert(Subset(g, rng.next() & g.full_mask()));
    }
    const auto report = pipeline::verify_claims(f, k, pipeline::Window{-1, 4});
    const auto covers = pipeline::chain_covers(pipeline::strip_small(f));
    const auto reps = pipeline::representatives(g, covers, pipeline::Window{-1, 4});
    std::vector<oracle::ChainInput> chains;
    for (const auto& rc : reps.chains) chains.push_back({rc.chain.home_block, rc.chain.sets, rc.representatives});
    const auto expected = oracle::tuple_counts(chains, g.size(), k);
    nonzero += expected.incidences;
    if (report.good != expected.good || report.nice != expected.nice || report.incidences != expected.incidences)
      ++mismatches;
  }
  return {mismatches == 0,
          "50 instances, " + std::to_string(mismatches) + " mismatches, total M = " + std::to_string(nonzero)};
}

// 8. ext_binom: integers, the zero region, monotonicity and convexity.
Verdict extended_binomial() {
  int bad = 0;
  for (int k = 1; k <= 6; ++k) {
    for (int x = k - 1; x <= 40; ++x) {
      bad += pipeline::ext_binom(static_cast<double>(x), k) != static_cast<double>(binomial(x, k));
      bad += pipeline::ext_binom(pipeline::Rational(x), k) != pipeline::Rational(binomial(x, k));
    }
    for (double x = 0.0; x < k - 1; x += 0.25) bad += pipeline::ext_binom(x, k) != 0.0;
    for (double x = 0.0; x + 0.5 <= 20.0; x += 0.25) {
      const double f0 = pipeline::ext_binom(x, k);
      const double f1 = pipeline::ext_binom(x + 0.25, k);
      const double f2 = pipeline::ext_binom(x + 0.5, k);
      bad += f1 < f0;
      bad += f2 - 2 * f1 + f0 < -1e-12;
    }
  }
  return {bad == 0, std::to_string(bad) + " violations over k <= 6"};
}

// 9. Schedule and iterated logarithm.
Verdict schedule_values() {
  const auto plan = pipeline::schedule(2, 1'000'000);
  const bool ok = plan.a == std::vector<double>{0, 4, 16, 65536} && plan.s == 3 && pipeline::log_star(65536) == 4;
  std::ostringstream detail;
  detail << "a =";
  for (double a : plan.a) detail << ' ' << a;
  detail << ", s = " << plan.s << ", log*(65536) = " << pipeline::log_star(65536);
  return {ok, detail.str()};
}

struct Captured {
  int code = -1;
  std::string out;
};

Captured spawn(const std::string& threads, const std::string& args) {
  const std::string command = "CROSSFREE_THREADS=" + threads + " '" + CROSSFREE_CLI_PATH + "' " + args + " 2>/dev/null";
  Captured c;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return c;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) c.out.append(buffer.data(), got);
  const int status = ::pclose(pipe);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

std::string strip_timing(const std::string& text, bool is_csv) {
  if (is_csv) {
    std::istringstream lines(text);
    std::string line;
    std::string out;
    while (std::getline(lines, line)) out += line.substr(0, line.rfind(',')) + '\n';
    return out;
  }
  try {
    return json::without_timing(json::Json::parse(text)).dump();
  } catch (const std::exception&) {
    return text;
  }
}

// 10. Every CLI command is byte-identical modulo timing across runs and
// thread counts.
Verdict determinism() {
  const std::string big = scratch_dir() / "big.txt";
  const std::string dense = scratch_dir() / "dense.txt";
  spawn("1", "generate --n 48 --kind random --k 4 --target 400 --seed 5 --out '" + big + "'");
  spawn("1", "generate --n 40 --kind random --k 3 --mode weak --target 160 --seed 6 --out '" + dense + "'");
  const std::vector<std::pair<std::string, bool>> commands{
      {"generate --n 30 --kind random --k 3 --seed 11 --format json", false},
      {"generate --n 17 --seed 3", false},
      {"certify '" + big + "' --k 4", false},
      {"certify '" + big + "' --k 3", false},
      {"certify '" + big + "' --k 4 --mode weak", false},
      {"normalize '" + big + "'", false},
      {"pipeline '" + dense + "' --k 3 --schedule", false},
      {"pipeline '" + dense + "' --k 3 --schedule --seed 9", false},
      {"pipeline '" + dense + "' --k 3 --a 1 --b 4", false},
      {"search --n 5 --k 3 --universe all", false},
      {"search --n 7 --universe intervals --format text", false},
      {"sweep --k 2 --n 4..6 --universe all", true},
      {"sweep --k 2 --n 5..7 --universe intervals --format json", false},
  };
  int differing = 0;
  std::size_t runs = 0;
  for (const auto& [args, is_csv] : commands) {
    const Captured reference = spawn("1", args);
    if (reference.code < 0 || reference.out.empty()) {
      ++differing;
      continue;
    }
    const std::string expected = strip_timing(reference.out, is_csv);
    for (const char* threads : {"1", "2", "8"}) {
      const Captured again = spawn(threads, args);
      ++runs;
      if (again.code != reference.code || strip_timing(again.out, is_csv) != expected) ++differing;
    }
  }
  return {differing == 0, std::to_string(commands.size()) + " commands, " + std::to_string(runs) + " reruns, " +
                              std::to_string(differing) + " differing"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"no crossing pairs for n < 4", small_ground_sets},
      {"k=2 exact maxima for n=4,5 match the oracle and are <= 4n-2", two_cross_free_bound},
      {"k=3 exact maximum for n=5 matches the oracle and is <= 6n", three_cross_free_bound},
      {"cyclic intervals, k=2: maximum is 4n-6 for n=5,6,7", interval_tightness},
      {"normalization yields weakly k-cross-free families of at least half the size", normalization},
      {"every inequality holds on 200 weakly k-cross-free families", claims_suite},
      {"g(y), N, M equal the definitional enumerator", tuple_oracle},
      {"extended binomial: integers, zero region, monotone, convex", extended_binomial},
      {"schedule (0,4,16,65536), s=3 at n=10^6, log*(65536)=4", schedule_values},
      {"CLI output deterministic across runs and thread counts", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += v.passed ? 0 : 1;
    std::printf("[%s] %2zu. %s -- %s (%.2fs)\n", v.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::filesystem::remove_all(scratch_dir());
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
