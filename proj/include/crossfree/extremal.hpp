#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossfree/family.hpp"

namespace crossfree::extremal {

enum class Universe { all_subsets, proper_nonempty, cyclic_intervals, custom };

std::string to_string(Universe u);
Universe parse_universe(const std::string& text);

// Proper non-empty cyclic intervals of 1..n arranged on a cycle, n(n-1) of
// them, in canonical order.
std::vector<Subset> interval_universe(GroundSet ground);

struct SearchSpace {
  GroundSet ground;
  Universe kind = Universe::proper_nonempty;
  std::vector<Subset> universe;  // distinct, canonical order
  CrossMode mode = CrossMode::crossing;
  int k = 2;

  static SearchSpace make(GroundSet ground, Universe kind, CrossMode mode, int k);
  static SearchSpace custom(GroundSet ground, std::vector<Subset> sets, CrossMode mode, int k);
};

struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> max_time;
};

struct ExtremalResult {
  std::size_t max_size = 0;
  Family witness;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  std::size_t forced_members = 0;  // members relating to nothing, always taken
  double elapsed_ms = 0.0;
};

/// Largest subfamily of the universe without k pairwise (mode-)related
/// members. Branch and bound over the universe in canonical order, trying
/// inclusion first, so the first optimum reached is the lexicographically
/// smallest one. The bound is a greedy clique cover of the undecided
/// members, each clique contributing at most k-1.
ExtremalResult max_cross_free(const SearchSpace& space, SearchBudget budget = {});

// 4(k-1)n - 2·C(2k-1, 2); nullopt when n < 2k-1, where it is not claimed.
std::optional<long long> capoyleas_pach_bound(int n, int k);

// ---- generators ---------------------------------------------------------

enum class LaminarShape { balanced, random };

// Maximal laminar family of non-empty sets: all singletons, [n], and the
// internal nodes of a binary splitting tree (2n - 1 sets).
Family gen_laminar(GroundSet ground, std::uint64_t seed, LaminarShape shape = LaminarShape::random);

struct GeneratorOptions {
  bool seed_laminar = true;        // start from a random laminar family
  std::size_t attempts_per_member = 40;
};

// Greedy randomized family with no k pairwise (mode-)related members: random
// sets of size >= 2 are kept iff they create no such k-set.
Family gen_random_crossfree(GroundSet ground, int k, std::size_t target_size, CrossMode mode, std::uint64_t seed,
                            GeneratorOptions options = {});

// ---- sweeps -------------------------------------------------------------

struct SweepRow {
  int n = 0;
  int k = 2;
  Universe universe = Universe::proper_nonempty;
  CrossMode mode = CrossMode::crossing;
  bool skipped = false;
  std::size_t exact_max = 0;
  std::optional<long long> paper_bound;
  std::string bound_name;
  bool optimal = false;
  bool within_bound = true;
  std::uint64_t nodes = 0;
  double ms = 0.0;
};

struct SweepTable {
  std::vector<SweepRow> rows;
  bool monotone_in_n = true;
  bool all_within_bounds() const;
};

// Published bound for the row: 4n-2 (k = 2), 6n (k = 3), or the cyclic
// interval bound for interval universes.
std::optional<long long> published_bound(int n, int k, Universe universe, std::string* name = nullptr);

SweepTable bounds_sweep(int k, int n_lo, int n_hi, Universe universe, CrossMode mode, SearchBudget budget = {});

std::string sweep_csv(const SweepTable& table);

}  // namespace crossfree::extremal
