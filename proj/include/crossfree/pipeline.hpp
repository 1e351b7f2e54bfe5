#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "crossfree/family.hpp"

// The O(n log* n) counting argument for weakly k-cross-free families, run as
// a computation: normalisation, size blocks, chain covers, representative
// sets, good/nice k-tuples of chains, and every inequality of the argument
// evaluated on the concrete family.
namespace crossfree::pipeline {

using Rational = boost::multiprecision::cpp_rational;

// x(x-1)...(x-k+1)/k! for x >= k-1, and 0 below. Monotone and convex in x.
double ext_binom(double x, int k);
Rational ext_binom(const Rational& x, int k);

// {A : pivot ∉ A} ∪ {[n]\A : pivot ∈ A}, deduplicated. Maps a k-cross-free
// family to a weakly k-cross-free one of at least half the size.
Family normalize_weakly(const Family& family, int pivot = 1);

// Drops the empty set and singletons.
Family strip_small(const Family& family);

// ---- blocks and chain covers --------------------------------------------

// The i with 2^i < size <= 2^(i+1); size must be at least 2.
int block_index(int set_size);

struct Block {
  int index = 0;
  Family members;
};

// Partition by block index, ascending. Throws if a member has size <= 1.
std::vector<Block> blocks(const Family& family);

struct Chain {
  std::vector<Subset> sets;  // strictly increasing under inclusion
  int home_block = 0;

  std::size_t size() const { return sets.size(); }
  const Subset& min() const { return sets.front(); }
  const Subset& max() const { return sets.back(); }
};

/// Γ_i for one block: one chain per maximal member M, taken as a longest
/// chain inside H_M (the members assigned to M) and always topped by M.
/// A member below several maximal sets is assigned to the first of them in
/// canonical order.
struct ChainCover {
  int block = 0;
  std::size_t block_size = 0;
  std::vector<Chain> chains;
  std::vector<std::vector<Subset>> parts;  // H_M, parallel to chains

  std::size_t covered() const;
  std::vector<Subset> maxima() const;
};

ChainCover chain_cover(const Block& block);
std::vector<ChainCover> chain_covers(const Family& stripped);

// Blocks i with a < i <= b. a and b need not be integers.
struct Window {
  double a = 0.0;
  double b = 0.0;
  bool contains(int block) const { return a < block && block <= b; }
};

// ---- representatives -----------------------------------------------------

enum class RepresentativePolicy { smallest_index, seeded_random };

struct RepresentativeOptions {
  RepresentativePolicy policy = RepresentativePolicy::smallest_index;
  std::uint64_t seed = 0;
};

struct RepresentedChain {
  Chain chain;
  // representatives[j] lies in C(j) \ C(j-1), with C(0) = ∅.
  std::vector<int> representatives;
  std::uint64_t y_mask = 0;

  bool has_representative(int y) const { return ((y_mask >> (y - 1)) & 1U) != 0; }
  // Smallest set of the chain containing y, or nullopt.
  std::optional<Subset> minimal_set_containing(int y) const;
};

struct RepresentativeMap {
  GroundSet ground{1};
  std::vector<RepresentedChain> chains;  // Γ_{a,b}, ordered by home block
  std::vector<std::size_t> degree;       // degree[y - 1] = d(y)

  std::size_t d(int y) const { return degree[static_cast<std::size_t>(y - 1)]; }
  std::size_t total_chain_length() const;
  std::size_t total_degree() const;
};

RepresentativeMap representatives(GroundSet ground, std::span<const ChainCover> covers, Window window,
                                  RepresentativeOptions options = {});

// ---- good and nice tuples ----------------------------------------------

struct GoodTuple {
  int y = 0;
  std::vector<std::size_t> chains;   // indices into RepresentativeMap::chains
  std::vector<Subset> minimal_sets;  // smallest set of each chain containing y
};

// All k-tuples of chains from strictly increasing blocks that are good for y.
std::vector<GoodTuple> enumerate_good_tuples(int y, const RepresentativeMap& reps, int k);

struct TupleCensus {
  std::vector<std::uint64_t> good;  // good[y - 1] = g(y)
  std::uint64_t nice = 0;           // N: tuples good for at least one element
  std::uint64_t incidences = 0;     // M: pairs (y, tuple) with tuple good for y
  std::size_t max_elements_per_tuple = 0;
  // A tuple good for k or more elements, if any.
  std::optional<std::pair<std::vector<std::size_t>, std::vector<int>>> overloaded;
};

TupleCensus tuple_census(const RepresentativeMap& reps, int k);
std::uint64_t count_nice_tuples(const RepresentativeMap& reps, int k);

// ---- bounds report -----------------------------------------------------

enum class Relation { le, lt, ge, gt, eq };
std::string to_string(Relation r);

struct Check {
  std::string name;
  Relation relation = Relation::le;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // non-negative when the relation holds
  bool exact = true;  // decided in exact rational arithmetic
  bool applicable = true;
  bool passed = true;
  std::optional<int> block;
  std::optional<int> element;
  std::string note;
};

struct Constants {
  double c1 = 0.0;
  double c2 = 0.0;
  double log2_c1 = 0.0;
  double log2_c2 = 0.0;
  double log2_c3 = 0.0;
};
Constants constants(int k);
Rational c1_exact(int k);
Rational c2_exact(int k);

struct BlockSummary {
  int index = 0;
  std::size_t size = 0;
  std::size_t chains = 0;
  std::size_t covered = 0;
  bool maxima_antichain = true;
};

struct BoundsReport {
  int k = 2;
  int n = 1;
  Window window;
  bool hypothesis_holds = true;
  std::size_t family_size = 0;
  std::size_t stripped_size = 0;
  std::size_t window_size = 0;  // |F_{a,b}|
  std::size_t gamma_size = 0;   // |Γ_{a,b}|
  std::size_t chain_length_total = 0;
  std::size_t degree_total = 0;
  std::vector<BlockSummary> blocks;
  std::vector<std::size_t> degree;
  std::vector<std::uint64_t> good;
  std::uint64_t nice = 0;
  std::uint64_t incidences = 0;
  std::size_t max_elements_per_tuple = 0;
  Constants consts;
  std::vector<Check> checks;

  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
};

struct PipelineOptions {
  RepresentativeOptions representatives;
  // Known result of certifying the weakly k-cross-free hypothesis; computed
  // when absent.
  std::optional<bool> hypothesis;
};

BoundsReport verify_claims(const Family& family, int k, Window window, PipelineOptions options = {});

// ---- schedule ----------------------------------------------------------

// Number of base-2 logarithms applied before the value drops to <= 1.
int log_star(double x);

struct Schedule {
  int k = 2;
  std::uint64_t n = 2;
  double log2_n = 1.0;
  std::vector<double> a;  // a_0 .. a_s
  int s = 1;
  int log_star_n = 0;
};

Schedule schedule(int k, std::uint64_t n);

struct ScheduleRun {
  Schedule plan;
  bool hypothesis_holds = true;
  std::size_t family_size = 0;
  std::size_t stripped_size = 0;
  std::vector<BoundsReport> windows;
  std::size_t window_total = 0;
  Check partition;      // window sizes sum to |strip_small(F)|
  Check direct_bound;   // first window against the per-size count bound

  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
};

// Runs every window of schedule(k, n). The first window covers blocks
// 0..a_1 so that the windows partition the stripped family.
ScheduleRun run_schedule(const Family& family, int k, PipelineOptions options = {});

// ---- size/point counting ----------------------------------------------

struct LomonosovReport {
  int k = 2;
  int n = 1;
  std::size_t family_size = 0;
  std::vector<std::size_t> size_histogram;   // index = set size, 0..n
  std::vector<std::size_t> max_point_load;   // per size: max over x of #members of that size containing x
  double size_bound_total = 0.0;             // 1 + Σ_{s=1..n} (k-1)n/s
  bool passed = true;
  // k members of one size sharing an element, when the load bound fails.
  std::optional<std::pair<int, std::vector<Subset>>> witness;
};

LomonosovReport lomonosov_report(const Family& family, int k);

}  // namespace crossfree::pipeline
