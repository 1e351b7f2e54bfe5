#include "crossfree/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "crossfree/certification.hpp"
#include "crossfree/rng.hpp"

namespace crossfree::extremal {

namespace {

constexpr int kMaxEnumeratedGround = 20;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

class BranchAndBound {
 public:
  BranchAndBound(const CrossingGraph& graph, int k, SearchBudget budget)
      : graph_(graph), cap_(static_cast<std::size_t>(k - 1)), budget_(budget), chosen_(graph.order()),
        best_(graph.order()), start_(Clock::now()) {}

  void run(const VertexSet& candidates) { search(candidates, 0); }

  const VertexSet& best() const { return best_; }
  std::size_t best_size() const { return best_size_; }
  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

 private:
  // Greedy clique cover of the candidates in the crossing graph; a valid
  // family takes at most k-1 members from each clique.
  std::size_t cover_bound(const VertexSet& candidates) const {
    std::vector<std::pair<VertexSet, std::size_t>> cliques;  // common neighbourhood, size
    for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
      bool placed = false;
      for (auto& [common, size] : cliques) {
        if (common.test(v)) {
          common &= graph_.neighbors(v);
          ++size;
          placed = true;
          break;
        }
      }
      if (!placed) cliques.emplace_back(graph_.neighbors(v) & candidates, 1);
    }
    std::size_t bound = 0;
    for (const auto& [common, size] : cliques) bound += std::min(size, cap_);
    return bound;
  }

  bool out_of_budget() {
    if (budget_.max_nodes && nodes_ > *budget_.max_nodes) return true;
    if (budget_.max_time && (nodes_ & 1023U) == 0 && Clock::now() - start_ > *budget_.max_time) return true;
    return false;
  }

  void search(VertexSet candidates, std::size_t chosen_count) {
    if (exhausted_) return;
    ++nodes_;
    if (out_of_budget()) {
      exhausted_ = true;
      return;
    }
    if (candidates.none()) {
      if (!found_any_ || chosen_count > best_size_) {
        best_size_ = chosen_count;
        best_ = chosen_;
        found_any_ = true;
      }
      return;
    }
    if (found_any_ && chosen_count + cover_bound(candidates) <= best_size_) return;

    const auto v = candidates.find_first();
    candidates.reset(v);

    // Include v. Only neighbours of v can become infeasible: u is dropped when
    // the chosen common neighbours of u and v hold a (k-2)-clique.
    {
      chosen_.set(v);
      VertexSet next = candidates;
      const VertexSet touched = candidates & graph_.neighbors(v);
      for (auto u = touched.find_first(); u != VertexSet::npos; u = touched.find_next(u)) {
        if (cap_ == 1 || has_clique(graph_.rows(), chosen_ & graph_.neighbors(u) & graph_.neighbors(v), cap_ - 1))
          next.reset(u);
      }
      search(std::move(next), chosen_count + 1);
      chosen_.reset(v);
    }
    search(std::move(candidates), chosen_count);
  }

  const CrossingGraph& graph_;
  std::size_t cap_;
  SearchBudget budget_;
  VertexSet chosen_;
  VertexSet best_;
  std::size_t best_size_ = 0;
  bool found_any_ = false;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  Clock::time_point start_;
};

void split_laminar(std::vector<int>::const_iterator first, std::vector<int>::const_iterator last, GroundSet ground,
                   LaminarShape shape, Rng& rng, std::vector<Subset>& out) {
  const auto size = last - first;
  out.push_back(Subset::of(ground, std::span<const int>(&*first, static_cast<std::size_t>(size))));
  if (size <= 1) return;
  const auto left = shape == LaminarShape::balanced ? size / 2 : 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(size - 1)));
  split_laminar(first, first + left, ground, shape, rng, out);
  split_laminar(first + left, last, ground, shape, rng, out);
}

}  // namespace

std::string to_string(Universe u) {
  switch (u) {
    case Universe::all_subsets: return "all";
    case Universe::proper_nonempty: return "proper";
    case Universe::cyclic_intervals: return "intervals";
    case Universe::custom: return "custom";
  }
  return "custom";
}

Universe parse_universe(const std::string& text) {
  if (text == "all") return Universe::all_subsets;
  if (text == "proper") return Universe::proper_nonempty;
  if (text == "intervals") return Universe::cyclic_intervals;
  throw Error("unknown universe '" + text + "' (expected all, proper or intervals)");
}

std::vector<Subset> interval_universe(GroundSet ground) {
  const int n = ground.size();
  if (n < 2) throw Error("cyclic intervals need n >= 2");
  std::vector<Subset> out;
  for (int start = 0; start < n; ++start) {
    std::uint64_t word = 0;
    for (int len = 1; len < n; ++len) {
      word |= std::uint64_t{1} << ((start + len - 1) % n);
      out.emplace_back(ground, word);
    }
  }
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  return out;
}

SearchSpace SearchSpace::make(GroundSet ground, Universe kind, CrossMode mode, int k) {
  if (k < 2) throw Error("k must be at least 2");
  SearchSpace space{ground, kind, {}, mode, k};
  switch (kind) {
    case Universe::all_subsets:
    case Universe::proper_nonempty: {
      if (ground.size() > kMaxEnumeratedGround)
        throw Error("power-set universe for n = " + std::to_string(ground.size()) + " is too large");
      const std::uint64_t full = ground.full_mask();
      for (std::uint64_t w = 0; w <= full; ++w) {
        if (kind == Universe::proper_nonempty && (w == 0 || w == full)) continue;
        space.universe.emplace_back(ground, w);
      }
      std::sort(space.universe.begin(), space.universe.end(), CanonicalOrder{});
      break;
    }
    case Universe::cyclic_intervals: space.universe = interval_universe(ground); break;
    case Universe::custom: throw Error("use SearchSpace::custom for explicit universes");
  }
  return space;
}

SearchSpace SearchSpace::custom(GroundSet ground, std::vector<Subset> sets, CrossMode mode, int k) {
  if (k < 2) throw Error("k must be at least 2");
  Family unique(ground, std::move(sets));
  return SearchSpace{ground, Universe::custom, {unique.begin(), unique.end()}, mode, k};
}

ExtremalResult max_cross_free(const SearchSpace& space, SearchBudget budget) {
  const auto start = Clock::now();
  const Family universe(space.ground, space.universe);
  const CrossingGraph graph(universe, space.mode);

  VertexSet forced(graph.order());
  VertexSet candidates(graph.order());
  for (std::size_t v = 0; v < graph.order(); ++v) (graph.neighbors(v).none() ? forced : candidates).set(v);

  BranchAndBound search(graph, space.k, budget);
  search.run(candidates);

  ExtremalResult result{0, Family(space.ground), !search.exhausted(), search.nodes(), forced.count(), 0.0};
  const VertexSet chosen = search.best() | forced;
  for (auto v = chosen.find_first(); v != VertexSet::npos; v = chosen.find_next(v)) result.witness.insert(universe[v]);
  result.max_size = result.witness.size();
  result.elapsed_ms = ms_since(start);
  return result;
}

std::optional<long long> capoyleas_pach_bound(int n, int k) {
  if (k < 2 || n < 2 * k - 1) return std::nullopt;
  const long long kk = k;
  return 4 * (kk - 1) * n - (2 * kk - 1) * (2 * kk - 2);
}

Family gen_laminar(GroundSet ground, std::uint64_t seed, LaminarShape shape) {
  Rng rng(seed);
  std::vector<int> elements(static_cast<std::size_t>(ground.size()));
  std::iota(elements.begin(), elements.end(), 1);
  if (shape == LaminarShape::random) rng.shuffle(std::span<int>(elements));
  std::vector<Subset> out;
  split_laminar(elements.cbegin(), elements.cend(), ground, shape, rng, out);
  return Family(ground, std::move(out));
}

Family gen_random_crossfree(GroundSet ground, int k, std::size_t target_size, CrossMode mode, std::uint64_t seed,
                            GeneratorOptions options) {
  if (k < 2) throw Error("k must be at least 2");
  Rng rng(seed);
  const int n = ground.size();
  const std::uint64_t full = ground.full_mask();
  const std::size_t cap = static_cast<std::size_t>(k - 1);

  std::vector<std::uint64_t> members;
  std::vector<VertexSet> rows;

  auto try_add = [&](std::uint64_t word) {
    if (std::find(members.begin(), members.end(), word) != members.end()) return false;
    VertexSet related(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      if (bits::related(word, members[i], full, mode)) related.set(i);
    if (related.count() >= cap && has_clique(rows, related, cap)) return false;
    for (auto& row : rows) row.push_back(false);
    for (auto i = related.find_first(); i != VertexSet::npos; i = related.find_next(i)) rows[i].set(members.size());
    related.push_back(false);
    rows.push_back(std::move(related));
    members.push_back(word);
    return true;
  };

  if (options.seed_laminar) {
    const Family laminar = gen_laminar(ground, rng.next(), LaminarShape::random);
    std::vector<Subset> order(laminar.begin(), laminar.end());
    rng.shuffle(std::span<Subset>(order));
    for (const Subset& s : order) {
      if (members.size() >= target_size) break;
      try_add(s.bits());
    }
  }

  if (n >= 2) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    const std::size_t attempts = options.attempts_per_member * std::max<std::size_t>(target_size, 1);
    for (std::size_t t = 0; t < attempts && members.size() < target_size; ++t) {
      const int size = rng.between(2, n);
      std::iota(pool.begin(), pool.end(), 0);
      std::uint64_t word = 0;
      for (int i = 0; i < size; ++i) {
        const auto j = static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(n - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
        word |= std::uint64_t{1} << pool[static_cast<std::size_t>(i)];
      }
      try_add(word);
    }
  }

  std::vector<Subset> sets;
  sets.reserve(members.size());
  for (std::uint64_t w : members) sets.emplace_back(ground, w);
  return Family(ground, std::move(sets));
}

bool SweepTable::all_within_bounds() const {
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.skipped || r.within_bound; });
}

std::optional<long long> published_bound(int n, int k, Universe universe, std::string* name) {
  auto set_name = [&](const char* text) {
    if (name != nullptr) *name = text;
  };
  if (universe == Universe::cyclic_intervals) {
    set_name("4(k-1)n-2C(2k-1,2)");
    return capoyleas_pach_bound(n, k);
  }
  if (k == 2) {
    set_name("4n-2");
    return 4LL * n - 2;
  }
  if (k == 3) {
    set_name("6n");
    return 6LL * n;
  }
  set_name("");
  return std::nullopt;
}

SweepTable bounds_sweep(int k, int n_lo, int n_hi, Universe universe, CrossMode mode, SearchBudget budget) {
  SweepTable table;
  std::optional<std::size_t> previous;
  for (int n = n_lo; n <= n_hi; ++n) {
    SweepRow row;
    row.n = n;
    row.k = k;
    row.universe = universe;
    row.mode = mode;
    row.paper_bound = published_bound(n, k, universe, &row.bound_name);
    try {
      const auto space = SearchSpace::make(GroundSet(n), universe, mode, k);
      const ExtremalResult result = max_cross_free(space, budget);
      row.exact_max = result.max_size;
      row.optimal = result.optimal;
      row.nodes = result.nodes_explored;
      row.ms = result.elapsed_ms;
      row.within_bound = !row.paper_bound || static_cast<long long>(row.exact_max) <= *row.paper_bound;
      if (row.optimal) {
        if (previous && row.exact_max < *previous) table.monotone_in_n = false;
        previous = row.exact_max;
      }
    } catch (const Error&) {
      row.skipped = true;
    }
    table.rows.push_back(row);
  }
  return table;
}

std::string sweep_csv(const SweepTable& table) {
  std::ostringstream out;
  out << "n,k,universe,mode,exact_max,paper_bound,optimal,nodes,ms\n";
  for (const SweepRow& r : table.rows) {
    out << r.n << ',' << r.k << ',' << to_string(r.universe) << ',' << to_string(r.mode) << ',';
    if (r.skipped) {
      out << "skipped,";
    } else {
      out << r.exact_max << ',';
    }
    if (r.paper_bound) out << *r.paper_bound;
    out << ',' << (r.optimal ? "true" : "false") << ',' << r.nodes << ',' << r.ms << '\n';
  }
  return out.str();
}

}  // namespace crossfree::extremal
