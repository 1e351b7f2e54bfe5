#include "crossfree/certification.hpp"

#include <atomic>
#include <chrono>

#include "crossfree/parallel.hpp"

namespace crossfree {

namespace {

constexpr std::size_t kParallelThreshold = 256;

bool extend_clique(AdjacencyRows rows, VertexSet candidates, std::size_t need,
                   std::vector<std::size_t>& stack) {
  if (need == 0) return true;
  if (candidates.count() < need) return false;
  if (need >= 3 && greedy_colour_bound(rows, candidates, need) < need) return false;

  for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
    candidates.reset(v);
    if (need == 1) {
      stack.push_back(v);
      return true;
    }
    VertexSet next = candidates & rows[v];
    stack.push_back(v);
    if (extend_clique(rows, std::move(next), need - 1, stack)) return true;
    stack.pop_back();
    if (candidates.count() < need) return false;
  }
  return false;
}

}  // namespace

CrossingGraph::CrossingGraph(Family family, CrossMode mode) : family_(std::move(family)), mode_(mode) {
  const std::size_t m = family_.size();
  const std::uint64_t full = family_.ground().full_mask();
  rows_.assign(m, VertexSet(m));
  auto fill_row = [&](std::size_t i) {
    const std::uint64_t a = family_[i].bits();
    for (std::size_t j = 0; j < m; ++j)
      if (j != i && bits::related(a, family_[j].bits(), full, mode_)) rows_[i].set(j);
  };
  if (m >= kParallelThreshold) {
    parallel_for(m, fill_row);
  } else {
    for (std::size_t i = 0; i < m; ++i) fill_row(i);
  }
  std::size_t degree_sum = 0;
  for (const auto& row : rows_) degree_sum += row.count();
  edges_ = degree_sum / 2;
}

VertexSet CrossingGraph::all_vertices() const {
  VertexSet all(order());
  all.set();
  return all;
}

std::size_t greedy_colour_bound(AdjacencyRows rows, const VertexSet& candidates, std::size_t cap) {
  VertexSet uncoloured = candidates;
  std::size_t colours = 0;
  while (uncoloured.any() && colours < cap) {
    ++colours;
    VertexSet available = uncoloured;
    for (auto v = available.find_first(); v != VertexSet::npos; v = available.find_next(v)) {
      uncoloured.reset(v);
      available -= rows[v];
    }
  }
  return colours;
}

std::optional<std::vector<std::size_t>> first_clique(AdjacencyRows rows, const VertexSet& candidates,
                                                     std::size_t size) {
  std::vector<std::size_t> stack;
  stack.reserve(size);
  if (extend_clique(rows, candidates, size, stack)) return stack;
  return std::nullopt;
}

bool has_clique(AdjacencyRows rows, const VertexSet& candidates, std::size_t size) {
  return first_clique(rows, candidates, size).has_value();
}

std::size_t max_clique_size(const CrossingGraph& graph, std::size_t cap) {
  if (graph.order() == 0 || cap == 0) return 0;
  const VertexSet all = graph.all_vertices();
  std::size_t best = 1;
  while (best < cap && has_clique(graph.rows(), all, best + 1)) ++best;
  return best;
}

std::optional<Witness> find_k_pairwise(const CrossingGraph& graph, int k) {
  if (k < 2) throw Error("k must be at least 2");
  const std::size_t need = static_cast<std::size_t>(k);
  const std::size_t m = graph.order();
  if (m < need) return std::nullopt;

  // Lowest vertex of each candidate clique is tried independently; the
  // smallest successful lowest vertex carries the canonical witness.
  std::atomic<std::size_t> best{m};
  std::vector<std::optional<std::vector<std::size_t>>> found(m);
  auto try_lowest = [&](std::size_t v) {
    if (v > best.load(std::memory_order_relaxed)) return;
    VertexSet candidates = graph.neighbors(v);
    for (std::size_t u = 0; u <= v; ++u) candidates.reset(u);
    auto tail = first_clique(graph.rows(), candidates, need - 1);
    if (!tail) return;
    tail->insert(tail->begin(), v);
    found[v] = std::move(tail);
    std::size_t current = best.load();
    while (v < current && !best.compare_exchange_weak(current, v)) {
    }
  };
  if (m >= kParallelThreshold) {
    parallel_for(m, try_lowest);
  } else {
    for (std::size_t v = 0; v < m && v <= best.load(); ++v) try_lowest(v);
  }

  if (best.load() == m) return std::nullopt;
  return Witness{*found[best.load()], graph.mode()};
}

std::optional<Witness> find_k_pairwise(const Family& family, int k, CrossMode mode) {
  return find_k_pairwise(CrossingGraph(family, mode), k);
}

PairCounts count_related_pairs(const Family& family) {
  PairCounts counts;
  const std::uint64_t full = family.ground().full_mask();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::uint64_t a = family[i].bits();
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const std::uint64_t b = family[j].bits();
      if (bits::weakly_crossing(a, b)) {
        ++counts.weakly_crossing;
        if ((full & ~(a | b)) != 0) ++counts.crossing;
      }
    }
  }
  return counts;
}

CertReport certify(const Family& family, int k, CrossMode mode) {
  const auto start = std::chrono::steady_clock::now();
  CertReport report;
  report.k = k;
  report.mode = mode;
  report.members = family.size();
  report.pairs = count_related_pairs(family);

  const CrossingGraph graph(family, mode);
  report.witness = find_k_pairwise(graph, k);
  if (report.witness) {
    report.max_clique_found = static_cast<std::size_t>(k);
    for (std::size_t i : report.witness->indices) report.witness_sets.push_back(family[i]);
  } else {
    report.max_clique_found = max_clique_size(graph, static_cast<std::size_t>(k - 1));
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace crossfree
