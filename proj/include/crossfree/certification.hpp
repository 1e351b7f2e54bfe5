#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "crossfree/family.hpp"

namespace crossfree {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;
using AdjacencyRows = std::span<const VertexSet>;

/// Graph on the members of a family, with an edge between two members when
/// they are (weakly) crossing. Adjacency is stored as packed bit rows.
class CrossingGraph {
 public:
  CrossingGraph(Family family, CrossMode mode);

  const Family& family() const { return family_; }
  CrossMode mode() const { return mode_; }
  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const { return edges_; }

  bool adjacent(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  const VertexSet& neighbors(std::size_t i) const { return rows_[i]; }
  AdjacencyRows rows() const { return rows_; }
  VertexSet all_vertices() const;

 private:
  Family family_;
  CrossMode mode_;
  std::vector<VertexSet> rows_;
  std::size_t edges_ = 0;
};

struct Witness {
  std::vector<std::size_t> indices;  // ascending member indices
  CrossMode mode = CrossMode::crossing;
};

// ---- clique primitives over a candidate vertex set ----------------------
//
// `rows[v]` is the neighbourhood of v; rows must be symmetric, loop-free and
// all of the same length.

// Number of colours used by a sequential greedy colouring of `candidates`,
// stopping once `cap` colours are reached. Upper-bounds the clique number.
std::size_t greedy_colour_bound(AdjacencyRows rows, const VertexSet& candidates, std::size_t cap);

// Lexicographically smallest clique of exactly `size` vertices inside
// `candidates`, or nullopt.
std::optional<std::vector<std::size_t>> first_clique(AdjacencyRows rows, const VertexSet& candidates,
                                                     std::size_t size);

bool has_clique(AdjacencyRows rows, const VertexSet& candidates, std::size_t size);

// Largest clique size, searching no further than `cap`.
std::size_t max_clique_size(const CrossingGraph& graph, std::size_t cap);

// ---- certification ------------------------------------------------------

// Canonical witness: the lexicographically smallest index tuple of k pairwise
// related members. Throws for k < 2.
std::optional<Witness> find_k_pairwise(const CrossingGraph& graph, int k);
std::optional<Witness> find_k_pairwise(const Family& family, int k, CrossMode mode);

struct PairCounts {
  std::uint64_t crossing = 0;
  std::uint64_t weakly_crossing = 0;
};
PairCounts count_related_pairs(const Family& family);

struct CertReport {
  int k = 2;
  CrossMode mode = CrossMode::crossing;
  std::size_t members = 0;
  std::optional<Witness> witness;
  std::vector<Subset> witness_sets;
  PairCounts pairs;
  std::size_t max_clique_found = 0;  // capped at k
  double elapsed_ms = 0.0;

  bool cross_free() const { return !witness.has_value(); }
};

CertReport certify(const Family& family, int k, CrossMode mode);

}  // namespace crossfree
