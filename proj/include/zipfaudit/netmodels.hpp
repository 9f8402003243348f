#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "zipfaudit/series.hpp"

namespace zipfaudit {

/// Immutable undirected graph: no self-loops, no duplicate edges.
/// Neighbor lists are sorted ascending.
class SyntheticGraph {
 public:
  static SyntheticGraph from_edges(
      std::size_t node_count,
      std::span<const std::pair<std::uint32_t, std::uint32_t>> edges,
      std::uint64_t seed = 0);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::uint64_t seed() const { return seed_; }

  std::span<const std::uint32_t> neighbors(std::uint32_t node) const;
  std::size_t degree(std::uint32_t node) const;
  bool has_edge(std::uint32_t a, std::uint32_t b) const;
  bool connected() const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

 private:
  friend SyntheticGraph gen_preferential_attachment(std::size_t, std::size_t,
                                                    std::uint64_t);
  friend SyntheticGraph gen_small_world(std::size_t, std::size_t, double,
                                        std::uint64_t);
  SyntheticGraph(std::vector<std::vector<std::uint32_t>> adjacency,
                 std::size_t edge_count, std::uint64_t seed);

  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::size_t edge_count_ = 0;
  std::uint64_t seed_ = 0;
};

/// Writes one "u v" pair per line.
void write_edge_list(const SyntheticGraph& graph, std::ostream& out);

/// Preferential-attachment (scale-free) generator: starts from a clique of
/// m+1 nodes, then every new node attaches m edges to distinct existing
/// nodes with probability proportional to current degree. Requires
/// n > m >= 1. Connected, minimum degree >= m, deterministic per seed.
SyntheticGraph gen_preferential_attachment(std::size_t n, std::size_t m,
                                           std::uint64_t seed);

/// Frequencies of each occurring degree, sorted by frequency descending
/// (ties by ascending degree). Point rank = degree, value = frequency —
/// ready for fit_power_law.
RankedSeries degree_distribution(const SyntheticGraph& graph);

/// Ring-rewiring (small-world) generator: a ring lattice where each node
/// links to k_ring/2 neighbors per side, then each lattice edge is rewired
/// independently with probability beta to a uniformly random non-adjacent
/// node. Requires n > k_ring >= 2, k_ring even, beta in [0, 1].
SyntheticGraph gen_small_world(std::size_t n, std::size_t k_ring, double beta,
                               std::uint64_t seed);

struct PathLengthSample {
  std::size_t node_count = 0;
  double mean_path_length = 0.0;
  std::size_t pairs_sampled = 0;
};

/// Mean shortest-path hop count over unordered node pairs. pairs_sampled = 0
/// means exhaustive all-pairs BFS, which is mandatory for graphs of at most
/// 2000 nodes; larger graphs may sample that many random pairs instead.
/// The graph must be connected.
PathLengthSample mean_path_length(const SyntheticGraph& graph,
                                  std::size_t pairs_sampled,
                                  std::uint64_t seed);

struct ScalingPoint {
  std::size_t node_count = 0;
  double mean_path_length = 0.0;
};

struct SmallWorldScaling {
  std::vector<ScalingPoint> points;
  double log_size_correlation = 0.0;  // Pearson r of L against ln(n)
};

/// Generates one small-world graph per size (child seeds derived from
/// `seed`), measures mean path length, and correlates it with ln(size).
/// Needs at least three sizes with non-constant ln(size).
SmallWorldScaling small_world_scaling(std::span<const std::size_t> sizes,
                                      std::size_t k_ring, double beta,
                                      std::uint64_t seed);

/// Rank-value dataset (F/n scaled by uniform noise in [1-noise, 1+noise],
/// re-sorted descending). noise = 0 reproduces the exact model series.
RankedSeries gen_zipf_dataset(double rank1_value, std::size_t count,
                              std::uint64_t seed, double noise);

}  // namespace zipfaudit
