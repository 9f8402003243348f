#include "zipfaudit/netmodels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <unordered_set>

#include "zipfaudit/errors.hpp"

namespace zipfaudit {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t child_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed + 0x632BE59BD9B4E019ULL * (stream + 1));
}

// Explicit bounded sampling so results never depend on the standard
// library's unspecified distribution algorithms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_index(std::uint64_t bound) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % bound;
  }

  double next_unit() {  // [0, 1), 53 bits
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

struct Bfs {
  std::vector<std::int32_t> dist;
  std::vector<std::uint32_t> queue;

  explicit Bfs(std::size_t n) : dist(n), queue(n) {}

  // Runs BFS from source; returns number of reached nodes.
  std::size_t run(const SyntheticGraph& g, std::uint32_t source) {
    std::fill(dist.begin(), dist.end(), -1);
    std::size_t head = 0, tail = 0;
    dist[source] = 0;
    queue[tail++] = source;
    while (head < tail) {
      std::uint32_t u = queue[head++];
      for (std::uint32_t v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue[tail++] = v;
        }
      }
    }
    return tail;
  }
};

constexpr std::size_t kExhaustiveLimit = 2000;
constexpr std::size_t kScalingSamplePairs = 20000;

}  // namespace

// --- SyntheticGraph ---

SyntheticGraph::SyntheticGraph(std::vector<std::vector<std::uint32_t>> adjacency,
                               std::size_t edge_count, std::uint64_t seed)
    : adjacency_(std::move(adjacency)), edge_count_(edge_count), seed_(seed) {
  for (std::vector<std::uint32_t>& nbrs : adjacency_)
    std::sort(nbrs.begin(), nbrs.end());
}

SyntheticGraph SyntheticGraph::from_edges(
    std::size_t node_count,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> edges,
    std::uint64_t seed) {
  if (node_count == 0) throw ParameterError("graph needs at least one node");
  std::vector<std::vector<std::uint32_t>> adj(node_count);
  std::unordered_set<std::uint64_t> seen;
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count)
      throw ParameterError("edge endpoint out of range");
    if (u == v) throw ParameterError("self-loop rejected");
    std::uint64_t key = u < v ? (std::uint64_t(u) << 32) | v
                              : (std::uint64_t(v) << 32) | u;
    if (!seen.insert(key).second) throw ParameterError("duplicate edge rejected");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return SyntheticGraph(std::move(adj), edges.size(), seed);
}

std::span<const std::uint32_t> SyntheticGraph::neighbors(std::uint32_t node) const {
  return adjacency_[node];
}

std::size_t SyntheticGraph::degree(std::uint32_t node) const {
  return adjacency_[node].size();
}

bool SyntheticGraph::has_edge(std::uint32_t a, std::uint32_t b) const {
  const std::vector<std::uint32_t>& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

bool SyntheticGraph::connected() const {
  if (adjacency_.empty()) return true;
  Bfs bfs(node_count());
  return bfs.run(*this, 0) == node_count();
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> SyntheticGraph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(edge_count_);
  for (std::uint32_t u = 0; u < adjacency_.size(); ++u)
    for (std::uint32_t v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void write_edge_list(const SyntheticGraph& graph, std::ostream& out) {
  for (auto [u, v] : graph.edges()) out << u << ' ' << v << '\n';
}

// --- generators ---

SyntheticGraph gen_preferential_attachment(std::size_t n, std::size_t m,
                                           std::uint64_t seed) {
  if (m < 1 || n <= m)
    throw ParameterError("preferential attachment requires n > m >= 1");

  std::vector<std::vector<std::uint32_t>> adj(n);
  std::size_t edge_count = 0;

  // seed clique on m+1 nodes, so every node starts with degree >= m
  for (std::uint32_t u = 0; u + 1 <= m; ++u) {
    for (std::uint32_t v = u + 1; v <= m; ++v) {
      adj[u].push_back(v);
      adj[v].push_back(u);
      ++edge_count;
    }
  }

  // one entry per unit of degree; sampling from it is degree-proportional
  std::vector<std::uint32_t> attachment;
  attachment.reserve(2 * m * n);
  for (std::uint32_t u = 0; u <= m; ++u)
    for (std::size_t i = 0; i < m; ++i) attachment.push_back(u);

  Rng rng(seed);
  std::vector<std::uint32_t> chosen;
  chosen.reserve(m);
  for (std::uint32_t v = static_cast<std::uint32_t>(m) + 1; v < n; ++v) {
    chosen.clear();
    while (chosen.size() < m) {
      std::uint32_t t = attachment[rng.next_index(attachment.size())];
      if (std::find(chosen.begin(), chosen.end(), t) != chosen.end()) continue;
      chosen.push_back(t);
    }
    for (std::uint32_t t : chosen) {
      adj[v].push_back(t);
      adj[t].push_back(v);
      ++edge_count;
      attachment.push_back(t);
      attachment.push_back(v);
    }
  }
  return SyntheticGraph(std::move(adj), edge_count, seed);
}

RankedSeries degree_distribution(const SyntheticGraph& graph) {
  if (graph.node_count() == 0)
    throw InsufficientDataError("empty graph has no degree distribution");
  std::map<std::size_t, std::size_t> freq;
  for (std::uint32_t u = 0; u < graph.node_count(); ++u) ++freq[graph.degree(u)];

  std::vector<std::pair<std::size_t, std::size_t>> entries(freq.begin(), freq.end());
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });

  RankedSeries series;
  series.points.reserve(entries.size());
  for (auto [degree, count] : entries)
    series.points.push_back({static_cast<double>(degree),
                             static_cast<double>(count), {}});
  return series;
}

SyntheticGraph gen_small_world(std::size_t n, std::size_t k_ring, double beta,
                               std::uint64_t seed) {
  if (k_ring < 2 || k_ring % 2 != 0 || n <= k_ring)
    throw ParameterError("small world requires n > k_ring >= 2 with k_ring even");
  if (!(beta >= 0.0 && beta <= 1.0))
    throw ParameterError("rewiring probability must lie in [0, 1]");

  std::vector<std::unordered_set<std::uint32_t>> adj(n);
  auto add = [&adj](std::uint32_t a, std::uint32_t b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  auto remove = [&adj](std::uint32_t a, std::uint32_t b) {
    adj[a].erase(b);
    adj[b].erase(a);
  };

  const std::size_t half = k_ring / 2;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::size_t j = 1; j <= half; ++j)
      add(i, static_cast<std::uint32_t>((i + j) % n));

  if (beta > 0.0) {
    Rng rng(seed);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::size_t j = 1; j <= half; ++j) {
        if (rng.next_unit() >= beta) continue;
        std::uint32_t t = static_cast<std::uint32_t>((i + j) % n);
        if (adj[i].size() >= n - 1) continue;  // already linked to everyone
        std::uint32_t w;
        do {
          w = static_cast<std::uint32_t>(rng.next_index(n));
        } while (w == i || adj[i].contains(w));
        remove(i, t);
        add(i, w);
      }
    }
  }

  std::vector<std::vector<std::uint32_t>> lists(n);
  std::size_t edge_count = 0;
  for (std::uint32_t u = 0; u < n; ++u) {
    lists[u].assign(adj[u].begin(), adj[u].end());
    edge_count += lists[u].size();
  }
  return SyntheticGraph(std::move(lists), edge_count / 2, seed);
}

PathLengthSample mean_path_length(const SyntheticGraph& graph,
                                  std::size_t pairs_sampled,
                                  std::uint64_t seed) {
  const std::size_t n = graph.node_count();
  if (n < 2) throw InsufficientDataError("graph has no node pairs");
  if (!graph.connected()) throw ConnectivityError("graph is disconnected");
  if (n <= kExhaustiveLimit && pairs_sampled != 0)
    throw ParameterError(
        "exhaustive evaluation (pairs_sampled = 0) is required for graphs of "
        "at most " + std::to_string(kExhaustiveLimit) + " nodes");

  Bfs bfs(n);
  PathLengthSample sample;
  sample.node_count = n;

  if (pairs_sampled == 0) {
    double sum = 0.0;
    for (std::uint32_t u = 0; u < n; ++u) {
      bfs.run(graph, u);
      for (std::uint32_t v = u + 1; v < n; ++v) sum += bfs.dist[v];
    }
    sample.pairs_sampled = n * (n - 1) / 2;
    sample.mean_path_length = sum / static_cast<double>(sample.pairs_sampled);
    return sample;
  }

  Rng rng(seed);
  // group sampled pairs by source so each source is BFS'd once
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_source;
  for (std::size_t i = 0; i < pairs_sampled; ++i) {
    std::uint32_t s, t;
    do {
      s = static_cast<std::uint32_t>(rng.next_index(n));
      t = static_cast<std::uint32_t>(rng.next_index(n));
    } while (s == t);
    by_source[s].push_back(t);
  }
  double sum = 0.0;
  for (const auto& [s, targets] : by_source) {
    bfs.run(graph, s);
    for (std::uint32_t t : targets) sum += bfs.dist[t];
  }
  sample.pairs_sampled = pairs_sampled;
  sample.mean_path_length = sum / static_cast<double>(pairs_sampled);
  return sample;
}

SmallWorldScaling small_world_scaling(std::span<const std::size_t> sizes,
                                      std::size_t k_ring, double beta,
                                      std::uint64_t seed) {
  if (sizes.size() < 3)
    throw ParameterError("scaling needs at least 3 network sizes");

  SmallWorldScaling result;
  result.points.reserve(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    SyntheticGraph g = gen_small_world(sizes[i], k_ring, beta,
                                       child_seed(seed, 2 * i));
    std::size_t pairs = sizes[i] <= kExhaustiveLimit ? 0 : kScalingSamplePairs;
    PathLengthSample s = mean_path_length(g, pairs, child_seed(seed, 2 * i + 1));
    result.points.push_back({sizes[i], s.mean_path_length});
  }

  const std::size_t n = result.points.size();
  double mean_x = 0.0, mean_y = 0.0;
  for (const ScalingPoint& p : result.points) {
    mean_x += std::log(static_cast<double>(p.node_count));
    mean_y += p.mean_path_length;
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (const ScalingPoint& p : result.points) {
    double dx = std::log(static_cast<double>(p.node_count)) - mean_x;
    double dy = p.mean_path_length - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0)
    throw DomainError("correlation undefined: all network sizes equal");
  if (syy == 0.0)
    throw DomainError("correlation undefined: path length has zero variance");
  result.log_size_correlation = sxy / std::sqrt(sxx * syy);
  return result;
}

RankedSeries gen_zipf_dataset(double rank1_value, std::size_t count,
                              std::uint64_t seed, double noise) {
  if (!(rank1_value > 0.0) || !std::isfinite(rank1_value))
    throw ParameterError("rank-1 value must be positive and finite");
  if (count < 1) throw ParameterError("count must be at least 1");
  if (!(noise >= 0.0 && noise < 1.0))
    throw ParameterError("noise amplitude must lie in [0, 1)");

  Rng rng(seed);
  std::vector<double> values;
  values.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) {
    double v = rank1_value / static_cast<double>(n);
    if (noise > 0.0) v *= 1.0 + (2.0 * rng.next_unit() - 1.0) * noise;
    values.push_back(v);
  }
  std::sort(values.begin(), values.end(), std::greater<>());

  RankedSeries series;
  series.points.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    series.points.push_back({static_cast<double>(i + 1), values[i], {}});
  return series;
}

}  // namespace zipfaudit
