#include "lpeval/split.hpp"

#include <algorithm>
#include <random>

#include "rng_util.hpp"

namespace lpeval {

using detail::bounded_draw;

EdgeSplit random_split(const Graph& g, double fraction, std::uint64_t seed) {
  if (g.edge_count() < 1) {
    throw LpError(ErrorKind::parameter, "cannot split a graph with no edges");
  }
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw LpError(ErrorKind::parameter, "fraction must lie strictly in (0,1)");
  }
  std::vector<Edge> edges = g.edges();
  const auto total = static_cast<std::uint64_t>(edges.size());
  const auto test_count = static_cast<std::uint64_t>(
      fraction * static_cast<double>(total));
  if (test_count == 0) {
    throw LpError(ErrorKind::degenerate_split,
                  "fraction keeps no edges in the test set");
  }
  if (test_count >= total) {
    throw LpError(ErrorKind::degenerate_split,
                  "fraction leaves no edges in the training graph");
  }

  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < test_count; ++i) {
    std::uint64_t j = i + bounded_draw(rng, total - i);
    std::swap(edges[i], edges[j]);
  }

  EdgeSplit split;
  split.seed = seed;
  split.fraction = fraction;
  split.test_edges.assign(edges.begin(), edges.begin() + test_count);
  std::sort(split.test_edges.begin(), split.test_edges.end());
  std::vector<Edge> train_edges(edges.begin() + test_count, edges.end());
  split.train =
      Graph::from_edges(g.mode(), std::move(train_edges), g.vertex_count());
  return split;
}

std::vector<EdgeSplit> k_random_splits(const Graph& g, double fraction,
                                       std::uint64_t base_seed, int k) {
  if (k < 1) {
    throw LpError(ErrorKind::parameter, "k must be at least 1");
  }
  std::vector<EdgeSplit> splits;
  splits.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    splits.push_back(random_split(g, fraction, base_seed + static_cast<std::uint64_t>(i)));
  }
  return splits;
}

} // namespace lpeval
