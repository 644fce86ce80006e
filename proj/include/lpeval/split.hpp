#pragma once

#include <cstdint>
#include <vector>

#include "lpeval/graph.hpp"

namespace lpeval {

/// Partition of a graph's edges into a training graph and held-out test
/// positives. test_edges are in canonical order and disjoint from the
/// training edges; together they reconstruct the original edge set.
struct EdgeSplit {
  Graph train;
  std::vector<Edge> test_edges; // sorted, canonical orientation
  std::uint64_t seed = 0;
  double fraction = 0.0;

  std::int64_t original_edge_count() const {
    return train.edge_count() + std::ssize(test_edges);
  }
};

/// Holds out floor(fraction * edge_count) edges, sampled uniformly without
/// replacement by a partial Fisher-Yates shuffle of the edge array.
///
/// Reproducibility contract: the generator is std::mt19937_64 seeded with
/// `seed`, indices are drawn with Lemire's multiply-shift bounded reduction,
/// and the first floor(fraction*E) shuffle positions form the test set. This
/// procedure is pinned; identical (graph, fraction, seed) inputs produce
/// bit-identical splits on every platform, forever.
EdgeSplit random_split(const Graph& g, double fraction, std::uint64_t seed);

/// k independent splits with seeds base_seed, base_seed+1, ..., base_seed+k-1.
std::vector<EdgeSplit> k_random_splits(const Graph& g, double fraction,
                                       std::uint64_t base_seed, int k);

} // namespace lpeval
