#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpeval/error.hpp"

namespace lpeval {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

enum class Mode { directed, undirected };

std::string_view to_string(Mode mode);
Mode mode_from_string(std::string_view text);

/// Immutable compressed-sparse-row graph. Neighbor lists are sorted and free
/// of self-loops and duplicates; undirected edges appear in both endpoint
/// lists but count once toward edge_count(). Safe to share across threads
/// after construction.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an edge list. Undirected pairs are canonicalized to
  /// (min,max) before deduplication, so "u v" and "v u" collapse to one edge.
  /// Self-loops are rejected (callers that tolerate them filter first).
  /// vertex_count is max(vertex_count_hint, max id + 1).
  static Graph from_edges(Mode mode, std::vector<Edge> edges,
                          VertexId vertex_count_hint = 0);

  VertexId vertex_count() const noexcept { return vertex_count_; }
  Mode mode() const noexcept { return mode_; }
  std::int64_t edge_count() const noexcept { return edge_count_; }

  /// Sorted out-neighbors (the full neighborhood in undirected mode).
  std::span<const VertexId> neighbors(VertexId v) const;
  /// Sorted in-neighbors; only distinct from neighbors() in directed mode.
  std::span<const VertexId> in_neighbors(VertexId v) const;

  std::int64_t degree(VertexId v) const { return std::ssize(neighbors(v)); }

  /// Directed: true iff the arc u->v exists. Undirected: true iff {u,v} does.
  bool has_edge(VertexId u, VertexId v) const;

  /// Total stored neighbor entries (2*edge_count in undirected mode).
  std::int64_t adjacency_size() const noexcept {
    return offsets_.empty() ? 0 : offsets_.back();
  }

  /// Edges in canonical order: ascending (u,v), with u < v in undirected mode.
  std::vector<Edge> edges() const;

  const std::vector<std::int64_t>& offsets() const noexcept { return offsets_; }
  const std::vector<VertexId>& adjacency() const noexcept { return adjacency_; }

private:
  VertexId vertex_count_ = 0;
  Mode mode_ = Mode::undirected;
  std::int64_t edge_count_ = 0;
  std::vector<std::int64_t> offsets_;   // size vertex_count_+1
  std::vector<VertexId> adjacency_;
  // Reverse adjacency, populated in directed mode only.
  std::vector<std::int64_t> in_offsets_;
  std::vector<VertexId> in_adjacency_;
};

struct LoadStats {
  std::int64_t lines_read = 0;
  std::int64_t self_loops_dropped = 0;
  std::int64_t duplicates_collapsed = 0;
};

struct LoadResult {
  Graph graph;
  LoadStats stats;
};

/// Parses "u v" lines (non-negative integers, whitespace separated). Lines
/// whose first non-blank character is '#' are comments; blank lines are
/// skipped. Self-loop lines are dropped and counted, duplicates collapsed.
/// Malformed lines raise ErrorKind::parse with the 1-based line number.
LoadResult load_edge_list(std::istream& in, Mode mode);
LoadResult load_edge_list_file(const std::filesystem::path& path, Mode mode);

struct LabeledLoadResult {
  Graph graph;
  std::vector<std::string> labels; // dense id -> original label
  LoadStats stats;
};

/// Edge-list ingestion for labeled datasets: the two tokens per line are
/// arbitrary labels, mapped to dense ids in first-seen order.
LabeledLoadResult load_labeled_edge_list(std::istream& in, Mode mode);
LabeledLoadResult load_labeled_edge_list_file(const std::filesystem::path& path,
                                              Mode mode);

/// Canonical text form: one "u v" per line in the order of Graph::edges().
/// Reloading the output reproduces the graph exactly.
void write_canonical_edges(const Graph& g, std::ostream& out);
void write_canonical_edges_file(const Graph& g,
                                const std::filesystem::path& path);

struct ImbalanceReport {
  std::int64_t possible_edges = 0; // N*(N-1), halved in undirected mode
  std::int64_t positives = 0;
  std::int64_t negatives = 0;
  double ratio = 0.0;              // negatives per positive of the stated problem
  std::int64_t test_positives = 0; // floor(test_fraction * positives); 0 when no fraction given
};

/// Positive/negative class sizes of the link-prediction problem on g. With a
/// nonzero test_fraction the ratio is taken against the held-out positives
/// (the class actually predicted), otherwise against all positives.
ImbalanceReport class_imbalance(const Graph& g, double test_fraction = 0.0);

/// Absolute number of false positives implied by a false-positive rate on g:
/// round(fpr * negatives).
std::int64_t error_magnitude_at_fpr(const Graph& g, double fpr);

std::int64_t possible_edge_count(VertexId vertex_count, Mode mode);

} // namespace lpeval
