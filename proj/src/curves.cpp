#include "lpeval/curves.hpp"

#include <algorithm>

namespace lpeval {

std::string_view to_string(CurveKind kind) {
  return kind == CurveKind::pr ? "pr" : "roc";
}

namespace {

std::uint64_t encode(VertexId u, VertexId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

Curve build_curve(CurveKind kind, const ScoredRanking& ranking,
                  const EdgeSplit& split) {
  if (split.test_edges.empty()) {
    throw LpError(ErrorKind::parameter, "test set is empty");
  }
  const Graph& train = split.train;

  std::vector<std::uint64_t> test_keys;
  test_keys.reserve(split.test_edges.size());
  for (const auto& [u, v] : split.test_edges) test_keys.push_back(encode(u, v));
  std::sort(test_keys.begin(), test_keys.end());

  Curve curve;
  curve.kind = kind;
  curve.total_positives = std::ssize(split.test_edges);
  curve.total_negatives =
      possible_edge_count(train.vertex_count(), train.mode()) -
      split.original_edge_count();
  curve.points.reserve(static_cast<std::size_t>(ranking.tie_block_count()) + 1);
  curve.points.push_back({0, 0});

  std::int64_t tp = 0;
  std::int64_t fp = 0;
  for (std::int64_t block = 0; block < ranking.tie_block_count(); ++block) {
    for (std::int64_t i = ranking.tie_offsets[block];
         i < ranking.tie_offsets[block + 1]; ++i) {
      const auto& entry = ranking.entries[i];
      if (entry.u >= train.vertex_count() || entry.v >= train.vertex_count()) {
        throw LpError(ErrorKind::consistency,
                      "ranking references vertices outside the training graph");
      }
      if (train.has_edge(entry.u, entry.v)) {
        throw LpError(ErrorKind::consistency,
                      "ranking contains training edge " +
                          std::to_string(entry.u) + "-" +
                          std::to_string(entry.v) +
                          "; ranking and split do not match");
      }
      if (std::binary_search(test_keys.begin(), test_keys.end(),
                             encode(entry.u, entry.v))) {
        ++tp;
      } else {
        ++fp;
      }
    }
    curve.points.push_back({tp, fp});
  }
  curve.covered_positives = tp;
  return curve;
}

} // namespace

Curve build_pr_curve(const ScoredRanking& ranking, const EdgeSplit& split) {
  return build_curve(CurveKind::pr, ranking, split);
}

Curve build_roc_curve(const ScoredRanking& ranking, const EdgeSplit& split) {
  return build_curve(CurveKind::roc, ranking, split);
}

Curve random_baseline_pr(const EdgeSplit& split) {
  Curve curve;
  curve.kind = CurveKind::pr;
  curve.total_positives = std::ssize(split.test_edges);
  curve.total_negatives =
      possible_edge_count(split.train.vertex_count(), split.train.mode()) -
      split.original_edge_count();
  curve.covered_positives = curve.total_positives;
  curve.points.push_back({0, 0});
  // One interpolated segment from (0,0) to (P,N) has constant precision
  // P/(P+N) throughout, the exact performance of a uniform random ranking.
  if (curve.total_positives > 0) {
    curve.points.push_back({curve.total_positives, curve.total_negatives});
  }
  return curve;
}

} // namespace lpeval
