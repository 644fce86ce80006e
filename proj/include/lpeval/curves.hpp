#pragma once

#include <cstdint>
#include <vector>

#include "lpeval/scorers.hpp"
#include "lpeval/split.hpp"

namespace lpeval {

enum class CurveKind { pr, roc };

std::string_view to_string(CurveKind kind);

/// Cumulative (TP, FP) counts at every tie-block boundary of a ranking,
/// starting at (0,0). Tie blocks are atomic: one point per block, so the
/// curve never depends on ordering within a block. Counts stay integral so
/// downstream metrics can interpolate exactly.
struct Curve {
  struct Point {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
  };

  CurveKind kind = CurveKind::pr;
  std::vector<Point> points;
  std::int64_t total_positives = 0;  // held-out test-set size
  std::int64_t total_negatives = 0;  // non-edges of the full candidate universe
  std::int64_t covered_positives = 0;

  double covered_recall() const {
    return total_positives > 0
               ? static_cast<double>(covered_positives) /
                     static_cast<double>(total_positives)
               : 0.0;
  }
};

/// Walks the ranking's tie blocks against the held-out test set. The curve
/// ends at the last scored candidate: test positives outside the candidate
/// set cap recall below 1, visible through covered_positives.
Curve build_pr_curve(const ScoredRanking& ranking, const EdgeSplit& split);

/// Same walk with ROC semantics; total_negatives counts the non-edges of the
/// pre-split graph.
Curve build_roc_curve(const ScoredRanking& ranking, const EdgeSplit& split);

/// Analytic curve of a random classifier over the same universe: constant
/// precision total_positives / (total_positives + total_negatives).
Curve random_baseline_pr(const EdgeSplit& split);

} // namespace lpeval
