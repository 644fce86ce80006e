#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lpeval/curves.hpp"

namespace lpeval {

/// Area under a PR curve over the covered recall range. Each tie-block
/// segment is integrated with the nonlinear precision interpolation that is
/// linear in TP/FP counts: at t of delta_tp added true positives the
/// precision is (tp0+t) / (tp0+t + fp0 + t*delta_fp/delta_tp), integrated in
/// closed form. Truncated coverage lowers the area; nothing is renormalized.
double aupr(const Curve& curve);

/// Trapezoidal area under a ROC curve over the covered FPR range; a tie
/// block contributes its diagonal segment.
double auroc(const Curve& curve);

/// AUPR accumulated only while cumulative false positives stay within
/// edge_budget. A budget crossing inside a segment cuts it at the exact
/// interpolated TP fraction where cum_fp reaches the budget; everything
/// beyond contributes zero.
double caupr(const Curve& curve, std::int64_t edge_budget);

/// Recall at the budget-crossing point of the same prefix cut, or the
/// covered recall when the budget is never exceeded.
double caupr_recall_threshold(const Curve& curve, std::int64_t edge_budget);

struct MetricsReport {
  std::string graph_id;
  std::string scorer_name;
  std::uint64_t seed = 0;
  double fraction = 0.0;
  std::int64_t edge_budget = 0;
  double aupr = 0.0;
  double auroc = 0.0;
  double caupr = 0.0;
  double recall_threshold_x = 0.0;
  double covered_recall = 0.0;
  std::int64_t covered_positives = 0;
};

struct ImpactRow {
  std::string algorithm;
  double aupr_pct_of_ref = 0.0;
  double caupr_pct_of_ref = 0.0;
  double impact = 0.0; // caupr_pct_of_ref - aupr_pct_of_ref, percentage points
};

/// Relative comparison against a reference algorithm: each non-reference
/// report's AUPR and CAUPR as a percentage of the reference values, plus the
/// difference of the two percentages.
std::vector<ImpactRow> impact_table(std::span<const MetricsReport> reports,
                                    std::string_view reference);

struct VarianceSummary {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double stddev = 0.0; // sample standard deviation, n-1 denominator
  double stddev_over_mean = 0.0;
};

VarianceSummary variance_summary(std::span<const double> values);

} // namespace lpeval
