#include "lpeval/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace lpeval {

namespace {

void require_kind(const Curve& curve, CurveKind kind) {
  if (curve.kind != kind) {
    throw LpError(ErrorKind::wrong_curve_kind,
                  std::string("expected a ") + std::string(to_string(kind)) +
                      " curve, got " + std::string(to_string(curve.kind)));
  }
}

// Closed form of the segment integral
//   (1/P) * ∫_0^D (a+t)/(c+k t) dt,  k = (D+dfp)/D,
// with a = tp0, c = tp0+fp0, D = dtp. c == 0 implies a == 0 and a constant
// integrand 1/k.
double segment_area(std::int64_t tp0, std::int64_t fp0, double dtp, double dfp,
                    std::int64_t total_positives) {
  if (dtp <= 0.0) return 0.0;
  const double a = static_cast<double>(tp0);
  const double c = static_cast<double>(tp0 + fp0);
  const double k = 1.0 + dfp / dtp;
  double integral;
  if (c == 0.0) {
    integral = dtp / k;
  } else {
    integral = dtp / k + (a * k - c) / (k * k) * std::log1p(k * dtp / c);
  }
  return integral / static_cast<double>(total_positives);
}

struct PrefixCut {
  double area = 0.0;
  double recall_at_cut = 0.0;
  bool crossed = false;
};

// Shared walk for aupr / caupr / the recall threshold: accumulate segment
// areas while cum_fp stays within the budget, cutting the crossing segment
// at the interpolated point where cum_fp equals it. Area and threshold come
// from the same cut, so they are mutually consistent by construction.
PrefixCut pr_prefix(const Curve& curve, std::int64_t budget) {
  require_kind(curve, CurveKind::pr);
  if (curve.total_positives < 1) {
    throw LpError(ErrorKind::parameter, "curve has no test positives");
  }
  PrefixCut cut;
  const double positives = static_cast<double>(curve.total_positives);
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    const auto& prev = curve.points[i - 1];
    const auto& next = curve.points[i];
    const std::int64_t dtp = next.tp - prev.tp;
    const std::int64_t dfp = next.fp - prev.fp;
    if (next.fp <= budget) {
      cut.area += segment_area(prev.tp, prev.fp, static_cast<double>(dtp),
                               static_cast<double>(dfp), curve.total_positives);
      continue;
    }
    // Budget exceeded inside this segment (prev.fp <= budget < next.fp).
    cut.crossed = true;
    if (dtp == 0) {
      cut.recall_at_cut = static_cast<double>(prev.tp) / positives;
      return cut;
    }
    const double t_cut = static_cast<double>(budget - prev.fp) *
                         static_cast<double>(dtp) / static_cast<double>(dfp);
    cut.area += segment_area(prev.tp, prev.fp, t_cut,
                             static_cast<double>(budget - prev.fp),
                             curve.total_positives);
    cut.recall_at_cut = (static_cast<double>(prev.tp) + t_cut) / positives;
    return cut;
  }
  cut.recall_at_cut = curve.covered_recall();
  return cut;
}

} // namespace

double aupr(const Curve& curve) {
  require_kind(curve, CurveKind::pr);
  if (curve.total_positives < 1) {
    throw LpError(ErrorKind::parameter, "curve has no test positives");
  }
  double area = 0.0;
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    const auto& prev = curve.points[i - 1];
    const auto& next = curve.points[i];
    area += segment_area(prev.tp, prev.fp,
                         static_cast<double>(next.tp - prev.tp),
                         static_cast<double>(next.fp - prev.fp),
                         curve.total_positives);
  }
  return area;
}

double auroc(const Curve& curve) {
  require_kind(curve, CurveKind::roc);
  if (curve.total_positives < 1 || curve.total_negatives < 1) {
    throw LpError(ErrorKind::parameter,
                  "ROC area needs at least one positive and one negative");
  }
  double area = 0.0;
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    const auto& prev = curve.points[i - 1];
    const auto& next = curve.points[i];
    area += static_cast<double>(next.fp - prev.fp) *
            (static_cast<double>(prev.tp) + static_cast<double>(next.tp)) / 2.0;
  }
  return area / (static_cast<double>(curve.total_positives) *
                 static_cast<double>(curve.total_negatives));
}

double caupr(const Curve& curve, std::int64_t edge_budget) {
  if (edge_budget < 1) {
    throw LpError(ErrorKind::parameter, "edge budget must be at least 1");
  }
  return pr_prefix(curve, edge_budget).area;
}

double caupr_recall_threshold(const Curve& curve, std::int64_t edge_budget) {
  if (edge_budget < 1) {
    throw LpError(ErrorKind::parameter, "edge budget must be at least 1");
  }
  return pr_prefix(curve, edge_budget).recall_at_cut;
}

std::vector<ImpactRow> impact_table(std::span<const MetricsReport> reports,
                                    std::string_view reference) {
  const MetricsReport* ref = nullptr;
  for (const auto& report : reports) {
    if (report.scorer_name == reference) {
      ref = &report;
      break;
    }
  }
  if (ref == nullptr) {
    throw LpError(ErrorKind::parameter,
                  "reference algorithm '" + std::string(reference) +
                      "' not present in the reports");
  }
  if (!(ref->aupr > 0.0) || !(ref->caupr > 0.0)) {
    throw LpError(ErrorKind::division,
                  "reference '" + std::string(reference) + "' has aupr=" +
                      std::to_string(ref->aupr) + ", caupr=" +
                      std::to_string(ref->caupr) +
                      "; relative percentages are undefined");
  }
  std::vector<ImpactRow> rows;
  for (const auto& report : reports) {
    if (&report == ref) continue;
    ImpactRow row;
    row.algorithm = report.scorer_name;
    row.aupr_pct_of_ref = 100.0 * report.aupr / ref->aupr;
    row.caupr_pct_of_ref = 100.0 * report.caupr / ref->caupr;
    row.impact = row.caupr_pct_of_ref - row.aupr_pct_of_ref;
    rows.push_back(std::move(row));
  }
  return rows;
}

VarianceSummary variance_summary(std::span<const double> values) {
  if (values.size() < 2) {
    throw LpError(ErrorKind::parameter,
                  "variance summary needs at least two values");
  }
  VarianceSummary summary;
  summary.min = *std::min_element(values.begin(), values.end());
  summary.max = *std::max_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  summary.mean = sum / static_cast<double>(values.size());
  double squares = 0.0;
  for (double v : values) {
    const double d = v - summary.mean;
    squares += d * d;
  }
  summary.stddev = std::sqrt(squares / static_cast<double>(values.size() - 1));
  summary.stddev_over_mean =
      summary.mean != 0.0 ? summary.stddev / summary.mean : 0.0;
  return summary;
}

} // namespace lpeval
