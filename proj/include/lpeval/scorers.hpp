#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "lpeval/graph.hpp"

namespace lpeval {

enum class Scorer { common_neighbors, adamic_adar, resource_allocation };

std::string_view to_string(Scorer scorer); // "cn" | "aa" | "ra"
Scorer scorer_from_string(std::string_view text);

enum class CandidatePolicy { two_hop };

/// Candidate edges with scores, ordered by descending score with a stable
/// (u,v) tiebreak. tie_offsets delimit maximal equal-score runs:
/// block b spans entries [tie_offsets[b], tie_offsets[b+1]).
struct ScoredRanking {
  struct Entry {
    VertexId u;
    VertexId v;
    double score;
  };

  std::vector<Entry> entries;
  std::vector<std::int64_t> tie_offsets; // size tie_block_count()+1, first 0
  Scorer scorer = Scorer::common_neighbors;
  CandidatePolicy policy = CandidatePolicy::two_hop;

  std::int64_t tie_block_count() const {
    return std::ssize(tie_offsets) - 1;
  }
};

struct ScoreOptions {
  /// Worker threads for candidate enumeration; 0 means hardware concurrency.
  int threads = 0;
  /// Upper bound on the wedge-based candidate estimate before enumeration is
  /// refused with a resource error; 0 means the built-in default.
  std::int64_t max_candidate_estimate = 0;
};

inline constexpr std::int64_t kDefaultCandidateEstimateLimit = 250'000'000;

/// |Gamma(u) ∩ Gamma(v)|. Neighborhoods are symmetrized: in directed mode
/// Gamma is the union of in- and out-neighbors.
double common_neighbors(const Graph& train, VertexId u, VertexId v);

/// Sum over common neighbors z of 1/ln(deg(z)), deg taken in the symmetrized
/// graph. Common neighbors always have degree >= 2, so ln never vanishes.
double adamic_adar(const Graph& train, VertexId u, VertexId v);

/// Sum over common neighbors z of 1/deg(z).
double resource_allocation(const Graph& train, VertexId u, VertexId v);

/// Scores every non-edge pair at distance 2 (the only pairs any of the three
/// scorers can rank above zero) and returns the global descending ranking.
/// Directed mode ranks ordered pairs, excluding (u,v) only when the arc u->v
/// exists in train.
ScoredRanking score_all(const Graph& train, Scorer scorer,
                        const ScoreOptions& options = {});

} // namespace lpeval
