#include "lpeval/scorers.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace lpeval {

std::string_view to_string(Scorer scorer) {
  switch (scorer) {
    case Scorer::common_neighbors: return "cn";
    case Scorer::adamic_adar: return "aa";
    case Scorer::resource_allocation: return "ra";
  }
  return "unknown";
}

Scorer scorer_from_string(std::string_view text) {
  if (text == "cn") return Scorer::common_neighbors;
  if (text == "aa") return Scorer::adamic_adar;
  if (text == "ra") return Scorer::resource_allocation;
  throw LpError(ErrorKind::parameter,
                "unknown scorer '" + std::string(text) + "' (expected cn|aa|ra)");
}

namespace {

// Symmetrized neighborhoods: borrows the CSR of an undirected graph, owns a
// merged in/out union for a directed one.
class NeighborhoodIndex {
public:
  explicit NeighborhoodIndex(const Graph& g) : graph_(&g) {
    if (g.mode() == Mode::directed) {
      const VertexId n = g.vertex_count();
      offsets_.assign(n + 1, 0);
      adjacency_.reserve(static_cast<std::size_t>(g.adjacency_size()));
      std::vector<VertexId> merged;
      for (VertexId v = 0; v < n; ++v) {
        auto out = g.neighbors(v);
        auto in = g.in_neighbors(v);
        merged.clear();
        std::set_union(out.begin(), out.end(), in.begin(), in.end(),
                       std::back_inserter(merged));
        adjacency_.insert(adjacency_.end(), merged.begin(), merged.end());
        offsets_[v + 1] = std::ssize(adjacency_);
      }
      owned_ = true;
    }
  }

  std::span<const VertexId> gamma(VertexId v) const {
    if (!owned_) return graph_->neighbors(v);
    if (v >= graph_->vertex_count()) {
      throw LpError(ErrorKind::bounds,
                    "vertex " + std::to_string(v) + " out of range [0, " +
                        std::to_string(graph_->vertex_count()) + ")");
    }
    return {adjacency_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }

  std::int64_t degree(VertexId v) const { return std::ssize(gamma(v)); }

  NeighborhoodIndex(const NeighborhoodIndex&) = delete;
  NeighborhoodIndex& operator=(const NeighborhoodIndex&) = delete;

private:
  const Graph* graph_;
  bool owned_ = false;
  std::vector<std::int64_t> offsets_;
  std::vector<VertexId> adjacency_;
};

double term_for(Scorer scorer, std::int64_t degree) {
  switch (scorer) {
    case Scorer::common_neighbors: return 1.0;
    case Scorer::adamic_adar: return 1.0 / std::log(static_cast<double>(degree));
    case Scorer::resource_allocation: return 1.0 / static_cast<double>(degree);
  }
  return 0.0;
}

double score_pair(const Graph& train, VertexId u, VertexId v, Scorer scorer) {
  if (u == v) {
    throw LpError(ErrorKind::parameter, "cannot score a self-pair");
  }
  NeighborhoodIndex index(train);
  auto gu = index.gamma(u);
  auto gv = index.gamma(v);
  double score = 0.0;
  auto iu = gu.begin();
  auto iv = gv.begin();
  // Common neighbors visited in ascending order; score_all accumulates terms
  // in the same order, so both paths produce bit-identical sums.
  while (iu != gu.end() && iv != gv.end()) {
    if (*iu < *iv) {
      ++iu;
    } else if (*iv < *iu) {
      ++iv;
    } else {
      score += term_for(scorer, index.degree(*iu));
      ++iu;
      ++iv;
    }
  }
  return score;
}

bool train_edge_exists(const Graph& train, VertexId u, VertexId v) {
  auto nbrs = train.neighbors(u); // out-neighbors: directed checks u->v only
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

} // namespace

double common_neighbors(const Graph& train, VertexId u, VertexId v) {
  return score_pair(train, u, v, Scorer::common_neighbors);
}

double adamic_adar(const Graph& train, VertexId u, VertexId v) {
  return score_pair(train, u, v, Scorer::adamic_adar);
}

double resource_allocation(const Graph& train, VertexId u, VertexId v) {
  return score_pair(train, u, v, Scorer::resource_allocation);
}

ScoredRanking score_all(const Graph& train, Scorer scorer,
                        const ScoreOptions& options) {
  if (train.edge_count() < 1) {
    throw LpError(ErrorKind::parameter, "cannot rank candidates of an empty graph");
  }
  const VertexId n = train.vertex_count();
  const bool undirected = train.mode() == Mode::undirected;
  NeighborhoodIndex index(train);

  // Wedge bound on emitted candidates: every candidate (u,v) is reached
  // through at least one middle vertex w adjacent to both.
  unsigned __int128 wedges = 0;
  for (VertexId w = 0; w < n; ++w) {
    const auto d = static_cast<unsigned __int128>(index.degree(w));
    wedges += d * (d - (d > 0 ? 1 : 0));
  }
  if (undirected) wedges /= 2;
  const std::int64_t limit = options.max_candidate_estimate > 0
                                 ? options.max_candidate_estimate
                                 : kDefaultCandidateEstimateLimit;
  if (wedges > static_cast<unsigned __int128>(limit)) {
    throw LpError(
        ErrorKind::resource,
        "estimated candidate count exceeds the memory budget of " +
            std::to_string(limit) +
            " entries; raise the budget or stream scores per source vertex");
  }

  std::vector<double> middle_term(n);
  for (VertexId w = 0; w < n; ++w) {
    const std::int64_t d = index.degree(w);
    middle_term[w] = d > 0 ? term_for(scorer, d) : 0.0;
  }

  unsigned hw = std::thread::hardware_concurrency();
  int threads = options.threads > 0 ? options.threads
                                    : static_cast<int>(hw > 0 ? hw : 1);
  threads = std::max(1, std::min<int>(threads, 64));

  constexpr VertexId kChunk = 512;
  const VertexId chunk_count = n == 0 ? 0 : (n - 1) / kChunk + 1;
  std::vector<std::vector<ScoredRanking::Entry>> chunk_entries(chunk_count);
  std::atomic<VertexId> next_chunk{0};

  auto worker = [&] {
    std::vector<double> acc(n, 0.0);
    std::vector<VertexId> touched;
    while (true) {
      VertexId chunk = next_chunk.fetch_add(1, std::memory_order_relaxed);
      if (chunk >= chunk_count) break;
      const VertexId begin = chunk * kChunk;
      const VertexId end = static_cast<VertexId>(std::min<std::uint64_t>(
          static_cast<std::uint64_t>(begin) + kChunk, n));
      auto& out = chunk_entries[chunk];
      for (VertexId u = begin; u < end; ++u) {
        for (VertexId w : index.gamma(u)) {
          const double t = middle_term[w];
          for (VertexId v : index.gamma(w)) {
            if (v == u) continue;
            if (undirected && v < u) continue;
            if (acc[v] == 0.0) touched.push_back(v);
            acc[v] += t;
          }
        }
        for (VertexId v : touched) {
          const double s = acc[v];
          acc[v] = 0.0;
          if (train_edge_exists(train, u, v)) continue;
          out.push_back({u, v, s});
        }
        touched.clear();
      }
    }
  };

  if (threads == 1 || chunk_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  ScoredRanking ranking;
  ranking.scorer = scorer;
  std::size_t total = 0;
  for (const auto& c : chunk_entries) total += c.size();
  ranking.entries.reserve(total);
  for (auto& c : chunk_entries) {
    ranking.entries.insert(ranking.entries.end(), c.begin(), c.end());
    c.clear();
    c.shrink_to_fit();
  }

  std::sort(ranking.entries.begin(), ranking.entries.end(),
            [](const ScoredRanking::Entry& a, const ScoredRanking::Entry& b) {
              if (a.score != b.score) return a.score > b.score;
              if (a.u != b.u) return a.u < b.u;
              return a.v < b.v;
            });

  ranking.tie_offsets.push_back(0);
  for (std::int64_t i = 1; i < std::ssize(ranking.entries); ++i) {
    if (ranking.entries[i].score != ranking.entries[i - 1].score) {
      ranking.tie_offsets.push_back(i);
    }
  }
  if (!ranking.entries.empty()) {
    ranking.tie_offsets.push_back(std::ssize(ranking.entries));
  }
  return ranking;
}

} // namespace lpeval
