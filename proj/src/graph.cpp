#include "lpeval/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <unordered_map>

namespace lpeval {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::bounds: return "bounds";
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::undefined_ratio: return "undefined_ratio";
    case ErrorKind::degenerate_split: return "degenerate_split";
    case ErrorKind::resource: return "resource";
    case ErrorKind::consistency: return "consistency";
    case ErrorKind::wrong_curve_kind: return "wrong_curve_kind";
    case ErrorKind::division: return "division";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

std::string_view to_string(Mode mode) {
  return mode == Mode::directed ? "directed" : "undirected";
}

Mode mode_from_string(std::string_view text) {
  if (text == "directed") return Mode::directed;
  if (text == "undirected") return Mode::undirected;
  throw LpError(ErrorKind::parameter,
                "unknown mode '" + std::string(text) +
                    "' (expected directed|undirected)");
}

Graph Graph::from_edges(Mode mode, std::vector<Edge> edges,
                        VertexId vertex_count_hint) {
  VertexId max_id = 0;
  for (auto& [u, v] : edges) {
    if (u == v) {
      throw LpError(ErrorKind::parameter,
                    "self-loop " + std::to_string(u) + "->" + std::to_string(v) +
                        " is not representable");
    }
    if (mode == Mode::undirected && u > v) std::swap(u, v);
    max_id = std::max({max_id, u, v});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.mode_ = mode;
  g.edge_count_ = std::ssize(edges);
  g.vertex_count_ = edges.empty() ? vertex_count_hint
                                  : std::max(vertex_count_hint, max_id + 1);

  const std::size_t n = g.vertex_count_;
  auto build_csr = [n](const std::vector<Edge>& pairs, bool both_directions,
                       bool reverse, std::vector<std::int64_t>& offsets,
                       std::vector<VertexId>& adjacency) {
    offsets.assign(n + 1, 0);
    for (const auto& [u, v] : pairs) {
      if (both_directions) {
        ++offsets[u + 1];
        ++offsets[v + 1];
      } else {
        ++offsets[(reverse ? v : u) + 1];
      }
    }
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    adjacency.resize(static_cast<std::size_t>(offsets[n]));
    std::vector<std::int64_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [u, v] : pairs) {
      if (both_directions) {
        adjacency[static_cast<std::size_t>(cursor[u]++)] = v;
        adjacency[static_cast<std::size_t>(cursor[v]++)] = u;
      } else if (reverse) {
        adjacency[static_cast<std::size_t>(cursor[v]++)] = u;
      } else {
        adjacency[static_cast<std::size_t>(cursor[u]++)] = v;
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(adjacency.begin() + offsets[v], adjacency.begin() + offsets[v + 1]);
    }
  };

  if (mode == Mode::undirected) {
    build_csr(edges, /*both_directions=*/true, /*reverse=*/false, g.offsets_,
              g.adjacency_);
  } else {
    build_csr(edges, false, false, g.offsets_, g.adjacency_);
    build_csr(edges, false, true, g.in_offsets_, g.in_adjacency_);
  }
  return g;
}

namespace {

void check_vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) {
    throw LpError(ErrorKind::bounds,
                  "vertex " + std::to_string(v) + " out of range [0, " +
                      std::to_string(g.vertex_count()) + ")");
  }
}

} // namespace

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(*this, v);
  return {adjacency_.data() + offsets_[v],
          static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
}

std::span<const VertexId> Graph::in_neighbors(VertexId v) const {
  if (mode_ == Mode::undirected) return neighbors(v);
  check_vertex(*this, v);
  return {in_adjacency_.data() + in_offsets_[v],
          static_cast<std::size_t>(in_offsets_[v + 1] - in_offsets_[v])};
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto nbrs = neighbors(u);
  check_vertex(*this, v);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (VertexId u = 0; u < vertex_count_; ++u) {
    for (VertexId v : neighbors(u)) {
      if (mode_ == Mode::undirected && v < u) continue;
      out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

struct ParsedLine {
  std::string_view first;
  std::string_view second;
  bool skip = false;
};

ParsedLine split_line(std::string_view line, std::int64_t line_no) {
  ParsedLine result;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == '\r'))
      ++pos;
  };
  auto take_token = [&]() -> std::string_view {
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' &&
           line[pos] != '\r')
      ++pos;
    return line.substr(start, pos - start);
  };

  skip_ws();
  if (pos == line.size() || line[pos] == '#') {
    result.skip = true;
    return result;
  }
  result.first = take_token();
  skip_ws();
  if (pos == line.size()) {
    throw LpError(ErrorKind::parse, "line " + std::to_string(line_no) +
                                        ": expected two tokens, found one");
  }
  result.second = take_token();
  skip_ws();
  if (pos != line.size()) {
    throw LpError(ErrorKind::parse, "line " + std::to_string(line_no) +
                                        ": trailing content after edge");
  }
  return result;
}

VertexId parse_vertex(std::string_view token, std::int64_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw LpError(ErrorKind::parse,
                  "line " + std::to_string(line_no) + ": token '" +
                      std::string(token) + "' is not a non-negative integer");
  }
  if (value >= std::numeric_limits<VertexId>::max()) {
    throw LpError(ErrorKind::parse, "line " + std::to_string(line_no) +
                                        ": vertex id " + std::string(token) +
                                        " out of range");
  }
  return static_cast<VertexId>(value);
}

template <typename EdgeFn>
LoadStats scan_edge_lines(std::istream& in, EdgeFn&& on_edge) {
  LoadStats stats;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    ParsedLine parsed = split_line(line, line_no);
    if (parsed.skip) continue;
    ++stats.lines_read;
    on_edge(parsed, line_no, stats);
  }
  return stats;
}

} // namespace

LoadResult load_edge_list(std::istream& in, Mode mode) {
  std::vector<Edge> edges;
  LoadStats stats =
      scan_edge_lines(in, [&](const ParsedLine& parsed, std::int64_t line_no,
                              LoadStats& s) {
        VertexId u = parse_vertex(parsed.first, line_no);
        VertexId v = parse_vertex(parsed.second, line_no);
        if (u == v) {
          ++s.self_loops_dropped;
          return;
        }
        edges.emplace_back(u, v);
      });
  std::int64_t kept = std::ssize(edges);
  LoadResult result{Graph::from_edges(mode, std::move(edges)), stats};
  result.stats.duplicates_collapsed = kept - result.graph.edge_count();
  return result;
}

LoadResult load_edge_list_file(const std::filesystem::path& path, Mode mode) {
  std::ifstream in(path);
  if (!in) {
    throw LpError(ErrorKind::io, "cannot open '" + path.string() + "' for reading");
  }
  return load_edge_list(in, mode);
}

LabeledLoadResult load_labeled_edge_list(std::istream& in, Mode mode) {
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  auto intern = [&](std::string_view token) {
    auto [it, inserted] = ids.try_emplace(std::string(token),
                                          static_cast<VertexId>(labels.size()));
    if (inserted) labels.emplace_back(it->first);
    return it->second;
  };
  LoadStats stats =
      scan_edge_lines(in, [&](const ParsedLine& parsed, std::int64_t,
                              LoadStats& s) {
        VertexId u = intern(parsed.first);
        VertexId v = intern(parsed.second);
        if (u == v) {
          ++s.self_loops_dropped;
          return;
        }
        edges.emplace_back(u, v);
      });
  std::int64_t kept = std::ssize(edges);
  LabeledLoadResult result{
      Graph::from_edges(mode, std::move(edges),
                        static_cast<VertexId>(labels.size())),
      std::move(labels), stats};
  result.stats.duplicates_collapsed = kept - result.graph.edge_count();
  return result;
}

LabeledLoadResult load_labeled_edge_list_file(const std::filesystem::path& path,
                                              Mode mode) {
  std::ifstream in(path);
  if (!in) {
    throw LpError(ErrorKind::io, "cannot open '" + path.string() + "' for reading");
  }
  return load_labeled_edge_list(in, mode);
}

void write_canonical_edges(const Graph& g, std::ostream& out) {
  char buf[32];
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (g.mode() == Mode::undirected && v < u) continue;
      char* p = buf;
      p = std::to_chars(p, buf + sizeof buf, u).ptr;
      *p++ = ' ';
      p = std::to_chars(p, buf + sizeof buf, v).ptr;
      *p++ = '\n';
      out.write(buf, p - buf);
    }
  }
}

void write_canonical_edges_file(const Graph& g,
                                const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw LpError(ErrorKind::io, "cannot open '" + path.string() + "' for writing");
  }
  write_canonical_edges(g, out);
  if (!out) {
    throw LpError(ErrorKind::io, "failed writing '" + path.string() + "'");
  }
}

std::int64_t possible_edge_count(VertexId vertex_count, Mode mode) {
  const auto n = static_cast<unsigned __int128>(vertex_count);
  unsigned __int128 pairs = n * (n - (n > 0 ? 1 : 0));
  if (mode == Mode::undirected) pairs /= 2;
  if (pairs > static_cast<unsigned __int128>(
                  std::numeric_limits<std::int64_t>::max())) {
    throw LpError(ErrorKind::parameter,
                  "vertex count too large: candidate-pair count overflows");
  }
  return static_cast<std::int64_t>(pairs);
}

ImbalanceReport class_imbalance(const Graph& g, double test_fraction) {
  if (!(test_fraction >= 0.0 && test_fraction <= 1.0)) {
    throw LpError(ErrorKind::parameter, "test_fraction must lie in [0,1]");
  }
  ImbalanceReport report;
  report.possible_edges = possible_edge_count(g.vertex_count(), g.mode());
  report.positives = g.edge_count();
  report.negatives = report.possible_edges - report.positives;
  if (report.positives == 0) {
    throw LpError(ErrorKind::undefined_ratio,
                  "graph has no edges; the imbalance ratio is undefined");
  }
  if (test_fraction > 0.0) {
    report.test_positives = static_cast<std::int64_t>(
        test_fraction * static_cast<double>(report.positives));
    if (report.test_positives == 0) {
      throw LpError(ErrorKind::undefined_ratio,
                    "test fraction keeps no positive edges; ratio undefined");
    }
    report.ratio = static_cast<double>(report.negatives) /
                   static_cast<double>(report.test_positives);
  } else {
    report.ratio = static_cast<double>(report.negatives) /
                   static_cast<double>(report.positives);
  }
  return report;
}

std::int64_t error_magnitude_at_fpr(const Graph& g, double fpr) {
  if (!(fpr >= 0.0 && fpr <= 1.0)) {
    throw LpError(ErrorKind::parameter, "fpr must lie in [0,1]");
  }
  std::int64_t negatives =
      possible_edge_count(g.vertex_count(), g.mode()) - g.edge_count();
  return std::llround(fpr * static_cast<double>(negatives));
}

} // namespace lpeval
