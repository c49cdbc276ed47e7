#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slg/edge_set.hpp"
#include "slg/errors.hpp"

namespace slg {

inline constexpr std::size_t kDefaultEdgeCap = 4096;
inline constexpr std::size_t kNoEdgeCap = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kMaxVertices = std::size_t{1} << 28;

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph.
///
/// Edges keep the index order they were given in; each stored edge has
/// u < v. Construction rejects self-loops, duplicate edges (in either
/// orientation) and out-of-range endpoints instead of repairing them.
///
/// The per-edge adjacency masks (edges sharing an endpoint, excluding the
/// edge itself) are built on first use and shared between copies. Building
/// them is thread-safe, so a Graph can be read from several threads.
class Graph {
public:
  Graph() : Graph(0, {}) {}

  Graph(std::size_t vertex_count, std::vector<Edge> edges, std::size_t max_edges = kDefaultEdgeCap)
      : state_(std::make_shared<State>()) {
    if (edges.size() > max_edges)
      throw capacity_error("graph has " + std::to_string(edges.size()) +
                           " edges, above the cap of " + std::to_string(max_edges));
    if (vertex_count > kMaxVertices)
      throw capacity_error("graph has " + std::to_string(vertex_count) +
                           " vertices, above the limit of " + std::to_string(kMaxVertices));
    state_->vertex_count = vertex_count;
    state_->incident.resize(vertex_count);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (u == v) throw invalid_argument_error("self-loop at vertex " + std::to_string(u));
      if (u >= vertex_count || v >= vertex_count)
        throw invalid_argument_error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                     ") has an endpoint >= vertex count " +
                                     std::to_string(vertex_count));
      if (u > v) std::swap(u, v);
      edges[i] = {u, v};
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto [u, v] = edges[i];
      auto& inc = state_->incident[u];
      for (auto j : inc) {
        if (edges[j].v == v)
          throw invalid_argument_error("duplicate edge (" + std::to_string(u) + ", " +
                                       std::to_string(v) + ") at indices " +
                                       std::to_string(j) + " and " + std::to_string(i));
      }
      inc.push_back(i);
      state_->incident[v].push_back(i);
    }
    state_->edges = std::move(edges);
  }

  std::size_t vertex_count() const noexcept { return state_->vertex_count; }
  std::size_t edge_count() const noexcept { return state_->edges.size(); }
  std::span<const Edge> edges() const noexcept { return state_->edges; }

  const Edge& edge(std::size_t i) const {
    check_edge(i);
    return state_->edges[i];
  }

  // Edge indices incident to v, ascending.
  std::span<const std::size_t> incident_edges(std::size_t v) const {
    if (v >= vertex_count())
      throw invalid_argument_error("vertex " + std::to_string(v) + " out of range");
    return state_->incident[v];
  }

  std::size_t degree(std::size_t v) const { return incident_edges(v).size(); }

  std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const {
    if (u >= vertex_count() || v >= vertex_count()) return std::nullopt;
    if (u > v) std::swap(u, v);
    for (auto i : state_->incident[u])
      if (state_->edges[i].v == v) return i;
    return std::nullopt;
  }

  // Edges sharing at least one endpoint with edge i, never i itself.
  const EdgeSet& adjacency(std::size_t i) const {
    check_edge(i);
    return masks()[i];
  }

  EdgeSet empty_edge_set() const { return EdgeSet(edge_count()); }
  EdgeSet all_edges() const { return EdgeSet::full(edge_count()); }

  std::vector<std::size_t> degree_sequence() const {
    std::vector<std::size_t> d(vertex_count());
    for (std::size_t v = 0; v < d.size(); ++v) d[v] = state_->incident[v].size();
    std::sort(d.begin(), d.end());
    return d;
  }

  // Structural equality: same vertex count and identical indexed edge list.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() &&
           std::ranges::equal(a.edges(), b.edges());
  }

private:
  struct State {
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> incident;
    std::once_flag masks_once;
    std::vector<EdgeSet> masks;
  };

  void check_edge(std::size_t i) const {
    if (i >= edge_count())
      throw invalid_argument_error("edge index " + std::to_string(i) + " out of range for " +
                                   std::to_string(edge_count()) + " edges");
  }

  const std::vector<EdgeSet>& masks() const {
    std::call_once(state_->masks_once, [s = state_.get()] {
      const std::size_t m = s->edges.size();
      s->masks.assign(m, EdgeSet(m));
      for (std::size_t i = 0; i < m; ++i) {
        for (auto end : {s->edges[i].u, s->edges[i].v})
          for (auto j : s->incident[end])
            if (j != i) s->masks[i].insert(j);
      }
    });
    return state_->masks;
  }

  std::shared_ptr<State> state_;
};

/// Grid dimensions: `cols` is the length n of each horizontal path,
/// `rows` the length m of each vertical path.
///
/// Vertex of cell (row i, col j) is i * cols + j. Edge indices list every
/// horizontal edge row-major first, then every vertical edge row-major:
///   horizontal (i, j)-(i, j+1): i * (cols - 1) + j
///   vertical   (i, j)-(i+1, j): rows * (cols - 1) + i * cols + j
struct GridSpec {
  std::size_t cols = 1;
  std::size_t rows = 1;

  std::size_t vertex_count() const noexcept { return cols * rows; }
  std::size_t edge_count() const noexcept { return 2 * cols * rows - cols - rows; }
  std::size_t horizontal_edge_count() const noexcept { return rows * (cols - 1); }

  std::size_t vertex_id(std::size_t row, std::size_t col) const noexcept { return row * cols + col; }

  std::size_t horizontal_edge(std::size_t row, std::size_t col) const noexcept {
    return row * (cols - 1) + col;
  }
  std::size_t vertical_edge(std::size_t row, std::size_t col) const noexcept {
    return horizontal_edge_count() + row * cols + col;
  }

  GridSpec transposed() const noexcept { return {rows, cols}; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

inline void validate(const GridSpec& spec) {
  if (spec.cols < 1 || spec.rows < 1)
    throw invalid_argument_error("grid dimensions must be >= 1 (got cols=" +
                                 std::to_string(spec.cols) + ", rows=" +
                                 std::to_string(spec.rows) + ")");
}

// Path on k vertices; edge i joins vertices i and i+1.
inline Graph path(std::size_t k, std::size_t max_edges = kDefaultEdgeCap) {
  if (k == 0) throw invalid_argument_error("path needs at least one vertex");
  std::vector<Edge> edges;
  edges.reserve(k - 1);
  for (std::size_t i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  return Graph(k, std::move(edges), max_edges);
}

/// Cartesian product g □ h.
///
/// Vertex (a, b) gets id a * |V(h)| + b. Edges come in two blocks: first the
/// copies of h's edges, ordered by a then by h's edge index; then the copies
/// of g's edges, ordered by g's edge index then by b. With g = path(rows)
/// and h = path(cols) this reproduces grid() exactly, indices included.
inline Graph cartesian_product(const Graph& g, const Graph& h, std::size_t max_edges = kDefaultEdgeCap) {
  constexpr auto limit = std::numeric_limits<std::size_t>::max();
  const std::size_t vg = g.vertex_count();
  const std::size_t vh = h.vertex_count();
  if (vg != 0 && vh > limit / vg) throw capacity_error("product vertex count overflows");
  const std::size_t vertices = vg * vh;

  auto mul = [&](std::size_t a, std::size_t b) {
    if (a != 0 && b > limit / a) throw capacity_error("product edge count overflows");
    return a * b;
  };
  const std::size_t h_copies = mul(vg, h.edge_count());
  const std::size_t g_copies = mul(g.edge_count(), vh);
  if (h_copies > limit - g_copies) throw capacity_error("product edge count overflows");
  if (h_copies + g_copies > max_edges)
    throw capacity_error("product has " + std::to_string(h_copies + g_copies) +
                         " edges, above the cap of " + std::to_string(max_edges));

  std::vector<Edge> edges;
  edges.reserve(h_copies + g_copies);
  for (std::size_t a = 0; a < vg; ++a)
    for (const auto& e : h.edges()) edges.push_back({a * vh + e.u, a * vh + e.v});
  for (const auto& e : g.edges())
    for (std::size_t b = 0; b < vh; ++b) edges.push_back({e.u * vh + b, e.v * vh + b});
  return Graph(vertices, std::move(edges), max_edges);
}

// P_cols x P_rows with the numbering documented on GridSpec.
inline Graph grid(const GridSpec& spec, std::size_t max_edges = kDefaultEdgeCap) {
  validate(spec);
  return cartesian_product(path(spec.rows, kNoEdgeCap), path(spec.cols, kNoEdgeCap), max_edges);
}

inline bool edges_adjacent(const Graph& g, std::size_t i, std::size_t j) {
  const auto& a = g.edge(i);
  const auto& b = g.edge(j);
  if (i == j) return false;
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

/// Classical line graph: vertex k stands for edge k of g.
///
/// Result edges are emitted in ascending (i, j) order, i < j. The edge cap of
/// the input does not apply to the result.
inline Graph line_graph(const Graph& g, std::size_t max_edges = kNoEdgeCap) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    for (auto j : g.adjacency(i).indices())
      if (j > i) edges.push_back({i, j});
  return Graph(g.edge_count(), std::move(edges), max_edges);
}

} // namespace slg
