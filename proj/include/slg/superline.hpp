#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slg/combinations.hpp"
#include "slg/edge_set.hpp"
#include "slg/errors.hpp"
#include "slg/graph.hpp"

namespace slg {

inline constexpr std::uint64_t kDefaultPairBudget = 1'000'000'000;
inline constexpr std::uint64_t kDefaultVertexCap = 100'000;

/// Two distinct equal-size edge sets with no edge of one adjacent to an edge
/// of the other. Proves that L_r(G) is not complete for r = first.size().
struct WitnessPair {
  EdgeSet first;
  EdgeSet second;
  std::size_t r = 0;
};

enum class LcMethod { formula, brute_force };

inline const char* to_string(LcMethod m) {
  return m == LcMethod::formula ? "formula" : "brute-force";
}

struct LcResult {
  std::size_t r = 0;
  LcMethod method = LcMethod::brute_force;
  std::optional<WitnessPair> witness_at_r_minus_1;
};

struct MaxNonadjacent {
  std::size_t r_max = 0;
  WitnessPair witness;
};

struct SuperLineGraph {
  Graph graph;
  // labels[k] is the edge subset represented by vertex k; lexicographic order.
  std::vector<EdgeSet> labels;
};

namespace detail {

inline void check_owner(const Graph& g, const EdgeSet& s, const char* name) {
  if (s.universe() != g.edge_count())
    throw invalid_argument_error(std::string("edge set ") + name + " has universe " +
                                 std::to_string(s.universe()) + " but the graph has " +
                                 std::to_string(g.edge_count()) + " edges");
}

inline void check_index_range(const Graph& g, std::size_t r) {
  if (r < 1 || r > g.edge_count())
    throw invalid_argument_error("index r=" + std::to_string(r) + " outside [1, " +
                                 std::to_string(g.edge_count()) + "]");
}

// Counts subset tests. One test = one r-subset S checked against every
// candidate partner at once through its neighbourhood mask.
class TestBudget {
public:
  explicit TestBudget(std::uint64_t limit) : limit_(limit) {}

  void spend(std::size_t last_decided) {
    if (used_ == limit_)
      throw budget_error("subset test budget of " + std::to_string(limit_) +
                             " exhausted before a decision",
                         last_decided);
    ++used_;
  }

  std::uint64_t used() const noexcept { return used_; }

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Lexicographically first pair (S, T), S < T, of r-subsets with no
/// cross-adjacent edges. Overlapping pairs are included.
///
/// For a fixed S the valid partners are exactly the r-subsets of
/// allowed(S) = complement of the neighbourhood of S, minus S itself. The
/// relation is symmetric, so at the first S that has any partner every
/// partner is lexicographically larger than S, and the smallest one is the
/// lowest r indices of allowed(S), or their successor if that equals S.
inline std::optional<WitnessPair> first_nonadjacent_pair(const Graph& g, std::size_t r,
                                                         TestBudget& budget,
                                                         std::size_t last_decided) {
  using word = EdgeSet::word_type;
  const std::size_t m = g.edge_count();
  const auto full = EdgeSet::full(m);
  const std::size_t words = full.words().size();
  std::vector<word> nbr(words);
  std::vector<std::size_t> lowest;
  lowest.reserve(r + 1);

  KSubsets subsets(m, r);
  do {
    budget.spend(last_decided);
    const auto& s = subsets.current();
    std::fill(nbr.begin(), nbr.end(), word{0});
    for (auto i : s) {
      const auto adj = g.adjacency(i).words();
      for (std::size_t w = 0; w < words; ++w) nbr[w] |= adj[w];
    }

    // Lowest r + 1 indices of allowed(S).
    lowest.clear();
    for (std::size_t w = 0; w < words && lowest.size() <= r; ++w) {
      word bits = ~nbr[w] & full.words()[w];
      while (bits && lowest.size() <= r) {
        lowest.push_back(w * EdgeSet::word_bits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    if (lowest.size() < r) continue;

    std::vector<std::size_t> t(lowest.begin(), lowest.begin() + static_cast<std::ptrdiff_t>(r));
    if (t == s) {
      if (lowest.size() <= r) continue; // allowed(S) == S
      t.back() = lowest[r];
    }
    return WitnessPair{EdgeSet(m, s), EdgeSet(m, t), r};
  } while (subsets.next());
  return std::nullopt;
}

} // namespace detail

// Union of the adjacency masks of the edges in s.
inline EdgeSet neighbourhood(const Graph& g, const EdgeSet& s) {
  detail::check_owner(g, s, "S");
  EdgeSet out(g.edge_count());
  for (auto i : s.indices()) out |= g.adjacency(i);
  return out;
}

// True iff some s in S and t in T are distinct edges sharing an endpoint.
inline bool sets_adjacent(const Graph& g, const EdgeSet& s, const EdgeSet& t) {
  detail::check_owner(g, s, "S");
  detail::check_owner(g, t, "T");
  return neighbourhood(g, s).intersects(t);
}

// Same predicate, evaluated pair by pair from the endpoint lists.
inline bool sets_adjacent_pairwise(const Graph& g, const EdgeSet& s, const EdgeSet& t) {
  detail::check_owner(g, s, "S");
  detail::check_owner(g, t, "T");
  const auto ti = t.indices();
  for (auto a : s.indices()) {
    const auto& ea = g.edge(a);
    for (auto b : ti) {
      if (a == b) continue;
      const auto& eb = g.edge(b);
      if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v) return true;
    }
  }
  return false;
}

/// L_r(G): one vertex per r-subset of edges, in lexicographic order, adjacent
/// when the subsets are (sets_adjacent). Throws capacity_error when C(|E|, r)
/// exceeds vertex_cap.
inline SuperLineGraph super_line_graph(const Graph& g, std::size_t r,
                                       std::uint64_t vertex_cap = kDefaultVertexCap) {
  detail::check_index_range(g, r);
  const auto count = binomial(g.edge_count(), r);
  if (count > vertex_cap)
    throw capacity_error("L_" + std::to_string(r) + " would have C(" +
                         std::to_string(g.edge_count()) + ", " + std::to_string(r) + ") = " +
                         std::to_string(count) + " vertices, above the cap of " +
                         std::to_string(vertex_cap));

  SuperLineGraph out;
  out.labels.reserve(count);
  KSubsets subsets(g.edge_count(), r);
  do {
    out.labels.emplace_back(g.edge_count(), subsets.current());
  } while (subsets.next());

  std::vector<EdgeSet> nbrs;
  nbrs.reserve(out.labels.size());
  for (const auto& s : out.labels) nbrs.push_back(neighbourhood(g, s));

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.labels.size(); ++i)
    for (std::size_t j = i + 1; j < out.labels.size(); ++j)
      if (nbrs[i].intersects(out.labels[j])) edges.push_back({i, j});
  out.graph = Graph(out.labels.size(), std::move(edges), kNoEdgeCap);
  return out;
}

/// First pair of distinct r-subsets (lexicographic in (S, T), S < T) that are
/// not adjacent, or nullopt if L_r(G) is complete. Throws budget_error rather
/// than answering when more than `budget` subset tests would be needed.
inline std::optional<WitnessPair> find_nonadjacent_pair(const Graph& g, std::size_t r,
                                                        std::uint64_t budget = kDefaultPairBudget) {
  detail::check_index_range(g, r);
  detail::TestBudget b(budget);
  return detail::first_nonadjacent_pair(g, r, b, r - 1);
}

inline bool is_complete_index(const Graph& g, std::size_t r,
                              std::uint64_t budget = kDefaultPairBudget) {
  return !find_nonadjacent_pair(g, r, budget).has_value();
}

/// Line completion number by exhaustive search, scanning r = 1, 2, ...
/// upward. Completeness is monotone in r, so the first complete index is the
/// answer. An edgeless graph has lc = 0. The budget is shared by the whole
/// scan; budget_error::last_decided_index() is the largest r shown incomplete.
inline LcResult lc_bruteforce(const Graph& g, std::uint64_t budget = kDefaultPairBudget) {
  LcResult result{0, LcMethod::brute_force, std::nullopt};
  if (g.edge_count() == 0) return result;

  detail::TestBudget b(budget);
  std::optional<WitnessPair> previous;
  for (std::size_t r = 1; r <= g.edge_count(); ++r) {
    auto pair = detail::first_nonadjacent_pair(g, r, b, r - 1);
    if (!pair) {
      result.r = r;
      result.witness_at_r_minus_1 = std::move(previous);
      return result;
    }
    previous = std::move(pair);
  }
  // L_|E| has a single vertex, so the loop always returns.
  throw std::logic_error("lc scan passed |E| without reaching a complete index");
}

/// Largest r admitting a witness pair, found by scanning downward from
/// |E| - 1. Independent of lc_bruteforce's upward scan; when both succeed,
/// r_max + 1 == lc. nullopt when not even r = 1 has a pair.
/// On budget_error, last_decided_index() is the smallest r shown complete.
inline std::optional<MaxNonadjacent> max_nonadjacent_r(const Graph& g,
                                                       std::uint64_t budget = kDefaultPairBudget) {
  const std::size_t m = g.edge_count();
  if (m < 2) return std::nullopt;
  detail::TestBudget b(budget);
  for (std::size_t r = m - 1; r >= 1; --r) {
    if (auto pair = detail::first_nonadjacent_pair(g, r, b, r + 1))
      return MaxNonadjacent{r, std::move(*pair)};
  }
  return std::nullopt;
}

} // namespace slg
