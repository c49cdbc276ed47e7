#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "slg/edge_set.hpp"
#include "slg/errors.hpp"
#include "slg/graph.hpp"
#include "slg/superline.hpp"

namespace slg {

// Which branch of the closed-form grid formula applies.
enum class FormulaCase { trivial_1x1, path_case, both_even, both_odd, opposite_parity };

inline const char* to_string(FormulaCase c) {
  switch (c) {
  case FormulaCase::trivial_1x1: return "trivial_1x1";
  case FormulaCase::path_case: return "path_case";
  case FormulaCase::both_even: return "both_even";
  case FormulaCase::both_odd: return "both_odd";
  case FormulaCase::opposite_parity: return "opposite_parity";
  }
  return "?";
}

struct FormulaResult {
  std::uint64_t r = 0;
  FormulaCase formula_case = FormulaCase::trivial_1x1;
};

inline FormulaCase classify(std::uint64_t n, std::uint64_t m) {
  if (n == 1 && m == 1) return FormulaCase::trivial_1x1;
  if (n == 1 || m == 1) return FormulaCase::path_case;
  if (n % 2 == 0 && m % 2 == 0) return FormulaCase::both_even;
  if (n % 2 == 1 && m % 2 == 1) return FormulaCase::both_odd;
  return FormulaCase::opposite_parity;
}

/// Closed-form line completion number of P_n x P_m (n columns, m rows).
/// Every division below is exact for the parity class it appears in.
inline FormulaResult lc_grid_formula(std::uint64_t n, std::uint64_t m) {
  if (n < 1 || m < 1)
    throw invalid_argument_error("grid dimensions must be >= 1 (got n=" + std::to_string(n) +
                                 ", m=" + std::to_string(m) + ")");
  const auto lo = std::min(n, m);
  const auto hi = std::max(n, m);
  const auto c = classify(n, m);
  switch (c) {
  case FormulaCase::trivial_1x1: return {0, c};
  case FormulaCase::path_case: return {hi / 2, c};
  case FormulaCase::both_even: return {m * n + 1 - (m + n) / 2 - lo / 2, c};
  case FormulaCase::both_odd: return {m * n - (m + n) / 2 - (lo + 1) / 2, c};
  case FormulaCase::opposite_parity: return {m * n + 1 - lo - (hi + 1) / 2, c};
  }
  return {0, c};
}

// lc of the path on k vertices: floor(k / 2).
inline std::uint64_t lc_path_formula(std::uint64_t k) {
  if (k < 1) throw invalid_argument_error("path needs at least one vertex");
  return k / 2;
}

enum class Axis { vertical, horizontal };

enum class Orientation { vertical, almost_vertical, horizontal, almost_horizontal };

inline const char* to_string(Orientation o) {
  switch (o) {
  case Orientation::vertical: return "vertical";
  case Orientation::almost_vertical: return "almost-vertical";
  case Orientation::horizontal: return "horizontal";
  case Orientation::almost_horizontal: return "almost-horizontal";
  }
  return "?";
}

inline Orientation orientation_from_string(std::string_view s) {
  if (s == "vertical") return Orientation::vertical;
  if (s == "almost-vertical") return Orientation::almost_vertical;
  if (s == "horizontal") return Orientation::horizontal;
  if (s == "almost-horizontal") return Orientation::almost_horizontal;
  throw invalid_argument_error("unknown orientation '" + std::string(s) + "'");
}

inline Axis axis_of(Orientation o) {
  return (o == Orientation::vertical || o == Orientation::almost_vertical) ? Axis::vertical
                                                                          : Axis::horizontal;
}

// Orientation that slice() produces for the given axis.
inline Orientation expected_orientation(const GridSpec& spec, Axis axis) {
  if (axis == Axis::vertical)
    return spec.cols % 2 == 0 ? Orientation::vertical : Orientation::almost_vertical;
  return spec.rows % 2 == 0 ? Orientation::horizontal : Orientation::almost_horizontal;
}

/// Certificate that L_|A|(grid) is not complete: A, B, removed partition the
/// grid's edges and no edge of A touches an edge of B.
struct Slicing {
  EdgeSet a;
  EdgeSet b;
  EdgeSet removed;
  Orientation orientation = Orientation::vertical;
  GridSpec spec;
};

/// Number of removed edges the construction leaves for the given axis.
///
/// Cutting across the columns (vertical family), with n = cols, m = rows:
///   n even        -> m      (straight cut)
///   n odd, m even -> m + 1  (zigzag switching sides at row m/2)
///   both odd      -> m + 3  (zigzag around an isolated middle cell)
/// The horizontal family is the transpose. On a single row or column the
/// isolated cell has only two incident edges, which gives 2 instead of m + 3.
inline std::size_t expected_removed_count(const GridSpec& spec, Axis axis) {
  const GridSpec s = axis == Axis::vertical ? spec : spec.transposed();
  const std::size_t n = s.cols;
  const std::size_t m = s.rows;
  if (n % 2 == 0) return m;
  if (m % 2 == 0) return m + 1;
  return m == 1 ? 2 : m + 3;
}

namespace detail {

enum class Side : unsigned char { a, b, isolated };

// Side of cell (row, col) for the vertical family on a cols x rows grid.
inline Side vertical_side(std::size_t cols, std::size_t rows, std::size_t row, std::size_t col) {
  if (cols % 2 == 0) return col < cols / 2 ? Side::a : Side::b;
  const std::size_t center = (cols - 1) / 2;
  if (col < center) return Side::a;
  if (col > center) return Side::b;
  if (rows % 2 == 0) return row < rows / 2 ? Side::a : Side::b;
  const std::size_t middle = (rows - 1) / 2;
  if (row == middle) return Side::isolated;
  return row < middle ? Side::a : Side::b;
}

} // namespace detail

/// Slicing along one axis. Each cell is assigned to side A, side B, or left
/// isolated; an edge goes to A or B when both of its cells do and is removed
/// otherwise. Horizontal slicing is vertical slicing of the transposed grid.
inline Slicing slice(const GridSpec& spec, Axis axis) {
  validate(spec);
  if (axis == Axis::vertical && spec.cols < 2)
    throw invalid_argument_error("vertical slicing needs at least 2 columns");
  if (axis == Axis::horizontal && spec.rows < 2)
    throw invalid_argument_error("horizontal slicing needs at least 2 rows");

  const std::size_t edge_count = spec.edge_count();
  auto side = [&](std::size_t row, std::size_t col) {
    if (axis == Axis::vertical) return detail::vertical_side(spec.cols, spec.rows, row, col);
    return detail::vertical_side(spec.rows, spec.cols, col, row);
  };

  Slicing out{EdgeSet(edge_count), EdgeSet(edge_count), EdgeSet(edge_count),
              expected_orientation(spec, axis), spec};
  auto place = [&](std::size_t edge, detail::Side s1, detail::Side s2) {
    if (s1 == s2 && s1 == detail::Side::a) out.a.insert(edge);
    else if (s1 == s2 && s1 == detail::Side::b) out.b.insert(edge);
    else out.removed.insert(edge);
  };
  for (std::size_t i = 0; i < spec.rows; ++i)
    for (std::size_t j = 0; j + 1 < spec.cols; ++j)
      place(spec.horizontal_edge(i, j), side(i, j), side(i, j + 1));
  for (std::size_t i = 0; i + 1 < spec.rows; ++i)
    for (std::size_t j = 0; j < spec.cols; ++j)
      place(spec.vertical_edge(i, j), side(i, j), side(i + 1, j));
  return out;
}

/// The slicing with the larger sides among both axes; ties go vertical.
/// Needs at least 2 rows and 2 columns (paths use path_witness()).
inline Slicing best_slicing(const GridSpec& spec) {
  validate(spec);
  if (spec.cols < 2 || spec.rows < 2)
    throw invalid_argument_error("best_slicing needs a grid with at least 2 rows and 2 columns");
  auto vertical = slice(spec, Axis::vertical);
  auto horizontal = slice(spec, Axis::horizontal);
  return horizontal.a.size() > vertical.a.size() ? horizontal : vertical;
}

/// Witness for a path on k >= 4 vertices: the two runs of floor(k/2) - 1
/// consecutive edges starting at the pendant vertices.
inline WitnessPair path_witness(std::size_t k) {
  if (k < 4) throw invalid_argument_error("a path needs at least 4 vertices to have a witness");
  const std::size_t edges = k - 1;
  const std::size_t r = k / 2 - 1;
  WitnessPair w{EdgeSet(edges), EdgeSet(edges), r};
  for (std::size_t i = 0; i < r; ++i) {
    w.first.insert(i);
    w.second.insert(edges - r + i);
  }
  return w;
}

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool all_passed() const {
    return std::ranges::all_of(checks, [](const auto& c) { return c.passed; });
  }
};

/// Runs the five certificate checks on a slicing of g = grid(s.spec):
/// partition, non-adjacency (pair by pair, not through masks), equal sides,
/// removed-edge count for the parity class, and |A| + 1 against the formula.
/// Throws invalid_argument_error when g is not the grid the slicing names.
inline VerificationReport verify_slicing(const Graph& g, const Slicing& s) {
  validate(s.spec);
  if (g.vertex_count() != s.spec.vertex_count() || g.edge_count() != s.spec.edge_count() ||
      !(g == grid(s.spec, kNoEdgeCap)))
    throw invalid_argument_error("graph does not match grid cols=" + std::to_string(s.spec.cols) +
                                 " rows=" + std::to_string(s.spec.rows));
  for (const EdgeSet* set : {&s.a, &s.b, &s.removed})
    if (set->universe() != g.edge_count())
      throw invalid_argument_error("slicing edge sets do not belong to this grid");

  VerificationReport report;

  {
    const bool disjoint =
        !s.a.intersects(s.b) && !s.a.intersects(s.removed) && !s.b.intersects(s.removed);
    const bool covering = (s.a | s.b | s.removed).size() == g.edge_count();
    std::string detail = "|A|+|B|+|R| = " +
                         std::to_string(s.a.size() + s.b.size() + s.removed.size()) + ", |E| = " +
                         std::to_string(g.edge_count());
    if (!disjoint) detail += ", sets overlap";
    if (!covering) detail += ", some edges unassigned";
    report.checks.push_back({"partition", disjoint && covering, detail});
  }
  {
    const bool adjacent = sets_adjacent_pairwise(g, s.a, s.b);
    report.checks.push_back({"non-adjacent", !adjacent,
                             adjacent ? "an edge of A shares an endpoint with an edge of B"
                                      : "no edge of A touches an edge of B"});
  }
  report.checks.push_back({"equal-size", s.a.size() == s.b.size(),
                           "|A| = " + std::to_string(s.a.size()) +
                               ", |B| = " + std::to_string(s.b.size())});
  {
    const Axis axis = axis_of(s.orientation);
    const bool feasible = axis == Axis::vertical ? s.spec.cols >= 2 : s.spec.rows >= 2;
    const bool label_ok = feasible && s.orientation == expected_orientation(s.spec, axis);
    const std::size_t expected = expected_removed_count(s.spec, axis);
    std::string detail = "|R| = " + std::to_string(s.removed.size()) + ", expected " +
                         std::to_string(expected) + " for " + to_string(s.orientation);
    if (!label_ok) detail += " (orientation does not match grid parity)";
    report.checks.push_back(
        {"removed-count", label_ok && s.removed.size() == expected, detail});
  }
  {
    const auto formula = lc_grid_formula(s.spec.cols, s.spec.rows);
    report.checks.push_back({"formula-bound", s.a.size() + 1 == formula.r,
                             "|A| + 1 = " + std::to_string(s.a.size() + 1) + ", formula = " +
                                 std::to_string(formula.r) + " (" +
                                 to_string(formula.formula_case) + ")"});
  }
  return report;
}

} // namespace slg
