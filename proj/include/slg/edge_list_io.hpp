#pragma once

#include <charconv>
#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "slg/edge_set.hpp"
#include "slg/errors.hpp"
#include "slg/graph.hpp"

namespace slg {

/// Edge-list text format:
///
///   # comment (anywhere on a line)
///   p <vertex_count> <edge_count>
///   <u> <v>          one line per edge, 0-based, in edge-index order
///
/// Blank lines are ignored. Errors name the offending line number.

namespace detail {

inline std::vector<std::size_t> parse_numbers(std::string_view text, std::size_t line_no) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
      ++pos;
    if (pos == text.size()) break;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} ||
        (ptr != text.data() + text.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
      throw invalid_argument_error("line " + std::to_string(line_no) + ": expected a non-negative integer in '" +
                                   std::string(text) + "'");
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

} // namespace detail

inline Graph read_edge_list(std::istream& in, std::size_t max_edges = kDefaultEdgeCap) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body(line);
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    if (body.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    if (!have_header) {
      const auto start = body.find_first_not_of(" \t");
      if (body[start] != 'p')
        throw invalid_argument_error("line " + std::to_string(line_no) +
                                     ": expected header 'p <vertex_count> <edge_count>'");
      auto nums = detail::parse_numbers(body.substr(start + 1), line_no);
      if (nums.size() != 2)
        throw invalid_argument_error("line " + std::to_string(line_no) +
                                     ": header needs exactly two numbers");
      vertex_count = nums[0];
      edge_count = nums[1];
      if (edge_count > max_edges)
        throw capacity_error("edge list declares " + std::to_string(edge_count) +
                             " edges, above the cap of " + std::to_string(max_edges));
      edges.reserve(edge_count);
      have_header = true;
      continue;
    }

    auto nums = detail::parse_numbers(body, line_no);
    if (nums.size() != 2)
      throw invalid_argument_error("line " + std::to_string(line_no) + ": expected '<u> <v>'");
    if (edges.size() == edge_count)
      throw invalid_argument_error("line " + std::to_string(line_no) + ": more than the declared " +
                                   std::to_string(edge_count) + " edges");
    edges.push_back({nums[0], nums[1]});
  }

  if (!have_header) throw invalid_argument_error("edge list has no 'p' header");
  if (edges.size() != edge_count)
    throw invalid_argument_error("edge list declares " + std::to_string(edge_count) +
                                 " edges but contains " + std::to_string(edges.size()));
  return Graph(vertex_count, std::move(edges), max_edges);
}

inline Graph parse_edge_list(std::string_view text, std::size_t max_edges = kDefaultEdgeCap) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in, max_edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

// One line per vertex: "<vertex index>: e<i1>,e<i2>,..."
inline void write_label_table(std::ostream& out, std::span<const EdgeSet> labels) {
  for (std::size_t k = 0; k < labels.size(); ++k) out << k << ": " << labels[k].to_label() << '\n';
}

} // namespace slg
