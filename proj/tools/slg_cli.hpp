#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "slg/slg.hpp"

namespace slg::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kLimitError = 3;

enum class OutputFormat { text, json };

struct CliConfig {
  OutputFormat output = OutputFormat::text;
  std::uint64_t pair_budget = kDefaultPairBudget;
  std::uint64_t vertex_cap = kDefaultVertexCap;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_argument_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_argument_error("cannot open '" + path + "'");
  return read_edge_list(in);
}

inline nlohmann::ordered_json witness_json(const std::optional<WitnessPair>& w) {
  if (!w) return nullptr;
  return {{"r", w->r}, {"S", w->first.indices()}, {"T", w->second.indices()}};
}

struct XcheckRow {
  GridSpec spec;
  std::size_t edges;
  std::uint64_t formula;
  std::size_t oracle;
};

} // namespace detail

/// Parses args (program name excluded) and runs one subcommand.
/// Exit codes: 0 ok, 1 verification or cross-check failure,
/// 2 usage/parse/validation error, 3 budget or capacity exhausted.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Super line graphs and line completion numbers of grids", "slg"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig config;
  std::string output = "text";
  app.add_option("--output", output, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--budget", config.pair_budget, "Subset test budget for exhaustive searches")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::size_t cols = 0, rows = 0;

  auto* formula_cmd = app.add_subcommand("lc-formula", "Closed-form lc of the cols x rows grid");
  formula_cmd->add_option("--cols", cols, "Grid columns (n)")->required();
  formula_cmd->add_option("--rows", rows, "Grid rows (m)")->required();

  std::string input;
  std::vector<std::size_t> grid_dims;
  std::size_t path_len = 0;
  auto* brute_cmd = app.add_subcommand("lc-brute", "lc by exhaustive search");
  auto* src_input = brute_cmd->add_option("--input", input, "Edge-list file");
  auto* src_grid = brute_cmd->add_option("--grid", grid_dims, "Grid COLS ROWS")->expected(2);
  auto* src_path = brute_cmd->add_option("--path", path_len, "Path on K vertices");
  src_input->excludes(src_grid)->excludes(src_path);
  src_grid->excludes(src_path);

  std::size_t index = 0;
  std::string out_path, labels_path;
  auto* super_cmd = app.add_subcommand("superline", "Write L_r(G) as an edge list plus label table");
  super_cmd->add_option("--index", index, "Index r")->required();
  super_cmd->add_option("--input", input, "Edge-list file")->required();
  super_cmd->add_option("--out", out_path, "Output edge-list file")->required();
  super_cmd->add_option("--labels", labels_path, "Label table file (default: <out>.labels)");
  super_cmd->add_option("--vertex-cap", config.vertex_cap, "Maximum vertices of L_r(G)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string axis = "auto";
  auto* slice_cmd = app.add_subcommand("slice", "Emit a slicing certificate as JSON");
  slice_cmd->add_option("--cols", cols, "Grid columns (n)")->required();
  slice_cmd->add_option("--rows", rows, "Grid rows (m)")->required();
  slice_cmd->add_option("--axis", axis, "Slicing axis")
      ->check(CLI::IsMember({"auto", "vertical", "horizontal"}))
      ->capture_default_str();

  std::string slicing_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a slicing certificate");
  verify_cmd->add_option("--slicing", slicing_path, "Slicing JSON file")->required();

  std::size_t max_edges = 0;
  auto* xcheck_cmd =
      app.add_subcommand("xcheck", "Compare formula and exhaustive search on small grids");
  xcheck_cmd->add_option("--max-edges", max_edges, "Largest grid edge count to sweep")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  config.output = output == "json" ? OutputFormat::json : OutputFormat::text;
  const bool json = config.output == OutputFormat::json;

  try {
    if (*formula_cmd) {
      const auto f = lc_grid_formula(cols, rows);
      if (json) {
        nlohmann::ordered_json j{{"cols", cols}, {"rows", rows}, {"lc", f.r},
                                 {"case", to_string(f.formula_case)}};
        out << j.dump() << '\n';
      } else {
        out << f.r << " (" << to_string(f.formula_case) << ")\n";
      }
      return kOk;
    }

    if (*brute_cmd) {
      Graph g;
      if (!input.empty()) g = detail::load_graph(input);
      else if (!grid_dims.empty()) {
        GridSpec spec{grid_dims[0], grid_dims[1]};
        validate(spec);
        g = grid(spec);
      } else if (*src_path) g = path(path_len);
      else throw invalid_argument_error("lc-brute needs one of --input, --grid, --path");

      const auto result = lc_bruteforce(g, config.pair_budget);
      if (json) {
        nlohmann::ordered_json j{{"vertices", g.vertex_count()},
                                 {"edges", g.edge_count()},
                                 {"lc", result.r},
                                 {"method", to_string(result.method)},
                                 {"witness", detail::witness_json(result.witness_at_r_minus_1)}};
        out << j.dump() << '\n';
      } else {
        out << "lc = " << result.r << " (" << to_string(result.method) << ")\n";
        if (const auto& w = result.witness_at_r_minus_1)
          out << "witness at r = " << w->r << ": S = {" << w->first.to_label() << "} T = {"
              << w->second.to_label() << "}\n";
      }
      return kOk;
    }

    if (*super_cmd) {
      const Graph g = detail::load_graph(input);
      const auto slg_r = super_line_graph(g, index, config.vertex_cap);
      if (labels_path.empty()) labels_path = out_path + ".labels";
      {
        std::ofstream f(out_path);
        if (!f) throw invalid_argument_error("cannot write '" + out_path + "'");
        f << "# L_" << index << " of a graph with " << g.vertex_count() << " vertices and "
          << g.edge_count() << " edges\n";
        write_edge_list(f, slg_r.graph);
      }
      {
        std::ofstream f(labels_path);
        if (!f) throw invalid_argument_error("cannot write '" + labels_path + "'");
        write_label_table(f, slg_r.labels);
      }
      const std::size_t n = slg_r.graph.vertex_count();
      const bool complete = slg_r.graph.edge_count() == n * (n - 1) / 2;
      if (json) {
        nlohmann::ordered_json j{{"index", index},          {"vertices", n},
                                 {"edges", slg_r.graph.edge_count()}, {"complete", complete},
                                 {"out", out_path},         {"labels", labels_path}};
        out << j.dump() << '\n';
      } else {
        out << "L_" << index << ": " << n << " vertices, " << slg_r.graph.edge_count() << " edges"
            << (complete ? " (complete)" : "") << '\n';
      }
      return kOk;
    }

    if (*slice_cmd) {
      GridSpec spec{cols, rows};
      validate(spec);
      if (spec.edge_count() > kDefaultEdgeCap)
        throw capacity_error("grid has " + std::to_string(spec.edge_count()) +
                             " edges, above the cap of " + std::to_string(kDefaultEdgeCap));
      const Slicing s = axis == "auto"       ? best_slicing(spec)
                        : axis == "vertical" ? slice(spec, Axis::vertical)
                                             : slice(spec, Axis::horizontal);
      out << to_json(s).dump() << '\n';
      return kOk;
    }

    if (*verify_cmd) {
      const Slicing s = parse_slicing(detail::read_file(slicing_path));
      const auto report = verify_slicing(grid(s.spec), s);
      if (json) {
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& c : report.checks)
          checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        nlohmann::ordered_json j{{"checks", checks}, {"passed", report.all_passed()}};
        out << j.dump() << '\n';
      } else {
        for (const auto& c : report.checks)
          out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
        out << (report.all_passed() ? "certificate valid" : "certificate INVALID") << '\n';
      }
      return report.all_passed() ? kOk : kCheckFailed;
    }

    if (*xcheck_cmd) {
      std::vector<detail::XcheckRow> table;
      // 2nm - n - m >= max(n, m) - 1, so n and m never exceed max_edges + 1.
      for (std::size_t n = 1; n <= max_edges + 1; ++n)
        for (std::size_t m = 1; m <= max_edges + 1; ++m) {
          const GridSpec spec{n, m};
          if (spec.edge_count() > max_edges) continue;
          const auto oracle = lc_bruteforce(grid(spec), config.pair_budget);
          table.push_back({spec, spec.edge_count(), lc_grid_formula(n, m).r, oracle.r});
        }
      bool all_agree = true;
      for (const auto& row : table) all_agree = all_agree && row.formula == row.oracle;

      if (json) {
        nlohmann::ordered_json rows_j = nlohmann::ordered_json::array();
        for (const auto& row : table)
          rows_j.push_back({{"cols", row.spec.cols},
                            {"rows", row.spec.rows},
                            {"edges", row.edges},
                            {"formula", row.formula},
                            {"oracle", row.oracle},
                            {"agree", row.formula == row.oracle}});
        nlohmann::ordered_json j{{"rows", rows_j}, {"all_agree", all_agree}};
        out << j.dump() << '\n';
      } else {
        out << std::setw(5) << "cols" << std::setw(6) << "rows" << std::setw(7) << "edges"
            << std::setw(9) << "formula" << std::setw(8) << "oracle" << "  status\n";
        for (const auto& row : table)
          out << std::setw(5) << row.spec.cols << std::setw(6) << row.spec.rows << std::setw(7)
              << row.edges << std::setw(9) << row.formula << std::setw(8) << row.oracle << "  "
              << (row.formula == row.oracle ? "ok" : "MISMATCH") << '\n';
        if (!all_agree)
          out << "formula and exhaustive search DISAGREE on at least one grid\n";
      }
      return all_agree ? kOk : kCheckFailed;
    }
  } catch (const budget_error& e) {
    err << "error: " << e.what() << " (last decided index " << e.last_decided_index() << ")\n";
    return kLimitError;
  } catch (const capacity_error& e) {
    err << "error: " << e.what() << '\n';
    return kLimitError;
  } catch (const invalid_argument_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

} // namespace slg::cli
