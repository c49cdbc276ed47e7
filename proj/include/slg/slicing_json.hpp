#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "slg/errors.hpp"
#include "slg/grid_lc.hpp"

namespace slg {

// {"spec": {"cols": n, "rows": m}, "orientation": "...", "A": [...], "B": [...], "R": [...]}
inline nlohmann::ordered_json to_json(const Slicing& s) {
  nlohmann::ordered_json j;
  j["spec"] = {{"cols", s.spec.cols}, {"rows", s.spec.rows}};
  j["orientation"] = to_string(s.orientation);
  j["A"] = s.a.indices();
  j["B"] = s.b.indices();
  j["R"] = s.removed.indices();
  return j;
}

/// Parses and structurally validates a slicing document. Edge indices must be
/// in range for the named grid; whether the sets form a valid certificate is
/// left to verify_slicing().
inline Slicing slicing_from_json(const nlohmann::json& j) {
  try {
    const auto& spec_j = j.at("spec");
    const auto cols = spec_j.at("cols").get<long long>();
    const auto rows = spec_j.at("rows").get<long long>();
    if (cols < 1 || rows < 1) throw invalid_argument_error("slicing spec needs cols, rows >= 1");
    GridSpec spec{static_cast<std::size_t>(cols), static_cast<std::size_t>(rows)};
    if (spec.edge_count() > kDefaultEdgeCap)
      throw capacity_error("grid in slicing has " + std::to_string(spec.edge_count()) +
                           " edges, above the cap of " + std::to_string(kDefaultEdgeCap));

    auto read_set = [&](const char* key) {
      EdgeSet set(spec.edge_count());
      for (const auto& v : j.at(key)) {
        const auto idx = v.get<long long>();
        if (idx < 0 || static_cast<std::size_t>(idx) >= spec.edge_count())
          throw invalid_argument_error(std::string("edge index ") + std::to_string(idx) + " in '" +
                                       key + "' out of range");
        if (set.contains(static_cast<std::size_t>(idx)))
          throw invalid_argument_error(std::string("edge index ") + std::to_string(idx) +
                                       " repeated in '" + key + "'");
        set.insert(static_cast<std::size_t>(idx));
      }
      return set;
    };

    auto a = read_set("A");
    auto b = read_set("B");
    auto removed = read_set("R");
    const auto orientation = orientation_from_string(j.at("orientation").get<std::string>());
    return Slicing{std::move(a), std::move(b), std::move(removed), orientation, spec};
  } catch (const nlohmann::json::exception& e) {
    throw invalid_argument_error(std::string("malformed slicing JSON: ") + e.what());
  }
}

inline Slicing parse_slicing(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw invalid_argument_error(std::string("malformed slicing JSON: ") + e.what());
  }
  return slicing_from_json(j);
}

} // namespace slg
