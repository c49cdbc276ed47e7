#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slg {

// Bad input: out-of-range indices, malformed files, infeasible requests.
class invalid_argument_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A configured size cap (edge cap, vertex cap, overflow) would be exceeded.
class capacity_error : public std::length_error {
public:
  using std::length_error::length_error;
};

// An exhaustive search ran out of its test budget before reaching a decision.
// Never conflated with "no witness exists".
class budget_error : public std::runtime_error {
public:
  budget_error(const std::string& what, std::size_t last_decided_index)
      : std::runtime_error(what), last_decided_index_(last_decided_index) {}

  // Largest index whose completeness status was fully decided (0 if none).
  std::size_t last_decided_index() const noexcept { return last_decided_index_; }

private:
  std::size_t last_decided_index_;
};

} // namespace slg
