#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "slg/errors.hpp"

namespace slg {

/// Bitset over the edge indices [0, universe) of one graph.
///
/// The universe size identifies the owning graph's edge count; operations
/// mixing sets of different universes throw invalid_argument_error. The
/// population count is cached and kept in sync by every mutator.
class EdgeSet {
public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  EdgeSet() = default;

  explicit EdgeSet(std::size_t universe)
      : universe_(universe), words_((universe + word_bits - 1) / word_bits, 0) {}

  EdgeSet(std::size_t universe, std::span<const std::size_t> indices) : EdgeSet(universe) {
    for (auto i : indices) insert(i);
  }

  EdgeSet(std::size_t universe, std::initializer_list<std::size_t> indices)
      : EdgeSet(universe, std::span<const std::size_t>(indices.begin(), indices.size())) {}

  static EdgeSet full(std::size_t universe) {
    EdgeSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~word_type{0};
    s.trim();
    s.count_ = universe;
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(std::size_t i) const {
    check_index(i);
    return (words_[i / word_bits] >> (i % word_bits)) & 1u;
  }

  void insert(std::size_t i) {
    check_index(i);
    auto& w = words_[i / word_bits];
    const word_type bit = word_type{1} << (i % word_bits);
    if (!(w & bit)) {
      w |= bit;
      ++count_;
    }
  }

  void erase(std::size_t i) {
    check_index(i);
    auto& w = words_[i / word_bits];
    const word_type bit = word_type{1} << (i % word_bits);
    if (w & bit) {
      w &= ~bit;
      --count_;
    }
  }

  EdgeSet& operator|=(const EdgeSet& o) {
    check_same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    recount();
    return *this;
  }

  EdgeSet& operator&=(const EdgeSet& o) {
    check_same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    recount();
    return *this;
  }

  // Set difference.
  EdgeSet& operator-=(const EdgeSet& o) {
    check_same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    recount();
    return *this;
  }

  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }

  EdgeSet complement() const {
    EdgeSet c(universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) c.words_[w] = ~words_[w];
    c.trim();
    c.recount();
    return c;
  }

  bool intersects(const EdgeSet& o) const {
    check_same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  bool is_subset_of(const EdgeSet& o) const {
    check_same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  // Ascending edge indices.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_type bits = words_[w];
      while (bits) {
        out.push_back(w * word_bits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::span<const word_type> words() const noexcept { return words_; }

  // Lexicographic comparison of the ascending index sequences.
  friend bool lex_less(const EdgeSet& a, const EdgeSet& b) {
    auto ia = a.indices();
    auto ib = b.indices();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
  }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  // "e0,e3,e7"
  std::string to_label() const {
    std::string s;
    for (auto i : indices()) {
      if (!s.empty()) s += ',';
      s += 'e';
      s += std::to_string(i);
    }
    return s;
  }

private:
  void check_index(std::size_t i) const {
    if (i >= universe_)
      throw invalid_argument_error("edge index " + std::to_string(i) + " out of range for " +
                                   std::to_string(universe_) + " edges");
  }

  void check_same_universe(const EdgeSet& o) const {
    if (o.universe_ != universe_)
      throw invalid_argument_error("edge sets belong to different graphs (" +
                                   std::to_string(universe_) + " vs " +
                                   std::to_string(o.universe_) + " edges)");
  }

  void trim() {
    const std::size_t tail = universe_ % word_bits;
    if (tail != 0 && !words_.empty()) words_.back() &= (word_type{1} << tail) - 1;
  }

  void recount() {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    count_ = c;
  }

  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<word_type> words_;
};

} // namespace slg
