#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

namespace slg {

/// k-subsets of {0, ..., n-1} as ascending index vectors, in lexicographic
/// order: {0,1,2} < {0,1,3} < ... < {0,2,3} < ... < {n-k, ..., n-1}.
///
///   KSubsets subsets(n, k);
///   do { use(subsets.current()); } while (subsets.next());
///
/// k = 0 yields the single empty subset; k > n yields nothing (done() is
/// true from the start).
class KSubsets {
public:
  KSubsets(std::size_t n, std::size_t k) : n_(n), current_(k), done_(k > n) {
    std::iota(current_.begin(), current_.end(), std::size_t{0});
  }

  const std::vector<std::size_t>& current() const noexcept { return current_; }
  bool done() const noexcept { return done_; }

  // Advances to the lexicographic successor; false once exhausted.
  bool next() {
    if (done_) return false;
    const std::size_t k = current_.size();
    std::size_t i = k;
    while (i > 0 && current_[i - 1] == n_ - k + (i - 1)) --i;
    if (i == 0) {
      done_ = true;
      return false;
    }
    ++current_[i - 1];
    for (std::size_t j = i; j < k; ++j) current_[j] = current_[j - 1] + 1;
    return true;
  }

private:
  std::size_t n_;
  std::vector<std::size_t> current_;
  bool done_;
};

// C(n, k), saturating at the maximum of uint64_t.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto limit = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step; guard the multiply.
    const std::uint64_t factor = n - k + i;
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t r = result / g;
    const std::uint64_t f = factor / (i / g);
    if (f != 0 && r > limit / f) return limit;
    result = r * f;
  }
  return result;
}

} // namespace slg
