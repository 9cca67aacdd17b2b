#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tardy {

// Static range-minimum queries: O(n) build, O(1) query. Positions are split
// into 64-wide blocks; in-block queries read a min-stack bitmask, and a
// sparse table over block minima answers the rest.
class RangeMin {
 public:
  RangeMin() = default;
  explicit RangeMin(std::span<const std::int64_t> values);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  // Position of a minimum in [lo, hi] (inclusive); requires lo <= hi < size().
  std::size_t argmin(std::size_t lo, std::size_t hi) const;
  std::int64_t min(std::size_t lo, std::size_t hi) const { return values_[argmin(lo, hi)]; }

 private:
  std::size_t in_block(std::size_t lo, std::size_t hi) const;
  std::size_t better(std::size_t x, std::size_t y) const {
    return values_[y] < values_[x] ? y : x;
  }

  std::vector<std::int64_t> values_;
  std::vector<std::uint64_t> stack_masks_;
  std::vector<std::vector<std::size_t>> sparse_;  // sparse_[level][block]
};

}  // namespace tardy
