#include "tardy/range_min.hpp"

#include <algorithm>
#include <bit>

namespace tardy {

namespace {
constexpr std::size_t kBlock = 64;
}

RangeMin::RangeMin(std::span<const std::int64_t> values)
    : values_(values.begin(), values.end()), stack_masks_(values.size()) {
  const std::size_t n = values_.size();
  for (std::size_t start = 0; start < n; start += kBlock) {
    std::uint64_t mask = 0;
    const std::size_t end = std::min(n, start + kBlock);
    for (std::size_t i = start; i < end; ++i) {
      // Pop every stacked position whose value is not below values_[i].
      while (mask != 0) {
        const std::size_t top = start + (63 - static_cast<std::size_t>(std::countl_zero(mask)));
        if (values_[top] < values_[i]) break;
        mask &= ~(std::uint64_t{1} << (top - start));
      }
      mask |= std::uint64_t{1} << (i - start);
      stack_masks_[i] = mask;
    }
  }

  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  if (blocks == 0) return;
  sparse_.emplace_back(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    sparse_[0][b] = in_block(b * kBlock, std::min(n, (b + 1) * kBlock) - 1);
  }
  for (std::size_t level = 1; (std::size_t{1} << level) <= blocks; ++level) {
    const std::size_t half = std::size_t{1} << (level - 1);
    std::vector<std::size_t> row(blocks - (std::size_t{1} << level) + 1);
    for (std::size_t b = 0; b < row.size(); ++b) {
      row[b] = better(sparse_[level - 1][b], sparse_[level - 1][b + half]);
    }
    sparse_.push_back(std::move(row));
  }
}

std::size_t RangeMin::in_block(std::size_t lo, std::size_t hi) const {
  const std::size_t start = lo - lo % kBlock;
  const std::uint64_t mask = stack_masks_[hi] & (~std::uint64_t{0} << (lo - start));
  return start + static_cast<std::size_t>(std::countr_zero(mask));
}

std::size_t RangeMin::argmin(std::size_t lo, std::size_t hi) const {
  const std::size_t lo_block = lo / kBlock;
  const std::size_t hi_block = hi / kBlock;
  if (lo_block == hi_block) return in_block(lo, hi);

  std::size_t best = better(in_block(lo, (lo_block + 1) * kBlock - 1),
                            in_block(hi_block * kBlock, hi));
  if (lo_block + 1 < hi_block) {
    const std::size_t first = lo_block + 1;
    const std::size_t count = hi_block - first;
    const auto level = static_cast<std::size_t>(std::bit_width(count) - 1);
    best = better(best, sparse_[level][first]);
    best = better(best, sparse_[level][hi_block - (std::size_t{1} << level)]);
  }
  return best;
}

}  // namespace tardy
