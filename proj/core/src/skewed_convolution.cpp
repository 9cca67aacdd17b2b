#include "tardy/skewed_convolution.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "tardy/error.hpp"
#include "wide.hpp"
#include "tardy/exact_convolution.hpp"

namespace tardy {

namespace {

std::int64_t floor_div(std::int64_t x, std::int64_t y) {
  std::int64_t q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

std::int64_t max_abs(std::span<const std::int64_t> values) {
  std::int64_t m = 0;
  for (std::int64_t v : values) {
    if (v == std::numeric_limits<std::int64_t>::min()) return v;
    m = std::max(m, v < 0 ? -v : v);
  }
  return m;
}

std::vector<std::size_t> value_order(std::span<const std::int64_t> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });
  return order;
}

}  // namespace

void validate(const SkewedConvInput& input) {
  const std::size_t n = input.a.size();
  if (n == 0 || input.b.size() != n) {
    throw Error(ErrorKind::kDimension, "a and b must be nonempty and of equal length");
  }
  if (n > kMaxConvolutionLength) {
    throw Error(ErrorKind::kOverflow, "n exceeds 2^20");
  }
  if (input.d.size() < 2 * n - 1) {
    throw Error(ErrorKind::kDimension,
                "d needs at least 2n-1 = " + std::to_string(2 * n - 1) + " entries");
  }
  const std::span<const std::int64_t> d(input.d.data(), 2 * n - 1);
  const std::int64_t ma = max_abs(input.a);
  const std::int64_t mb = max_abs(input.b);
  const std::int64_t md = max_abs(d);
  for (std::int64_t m : {ma, mb, md}) {
    if (m < 0 || m > kMaxConvolutionMagnitude) {
      throw Error(ErrorKind::kOverflow, "value magnitude exceeds 2^40");
    }
  }
  const auto scale = static_cast<Int128>(4 * n);
  const Int128 worst = scale * (std::max(ma, mb) + md) + static_cast<Int128>(2 * n);
  if (worst > std::numeric_limits<std::int64_t>::max()) {
    throw Error(ErrorKind::kOverflow, "scaled values would overflow int64");
  }
}

std::vector<std::int64_t> identity_skew(std::size_t n) {
  std::vector<std::int64_t> d(n == 0 ? 0 : 2 * n - 1);
  std::iota(d.begin(), d.end(), std::int64_t{0});
  return d;
}

std::vector<std::int64_t> naive_skewed_convolution(const SkewedConvInput& input) {
  validate(input);
  const std::size_t n = input.a.size();
  std::vector<std::int64_t> c(2 * n - 1, std::numeric_limits<std::int64_t>::min());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = i + j;
      c[k] = std::max(c[k], std::min(input.a[i], input.b[j] + input.d[k]));
    }
  }
  return c;
}

std::int64_t PerturbedInput::decode(std::int64_t value) const {
  return floor_div(value, scale);
}

PerturbedInput perturb(const SkewedConvInput& input) {
  validate(input);
  const std::size_t n = input.a.size();
  PerturbedInput out;
  out.scale = static_cast<std::int64_t>(4 * n);
  out.a.resize(n);
  out.b.resize(n);
  out.d.resize(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    out.a[i] = out.scale * input.a[i] + static_cast<std::int64_t>(i);
    out.b[i] = out.scale * input.b[i] + static_cast<std::int64_t>(n + i);
  }
  for (std::size_t k = 0; k < 2 * n - 1; ++k) out.d[k] = out.scale * input.d[k];
  return out;
}

std::size_t default_grid_parameter(std::size_t n) {
  std::size_t p = 1;
  while (p * p * p < n) ++p;
  return std::clamp<std::size_t>(p, 1, std::max<std::size_t>(n, 1));
}

GridStructure::GridStructure(std::span<const std::int64_t> a,
                             std::span<const std::int64_t> b, std::size_t p)
    : n_(a.size()), p_(p), a_(a.begin(), a.end()), b_(b.begin(), b.end()) {
  if (n_ == 0 || b.size() != n_) {
    throw Error(ErrorKind::kDimension, "grid needs equal nonzero lengths");
  }
  if (p < 1 || p > n_) {
    throw Error(ErrorKind::kInvalidInput,
                "grid parameter p=" + std::to_string(p) + " outside [1, n]");
  }
  step_ = n_ / p_;

  a_order_ = value_order(a_);
  b_order_ = value_order(b_);
  a_rank_.resize(n_);
  b_rank_.resize(n_);
  a_sorted_.resize(n_);
  b_sorted_.resize(n_);
  for (std::size_t pos = 0; pos < n_; ++pos) {
    a_rank_[a_order_[pos]] = pos;
    b_rank_[b_order_[pos]] = pos;
    a_sorted_[pos] = a_[a_order_[pos]];
    b_sorted_[pos] = b_[b_order_[pos]];
    if (pos > 0 && (a_sorted_[pos] == a_sorted_[pos - 1] ||
                    b_sorted_[pos] == b_sorted_[pos - 1])) {
      throw Error(ErrorKind::kInvalidInput, "grid inputs must be pairwise distinct");
    }
  }

  const std::size_t outputs = 2 * n_ - 1;
  words_ = (outputs + 63) / 64;
  bits_.assign(p_ * p_ * words_, 0);

  // One forward transform per sampled row and column, one inverse per cell.
  const NttPlan plan(outputs);
  auto threshold_transform = [&](const std::vector<std::int64_t>& values,
                                 std::int64_t threshold) {
    std::vector<std::uint32_t> buffer(plan.size(), 0);
    for (std::size_t i = 0; i < n_; ++i) buffer[i] = values[i] >= threshold ? 1 : 0;
    plan.forward(buffer);
    return buffer;
  };
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::vector<std::uint32_t>> cols;
  rows.reserve(p_);
  cols.reserve(p_);
  for (std::size_t s = 0; s < p_; ++s) {
    rows.push_back(threshold_transform(a_, a_sorted_[sample_position(s)]));
    cols.push_back(threshold_transform(b_, b_sorted_[sample_position(s)]));
  }

  std::vector<std::uint32_t> product(plan.size());
  for (std::size_t sr = 0; sr < p_; ++sr) {
    for (std::size_t sc = 0; sc < p_; ++sc) {
      NttPlan::multiply(rows[sr], cols[sc], product);
      plan.inverse(product);
      std::uint64_t* cell = bits_.data() + (sr * p_ + sc) * words_;
      for (std::size_t k = 0; k < outputs; ++k) {
        if (product[k] != 0) cell[k / 64] |= std::uint64_t{1} << (k % 64);
      }
    }
  }
}

bool GridStructure::sample(std::size_t s_row, std::size_t s_col, std::size_t k) const {
  const std::uint64_t* cell = bits_.data() + (s_row * p_ + s_col) * words_;
  return (cell[k / 64] >> (k % 64)) & 1U;
}

bool GridStructure::a_side_witness(std::size_t k, std::size_t from, std::size_t to,
                                   std::size_t b_floor) const {
  for (std::size_t pos = from; pos < to; ++pos) {
    const std::size_t i = a_order_[pos];
    if (i > k || k - i >= n_) continue;
    if (b_rank_[k - i] >= b_floor) return true;
  }
  return false;
}

bool GridStructure::b_side_witness(std::size_t k, std::size_t from, std::size_t to,
                                   std::size_t a_floor) const {
  for (std::size_t pos = from; pos < to; ++pos) {
    const std::size_t j = b_order_[pos];
    if (j > k || k - j >= n_) continue;
    if (a_rank_[k - j] >= a_floor) return true;
  }
  return false;
}

bool GridStructure::exceeds(std::size_t k, std::int64_t v, std::int64_t skew) const {
  // Smallest a[i] > v and smallest b[j] > v - skew, as sorted positions.
  const auto row = static_cast<std::size_t>(
      std::upper_bound(a_sorted_.begin(), a_sorted_.end(), v) - a_sorted_.begin());
  if (row == n_) return false;
  const auto col = static_cast<std::size_t>(
      std::upper_bound(b_sorted_.begin(), b_sorted_.end(), v - skew) - b_sorted_.begin());
  if (col == n_) return false;

  // Sampled corner below and to the right: first sample position >= row.
  const std::size_t s_row = (row + 1 + step_ - 1) / step_ - 1;
  const std::size_t s_col = (col + 1 + step_ - 1) / step_ - 1;
  if (s_row >= p_) {
    // Residual strip below the last sampled row; every witness lies in it.
    return a_side_witness(k, row, n_, col);
  }
  if (s_col >= p_) {
    return b_side_witness(k, col, n_, row);
  }
  if (sample(s_row, s_col, k)) return true;
  return a_side_witness(k, row, sample_position(s_row), col) ||
         b_side_witness(k, col, sample_position(s_col), row);
}

GridStructure precompute_grid(std::span<const std::int64_t> a_perturbed,
                              std::span<const std::int64_t> b_perturbed, std::size_t p) {
  return GridStructure(a_perturbed, b_perturbed, p);
}

bool query_ck_gt_v(const GridStructure& grid, const PerturbedInput& input, std::size_t k,
                   std::int64_t v) {
  if (k >= grid.outputs()) {
    throw Error(ErrorKind::kInvalidInput,
                "output index " + std::to_string(k) + " outside [0, 2n-2]");
  }
  return grid.exceeds(k, v, input.d[k]);
}

std::int64_t search_output(const GridStructure& grid, const PerturbedInput& input,
                           std::size_t k) {
  const std::int64_t skew = input.d[k];
  const std::span<const std::int64_t> a_sorted = grid.sorted_a();
  const std::span<const std::int64_t> b_sorted = grid.sorted_b();

  // c[k] > v is true exactly for v < c[k]; c[k] is the first candidate on
  // which the query fails, in whichever of the two lists holds it.
  const auto a_it = std::partition_point(
      a_sorted.begin(), a_sorted.end(),
      [&](std::int64_t v) { return grid.exceeds(k, v, skew); });
  const auto b_it = std::partition_point(
      b_sorted.begin(), b_sorted.end(),
      [&](std::int64_t v) { return grid.exceeds(k, v + skew, skew); });

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  if (a_it != a_sorted.end()) best = *a_it;
  if (b_it != b_sorted.end()) best = std::min(best, *b_it + skew);
  return best;
}

std::vector<std::int64_t> skewed_maxmin_convolution(const SkewedConvInput& input,
                                                    std::optional<std::size_t> p) {
  const PerturbedInput perturbed = perturb(input);
  const std::size_t n = perturbed.a.size();
  const std::size_t grid_p = std::clamp<std::size_t>(p.value_or(default_grid_parameter(n)),
                                                     1, n);
  const GridStructure grid(perturbed.a, perturbed.b, grid_p);
  std::vector<std::int64_t> c(2 * n - 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = perturbed.decode(search_output(grid, perturbed, k));
  }
  return c;
}

std::vector<std::int64_t> maxmin_convolution(std::span<const std::int64_t> a,
                                             std::span<const std::int64_t> b) {
  SkewedConvInput input{{a.begin(), a.end()}, {b.begin(), b.end()}, {}};
  input.d.assign(a.empty() ? 0 : 2 * a.size() - 1, 0);
  return skewed_maxmin_convolution(input);
}

}  // namespace tardy
