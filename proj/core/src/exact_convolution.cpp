#include "tardy/exact_convolution.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "tardy/error.hpp"

namespace tardy {

namespace {

constexpr std::uint32_t kModulus = 998244353;
constexpr std::uint32_t kGenerator = 3;

std::uint32_t mul_mod(std::uint32_t x, std::uint32_t y) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * y % kModulus);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp) {
  std::uint32_t result = 1;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base);
    base = mul_mod(base, base);
    exp >>= 1;
  }
  return result;
}

}  // namespace

NttPlan::NttPlan(std::size_t length) {
  if (length > kMaxExactConvolutionLength) {
    throw Error(ErrorKind::kDimension,
                "transform length " + std::to_string(length) + " exceeds 2^23");
  }
  size_ = std::bit_ceil(std::max<std::size_t>(length, 1));
  log_size_ = std::countr_zero(size_);
  inv_size_ = pow_mod(static_cast<std::uint32_t>(size_ % kModulus), kModulus - 2);

  roots_.assign(std::max<std::size_t>(size_, 2), 0);
  inv_roots_.assign(roots_.size(), 0);
  for (std::size_t len = 1; len < size_; len <<= 1) {
    const std::uint32_t w = pow_mod(kGenerator, (kModulus - 1) / (2 * len));
    const std::uint32_t w_inv = pow_mod(w, kModulus - 2);
    std::uint32_t cur = 1;
    std::uint32_t cur_inv = 1;
    for (std::size_t i = 0; i < len; ++i) {
      roots_[len + i] = cur;
      inv_roots_[len + i] = cur_inv;
      cur = mul_mod(cur, w);
      cur_inv = mul_mod(cur_inv, w_inv);
    }
  }
}

void NttPlan::transform(std::span<std::uint32_t> values, bool invert) const {
  const std::size_t n = size_;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(values[i], values[j]);
  }
  const std::vector<std::uint32_t>& table = invert ? inv_roots_ : roots_;
  for (std::size_t len = 1; len < n; len <<= 1) {
    for (std::size_t start = 0; start < n; start += 2 * len) {
      for (std::size_t i = 0; i < len; ++i) {
        const std::uint32_t x = values[start + i];
        const std::uint32_t y = mul_mod(values[start + i + len], table[len + i]);
        const std::uint32_t sum = x + y;
        values[start + i] = sum >= kModulus ? sum - kModulus : sum;
        values[start + i + len] = x >= y ? x - y : x + kModulus - y;
      }
    }
  }
  if (invert) {
    for (std::uint32_t& v : values) v = mul_mod(v, inv_size_);
  }
}

void NttPlan::forward(std::span<std::uint32_t> values) const { transform(values, false); }

void NttPlan::inverse(std::span<std::uint32_t> values) const { transform(values, true); }

void NttPlan::multiply(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y,
                       std::span<std::uint32_t> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mul_mod(x[i], y[i]);
}

std::vector<std::uint32_t> NttPlan::load(std::span<const std::uint8_t> bits) const {
  std::vector<std::uint32_t> buffer(size_, 0);
  std::copy(bits.begin(), bits.end(), buffer.begin());
  return buffer;
}

std::vector<std::int64_t> binary_convolution(std::span<const std::uint8_t> a01,
                                             std::span<const std::uint8_t> b01) {
  if (a01.empty() || b01.empty()) {
    throw Error(ErrorKind::kDimension, "binary_convolution needs nonempty inputs");
  }
  auto is_bit = [](std::uint8_t v) { return v <= 1; };
  if (!std::all_of(a01.begin(), a01.end(), is_bit) ||
      !std::all_of(b01.begin(), b01.end(), is_bit)) {
    throw Error(ErrorKind::kInvalidInput, "binary_convolution inputs must be 0/1");
  }
  const std::size_t out_len = a01.size() + b01.size() - 1;
  const NttPlan plan(out_len);
  std::vector<std::uint32_t> fa = plan.load(a01);
  std::vector<std::uint32_t> fb = plan.load(b01);
  plan.forward(fa);
  plan.forward(fb);
  NttPlan::multiply(fa, fb, fa);
  plan.inverse(fa);
  return {fa.begin(), fa.begin() + static_cast<std::ptrdiff_t>(out_len)};
}

std::vector<bool> pair_existence(std::span<const std::int64_t> a,
                                 std::span<const std::int64_t> b,
                                 std::int64_t u, std::int64_t w) {
  std::vector<std::uint8_t> a01(a.size());
  std::vector<std::uint8_t> b01(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) a01[i] = a[i] >= u ? 1 : 0;
  for (std::size_t j = 0; j < b.size(); ++j) b01[j] = b[j] >= w ? 1 : 0;
  const std::vector<std::int64_t> counts = binary_convolution(a01, b01);
  std::vector<bool> out(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) out[k] = counts[k] != 0;
  return out;
}

}  // namespace tardy
