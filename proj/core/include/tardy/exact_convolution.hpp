#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tardy {

// Number-theoretic transform over Z/998244353 (= 119 * 2^23 + 1). Products
// of 0/1 vectors have counts bounded by the shorter input length, so any
// result of length <= 2^23 is recovered exactly.
inline constexpr std::size_t kMaxExactConvolutionLength = std::size_t{1} << 23;

// Pointwise-multiplication plan for a fixed transform length. Build once and
// reuse it to convolve many indicator vectors of the same shape. A plan is
// immutable after construction; transform buffers belong to the caller.
class NttPlan {
 public:
  // `length` is rounded up to a power of two; throws Error(kDimension) when
  // it exceeds kMaxExactConvolutionLength.
  explicit NttPlan(std::size_t length);

  std::size_t size() const { return size_; }

  // In-place forward transform of a buffer of exactly size() residues.
  void forward(std::span<std::uint32_t> values) const;
  // In-place inverse transform, including the 1/size scaling.
  void inverse(std::span<std::uint32_t> values) const;
  // out[i] = x[i] * y[i] mod q.
  static void multiply(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y,
                       std::span<std::uint32_t> out);

  // Loads a 0/1 vector into a zero-padded buffer of size() residues.
  std::vector<std::uint32_t> load(std::span<const std::uint8_t> bits) const;

 private:
  void transform(std::span<std::uint32_t> values, bool invert) const;

  std::size_t size_ = 1;
  int log_size_ = 0;
  std::vector<std::uint32_t> roots_;      // roots_[len + i] = w_{2len}^i
  std::vector<std::uint32_t> inv_roots_;
  std::uint32_t inv_size_ = 1;
};

// out[k] = #{(i, j) : i + j = k, a01[i] = b01[j] = 1}, length |a| + |b| - 1.
// Entries of the inputs must be 0 or 1 (Error(kInvalidInput) otherwise);
// empty inputs and results longer than kMaxExactConvolutionLength raise
// Error(kDimension).
std::vector<std::int64_t> binary_convolution(std::span<const std::uint8_t> a01,
                                             std::span<const std::uint8_t> b01);

// out[k] is true iff some i + j = k has a[i] >= u and b[j] >= w.
std::vector<bool> pair_existence(std::span<const std::int64_t> a,
                                 std::span<const std::int64_t> b,
                                 std::int64_t u, std::int64_t w);

}  // namespace tardy
