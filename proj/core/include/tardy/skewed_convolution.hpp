#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tardy {

// Inputs to c[k] = max_{i+j=k} min{a[i], b[j] + d[k]} for k in [0, 2n-2].
// |a| = |b| = n >= 1 and |d| >= 2n-1; entries of d past 2n-2 are ignored.
struct SkewedConvInput {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> d;
};

// Magnitude bound: every |a[i]|, |b[j]|, |d[k]| <= 2^40 and n <= 2^20.
// Additionally 4n * (max(|a|,|b|) + max|d|) + 2n must fit in int64, which
// only bites at the extreme corner of the bound.
inline constexpr std::int64_t kMaxConvolutionMagnitude = std::int64_t{1} << 40;
inline constexpr std::size_t kMaxConvolutionLength = std::size_t{1} << 20;

// Throws Error(kDimension) on shape violations, Error(kOverflow) when the
// magnitude bound does not hold.
void validate(const SkewedConvInput& input);

// d[k] = k, the skew arising from tardy-job scheduling.
std::vector<std::int64_t> identity_skew(std::size_t n);

// Exhaustive O(n^2) evaluation.
std::vector<std::int64_t> naive_skewed_convolution(const SkewedConvInput& input);

// Scaled copy with pairwise distinct values: a~[i] = 4n a[i] + i,
// b~[j] = 4n b[j] + n + j, d~[k] = 4n d[k]. floor(c~[k] / 4n) = c[k].
struct PerturbedInput {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> d;  // truncated to 2n-1 entries
  std::int64_t scale = 1;       // 4n

  std::int64_t decode(std::int64_t value) const;
};

PerturbedInput perturb(const SkewedConvInput& input);

// Sampled entries of the sorted dominance matrices M_k^sort for every k.
// Rows and columns of M_k^sort are the values of a and b in increasing
// order; entry (u, w) is 1 iff some i + j = k has a[i] >= u and b[j] >= w.
// Rows/columns at sorted positions step-1, 2*step-1, ..., p*step-1 are
// sampled, step = floor(n/p). Immutable after construction.
class GridStructure {
 public:
  // a and b must each hold pairwise distinct values (Error(kInvalidInput))
  // and have equal nonzero length; p must lie in [1, n] (Error(kInvalidInput)).
  GridStructure(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                std::size_t p);

  std::size_t n() const { return n_; }
  std::size_t p() const { return p_; }
  std::size_t step() const { return step_; }
  std::size_t outputs() const { return 2 * n_ - 1; }

  // Sorted position of the s-th sampled row/column (s in [0, p)).
  std::size_t sample_position(std::size_t s) const { return (s + 1) * step_ - 1; }

  // Index into a (resp. b) of the value at a sorted position.
  std::size_t a_at(std::size_t position) const { return a_order_[position]; }
  std::size_t b_at(std::size_t position) const { return b_order_[position]; }
  std::size_t a_rank(std::size_t index) const { return a_rank_[index]; }
  std::size_t b_rank(std::size_t index) const { return b_rank_[index]; }
  std::span<const std::int64_t> sorted_a() const { return a_sorted_; }
  std::span<const std::int64_t> sorted_b() const { return b_sorted_; }

  // M_k^sort at sampled row s_row, sampled column s_col.
  bool sample(std::size_t s_row, std::size_t s_col, std::size_t k) const;

  // Whether c[k] > v for the skew value d[k] = `skew`, in O(n/p + log n).
  bool exceeds(std::size_t k, std::int64_t v, std::int64_t skew) const;

 private:
  bool a_side_witness(std::size_t k, std::size_t from, std::size_t to,
                      std::size_t b_floor) const;
  bool b_side_witness(std::size_t k, std::size_t from, std::size_t to,
                      std::size_t a_floor) const;

  std::size_t n_ = 0;
  std::size_t p_ = 1;
  std::size_t step_ = 1;
  std::size_t words_ = 0;  // 64-bit words per sampled cell
  std::vector<std::int64_t> a_;
  std::vector<std::int64_t> b_;
  std::vector<std::size_t> a_order_, b_order_;
  std::vector<std::size_t> a_rank_, b_rank_;
  std::vector<std::int64_t> a_sorted_, b_sorted_;
  std::vector<std::uint64_t> bits_;
};

// Smallest p with p^3 >= n, clamped to [1, n].
std::size_t default_grid_parameter(std::size_t n);

GridStructure precompute_grid(std::span<const std::int64_t> a_perturbed,
                              std::span<const std::int64_t> b_perturbed, std::size_t p);

// Algorithm-1 query in perturbed units: true iff c~[k] > v. Throws
// Error(kInvalidInput) when k is outside [0, 2n-2].
bool query_ck_gt_v(const GridStructure& grid, const PerturbedInput& input, std::size_t k,
                   std::int64_t v);

// Binary search of c~[k] over the 2n candidates a~ and b~ + d~[k].
std::int64_t search_output(const GridStructure& grid, const PerturbedInput& input,
                           std::size_t k);

// O(n^{5/3} log n) with the default p. Equals naive_skewed_convolution.
std::vector<std::int64_t> skewed_maxmin_convolution(const SkewedConvInput& input,
                                                    std::optional<std::size_t> p = {});

// d = 0.
std::vector<std::int64_t> maxmin_convolution(std::span<const std::int64_t> a,
                                             std::span<const std::int64_t> b);

}  // namespace tardy
