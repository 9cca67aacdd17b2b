#pragma once

#include <cstddef>
#include <cstdint>

#include "tardy/model.hpp"
#include "tardy/skewed_convolution.hpp"

namespace tardy {

// Every generator consumes one SplitMix64 stream seeded with `seed`, in the
// draw order documented below. Throws Error(kInvalidInput) on bad sizes.

// p_j = uniform(1, p_max) for j = 1..n, then d_j = uniform(0, ceil(P / m))
// for j = 1..n.
Instance uniform_jobs(std::size_t n, std::int64_t p_max, std::uint64_t seed, int machines = 1);

// p_j = uniform(1, p_max) for j = 1..n, then
// d_j = max(0, floor((p_1 + ... + p_j) / m) - uniform(0, p_max)).
// Deadlines track the cumulative load, so most jobs are borderline.
Instance tight_deadlines(std::size_t n, std::int64_t p_max, std::uint64_t seed,
                         int machines = 1);

// a[i] = uniform(-range, range) for i < n, then b likewise, then either
// d[k] = uniform(-range, range) for k < 2n-1 or d = identity_skew(n).
SkewedConvInput conv_random(std::size_t n, std::int64_t range, std::uint64_t seed,
                            bool identity = false);

// The nine-element example vectors with zero skew.
SkewedConvInput conv_figure1();

}  // namespace tardy
