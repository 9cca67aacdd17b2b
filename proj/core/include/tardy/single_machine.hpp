#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tardy/model.hpp"
#include "tardy/range_min.hpp"

namespace tardy {

// ---------------------------------------------------------------------------
// Baselines

// Pseudo-polynomial O(n * d_n) dynamic program over scheduled volume.
Solution lawler_moore(const NormalizedInstance& instance);

inline constexpr std::size_t kBruteForceSingleLimit = 24;

// Exhaustive search over EDF-feasible subsets. Throws Error(kSizeGuard) for
// more than kBruteForceSingleLimit jobs.
Solution brute_force_single(const NormalizedInstance& instance);

// ---------------------------------------------------------------------------
// O~(n + p_max^3) solver

struct SingleMachineOptions {
  // T_max = window_constant * p_max^2 + p_max bounds both busy tables and
  // the half-width of the outer search window.
  std::int64_t window_constant = 8;
  // Re-solve with a doubled window and require an identical objective.
  bool double_check = false;
};

// start[j] is the latest time from which jobs j..n-1 can all run back to
// back and meet their due dates; start[n] = d_n.
struct LatestStartTable {
  std::vector<std::int64_t> start;
};

LatestStartTable compute_latest_starts(const NormalizedInstance& instance);

// Split of the jobs into a prefix [0, prefix_length) of which an optimal
// solution keeps O(p_max^2) volume and a suffix of which it drops O(p_max^2).
struct SplitIndex {
  bool all_fit = false;           // no negative latest start: schedule everything
  std::size_t last_negative = 0;  // h, 0-based: last job with start[h] < 0
  std::size_t left = 0;           // k, 0-based
  std::size_t prefix_length = 0;  // l: jobs [0, l) form the prefix
  std::int64_t suffix_volume = 0; // p([l, n))
};

SplitIndex select_split_index(const NormalizedInstance& instance,
                              const LatestStartTable& starts);

// T_max for an instance with the given p_max.
std::int64_t busy_window(std::int64_t p_max, std::int64_t window_constant);

// The original jobs followed by dummy jobs (due date d_n) whose total volume
// is exactly d_n - v: at most 2 p_max - 1 unit jobs plus jobs of size p_max.
struct AugmentedInstance {
  NormalizedInstance instance;
  std::size_t real_jobs = 0;
  std::int64_t dummy_volume = 0;
};

// Throws Error(kInvalidInput) unless 0 <= v <= d_n.
AugmentedInstance add_dummy_jobs(const NormalizedInstance& instance, std::int64_t v);

// first[T] = smallest i such that some subset of jobs [0, i) runs exactly
// during [0, T]; kUnreachable when none exists.
class PrefixBusyTable {
 public:
  static constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);

  PrefixBusyTable(const NormalizedInstance& instance, std::int64_t t_max);

  std::int64_t t_max() const { return static_cast<std::int64_t>(first_.size()) - 1; }
  std::size_t first(std::int64_t busy) const { return first_[static_cast<std::size_t>(busy)]; }
  // Whether jobs [0, prefix_length) can keep the machine busy on [0, busy].
  bool reachable(std::int64_t busy, std::size_t prefix_length) const {
    return first(busy) != kUnreachable && first(busy) <= prefix_length;
  }
  // Jobs of a certificate for `busy`, in increasing order.
  std::vector<std::size_t> certificate(const NormalizedInstance& instance,
                                       std::int64_t busy) const;

 private:
  std::vector<std::size_t> first_;
};

PrefixBusyTable prefix_busy_table(const NormalizedInstance& instance, std::int64_t t_max);

// For each T' <= T_max: can a volume-T' subset A of the suffix [l, n) be
// dropped so that the rest, run back to back, ends exactly at d_n with every
// due date met? Equivalently: every kept job x has earliness
// e_x >= p(A after x), where e_x is x's slack in the right-packed schedule
// of the whole suffix. Scans the suffix right to left over volume bitsets.
class SuffixBusyTable {
 public:
  SuffixBusyTable(const NormalizedInstance& instance, std::size_t prefix_length,
                  std::int64_t t_max);

  std::int64_t t_max() const { return t_max_; }
  std::size_t prefix_length() const { return begin_; }
  bool droppable(std::int64_t volume) const;
  // Dropped jobs for a droppable volume, increasing.
  std::vector<std::size_t> dropped(std::int64_t volume) const;

  // Right-packed earliness of suffix job x (absolute index).
  std::int64_t earliness(std::size_t x) const { return earliness_[x - begin_]; }
  // Minimum earliness over absolute job indices [lo, hi].
  std::int64_t min_earliness(std::size_t lo, std::size_t hi) const {
    return earliness_min_.min(lo - begin_, hi - begin_);
  }

 private:
  bool bit(std::size_t row, std::int64_t volume) const;

  std::size_t begin_ = 0;
  std::size_t end_ = 0;
  std::int64_t t_max_ = 0;
  std::size_t words_ = 0;
  std::vector<std::int64_t> earliness_;
  std::vector<std::int64_t> sizes_;
  RangeMin earliness_min_;
  // Row r (r in [0, end-begin]) holds the volumes droppable from jobs
  // [begin + r, end) with the kept ones feasible.
  std::vector<std::uint64_t> rows_;
};

SuffixBusyTable suffix_busy_table(const NormalizedInstance& instance,
                                  std::size_t prefix_length, std::int64_t t_max);

// A subset that keeps the machine busy on all of [0, d_n], if one exists.
std::optional<std::vector<std::size_t>> find_no_idle_schedule(
    const NormalizedInstance& instance, const SingleMachineOptions& options = {});

bool decide_no_idle(const NormalizedInstance& instance,
                    const SingleMachineOptions& options = {});

// Binary search over the scheduled volume v in a window of half-width T_max
// around p([l, n)), each step deciding no-idle feasibility of the
// dummy-augmented instance.
Solution pmax_cubed_solve(const NormalizedInstance& instance,
                          const SingleMachineOptions& options = {});

}  // namespace tardy
