#include "tardy/single_machine.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tardy/error.hpp"

namespace tardy {

// ---------------------------------------------------------------------------
// Baselines

Solution lawler_moore(const NormalizedInstance& instance) {
  require_nonempty(instance);
  const std::size_t n = instance.size();
  const auto horizon = static_cast<std::size_t>(instance.last_due());

  // via[w]: job whose addition first reached volume w; volume w - p(via[w])
  // was reached using earlier jobs only.
  constexpr std::int64_t kUnreached = -1;
  std::vector<std::int64_t> via(horizon + 1, kUnreached);
  via[0] = static_cast<std::int64_t>(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto p = static_cast<std::size_t>(instance[j].p);
    const auto due = static_cast<std::size_t>(instance[j].d);
    for (std::size_t w = due; w >= p && w <= horizon; --w) {
      if (via[w] == kUnreached && via[w - p] != kUnreached &&
          via[w - p] != static_cast<std::int64_t>(j)) {
        via[w] = static_cast<std::int64_t>(j);
      }
      if (w == p) break;
    }
  }

  std::size_t best = horizon;
  while (via[best] == kUnreached) --best;
  std::vector<std::size_t> selected;
  for (std::size_t w = best; w > 0;) {
    const auto j = static_cast<std::size_t>(via[w]);
    selected.push_back(j);
    w -= static_cast<std::size_t>(instance[j].p);
  }
  return make_solution(instance, std::move(selected));
}

Solution brute_force_single(const NormalizedInstance& instance) {
  require_nonempty(instance);
  const std::size_t n = instance.size();
  if (n > kBruteForceSingleLimit) {
    throw Error(ErrorKind::kSizeGuard, "brute force limited to " +
                                           std::to_string(kBruteForceSingleLimit) + " jobs");
  }
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;
  std::int64_t best_volume = -1;

  auto search = [&](auto&& self, std::size_t j, std::int64_t volume) -> void {
    if (j == n) {
      if (volume > best_volume) {
        best_volume = volume;
        best = current;
      }
      return;
    }
    if (volume + instance[j].p <= instance[j].d) {
      current.push_back(j);
      self(self, j + 1, volume + instance[j].p);
      current.pop_back();
    }
    self(self, j + 1, volume);
  };
  search(search, 0, 0);
  return make_solution(instance, std::move(best));
}

// ---------------------------------------------------------------------------
// Structure

LatestStartTable compute_latest_starts(const NormalizedInstance& instance) {
  const std::size_t n = instance.size();
  LatestStartTable table;
  table.start.assign(n + 1, instance.last_due());
  for (std::size_t j = n; j-- > 0;) {
    table.start[j] = std::min(table.start[j + 1], instance[j].d) - instance[j].p;
  }
  return table;
}

std::int64_t busy_window(std::int64_t p_max, std::int64_t window_constant) {
  return window_constant * p_max * p_max + p_max;
}

SplitIndex select_split_index(const NormalizedInstance& instance,
                              const LatestStartTable& starts) {
  const std::size_t n = instance.size();
  SplitIndex split;
  std::size_t h = n;
  for (std::size_t j = n; j-- > 0;) {
    if (starts.start[j] < 0) {
      h = j;
      break;
    }
  }
  if (h == n) {
    split.all_fit = true;
    split.prefix_length = 0;
    split.suffix_volume = instance.total();
    return split;
  }

  const std::int64_t p2 = instance.p_max() * instance.p_max();
  split.last_negative = h;

  std::size_t k = 0;
  std::int64_t acc = instance[h].p;
  for (std::size_t j = h; j-- > 0;) {
    acc += instance[j].p;
    if (acc > 2 * p2) {
      k = j;
      break;
    }
  }
  split.left = k;

  std::size_t ell = n - 1;
  acc = instance[h].p;
  for (std::size_t j = h + 1; j < n; ++j) {
    acc += instance[j].p;
    if (acc > 4 * p2) {
      ell = j;
      break;
    }
  }
  split.prefix_length = ell + 1;
  for (std::size_t j = split.prefix_length; j < n; ++j) split.suffix_volume += instance[j].p;
  return split;
}

AugmentedInstance add_dummy_jobs(const NormalizedInstance& instance, std::int64_t v) {
  const std::int64_t due = instance.last_due();
  if (v < 0 || v > due) {
    throw Error(ErrorKind::kInvalidInput, "target volume must lie in [0, d_n]");
  }
  const std::int64_t p_max = std::max<std::int64_t>(instance.p_max(), 1);
  const std::int64_t gap = due - v;
  const std::int64_t big = gap > p_max ? (gap - p_max) / p_max : 0;
  const std::int64_t units = gap - big * p_max;

  std::vector<Job> jobs(instance.jobs().begin(), instance.jobs().end());
  std::vector<std::size_t> original = instance.original();
  for (std::int64_t u = 0; u < units; ++u) jobs.push_back({1, due});
  for (std::int64_t b = 0; b < big; ++b) jobs.push_back({p_max, due});
  for (std::size_t j = instance.size(); j < jobs.size(); ++j) original.push_back(j);

  AugmentedInstance out;
  out.real_jobs = instance.size();
  out.dummy_volume = gap;
  out.instance = NormalizedInstance::from_sorted(std::move(jobs), instance.machines(),
                                                 std::move(original));
  return out;
}

// ---------------------------------------------------------------------------
// Prefix table: first[T] = min over k of the first job i with p_i = k,
// i >= first[T - k] and d_i >= T.

PrefixBusyTable::PrefixBusyTable(const NormalizedInstance& instance, std::int64_t t_max) {
  const auto p_max = static_cast<std::size_t>(instance.p_max());
  std::vector<std::vector<std::size_t>> by_size(p_max + 1);
  for (std::size_t j = 0; j < instance.size(); ++j) {
    by_size[static_cast<std::size_t>(instance[j].p)].push_back(j);
  }

  first_.assign(static_cast<std::size_t>(std::max<std::int64_t>(t_max, 0)) + 1, kUnreachable);
  first_[0] = 0;
  for (std::size_t busy = 1; busy < first_.size(); ++busy) {
    std::size_t best = kUnreachable;
    for (std::size_t k = 1; k <= std::min(p_max, busy); ++k) {
      const std::size_t before = first_[busy - k];
      const std::vector<std::size_t>& group = by_size[k];
      if (before == kUnreachable || group.empty()) continue;
      // Group members are in index order, hence in due-date order too.
      const auto after_prev = std::lower_bound(group.begin(), group.end(), before);
      const auto due_ok = std::partition_point(group.begin(), group.end(), [&](std::size_t j) {
        return instance[j].d < static_cast<std::int64_t>(busy);
      });
      const auto it = std::max(after_prev, due_ok);
      if (it != group.end()) best = std::min(best, *it + 1);
    }
    first_[busy] = best;
  }
}

std::vector<std::size_t> PrefixBusyTable::certificate(const NormalizedInstance& instance,
                                                      std::int64_t busy) const {
  std::vector<std::size_t> jobs;
  while (busy > 0) {
    const std::size_t last = first(busy) - 1;
    jobs.push_back(last);
    busy -= instance[last].p;
  }
  std::reverse(jobs.begin(), jobs.end());
  return jobs;
}

PrefixBusyTable prefix_busy_table(const NormalizedInstance& instance, std::int64_t t_max) {
  return PrefixBusyTable(instance, t_max);
}

// ---------------------------------------------------------------------------
// Suffix table

SuffixBusyTable::SuffixBusyTable(const NormalizedInstance& instance,
                                 std::size_t prefix_length, std::int64_t t_max)
    : begin_(prefix_length), end_(instance.size()), t_max_(std::max<std::int64_t>(t_max, 0)) {
  const std::size_t count = end_ - begin_;
  words_ = static_cast<std::size_t>(t_max_) / 64 + 1;

  earliness_.resize(count);
  sizes_.resize(count);
  std::int64_t after = 0;  // p(jobs after x)
  for (std::size_t r = count; r-- > 0;) {
    const Job& job = instance[begin_ + r];
    earliness_[r] = job.d - (instance.last_due() - after);
    sizes_[r] = job.p;
    after += job.p;
  }
  earliness_min_ = RangeMin(earliness_);

  rows_.assign((count + 1) * words_, 0);
  rows_[count * words_] = 1;  // nothing dropped after the last job
  const std::size_t tail_bits = static_cast<std::size_t>(t_max_) % 64 + 1;
  const std::uint64_t tail_mask =
      tail_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail_bits) - 1;

  for (std::size_t r = count; r-- > 0;) {
    const std::uint64_t* next = rows_.data() + (r + 1) * words_;
    std::uint64_t* row = rows_.data() + r * words_;
    // Keep job: allowed for dropped volumes up to its earliness.
    const std::int64_t keep_limit = std::min(earliness_[r], t_max_);
    if (keep_limit >= 0) {
      const auto full = static_cast<std::size_t>(keep_limit + 1) / 64;
      const auto rest = static_cast<std::size_t>(keep_limit + 1) % 64;
      for (std::size_t w = 0; w < full; ++w) row[w] = next[w];
      if (rest != 0) row[full] = next[full] & ((std::uint64_t{1} << rest) - 1);
    }
    // Drop job: shift by its size.
    const auto shift = static_cast<std::size_t>(sizes_[r]);
    const std::size_t word_shift = shift / 64;
    const std::size_t bit_shift = shift % 64;
    for (std::size_t w = words_; w-- > word_shift;) {
      std::uint64_t moved = next[w - word_shift] << bit_shift;
      if (bit_shift != 0 && w > word_shift) {
        moved |= next[w - word_shift - 1] >> (64 - bit_shift);
      }
      row[w] |= moved;
    }
    row[words_ - 1] &= tail_mask;
  }
}

bool SuffixBusyTable::bit(std::size_t row, std::int64_t volume) const {
  const auto v = static_cast<std::size_t>(volume);
  return (rows_[row * words_ + v / 64] >> (v % 64)) & 1U;
}

bool SuffixBusyTable::droppable(std::int64_t volume) const {
  if (volume < 0 || volume > t_max_) return false;
  return bit(0, volume);
}

std::vector<std::size_t> SuffixBusyTable::dropped(std::int64_t volume) const {
  std::vector<std::size_t> out;
  if (!droppable(volume)) return out;
  const std::size_t count = end_ - begin_;
  for (std::size_t r = 0; r < count; ++r) {
    if (volume <= earliness_[r] && bit(r + 1, volume)) continue;  // kept
    out.push_back(begin_ + r);
    volume -= sizes_[r];
  }
  return out;
}

SuffixBusyTable suffix_busy_table(const NormalizedInstance& instance,
                                  std::size_t prefix_length, std::int64_t t_max) {
  return SuffixBusyTable(instance, prefix_length, t_max);
}

// ---------------------------------------------------------------------------
// Decision and optimization

std::optional<std::vector<std::size_t>> find_no_idle_schedule(
    const NormalizedInstance& instance, const SingleMachineOptions& options) {
  const std::size_t n = instance.size();
  const std::int64_t due = instance.last_due();
  std::vector<std::size_t> everything(n);
  std::iota(everything.begin(), everything.end(), std::size_t{0});
  if (n == 0) {
    return due == 0 ? std::optional(everything) : std::nullopt;
  }

  const LatestStartTable starts = compute_latest_starts(instance);
  const SplitIndex split = select_split_index(instance, starts);
  if (split.all_fit) {
    // Every job fits, so the only busy-throughout candidate is all of them.
    return instance.total() == due ? std::optional(everything) : std::nullopt;
  }

  const std::int64_t t_max = busy_window(instance.p_max(), options.window_constant);
  const PrefixBusyTable prefix(instance, t_max);
  const SuffixBusyTable suffix(instance, split.prefix_length, t_max);

  // The prefix runs in [0, T]; the kept suffix jobs fill [T, d_n] exactly,
  // so the dropped suffix volume is T' = T + p(suffix) - d_n.
  for (std::int64_t busy = 0; busy <= t_max; ++busy) {
    const std::int64_t drop = busy + split.suffix_volume - due;
    if (drop < 0 || drop > t_max) continue;
    if (!prefix.reachable(busy, split.prefix_length) || !suffix.droppable(drop)) continue;

    std::vector<std::size_t> chosen = prefix.certificate(instance, busy);
    const std::vector<std::size_t> removed = suffix.dropped(drop);
    std::size_t next_removed = 0;
    for (std::size_t j = split.prefix_length; j < n; ++j) {
      if (next_removed < removed.size() && removed[next_removed] == j) {
        ++next_removed;
        continue;
      }
      chosen.push_back(j);
    }
    return chosen;
  }
  return std::nullopt;
}

bool decide_no_idle(const NormalizedInstance& instance, const SingleMachineOptions& options) {
  return find_no_idle_schedule(instance, options).has_value();
}

namespace {

Solution pmax_cubed_once(const NormalizedInstance& instance,
                         const SingleMachineOptions& options) {
  const std::size_t n = instance.size();
  const LatestStartTable starts = compute_latest_starts(instance);
  const SplitIndex split = select_split_index(instance, starts);
  if (split.all_fit) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return make_solution(instance, std::move(all));
  }

  // Some optimal solution keeps p(suffix) up to an additive O(p_max^2).
  const std::int64_t window = busy_window(instance.p_max(), options.window_constant);
  const std::int64_t due = instance.last_due();
  std::int64_t lo = std::max<std::int64_t>(0, split.suffix_volume - window);
  std::int64_t hi = std::min(due, split.suffix_volume + window);
  if (lo > hi || !decide_no_idle(add_dummy_jobs(instance, lo).instance, options)) {
    throw std::logic_error("pmax_cubed_solve: optimum outside the estimated window");
  }
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (decide_no_idle(add_dummy_jobs(instance, mid).instance, options)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }

  const AugmentedInstance augmented = add_dummy_jobs(instance, lo);
  const std::optional<std::vector<std::size_t>> schedule =
      find_no_idle_schedule(augmented.instance, options);
  std::vector<std::size_t> selected;
  for (std::size_t j : *schedule) {
    if (j < augmented.real_jobs) selected.push_back(j);
  }
  Solution solution = make_solution(instance, std::move(selected));
  if (instance.total() - solution.objective != lo) {
    throw std::logic_error("pmax_cubed_solve: witness volume differs from the optimum");
  }
  return solution;
}

}  // namespace

Solution pmax_cubed_solve(const NormalizedInstance& instance,
                          const SingleMachineOptions& options) {
  require_nonempty(instance);
  Solution solution = pmax_cubed_once(instance, options);
  if (options.double_check) {
    SingleMachineOptions doubled = options;
    doubled.window_constant *= 2;
    doubled.double_check = false;
    if (pmax_cubed_once(instance, doubled).objective != solution.objective) {
      throw std::logic_error("pmax_cubed_solve: doubled window changed the objective");
    }
  }
  return solution;
}

}  // namespace tardy
