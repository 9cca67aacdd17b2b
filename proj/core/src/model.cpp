#include "tardy/model.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "tardy/error.hpp"

namespace tardy {

namespace {

constexpr std::int64_t kMaxTotal = std::int64_t{1} << 62;

// Stable LSD radix sort of positions by key, digits in base `base`.
std::vector<std::size_t> radix_order(const std::vector<std::int64_t>& keys,
                                     std::int64_t max_key) {
  const std::size_t n = keys.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (n < 2) return order;

  const auto base = static_cast<std::int64_t>(n);
  std::vector<std::size_t> scratch(n);
  std::vector<std::size_t> count(n + 1);
  for (std::int64_t place = 1; place <= max_key; place *= base) {
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t pos : order) {
      ++count[static_cast<std::size_t>((keys[pos] / place) % base) + 1];
    }
    for (std::size_t digit = 1; digit <= n; ++digit) count[digit] += count[digit - 1];
    for (std::size_t pos : order) {
      scratch[count[static_cast<std::size_t>((keys[pos] / place) % base)]++] = pos;
    }
    order.swap(scratch);
    if (place > max_key / base) break;
  }
  return order;
}

}  // namespace

NormalizedInstance NormalizedInstance::from_sorted(std::vector<Job> jobs, int machines,
                                                   std::vector<std::size_t> original) {
  NormalizedInstance out;
  out.machines_ = machines;
  if (original.empty()) {
    original.resize(jobs.size());
    std::iota(original.begin(), original.end(), std::size_t{0});
  }
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    out.total_ += jobs[i].p;
    out.p_max_ = std::max(out.p_max_, jobs[i].p);
    if (i > 0 && jobs[i].d < jobs[i - 1].d) {
      throw Error(ErrorKind::kInvalidInput, "from_sorted: jobs not sorted by due date");
    }
  }
  out.jobs_ = std::move(jobs);
  out.original_ = std::move(original);
  return out;
}

NormalizedInstance normalize_instance(const Instance& instance) {
  if (instance.machines < 1) {
    throw Error(ErrorKind::kInvalidInput, "machine count must be positive");
  }
  std::int64_t total = 0;
  std::int64_t p_max = 0;
  for (std::size_t i = 0; i < instance.jobs.size(); ++i) {
    const Job& job = instance.jobs[i];
    if (job.p < 1 || job.d < 0) {
      throw Error(ErrorKind::kInvalidInput,
                  "job " + std::to_string(i + 1) + " needs p >= 1 and d >= 0");
    }
    if (job.p > kMaxTotal - total) {
      throw Error(ErrorKind::kInvalidInput, "total processing time exceeds 2^62");
    }
    total += job.p;
    p_max = std::max(p_max, job.p);
  }

  std::vector<std::int64_t> keys(instance.jobs.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    keys[i] = std::min(instance.jobs[i].d, total);
  }
  std::vector<std::size_t> order = radix_order(keys, total);

  NormalizedInstance out;
  out.machines_ = instance.machines;
  out.total_ = total;
  out.p_max_ = p_max;
  out.jobs_.reserve(order.size());
  for (std::size_t pos : order) {
    out.jobs_.push_back({instance.jobs[pos].p, keys[pos]});
  }
  out.original_ = std::move(order);
  return out;
}

void require_nonempty(const NormalizedInstance& instance) {
  if (instance.empty()) throw Error(ErrorKind::kEmptyInstance, "empty instance");
}

std::int64_t volume_of(const NormalizedInstance& instance,
                       std::span<const std::size_t> selected) {
  std::int64_t volume = 0;
  for (std::size_t j : selected) volume += instance[j].p;
  return volume;
}

bool edf_feasible(const NormalizedInstance& instance,
                  std::span<const std::size_t> selected,
                  std::optional<std::span<const int>> assignment) {
  const std::size_t n = instance.size();
  const int machines = instance.machines();
  if (assignment && assignment->size() != selected.size()) {
    throw Error(ErrorKind::kInvalidInput, "assignment length differs from selection");
  }

  // machine_of[j] = -1 when j is not selected.
  std::vector<int> machine_of(n, -1);
  for (std::size_t k = 0; k < selected.size(); ++k) {
    const std::size_t j = selected[k];
    if (j >= n) throw Error(ErrorKind::kInvalidInput, "job index out of range");
    if (machine_of[j] != -1) throw Error(ErrorKind::kInvalidInput, "job selected twice");
    const int machine = assignment ? (*assignment)[k] : 0;
    if (machine < 0 || machine >= machines) {
      throw Error(ErrorKind::kInvalidInput, "machine index out of range");
    }
    machine_of[j] = machine;
  }

  std::vector<std::int64_t> load(static_cast<std::size_t>(machines), 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (machine_of[j] < 0) continue;
    std::int64_t& l = load[static_cast<std::size_t>(machine_of[j])];
    l += instance[j].p;
    if (l > instance[j].d) return false;
  }
  return true;
}

std::int64_t objective_of(const NormalizedInstance& instance,
                          std::span<const std::size_t> selected,
                          std::optional<std::span<const int>> assignment) {
  if (!edf_feasible(instance, selected, assignment)) {
    throw Error(ErrorKind::kInvalidInput, "selected jobs are not EDF-feasible");
  }
  return instance.total() - volume_of(instance, selected);
}

Solution make_solution(const NormalizedInstance& instance,
                       std::vector<std::size_t> selected,
                       std::optional<std::vector<int>> assignment) {
  if (assignment) {
    std::vector<std::size_t> order(selected.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return selected[x] < selected[y]; });
    std::vector<std::size_t> s;
    std::vector<int> a;
    for (std::size_t k : order) {
      s.push_back(selected[k]);
      a.push_back((*assignment)[k]);
    }
    selected = std::move(s);
    assignment = std::move(a);
  } else {
    std::sort(selected.begin(), selected.end());
  }

  Solution out;
  out.objective = assignment
                      ? objective_of(instance, selected, std::span<const int>(*assignment))
                      : objective_of(instance, selected);
  out.selected = std::move(selected);
  out.assignment = std::move(assignment);
  return out;
}

}  // namespace tardy
