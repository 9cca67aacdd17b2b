#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tardy {

struct Job {
  std::int64_t p = 1;  // processing time, >= 1
  std::int64_t d = 0;  // due date, >= 0

  friend bool operator==(const Job&, const Job&) = default;
};

struct Instance {
  std::vector<Job> jobs;
  int machines = 1;
};

// An instance sorted by due date (stable in input order) with every due date
// clipped to the total processing time P. Solvers work on this form only;
// `original[i]` is the input position of sorted job i.
class NormalizedInstance {
 public:
  NormalizedInstance() = default;

  std::size_t size() const { return jobs_.size(); }
  bool empty() const { return jobs_.empty(); }
  const Job& operator[](std::size_t i) const { return jobs_[i]; }
  std::span<const Job> jobs() const { return jobs_; }
  const std::vector<std::size_t>& original() const { return original_; }

  int machines() const { return machines_; }
  std::int64_t total() const { return total_; }
  std::int64_t p_max() const { return p_max_; }
  // Largest due date, 0 for an empty instance.
  std::int64_t last_due() const { return jobs_.empty() ? 0 : jobs_.back().d; }

  // Builds a normalized instance from jobs that are already sorted and
  // clipped. Used for derived instances (dummy augmentation, tests).
  static NormalizedInstance from_sorted(std::vector<Job> jobs, int machines,
                                        std::vector<std::size_t> original = {});

 private:
  friend NormalizedInstance normalize_instance(const Instance&);

  std::vector<Job> jobs_;
  std::vector<std::size_t> original_;
  int machines_ = 1;
  std::int64_t total_ = 0;
  std::int64_t p_max_ = 0;
};

// A set of on-time jobs. Indices refer to the normalized instance and are
// kept in increasing order. `assignment[k]` is the machine (0-based) of
// `selected[k]` and is present iff the instance has more than one machine.
struct Solution {
  std::vector<std::size_t> selected;
  std::optional<std::vector<int>> assignment;
  std::int64_t objective = 0;  // P - p(selected)
};

// Throws Error(kInvalidInput) for p < 1, d < 0, machines < 1 or a total
// processing time beyond 2^62. Radix sort on due dates, base max(n, 2).
NormalizedInstance normalize_instance(const Instance& instance);

// Throws Error(kEmptyInstance) when the instance has no jobs.
void require_nonempty(const NormalizedInstance& instance);

// True iff the selected jobs, run in due-date order on their machines, all
// finish by their due dates. Throws Error(kInvalidInput) on out-of-range or
// repeated indices, or an assignment of the wrong length.
bool edf_feasible(const NormalizedInstance& instance,
                  std::span<const std::size_t> selected,
                  std::optional<std::span<const int>> assignment = std::nullopt);

// P - p(S). Throws Error(kInvalidInput) if S is not EDF-feasible.
std::int64_t objective_of(const NormalizedInstance& instance,
                          std::span<const std::size_t> selected,
                          std::optional<std::span<const int>> assignment = std::nullopt);

std::int64_t volume_of(const NormalizedInstance& instance,
                       std::span<const std::size_t> selected);

// Fills in objective and validates feasibility; used by every solver.
Solution make_solution(const NormalizedInstance& instance,
                       std::vector<std::size_t> selected,
                       std::optional<std::vector<int>> assignment = std::nullopt);

}  // namespace tardy
