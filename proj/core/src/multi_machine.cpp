#include "tardy/multi_machine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

#include "tardy/error.hpp"
#include "wide.hpp"

namespace tardy {

namespace {

NormalizedInstance with_machines(const NormalizedInstance& instance, int machines) {
  if (machines < 1) throw Error(ErrorKind::kInvalidInput, "machine count must be at least 1");
  if (static_cast<Int128>(machines) * instance.total() > (static_cast<Int128>(1) << 62)) {
    throw Error(ErrorKind::kOverflow, "machines * P exceeds 2^62");
  }
  if (instance.machines() == machines) return instance;
  return NormalizedInstance::from_sorted(
      std::vector<Job>(instance.jobs().begin(), instance.jobs().end()), machines,
      instance.original());
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return q * b < a ? q + 1 : q;
}

struct PatternHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::int64_t x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

struct Layer {
  std::vector<std::int64_t> loads;  // states * m, each pattern sorted
  std::vector<std::uint32_t> parent;
  std::vector<int> slot;  // machine slot in the parent pattern, -1 = skipped
  std::vector<std::int64_t> value;
  std::unordered_map<std::vector<std::int64_t>, std::uint32_t, PatternHash> index;

  std::size_t size() const { return value.size(); }
};

class PatternDP {
 public:
  PatternDP(const NormalizedInstance& instance, const PmOptions& options)
      : inst_(instance),
        m_(static_cast<std::size_t>(instance.machines())),
        anchors_(scaled_anchors(instance, instance.machines())),
        width_(options.window_constant * instance.p_max() * instance.p_max()),
        budget_(options.state_budget) {
    remaining_.assign(inst_.size() + 1, 0);
    for (std::size_t j = inst_.size(); j-- > 0;) remaining_[j] = remaining_[j + 1] + inst_[j].p;
  }

  Solution run(PmStats* stats) {
    const std::size_t n = inst_.size();
    layers_.resize(n + 1);

    std::vector<std::int64_t> start(m_, 0);
    std::vector<std::size_t> order;
    if (shape(0, start, order)) insert(0, std::move(start), 0, 0, -1);

    for (std::size_t j = 0; j < n; ++j) {
      const Job job = inst_[j];
      Layer& from = layers_[j];
      std::vector<std::int64_t> pattern(m_);
      for (std::size_t s = 0; s < from.size(); ++s) {
        const std::int64_t* loads = from.loads.data() + s * m_;
        const std::int64_t value = from.value[s];
        if (finish_greedily(j, loads)) {
          consider(j, static_cast<std::uint32_t>(s), value + remaining_[j]);
          continue;
        }
        for (int slot = -1; slot < static_cast<int>(m_); ++slot) {
          const auto u = static_cast<std::size_t>(slot);
          if (slot >= 0) {
            if (loads[u] + job.p > job.d) break;  // patterns are sorted
            if (u > 0 && loads[u] == loads[u - 1]) continue;
          }
          pattern.assign(loads, loads + m_);
          if (slot >= 0) pattern[u] += job.p;
          if (!shape(j + 1, pattern, order)) continue;
          insert(j + 1, pattern, value + (slot >= 0 ? job.p : 0),
                 static_cast<std::uint32_t>(s), slot);
        }
      }
      if (stats) stats->peak_layer = std::max(stats->peak_layer, layers_[j + 1].size());
    }
    const Layer& last = layers_[n];
    for (std::size_t s = 0; s < last.size(); ++s) {
      consider(n, static_cast<std::uint32_t>(s), last.value[s]);
    }
    if (stats) {
      stats->states = total_states_;
      stats->greedy_exits = greedy_exits_;
    }
    return reconstruct();
  }

 private:
  // Clamps loads up to the window's low edge, sorts them, and reports whether
  // the pattern survives the upper and balance windows. `order[k]` is the
  // slot of the input that lands at sorted position k.
  bool shape(std::size_t j, std::vector<std::int64_t>& loads,
             std::vector<std::size_t>& order) const {
    const auto m = static_cast<std::int64_t>(m_);
    const std::int64_t low = ceil_div(anchors_[j], m) - width_;
    for (std::int64_t& load : loads) load = std::max(load, low);
    order.resize(m_);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return loads[a] < loads[b]; });
    std::vector<std::int64_t> sorted(m_);
    for (std::size_t k = 0; k < m_; ++k) sorted[k] = loads[order[k]];
    loads = std::move(sorted);
    const std::int64_t high = std::max<std::int64_t>(anchors_[j], 0) + m * width_;
    if (m * loads.back() > high) return false;
    return loads.back() - loads.front() <= 2 * width_;
  }

  // Every remaining job fits on the currently least loaded machine once the
  // average load sits p_max below the anchor.
  bool finish_greedily(std::size_t j, const std::int64_t* loads) const {
    if (j == inst_.size()) return false;
    const std::int64_t sum = std::accumulate(loads, loads + m_, std::int64_t{0});
    return sum <= anchors_[j] - static_cast<std::int64_t>(m_) * inst_.p_max();
  }

  void insert(std::size_t j, std::vector<std::int64_t> pattern, std::int64_t value,
              std::uint32_t parent, int slot) {
    Layer& layer = layers_[j];
    const auto [it, fresh] =
        layer.index.try_emplace(std::move(pattern), static_cast<std::uint32_t>(layer.size()));
    if (!fresh) {
      const std::uint32_t id = it->second;
      if (value > layer.value[id]) {
        layer.value[id] = value;
        layer.parent[id] = parent;
        layer.slot[id] = slot;
      }
      return;
    }
    if (++total_states_ > budget_) {
      throw Error(ErrorKind::kResource,
                  "pattern DP exceeded its state budget of " + std::to_string(budget_));
    }
    layer.loads.insert(layer.loads.end(), it->first.begin(), it->first.end());
    layer.parent.push_back(parent);
    layer.slot.push_back(slot);
    layer.value.push_back(value);
  }

  void consider(std::size_t j, std::uint32_t id, std::int64_t value) {
    if (j < inst_.size()) ++greedy_exits_;
    const std::int64_t* loads = layers_[j].loads.data() + id * m_;
    if (best_value_ >= 0) {
      if (value < best_value_) return;
      if (value == best_value_) {
        const std::int64_t* held = layers_[best_layer_].loads.data() + best_id_ * m_;
        if (!std::lexicographical_compare(loads, loads + m_, held, held + m_)) return;
      }
    }
    best_value_ = value;
    best_layer_ = j;
    best_id_ = id;
  }

  Solution reconstruct() const {
    const std::size_t n = inst_.size();
    // Slots chosen on the way from layer 0 to the best state.
    std::vector<int> slots(best_layer_);
    std::uint32_t id = best_id_;
    for (std::size_t j = best_layer_; j > 0; --j) {
      slots[j - 1] = layers_[j].slot[id];
      id = layers_[j].parent[id];
    }

    std::vector<std::size_t> machine_of_slot(m_);
    std::iota(machine_of_slot.begin(), machine_of_slot.end(), std::size_t{0});
    std::vector<std::int64_t> pattern(m_, 0);
    std::vector<std::size_t> order;
    shape(0, pattern, order);
    std::vector<std::int64_t> real(m_, 0);
    std::vector<std::size_t> selected;
    std::vector<int> assignment;

    for (std::size_t j = 0; j < best_layer_; ++j) {
      const int slot = slots[j];
      if (slot >= 0) {
        const std::size_t machine = machine_of_slot[static_cast<std::size_t>(slot)];
        pattern[static_cast<std::size_t>(slot)] += inst_[j].p;
        real[machine] += inst_[j].p;
        selected.push_back(j);
        assignment.push_back(static_cast<int>(machine));
      }
      shape(j + 1, pattern, order);
      std::vector<std::size_t> relabeled(m_);
      for (std::size_t k = 0; k < m_; ++k) relabeled[k] = machine_of_slot[order[k]];
      machine_of_slot = std::move(relabeled);
    }
    for (std::size_t j = best_layer_; j < n; ++j) {
      const auto machine = static_cast<std::size_t>(
          std::min_element(real.begin(), real.end()) - real.begin());
      real[machine] += inst_[j].p;
      selected.push_back(j);
      assignment.push_back(static_cast<int>(machine));
    }

    std::optional<std::vector<int>> labels;
    if (m_ > 1) labels = std::move(assignment);
    Solution solution = make_solution(inst_, std::move(selected), std::move(labels));
    if (inst_.total() - solution.objective != best_value_) {
      throw std::logic_error("pm_dp_solve: reconstructed volume differs from the DP value");
    }
    return solution;
  }

  const NormalizedInstance& inst_;
  std::size_t m_;
  std::vector<std::int64_t> anchors_;
  std::int64_t width_;
  std::size_t budget_;
  std::vector<std::int64_t> remaining_;
  std::vector<Layer> layers_;
  std::size_t total_states_ = 0;
  std::size_t greedy_exits_ = 0;
  std::int64_t best_value_ = -1;
  std::size_t best_layer_ = 0;
  std::uint32_t best_id_ = 0;
};

}  // namespace

std::vector<std::int64_t> scaled_anchors(const NormalizedInstance& instance, int machines) {
  if (machines < 1) throw Error(ErrorKind::kInvalidInput, "machine count must be at least 1");
  const std::size_t n = instance.size();
  const std::int64_t m = machines;
  std::vector<std::int64_t> anchors(n + 1);
  anchors[n] = m * instance.last_due();
  // best = min over j' >= j of m * d_j' - p(j..j'); moving j left by one
  // subtracts p_j from every candidate and adds candidate j itself.
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::size_t j = n; j-- > 0;) {
    best = std::min(best, m * instance[j].d) - instance[j].p;
    anchors[j] = best;
  }
  return anchors;
}

Solution pm_dp_solve(const NormalizedInstance& instance, int machines, const PmOptions& options,
                     PmStats* stats) {
  require_nonempty(instance);
  const NormalizedInstance inst = with_machines(instance, machines);
  if (stats) *stats = {};
  return PatternDP(inst, options).run(stats);
}

Solution brute_force_multi(const NormalizedInstance& instance, int machines) {
  require_nonempty(instance);
  const NormalizedInstance inst = with_machines(instance, machines);
  const std::size_t n = inst.size();
  const auto m = static_cast<std::size_t>(machines);
  if (static_cast<double>(n) * std::log(static_cast<double>(m) + 1) >
      std::log(kBruteForceMultiLimit) + 1e-9) {
    throw Error(ErrorKind::kSizeGuard, "(m+1)^n exceeds the brute-force limit");
  }

  std::vector<std::int64_t> load(m, 0);
  std::vector<int> current(n, -1);
  std::vector<int> best(n, -1);
  std::int64_t best_volume = -1;

  auto search = [&](auto&& self, std::size_t j, std::size_t used, std::int64_t volume) -> void {
    if (j == n) {
      if (volume > best_volume) {
        best_volume = volume;
        best = current;
      }
      return;
    }
    const Job job = inst[j];
    for (std::size_t i = 0; i < std::min(used + 1, m); ++i) {
      if (load[i] + job.p > job.d) continue;
      load[i] += job.p;
      current[j] = static_cast<int>(i);
      self(self, j + 1, std::max(used, i + 1), volume + job.p);
      load[i] -= job.p;
    }
    current[j] = -1;
    self(self, j + 1, used, volume);
  };
  search(search, 0, 0, 0);

  std::vector<std::size_t> selected;
  std::vector<int> assignment;
  for (std::size_t j = 0; j < n; ++j) {
    if (best[j] < 0) continue;
    selected.push_back(j);
    assignment.push_back(best[j]);
  }
  std::optional<std::vector<int>> labels;
  if (m > 1) labels = std::move(assignment);
  return make_solution(inst, std::move(selected), std::move(labels));
}

}  // namespace tardy
