#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tardy/model.hpp"

namespace tardy {

// m * min_{j' >= j} { d_j' - (1/m) p(j..j') } for j in [0, n], with jobs
// 0-based so that entry j describes the state after jobs [0, j). Entry n is
// m * d_n. Scaling by m keeps everything integral.
std::vector<std::int64_t> scaled_anchors(const NormalizedInstance& instance, int machines);

struct PmOptions {
  // Load window half-width C_pm * p_max^2 around the anchor.
  std::int64_t window_constant = 8;
  // Total number of DP states across all layers before Error(kResource).
  std::size_t state_budget = 20'000'000;
};

struct PmStats {
  std::size_t states = 0;       // states created over all layers
  std::size_t peak_layer = 0;   // largest single layer
  std::size_t greedy_exits = 0; // states finished by greedy completion
};

// Dynamic program over sorted machine-load patterns. Loads above the window
// are pruned, loads below it are raised to its low edge, and a pattern whose
// total load is low enough is finished greedily.
Solution pm_dp_solve(const NormalizedInstance& instance, int machines,
                     const PmOptions& options = {}, PmStats* stats = nullptr);

inline constexpr double kBruteForceMultiLimit = 1e7;

// Tries every job -> {tardy, machine 1..m} map, skipping machine relabelings.
// Throws Error(kSizeGuard) when (m+1)^n exceeds kBruteForceMultiLimit.
Solution brute_force_multi(const NormalizedInstance& instance, int machines);

}  // namespace tardy
