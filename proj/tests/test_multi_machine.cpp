#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tardy/error.hpp"
#include "tardy/generators.hpp"
#include "tardy/multi_machine.hpp"
#include "tardy/random.hpp"
#include "tardy/single_machine.hpp"

namespace {

using tardy::Job;
using tardy::NormalizedInstance;

NormalizedInstance norm(std::vector<Job> jobs, int m) {
  return tardy::normalize_instance({std::move(jobs), m});
}

std::vector<Job> jobs_of(const NormalizedInstance& inst) {
  return {inst.jobs().begin(), inst.jobs().end()};
}

NormalizedInstance random_instance(tardy::SplitMix64& rng, std::size_t n_max,
                                   std::int64_t p_max, int m) {
  const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n_max)));
  const auto pm = rng.uniform(1, p_max);
  return tardy::normalize_instance(rng.uniform(0, 1) ? tardy::uniform_jobs(n, pm, rng.next(), m)
                                                     : tardy::tight_deadlines(n, pm, rng.next(), m));
}

void expect_valid(const NormalizedInstance& inst, const tardy::Solution& s, int m) {
  if (m > 1) {
    ASSERT_TRUE(s.assignment.has_value());
    NormalizedInstance copy = NormalizedInstance::from_sorted(jobs_of(inst), m);
    ASSERT_TRUE(tardy::edf_feasible(copy, s.selected, std::span<const int>(*s.assignment)));
  } else {
    ASSERT_FALSE(s.assignment.has_value());
    ASSERT_TRUE(tardy::edf_feasible(inst, s.selected));
  }
}

TEST(Anchors, EndAndSingleMachineForm) {
  const auto inst = norm({{2, 3}, {2, 3}, {3, 7}}, 1);
  const auto a1 = tardy::scaled_anchors(inst, 1);
  EXPECT_EQ(a1.back(), 7);
  // m = 1: anchor(j) = latest start of the remaining jobs, t_j.
  const auto t = tardy::compute_latest_starts(inst).start;
  for (std::size_t j = 0; j < inst.size(); ++j) EXPECT_EQ(a1[j], t[j]);
}

TEST(Anchors, QuadraticOracle) {
  tardy::SplitMix64 rng(7);
  for (int round = 0; round < 100; ++round) {
    const int m = static_cast<int>(rng.uniform(1, 4));
    const auto inst = random_instance(rng, 30, 9, m);
    const auto anchors = tardy::scaled_anchors(inst, m);
    ASSERT_EQ(anchors.size(), inst.size() + 1);
    ASSERT_EQ(anchors.back(), m * inst.last_due());
    for (std::size_t j = 0; j < inst.size(); ++j) {
      std::int64_t best = INT64_MAX;
      for (std::size_t jp = j; jp < inst.size(); ++jp) {
        std::int64_t vol = 0;
        for (std::size_t k = j; k <= jp; ++k) vol += inst[k].p;
        best = std::min(best, m * inst[jp].d - vol);
      }
      ASSERT_EQ(anchors[j], best);
    }
  }
}

TEST(BruteForceMulti, Examples) {
  EXPECT_EQ(tardy::brute_force_multi(norm({{3, 3}, {3, 3}, {3, 3}}, 2), 2).objective, 3);
  EXPECT_EQ(tardy::brute_force_multi(norm({{2, 2}, {2, 2}}, 2), 2).objective, 0);
  // m >= n: only jobs that cannot meet their own due date are tardy.
  const auto inst = norm({{3, 2}, {2, 5}, {4, 4}, {1, 0}}, 4);
  EXPECT_EQ(tardy::brute_force_multi(inst, 4).objective, 3 + 1);
  EXPECT_THROW(tardy::brute_force_multi(norm(std::vector<Job>(16, Job{1, 5}), 2), 2), tardy::Error);
}

TEST(BruteForceMulti, MatchesIndependentSearch) {
  tardy::SplitMix64 rng(13);
  for (int round = 0; round < 100; ++round) {
    const int m = static_cast<int>(rng.uniform(1, 3));
    const auto inst = random_instance(rng, 8, 5, m);
    const auto s = tardy::brute_force_multi(inst, m);
    ASSERT_EQ(s.objective, oracle::multi_optimum(jobs_of(inst), m));
    expect_valid(inst, s, m);
  }
}

TEST(PmDp, Examples) {
  const auto s = tardy::pm_dp_solve(norm({{2, 2}, {2, 2}}, 2), 2);
  EXPECT_EQ(s.objective, 0);
  EXPECT_EQ(tardy::pm_dp_solve(norm({{3, 3}, {3, 3}, {3, 3}}, 2), 2).objective, 3);
  EXPECT_THROW(tardy::pm_dp_solve(norm({}, 2), 2), tardy::Error);
  EXPECT_THROW(tardy::pm_dp_solve(norm({{1, 1}}, 1), 0), tardy::Error);
}

TEST(PmDp, SingleMachineMatchesLawlerMoore) {
  tardy::SplitMix64 rng(17);
  for (int round = 0; round < 100; ++round) {
    const auto inst = random_instance(rng, 40, 8, 1);
    const auto s = tardy::pm_dp_solve(inst, 1);
    ASSERT_EQ(s.objective, tardy::lawler_moore(inst).objective);
    expect_valid(inst, s, 1);
  }
}

TEST(PmDp, MatchesBruteForce) {
  tardy::SplitMix64 rng(19);
  for (int round = 0; round < 300; ++round) {
    const int m = static_cast<int>(rng.uniform(2, 3));
    const auto inst = random_instance(rng, m == 2 ? 12 : 11, 5, m);  // (m+1)^n <= 1e7
    const auto s = tardy::pm_dp_solve(inst, m);
    ASSERT_EQ(s.objective, tardy::brute_force_multi(inst, m).objective) << "round " << round;
    expect_valid(inst, s, m);
  }
}

TEST(PmDp, DoubledWindowAgrees) {
  tardy::SplitMix64 rng(23);
  tardy::PmOptions wide;
  wide.window_constant = 16;
  for (int round = 0; round < 100; ++round) {
    const int m = static_cast<int>(rng.uniform(2, 3));
    const auto inst = random_instance(rng, 30, 5, m);
    ASSERT_EQ(tardy::pm_dp_solve(inst, m).objective, tardy::pm_dp_solve(inst, m, wide).objective);
  }
}

TEST(PmDp, GreedyCompletionOnSlackInstances) {
  std::vector<Job> jobs;
  for (int i = 0; i < 200; ++i) jobs.push_back({1 + i % 3, 1000});
  const auto inst = norm(jobs, 3);
  tardy::PmStats stats;
  const auto s = tardy::pm_dp_solve(inst, 3, {}, &stats);
  EXPECT_EQ(s.objective, 0);
  EXPECT_GT(stats.greedy_exits, 0u);
}

TEST(PmDp, LongOverloadedStream) {
  const auto inst = norm(std::vector<Job>(1000, Job{1, 1}), 2);
  EXPECT_EQ(tardy::pm_dp_solve(inst, 2).objective, 998);
}

TEST(PmDp, ResourceGuard) {
  tardy::PmOptions tiny;
  tiny.state_budget = 3;
  const auto inst = tardy::normalize_instance(tardy::tight_deadlines(30, 5, 1, 3));
  try {
    tardy::pm_dp_solve(inst, 3, tiny);
    FAIL() << "expected a resource error";
  } catch (const tardy::Error& e) {
    EXPECT_EQ(e.kind(), tardy::ErrorKind::kResource);
  }
}

TEST(PmDp, MachineRelabelingInvariance) {
  tardy::SplitMix64 rng(29);
  for (int round = 0; round < 30; ++round) {
    const auto inst = random_instance(rng, 10, 5, 3);
    const auto s = tardy::pm_dp_solve(inst, 3);
    std::vector<int> relabeled = *s.assignment;
    for (int& machine : relabeled) machine = (machine + 1) % 3;
    EXPECT_TRUE(tardy::edf_feasible(NormalizedInstance::from_sorted(jobs_of(inst), 3), s.selected,
                                    std::span<const int>(relabeled)));
  }
}

}  // namespace
