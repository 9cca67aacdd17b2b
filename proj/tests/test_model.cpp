#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tardy/error.hpp"
#include "tardy/model.hpp"
#include "tardy/random.hpp"

namespace {

using tardy::Instance;
using tardy::Job;

std::vector<Job> jobs_of(const tardy::NormalizedInstance& inst) {
  return {inst.jobs().begin(), inst.jobs().end()};
}

TEST(Normalize, SortsAndClips) {
  const auto inst = tardy::normalize_instance({{{3, 9}, {2, 1}}, 1});
  EXPECT_EQ(jobs_of(inst), (std::vector<Job>{{2, 1}, {3, 5}}));
  EXPECT_EQ(inst.original(), (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(inst.total(), 5);
  EXPECT_EQ(inst.p_max(), 3);
}

TEST(Normalize, SingleJobUnchanged) {
  const auto inst = tardy::normalize_instance({{{1, 1}}, 1});
  EXPECT_EQ(jobs_of(inst), (std::vector<Job>{{1, 1}}));
}

TEST(Normalize, RejectsInvalidJobs) {
  EXPECT_THROW(tardy::normalize_instance({{{0, 1}}, 1}), tardy::Error);
  EXPECT_THROW(tardy::normalize_instance({{{1, -1}}, 1}), tardy::Error);
  EXPECT_THROW(tardy::normalize_instance({{{1, 1}}, 0}), tardy::Error);
}

TEST(Normalize, EmptyInstanceSignal) {
  const auto inst = tardy::normalize_instance({{}, 1});
  try {
    tardy::require_nonempty(inst);
    FAIL() << "expected an error";
  } catch (const tardy::Error& e) {
    EXPECT_EQ(e.kind(), tardy::ErrorKind::kEmptyInstance);
  }
}

TEST(Normalize, RadixOrderMatchesComparisonSort) {
  tardy::SplitMix64 rng(11);
  Instance in;
  for (int i = 0; i < 1000; ++i) in.jobs.push_back({rng.uniform(1, 50), rng.uniform(0, 100000)});
  const auto inst = tardy::normalize_instance(in);
  EXPECT_EQ(jobs_of(inst), oracle::sorted_clipped(in.jobs));
  for (std::size_t i = 0; i < inst.size(); ++i) {
    EXPECT_EQ(inst[i].p, in.jobs[inst.original()[i]].p);
  }
}

TEST(EdfFeasible, PrefixArithmetic) {
  const auto inst = tardy::normalize_instance({{{2, 3}, {2, 3}, {3, 7}}, 1});
  const std::vector<std::size_t> good{0, 2};
  const std::vector<std::size_t> bad{0, 1};
  EXPECT_TRUE(tardy::edf_feasible(inst, good));
  EXPECT_FALSE(tardy::edf_feasible(inst, bad));
  EXPECT_EQ(tardy::objective_of(inst, good), 2);
  EXPECT_THROW(tardy::objective_of(inst, bad), tardy::Error);
}

TEST(EdfFeasible, TrivialObjectives) {
  const auto one = tardy::normalize_instance({{{1, 1}}, 1});
  const std::vector<std::size_t> all{0};
  EXPECT_EQ(tardy::objective_of(one, all), 0);
  const auto late = tardy::normalize_instance({{{3, 2}}, 1});
  EXPECT_EQ(tardy::objective_of(late, std::vector<std::size_t>{}), 3);
}

TEST(EdfFeasible, RejectsBadIndices) {
  const auto inst = tardy::normalize_instance({{{1, 5}, {1, 5}}, 1});
  EXPECT_THROW(tardy::edf_feasible(inst, std::vector<std::size_t>{0, 0}), tardy::Error);
  EXPECT_THROW(tardy::edf_feasible(inst, std::vector<std::size_t>{2}), tardy::Error);
}

TEST(EdfFeasible, AgreesWithAnyOrderSimulation) {
  tardy::SplitMix64 rng(5);
  for (int round = 0; round < 150; ++round) {
    Instance in;
    const auto n = static_cast<std::size_t>(rng.uniform(1, 7));
    for (std::size_t i = 0; i < n; ++i) in.jobs.push_back({rng.uniform(1, 5), rng.uniform(0, 15)});
    const auto inst = tardy::normalize_instance(in);
    const auto sorted = jobs_of(inst);
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t j = 0; j < n; ++j) {
        if ((mask >> j) & 1U) s.push_back(j);
      }
      ASSERT_EQ(tardy::edf_feasible(inst, s), oracle::any_order_feasible(sorted, mask));
    }
  }
}

TEST(EdfFeasible, MonotoneUnderRemovalAndClipping) {
  tardy::SplitMix64 rng(9);
  for (int round = 0; round < 100; ++round) {
    Instance in;
    const auto n = static_cast<std::size_t>(rng.uniform(1, 8));
    for (std::size_t i = 0; i < n; ++i) in.jobs.push_back({rng.uniform(1, 6), rng.uniform(0, 60)});
    const auto inst = tardy::normalize_instance(in);
    std::vector<Job> unclipped(n);
    for (std::size_t i = 0; i < n; ++i) unclipped[i] = in.jobs[inst.original()[i]];
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t j = 0; j < n; ++j) {
        if ((mask >> j) & 1U) s.push_back(j);
      }
      const bool ok = tardy::edf_feasible(inst, s);
      ASSERT_EQ(ok, oracle::edf_ok(unclipped, mask));
      if (!ok) continue;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<std::size_t> t = s;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(drop));
        ASSERT_TRUE(tardy::edf_feasible(inst, t));
      }
    }
  }
}

TEST(EdfFeasible, PerMachineAssignment) {
  const auto inst = tardy::normalize_instance({{{2, 2}, {2, 2}}, 2});
  const std::vector<std::size_t> both{0, 1};
  const std::vector<int> split{0, 1};
  const std::vector<int> same{1, 1};
  EXPECT_TRUE(tardy::edf_feasible(inst, both, std::span<const int>(split)));
  EXPECT_FALSE(tardy::edf_feasible(inst, both, std::span<const int>(same)));
  const std::vector<int> out_of_range{0, 2};
  EXPECT_THROW(tardy::edf_feasible(inst, both, std::span<const int>(out_of_range)), tardy::Error);
}

TEST(MakeSolution, SortsSelectionWithAssignment) {
  const auto inst = tardy::normalize_instance({{{1, 3}, {1, 3}, {1, 3}}, 2});
  const auto sol = tardy::make_solution(inst, {2, 0}, std::vector<int>{1, 0});
  EXPECT_EQ(sol.selected, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(*sol.assignment, (std::vector<int>{0, 1}));
  EXPECT_EQ(sol.objective, 1);
}

}  // namespace
