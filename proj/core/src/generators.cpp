#include "tardy/generators.hpp"

#include <algorithm>

#include "tardy/error.hpp"
#include "tardy/random.hpp"

namespace tardy {

namespace {

void check_jobs(std::size_t n, std::int64_t p_max, int machines) {
  if (n == 0) throw Error(ErrorKind::kInvalidInput, "generator needs n >= 1");
  if (p_max < 1) throw Error(ErrorKind::kInvalidInput, "generator needs p_max >= 1");
  if (machines < 1) throw Error(ErrorKind::kInvalidInput, "generator needs machines >= 1");
}

}  // namespace

Instance uniform_jobs(std::size_t n, std::int64_t p_max, std::uint64_t seed, int machines) {
  check_jobs(n, p_max, machines);
  SplitMix64 rng(seed);
  Instance out;
  out.machines = machines;
  out.jobs.resize(n);
  std::int64_t total = 0;
  for (Job& job : out.jobs) total += job.p = rng.uniform(1, p_max);
  const std::int64_t horizon = (total + machines - 1) / machines;
  for (Job& job : out.jobs) job.d = rng.uniform(0, horizon);
  return out;
}

Instance tight_deadlines(std::size_t n, std::int64_t p_max, std::uint64_t seed, int machines) {
  check_jobs(n, p_max, machines);
  SplitMix64 rng(seed);
  Instance out;
  out.machines = machines;
  out.jobs.resize(n);
  for (Job& job : out.jobs) job.p = rng.uniform(1, p_max);
  std::int64_t prefix = 0;
  for (Job& job : out.jobs) {
    prefix += job.p;
    job.d = std::max<std::int64_t>(0, prefix / machines - rng.uniform(0, p_max));
  }
  return out;
}

SkewedConvInput conv_random(std::size_t n, std::int64_t range, std::uint64_t seed,
                            bool identity) {
  if (n == 0) throw Error(ErrorKind::kInvalidInput, "generator needs n >= 1");
  if (range < 0) throw Error(ErrorKind::kInvalidInput, "generator needs range >= 0");
  SplitMix64 rng(seed);
  SkewedConvInput out;
  out.a.resize(n);
  out.b.resize(n);
  for (auto& v : out.a) v = rng.uniform(-range, range);
  for (auto& v : out.b) v = rng.uniform(-range, range);
  if (identity) {
    out.d = identity_skew(n);
  } else {
    out.d.resize(2 * n - 1);
    for (auto& v : out.d) v = rng.uniform(-range, range);
  }
  return out;
}

SkewedConvInput conv_figure1() {
  SkewedConvInput out;
  out.a = {5, 6, 4, 9, 1, 7, 3, 8, 2};
  out.b = {8, 4, 1, 2, 3, 7, 6, 5, 9};
  out.d.assign(17, 0);
  return out;
}

}  // namespace tardy
