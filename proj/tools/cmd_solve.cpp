#include <iostream>
#include <memory>

#include "cli_common.hpp"
#include "commands.hpp"
#include "tardy/error.hpp"
#include "tardy/json_io.hpp"
#include "tardy/multi_machine.hpp"
#include "tardy/single_machine.hpp"

namespace tardy::cli {

namespace {

struct SolveArgs {
  std::string algo;
  std::string input;
  std::string output;
  std::string report;
  std::int64_t cwin = 8;
  std::int64_t cpm = 8;
  int machines = 0;  // 0: take the instance's value
  bool selftest = false;
  std::uint64_t seed = 0;
};


Solution solve_with(const std::string& algo, const NormalizedInstance& inst,
                    const SolveArgs& args) {
  if (algo == "lawler-moore") return lawler_moore(inst);
  if (algo == "brute") return brute_force_single(inst);
  if (algo == "pmax3") {
    SingleMachineOptions opts;
    opts.window_constant = args.cwin;
    return pmax_cubed_solve(inst, opts);
  }
  PmOptions opts;
  opts.window_constant = args.cpm;
  return pm_dp_solve(inst, inst.machines(), opts);
}

// Objective of an independent method, or nullopt when none applies.
std::optional<std::int64_t> reference_objective(const NormalizedInstance& inst,
                                                const SolveArgs& args) {
  if (args.algo == "pm-dp") {
    if (inst.machines() == 1) return lawler_moore(inst).objective;
    try {
      return brute_force_multi(inst, inst.machines()).objective;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kSizeGuard) throw;
      PmOptions wide;
      wide.window_constant = 2 * args.cpm;
      return pm_dp_solve(inst, inst.machines(), wide).objective;
    }
  }
  if (args.algo == "lawler-moore") {
    if (inst.size() <= kBruteForceSingleLimit) return brute_force_single(inst).objective;
    return pmax_cubed_solve(inst).objective;
  }
  return lawler_moore(inst).objective;
}

int run_solve(const SolveArgs& args) {
  const std::string raw = read_file(args.input);
  Instance instance = parse_instance_json(raw);
  if (args.machines > 0) instance.machines = args.machines;
  if (args.algo != "pm-dp" && instance.machines != 1) {
    throw ExitError{kUsage, "--algo " + args.algo + " handles one machine; use pm-dp"};
  }
  const NormalizedInstance inst = normalize_instance(instance);

  const Stopwatch clock;
  SolutionRecord record;
  if (!inst.empty()) {
    record = to_record(inst, solve_with(args.algo, inst, args));
  } else if (inst.machines() > 1) {
    record.assignment = std::vector<int>{};
  }
  const double wall = clock.ms();

  std::optional<bool> verdict;
  if (args.selftest) {
    const std::optional<std::int64_t> expected =
        inst.empty() ? std::optional<std::int64_t>(0) : reference_objective(inst, args);
    verdict = expected == record.objective;
  }

  const std::string text = solution_to_json(record);
  write_output(args.output, text);
  nlohmann::json report = {
      {"command", "solve"},
      {"algorithm", args.algo},
      {"instance_digest", digest(raw)},
      {"output_digest", digest(text)},
      {"objective", record.objective},
      {"wall_ms", wall},
      {"seed", args.seed},
      {"params", {{"C_win", args.cwin}, {"C_pm", args.cpm}, {"machines", inst.machines()}}},
  };
  report["selftest"] = verdict ? nlohmann::json(*verdict ? "pass" : "fail") : nlohmann::json();
  append_report(args.report, report);

  if (verdict && !*verdict) {
    std::cerr << "tardy: selftest mismatch\n";
    return kMismatch;
  }
  return kOk;
}

}  // namespace

void add_solve(CLI::App& app, int& exit_code) {
  auto args = std::make_shared<SolveArgs>();
  CLI::App* cmd = app.add_subcommand("solve", "Minimize the tardy processing time");
  cmd->add_option("--algo", args->algo, "lawler-moore | pmax3 | brute | pm-dp")
      ->required()
      ->check(CLI::IsMember({"lawler-moore", "pmax3", "brute", "pm-dp"}));
  cmd->add_option("-i,--input", args->input, "Instance JSON")->required();
  cmd->add_option("-o,--output", args->output, "Solution JSON (default stdout)");
  cmd->add_option("--cwin", args->cwin, "Window constant of pmax3")->check(CLI::PositiveNumber);
  cmd->add_option("--cpm", args->cpm, "Window constant of pm-dp")->check(CLI::PositiveNumber);
  cmd->add_option("--machines", args->machines, "Override the instance's machine count")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--selftest", args->selftest, "Compare against an independent method");
  cmd->add_option("--report", args->report, "Append the run report to this JSON-lines file");
  cmd->add_option("--seed", args->seed, "Seed recorded in the run report");
  cmd->callback([args, &exit_code] { exit_code = run_guarded([&] { return run_solve(*args); }); });
}

}  // namespace tardy::cli
