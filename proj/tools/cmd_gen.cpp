#include <memory>

#include "cli_common.hpp"
#include "commands.hpp"
#include "tardy/generators.hpp"
#include "tardy/json_io.hpp"

namespace tardy::cli {

namespace {

struct GenArgs {
  std::string kind;
  std::size_t n = 10;
  std::int64_t p_max = 10;
  int machines = 1;
  std::uint64_t seed = 1;
  std::int64_t range = 1000;
  bool identity = false;
  std::string output;
};

int run_gen(const GenArgs& args) {
  std::string text;
  if (args.kind == "uniform-jobs") {
    text = instance_to_json(uniform_jobs(args.n, args.p_max, args.seed, args.machines));
  } else if (args.kind == "tight-deadlines") {
    text = instance_to_json(tight_deadlines(args.n, args.p_max, args.seed, args.machines));
  } else if (args.kind == "conv-random") {
    text = conv_input_to_json(conv_random(args.n, args.range, args.seed, args.identity));
  } else {
    text = conv_input_to_json(conv_figure1());
  }
  write_output(args.output, text);
  return kOk;
}

}  // namespace

void add_gen(CLI::App& app, int& exit_code) {
  auto args = std::make_shared<GenArgs>();
  CLI::App* cmd = app.add_subcommand("gen", "Generate an instance or convolution input");
  cmd->add_option("kind", args->kind, "uniform-jobs | tight-deadlines | conv-random | conv-figure1")
      ->required()
      ->check(CLI::IsMember({"uniform-jobs", "tight-deadlines", "conv-random", "conv-figure1"}));
  cmd->add_option("--n", args->n, "Number of jobs or vector length")->check(CLI::PositiveNumber);
  cmd->add_option("--pmax", args->p_max, "Largest processing time")->check(CLI::PositiveNumber);
  cmd->add_option("--machines", args->machines, "Machine count")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", args->seed, "SplitMix64 seed");
  cmd->add_option("--range", args->range, "Values drawn from [-range, range]")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--identity", args->identity, "Use d[k] = k for conv-random");
  cmd->add_option("-o,--output", args->output, "Output file (default stdout)");
  cmd->callback([args, &exit_code] { exit_code = run_guarded([&] { return run_gen(*args); }); });
}

}  // namespace tardy::cli
