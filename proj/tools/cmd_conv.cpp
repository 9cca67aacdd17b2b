#include <iostream>
#include <memory>

#include "cli_common.hpp"
#include "commands.hpp"
#include "tardy/json_io.hpp"
#include "tardy/skewed_convolution.hpp"

namespace tardy::cli {

namespace {

struct ConvArgs {
  std::string algo = "fast";
  std::string input;
  std::string output;
  std::string report;
  std::size_t p = 0;  // 0: default grid parameter
  bool selftest = false;
  std::uint64_t seed = 0;
};

int run_conv(const ConvArgs& args) {
  const std::string raw = read_file(args.input);
  const SkewedConvInput input = parse_conv_json(raw);
  validate(input);

  const Stopwatch clock;
  std::vector<std::int64_t> c;
  if (args.algo == "naive") {
    c = naive_skewed_convolution(input);
  } else {
    c = skewed_maxmin_convolution(input, args.p > 0 ? std::optional(args.p) : std::nullopt);
  }
  const double wall = clock.ms();

  std::optional<bool> verdict;
  if (args.selftest) {
    verdict = c == (args.algo == "naive" ? skewed_maxmin_convolution(input)
                                         : naive_skewed_convolution(input));
  }

  const std::string text = conv_output_to_json(c);
  write_output(args.output, text);
  const std::size_t n = input.a.size();
  nlohmann::json report = {
      {"command", "conv"},
      {"algorithm", args.algo},
      {"instance_digest", digest(raw)},
      {"output_digest", digest(text)},
      {"wall_ms", wall},
      {"seed", args.seed},
      {"params", {{"n", n}, {"p", args.p > 0 ? args.p : default_grid_parameter(n)}}},
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

void add_conv(CLI::App& app, int& exit_code) {
  auto args = std::make_shared<ConvArgs>();
  CLI::App* cmd = app.add_subcommand("conv", "Max-min skewed convolution");
  cmd->add_option("--algo", args->algo, "fast | naive")->check(CLI::IsMember({"fast", "naive"}));
  cmd->add_option("-i,--input", args->input, "Convolution input JSON")->required();
  cmd->add_option("-o,--output", args->output, "Output JSON (default stdout)");
  cmd->add_option("--p", args->p, "Grid parameter (default: smallest p with p^3 >= n)");
  cmd->add_flag("--selftest", args->selftest, "Compare against the other algorithm");
  cmd->add_option("--report", args->report, "Append the run report to this JSON-lines file");
  cmd->add_option("--seed", args->seed, "Seed recorded in the run report");
  cmd->callback([args, &exit_code] { exit_code = run_guarded([&] { return run_conv(*args); }); });
}

}  // namespace tardy::cli
