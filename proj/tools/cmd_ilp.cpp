#include <iostream>
#include <memory>

#include "cli_common.hpp"
#include "commands.hpp"
#include "tardy/error.hpp"
#include "tardy/trianglefold.hpp"

namespace tardy::cli {

namespace {

struct IlpArgs {
  std::string elements;
  std::int64_t target = 0;
  std::string export_path;
  std::string format = "text";
  std::string report;
  bool check = false;
};

int run_ilp(const IlpArgs& args) {
  SubsetSumInstance ss;
  ss.elements = parse_int_list(args.elements);
  ss.target = args.target;
  const ExportFormat format = parse_export_format(args.format);

  const Stopwatch clock;
  const TriangleFoldILP ilp = build_trianglefold(ss);
  nlohmann::json summary = {
      {"elements", ss.elements},
      {"target", ss.target},
      {"bits", ilp.bits},
      {"super_blocks", ilp.super_blocks()},
      {"block_count", ilp.block_count},
      {"variables", ilp.variable_count()},
      {"constraints", ilp.constraint_count()},
      {"format_ok", satisfies_format(ilp)},
  };
  if (args.check) summary["feasible"] = enumerate_feasible(ss);
  const double wall = clock.ms();

  if (!args.export_path.empty()) write_output(args.export_path, export_ilp(ilp, format));
  const std::string text = summary.dump() + "\n";
  write_output("", text);

  append_report(args.report, {
                                 {"command", "ilp"},
                                 {"algorithm", "from-subset-sum"},
                                 {"instance_digest", digest(args.elements + "|" +
                                                            std::to_string(args.target))},
                                 {"output_digest", digest(text)},
                                 {"wall_ms", wall},
                                 {"selftest", nullptr},
                                 {"params", {{"format", args.format}, {"check", args.check}}},
                             });
  return kOk;
}

}  // namespace

void add_ilp(CLI::App& app, int& exit_code) {
  auto args = std::make_shared<IlpArgs>();
  CLI::App* cmd = app.add_subcommand("ilp", "Triangle-fold ILP gadgets");
  cmd->require_subcommand(1);
  CLI::App* from = cmd->add_subcommand("from-subset-sum", "Compile a Subset Sum instance");
  from->add_option("--elements", args->elements, "Comma-separated nonnegative integers")
      ->required();
  from->add_option("--target", args->target, "Target sum")->required();
  from->add_option("--export", args->export_path, "Write the expanded system to this file");
  from->add_option("--format", args->format, "Export format: text | json");
  from->add_flag("--check", args->check, "Decide feasibility by witness enumeration");
  from->add_option("--report", args->report, "Append the run report to this JSON-lines file");
  from->callback([args, &exit_code] {
    exit_code = run_guarded([&] {
      try {
        return run_ilp(*args);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kInvalidInput &&
            std::string_view(e.what()).starts_with("unknown export format")) {
          throw ExitError{kUsage, e.what()};
        }
        throw;
      }
    });
  });
}

}  // namespace tardy::cli
