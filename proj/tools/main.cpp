#include <iostream>

#include "CLI11.hpp"
#include "cli_common.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"tardy: tardy-job scheduling and max-min skewed convolution"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tardy 1.0.0");

  int exit_code = tardy::cli::kOk;
  tardy::cli::add_gen(app, exit_code);
  tardy::cli::add_solve(app, exit_code);
  tardy::cli::add_conv(app, exit_code);
  tardy::cli::add_ilp(app, exit_code);
  tardy::cli::add_bench(app, exit_code);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? tardy::cli::kOk : tardy::cli::kUsage;
  }
  return exit_code;
}
