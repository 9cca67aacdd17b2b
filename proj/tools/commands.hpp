#pragma once

#include "CLI11.hpp"

namespace tardy::cli {

// Each registers one subcommand whose callback stores its exit code.
void add_gen(CLI::App& app, int& exit_code);
void add_solve(CLI::App& app, int& exit_code);
void add_conv(CLI::App& app, int& exit_code);
void add_ilp(CLI::App& app, int& exit_code);
void add_bench(CLI::App& app, int& exit_code);

}  // namespace tardy::cli
