#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace tardy::cli {

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kGuard = 3,
  kMismatch = 4,
};

// Thrown by command bodies for conditions that map straight to an exit code.
struct ExitError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path);
// Writes to `path`, or stdout when it is empty.
void write_output(const std::string& path, const std::string& text);

std::string digest(const std::string& bytes);  // FNV-1a 64, hex

// Appends one JSON line to --report, else $TARDY_OUTPUT_DIR/runs.jsonl,
// else nowhere.
void append_report(const std::string& report_path, const nlohmann::json& record);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// "1,2,5" -> {1, 2, 5}; throws ExitError(kUsage) on junk.
std::vector<std::int64_t> parse_int_list(const std::string& text);

// Runs a command body and maps library errors to exit codes, printing the
// message to stderr.
int run_guarded(const std::function<int()>& body);

}  // namespace tardy::cli
