#include "cli_common.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tardy/error.hpp"

namespace tardy::cli {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExitError{kIo, "cannot open '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw ExitError{kIo, "cannot write '" + path + "'"};
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void append_report(const std::string& report_path, const nlohmann::json& record) {
  std::string path = report_path;
  if (path.empty()) {
    const char* dir = std::getenv("TARDY_OUTPUT_DIR");
    if (dir == nullptr || *dir == '\0') return;
    std::filesystem::create_directories(dir);
    path = (std::filesystem::path(dir) / "runs.jsonl").string();
  }
  std::ofstream out(path, std::ios::app);
  if (!out || !(out << record.dump() << '\n')) {
    throw ExitError{kIo, "cannot append to report '" + path + "'"};
  }
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ExitError{kUsage, "not an integer list: '" + text + "'"};
    }
  }
  if (out.empty()) throw ExitError{kUsage, "empty integer list"};
  return out;
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ExitError& e) {
    std::cerr << "tardy: " << e.message << '\n';
    return e.code;
  } catch (const Error& e) {
    std::cerr << "tardy: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::kSizeGuard:
      case ErrorKind::kResource:
      case ErrorKind::kOverflow:
        return kGuard;
      case ErrorKind::kInvalidInput:
      case ErrorKind::kEmptyInstance:
      case ErrorKind::kDimension:
        return kIo;
    }
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "tardy: " << e.what() << '\n';
    return kIo;
  } catch (const std::logic_error& e) {
    // A solver's internal cross-check failed.
    std::cerr << "tardy: " << e.what() << '\n';
    return kMismatch;
  }
}

}  // namespace tardy::cli
