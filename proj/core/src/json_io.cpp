#include "tardy/json_io.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "tardy/error.hpp"

namespace tardy {

namespace {

using json = nlohmann::json;

json parse_document(std::string_view text, const char* what) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw Error(ErrorKind::kInvalidInput, std::string(what) + ": not an object");
    return doc;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInvalidInput, std::string(what) + ": " + e.what());
  }
}

template <typename F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInvalidInput, std::string(what) + ": " + e.what());
  }
}

std::vector<std::int64_t> int_array(const json& doc, const char* key) {
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw Error(ErrorKind::kInvalidInput, std::string(key) + " must be an array");
  std::vector<std::int64_t> out;
  out.reserve(arr.size());
  for (const json& v : arr) {
    if (!v.is_number_integer()) {
      throw Error(ErrorKind::kInvalidInput, std::string(key) + " must hold integers");
    }
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

}  // namespace

Instance parse_instance_json(std::string_view text) {
  const json doc = parse_document(text, "instance");
  return guarded("instance", [&] {
    if (doc.contains("version") && doc.at("version") != 1) {
      throw Error(ErrorKind::kInvalidInput, "instance: unsupported version");
    }
    Instance out;
    out.machines = doc.value("machines", 1);
    const json& jobs = doc.at("jobs");
    if (!jobs.is_array()) throw Error(ErrorKind::kInvalidInput, "instance: jobs must be an array");
    for (const json& job : jobs) {
      if (!job.at("p").is_number_integer() || !job.at("d").is_number_integer()) {
        throw Error(ErrorKind::kInvalidInput, "instance: p and d must be integers");
      }
      out.jobs.push_back({job.at("p").get<std::int64_t>(), job.at("d").get<std::int64_t>()});
    }
    return out;
  });
}

std::string instance_to_json(const Instance& instance) {
  json jobs = json::array();
  for (const Job& job : instance.jobs) jobs.push_back({{"p", job.p}, {"d", job.d}});
  json doc = {{"version", 1}, {"machines", instance.machines}, {"jobs", std::move(jobs)}};
  return doc.dump() + "\n";
}

SolutionRecord to_record(const NormalizedInstance& instance, const Solution& solution) {
  std::vector<std::size_t> order(solution.selected.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto file_index = [&](std::size_t k) {
    const std::size_t j = solution.selected[k];
    return instance.original().empty() ? j : instance.original()[j];
  };
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return file_index(x) < file_index(y); });

  SolutionRecord record;
  record.objective = solution.objective;
  for (std::size_t k : order) record.selected.push_back(file_index(k) + 1);
  if (solution.assignment) {
    std::vector<int> machines;
    for (std::size_t k : order) machines.push_back((*solution.assignment)[k] + 1);
    record.assignment = std::move(machines);
  }
  return record;
}

std::string solution_to_json(const SolutionRecord& record) {
  json doc = {{"objective", record.objective}, {"selected", record.selected}};
  doc["assignment"] = record.assignment ? json(*record.assignment) : json(nullptr);
  return doc.dump() + "\n";
}

SolutionRecord parse_solution_json(std::string_view text) {
  const json doc = parse_document(text, "solution");
  return guarded("solution", [&] {
    SolutionRecord record;
    record.objective = doc.at("objective").get<std::int64_t>();
    record.selected = doc.at("selected").get<std::vector<std::size_t>>();
    if (doc.contains("assignment") && !doc.at("assignment").is_null()) {
      record.assignment = doc.at("assignment").get<std::vector<int>>();
    }
    return record;
  });
}

SkewedConvInput parse_conv_json(std::string_view text) {
  const json doc = parse_document(text, "convolution input");
  return guarded("convolution input", [&] {
    SkewedConvInput input;
    input.a = int_array(doc, "a");
    input.b = int_array(doc, "b");
    if (doc.contains("d")) {
      input.d = int_array(doc, "d");
    } else if (doc.contains("skew")) {
      if (doc.at("skew") != "identity") {
        throw Error(ErrorKind::kInvalidInput, "convolution input: unknown skew");
      }
      input.d = identity_skew(input.a.size());
    } else {
      input.d.assign(input.a.empty() ? 0 : 2 * input.a.size() - 1, 0);
    }
    return input;
  });
}

std::string conv_input_to_json(const SkewedConvInput& input) {
  json doc = {{"a", input.a}, {"b", input.b}, {"d", input.d}};
  return doc.dump() + "\n";
}

std::string conv_output_to_json(const std::vector<std::int64_t>& c) {
  return json{{"c", c}}.dump() + "\n";
}

std::vector<std::int64_t> parse_conv_output_json(std::string_view text) {
  const json doc = parse_document(text, "convolution output");
  return guarded("convolution output", [&] { return int_array(doc, "c"); });
}

}  // namespace tardy
