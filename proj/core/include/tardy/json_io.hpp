#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tardy/model.hpp"
#include "tardy/skewed_convolution.hpp"

namespace tardy {

// Parsers throw Error(kInvalidInput) on malformed documents.

// {"version":1,"machines":m,"jobs":[{"p":int,"d":int},...]}; "machines"
// defaults to 1.
Instance parse_instance_json(std::string_view text);
std::string instance_to_json(const Instance& instance);

// Solution in file terms: job indices and machines are 1-based, jobs in
// input order.
struct SolutionRecord {
  std::int64_t objective = 0;
  std::vector<std::size_t> selected;
  std::optional<std::vector<int>> assignment;

  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

SolutionRecord to_record(const NormalizedInstance& instance, const Solution& solution);

// {"objective":int,"selected":[...],"assignment":[...] or null}
std::string solution_to_json(const SolutionRecord& record);
SolutionRecord parse_solution_json(std::string_view text);

// {"a":[...],"b":[...],"d":[...]} or {"a":[...],"b":[...],"skew":"identity"}.
// An absent d means d = 0.
SkewedConvInput parse_conv_json(std::string_view text);
std::string conv_input_to_json(const SkewedConvInput& input);

// {"c":[...]}
std::string conv_output_to_json(const std::vector<std::int64_t>& c);
std::vector<std::int64_t> parse_conv_output_json(std::string_view text);

}  // namespace tardy
