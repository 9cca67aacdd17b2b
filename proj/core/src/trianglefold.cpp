#include "tardy/trianglefold.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"
#include "tardy/error.hpp"
#include "wide.hpp"

namespace tardy {

namespace {

using json = nlohmann::json;

constexpr std::int64_t kValueLimit = std::int64_t{1} << 62;

int bit_length(std::int64_t v) {
  return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(v)));
}

// Bit s - 1 (1-indexed, weight 2^(s-2)) of `value` for chain position s >= 2.
bool chain_bit(std::int64_t value, std::size_t s) {
  return (static_cast<std::uint64_t>(value) >> (s - 2)) & 1U;
}

std::size_t kind_column(VariableKind kind) { return static_cast<std::size_t>(kind); }

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::kLe: return "<=";
    case Relation::kEq: return "=";
    case Relation::kGe: return ">=";
  }
  return "?";
}

Relation relation_from(std::string_view s) {
  if (s == "<=") return Relation::kLe;
  if (s == "=") return Relation::kEq;
  if (s == ">=") return Relation::kGe;
  throw Error(ErrorKind::kInvalidInput, "unknown relation '" + std::string(s) + "'");
}

std::string bound_text(std::int64_t v) { return v == kInfinity ? "inf" : std::to_string(v); }

std::int64_t bound_from(std::string_view s) {
  if (s == "inf") return kInfinity;
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(std::string(s), &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::kInvalidInput, "bad bound '" + std::string(s) + "'");
  }
}

json bound_json(std::int64_t v) { return v == kInfinity ? json("inf") : json(v); }

std::int64_t bound_from_json(const json& j) {
  if (j.is_string()) return bound_from(j.get<std::string>());
  if (!j.is_number_integer()) throw Error(ErrorKind::kInvalidInput, "bad bound in JSON");
  return j.get<std::int64_t>();
}

void validate(const SubsetSumInstance& ss) {
  if (ss.elements.empty()) throw Error(ErrorKind::kInvalidInput, "subset sum needs n >= 1");
  auto check = [](std::int64_t v) {
    if (v < 0 || v >= kValueLimit) {
      throw Error(ErrorKind::kInvalidInput, "subset sum values must lie in [0, 2^62)");
    }
  };
  for (std::int64_t a : ss.elements) check(a);
  check(ss.target);
}

}  // namespace

TriangleFoldILP build_trianglefold(const SubsetSumInstance& instance) {
  validate(instance);
  TriangleFoldILP ilp;
  ilp.source = instance;
  ilp.bits = std::max(1, bit_length(instance.target));
  for (std::int64_t a : instance.elements) ilp.bits = std::max(ilp.bits, bit_length(a));

  const std::size_t n = instance.elements.size();
  const std::size_t per = ilp.blocks_per_super();
  const std::size_t chain = ilp.chain_length();
  ilp.block_count = (n + 1) * per;
  ilp.constraints.assign(ilp.constraint_count(), Constraint{});
  ilp.upper.assign(ilp.variable_count(), 0);

  for (std::size_t i = 0; i <= n; ++i) {
    const bool last = i == n;
    for (std::size_t local = 0; local < per; ++local) {
      const std::size_t block = i * per + local;
      // Odd block rows (1-indexed) keep A's first row, even ones the second.
      if (local % 2 == 0) {
        const std::int64_t rhs = local == 0 ? 1 : 0;
        const Relation rel = local == 0 && !last ? Relation::kLe : Relation::kEq;
        ilp.constraints[3 * block] = {rel, rhs};
      } else {
        ilp.constraints[3 * block + 1] = {Relation::kEq, 0};
      }
    }
    for (std::size_t s = 1; s <= chain; ++s) {
      ilp.upper[chain_y(ilp, i, s)] = kInfinity;
      ilp.upper[chain_variable(ilp, i, s)] = kInfinity;
    }
    ilp.upper[chain_w(ilp, i)] = kInfinity;
  }
  ilp.constraints[ilp.constraint_count() - 1] = {Relation::kEq, 0};
  return ilp;
}

std::size_t chain_y(const TriangleFoldILP& ilp, std::size_t super_block, std::size_t s) {
  const std::size_t block = super_block * ilp.blocks_per_super() + 2 * (s - 1);
  return 5 * block + kind_column(VariableKind::kY);
}

std::size_t chain_variable(const TriangleFoldILP& ilp, std::size_t super_block,
                           std::size_t s) {
  const std::size_t n = ilp.source.elements.size();
  const bool last = super_block == n;
  const std::int64_t value = last ? ilp.source.target : ilp.source.elements[super_block];
  VariableKind kind = VariableKind::kP;
  if (s >= 2 && chain_bit(value, s)) kind = last ? VariableKind::kR : VariableKind::kQ;
  const std::size_t block = super_block * ilp.blocks_per_super() + 2 * (s - 1) + 1;
  return 5 * block + kind_column(kind);
}

std::size_t chain_w(const TriangleFoldILP& ilp, std::size_t super_block) {
  const std::size_t block = super_block * ilp.blocks_per_super() + 2 * ilp.chain_length();
  return 5 * block + kind_column(VariableKind::kW);
}

VariableRole variable_role(const TriangleFoldILP& ilp, std::size_t variable) {
  if (variable >= ilp.variable_count()) {
    throw Error(ErrorKind::kDimension, "variable index out of range");
  }
  const std::size_t block = variable / 5;
  return {block / ilp.blocks_per_super(), block % ilp.blocks_per_super(),
          static_cast<VariableKind>(variable % 5)};
}

std::vector<std::int64_t> witness_from_subset(const TriangleFoldILP& ilp,
                                              const std::vector<std::size_t>& subset) {
  const std::size_t n = ilp.source.elements.size();
  std::vector<bool> chosen(n + 1, false);
  for (std::size_t i : subset) {
    if (i >= n || chosen[i]) {
      throw Error(ErrorKind::kInvalidInput, "subset index out of range or repeated");
    }
    chosen[i] = true;
  }
  chosen[n] = true;

  std::vector<std::int64_t> x(ilp.variable_count(), 0);
  for (std::size_t i = 0; i <= n; ++i) {
    if (!chosen[i]) continue;
    std::int64_t sum = 0;
    for (std::size_t s = 1; s <= ilp.chain_length(); ++s) {
      const std::int64_t z = s == 1 ? 1 : std::int64_t{1} << (s - 2);
      x[chain_y(ilp, i, s)] = z;
      x[chain_variable(ilp, i, s)] = z;
      sum += z;
    }
    x[chain_w(ilp, i)] = sum;
  }
  return x;
}

CheckResult check_assignment(const TriangleFoldILP& ilp, const std::vector<std::int64_t>& x) {
  if (x.size() != ilp.variable_count()) {
    throw Error(ErrorKind::kDimension, "assignment has " + std::to_string(x.size()) +
                                           " entries, expected " +
                                           std::to_string(ilp.variable_count()));
  }
  const std::size_t per = ilp.blocks_per_super();
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (x[v] >= 0 && (ilp.upper[v] == kInfinity || x[v] <= ilp.upper[v])) continue;
    Violation bad;
    bad.kind = Violation::Kind::kBound;
    bad.index = v;
    bad.block = v / 5;
    bad.row = v % 5;
    bad.super_block = bad.block / per;
    bad.local_block = bad.block % per;
    bad.detail = "x[" + std::to_string(v) + "] = " + std::to_string(x[v]) +
                 " outside [0, " + bound_text(ilp.upper[v]) + "]";
    return {false, bad};
  }

  std::array<Int128, 5> column_sums{};
  for (std::size_t block = 0; block < ilp.block_count; ++block) {
    for (std::size_t k = 0; k < 5; ++k) column_sums[k] += x[5 * block + k];
    for (std::size_t row = 0; row < 3; ++row) {
      const Constraint& c = ilp.constraints[3 * block + row];
      if (c.cancelled()) continue;
      Int128 lhs = 0;
      for (std::size_t k = 0; k < 5; ++k) lhs += ilp.a[row][k] * column_sums[k];
      bool ok = true;
      if (c.rhs != kInfinity) {
        switch (c.relation) {
          case Relation::kLe: ok = lhs <= c.rhs; break;
          case Relation::kEq: ok = lhs == c.rhs; break;
          case Relation::kGe: ok = lhs >= c.rhs; break;
        }
      }
      if (ok) continue;
      Violation bad;
      bad.index = 3 * block + row;
      bad.block = block;
      bad.row = row;
      bad.super_block = block / per;
      bad.local_block = block % per;
      bad.detail = "row " + std::to_string(bad.index) + ": lhs " +
                   std::to_string(static_cast<long long>(lhs)) + " " +
                   relation_name(c.relation) + " " + bound_text(c.rhs) + " fails";
      return {false, bad};
    }
  }
  return {};
}

bool enumerate_feasible(const SubsetSumInstance& instance) {
  const TriangleFoldILP ilp = build_trianglefold(instance);
  const std::size_t n = instance.elements.size();
  if (n > kEnumerateLimit) {
    throw Error(ErrorKind::kSizeGuard,
                "enumeration limited to " + std::to_string(kEnumerateLimit) + " elements");
  }
  bool any = false;
  std::vector<std::size_t> subset;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    subset.clear();
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) {
        subset.push_back(i);
        sum += instance.elements[i];
      }
    }
    const bool passes = check_assignment(ilp, witness_from_subset(ilp, subset)).feasible;
    if (passes != (sum == instance.target)) {
      throw std::logic_error("enumerate_feasible: witness verdict disagrees with subset sum");
    }
    any = any || passes;
  }
  return any;
}

bool satisfies_format(const TriangleFoldILP& ilp) {
  if (ilp.a != kTriangleFoldBlock) return false;
  if (ilp.constraints.size() != ilp.constraint_count()) return false;
  if (ilp.upper.size() != ilp.variable_count()) return false;
  for (const Constraint& c : ilp.constraints) {
    if (c.rhs != 0 && c.rhs != 1 && c.rhs != kInfinity) return false;
  }
  return std::all_of(ilp.upper.begin(), ilp.upper.end(),
                     [](std::int64_t u) { return u == 0 || u == kInfinity; });
}

std::vector<NormalRow> normal_form(const TriangleFoldILP& ilp) {
  std::vector<NormalRow> rows;
  auto emit = [&](std::size_t block, std::size_t row, int sign, std::int64_t rhs) {
    NormalRow out;
    out.block = block;
    out.row = row;
    out.sign = sign;
    out.rhs = rhs == kInfinity ? kInfinity : sign * rhs;
    for (std::size_t c = 0; c <= block; ++c) {
      for (std::size_t k = 0; k < 5; ++k) {
        if (ilp.a[row][k] != 0) out.coefficients.emplace_back(5 * c + k, sign * ilp.a[row][k]);
      }
    }
    rows.push_back(std::move(out));
  };
  for (std::size_t block = 0; block < ilp.block_count; ++block) {
    for (std::size_t row = 0; row < 3; ++row) {
      const Constraint& c = ilp.constraints[3 * block + row];
      if (c.relation != Relation::kGe) emit(block, row, 1, c.rhs);
      if (c.relation != Relation::kLe) emit(block, row, -1, c.rhs);
    }
  }
  return rows;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "text" || name == "txt") return ExportFormat::kText;
  if (name == "json") return ExportFormat::kJson;
  throw Error(ErrorKind::kInvalidInput, "unknown export format '" + std::string(name) + "'");
}

std::string export_ilp(const TriangleFoldILP& ilp, ExportFormat format) {
  if (format == ExportFormat::kJson) {
    json out;
    out["format"] = "trianglefold";
    out["version"] = 1;
    out["A"] = ilp.a;
    out["block_count"] = ilp.block_count;
    out["bits"] = ilp.bits;
    out["super_blocks"] = ilp.super_blocks();
    out["blocks_per_super"] = ilp.blocks_per_super();
    out["elements"] = ilp.source.elements;
    out["target"] = ilp.source.target;
    json cons = json::array();
    for (const Constraint& c : ilp.constraints) {
      cons.push_back(json::array({relation_name(c.relation), bound_json(c.rhs)}));
    }
    out["constraints"] = std::move(cons);
    json upper = json::array();
    for (std::int64_t u : ilp.upper) upper.push_back(bound_json(u));
    out["upper"] = std::move(upper);
    return out.dump() + "\n";
  }

  std::ostringstream os;
  os << "trianglefold 1\n";
  os << "source " << ilp.source.target;
  for (std::int64_t a : ilp.source.elements) os << ' ' << a;
  os << '\n';
  os << "bits " << ilp.bits << '\n';
  for (const auto& row : ilp.a) {
    os << 'A';
    for (std::int64_t v : row) os << ' ' << v;
    os << '\n';
  }
  os << "blocks " << ilp.block_count << '\n';
  for (const NormalRow& r : normal_form(ilp)) {
    os << "row " << r.block << ' ' << r.row << ' ' << (r.sign > 0 ? '+' : '-');
    for (const auto& [col, coef] : r.coefficients) os << ' ' << col << ':' << coef;
    os << " <= " << bound_text(r.rhs) << '\n';
  }
  for (std::size_t v = 0; v < ilp.upper.size(); ++v) {
    os << "ub " << v << ' ' << bound_text(ilp.upper[v]) << '\n';
  }
  os << "end\n";
  return os.str();
}

namespace {

TriangleFoldILP parse_json(std::string_view text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInvalidInput, std::string("ILP JSON: ") + e.what());
  }
  try {
    if (in.at("format") != "trianglefold" || in.at("version") != 1) {
      throw Error(ErrorKind::kInvalidInput, "not a version-1 trianglefold document");
    }
    TriangleFoldILP ilp;
    ilp.a = in.at("A").get<std::array<std::array<std::int64_t, 5>, 3>>();
    ilp.block_count = in.at("block_count").get<std::size_t>();
    ilp.bits = in.at("bits").get<int>();
    ilp.source.elements = in.at("elements").get<std::vector<std::int64_t>>();
    ilp.source.target = in.at("target").get<std::int64_t>();
    for (const json& c : in.at("constraints")) {
      ilp.constraints.push_back(
          {relation_from(c.at(0).get<std::string>()), bound_from_json(c.at(1))});
    }
    for (const json& u : in.at("upper")) ilp.upper.push_back(bound_from_json(u));
    if (ilp.constraints.size() != ilp.constraint_count() ||
        ilp.upper.size() != ilp.variable_count()) {
      throw Error(ErrorKind::kInvalidInput, "constraint or bound count mismatch");
    }
    return ilp;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInvalidInput, std::string("ILP JSON: ") + e.what());
  }
}

TriangleFoldILP parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  auto fail = [](const std::string& what) -> void {
    throw Error(ErrorKind::kInvalidInput, "ILP text: " + what);
  };

  TriangleFoldILP ilp;
  std::string line;
  std::size_t a_rows = 0;
  bool header = false;
  bool ended = false;
  // (block, row) -> rhs of the + and - copies
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::optional<std::int64_t>,
                                                          std::optional<std::int64_t>>>
      seen;
  std::vector<std::optional<std::int64_t>> upper;

  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "trianglefold") {
      int version = 0;
      ls >> version;
      if (version != 1) fail("unsupported version");
      header = true;
    } else if (!header) {
      fail("missing header");
    } else if (tag == "source") {
      ls >> ilp.source.target;
      std::int64_t a;
      while (ls >> a) ilp.source.elements.push_back(a);
    } else if (tag == "bits") {
      ls >> ilp.bits;
    } else if (tag == "A") {
      if (a_rows >= 3) fail("too many A rows");
      for (std::int64_t& v : ilp.a[a_rows]) {
        if (!(ls >> v)) fail("short A row");
      }
      ++a_rows;
    } else if (tag == "blocks") {
      ls >> ilp.block_count;
      upper.assign(ilp.variable_count(), std::nullopt);
    } else if (tag == "row") {
      std::size_t block = 0;
      std::size_t row = 0;
      std::string sign;
      if (!(ls >> block >> row >> sign) || (sign != "+" && sign != "-") ||
          block >= ilp.block_count || row >= 3) {
        fail("bad row header: " + line);
      }
      const int s = sign == "+" ? 1 : -1;
      std::vector<std::pair<std::size_t, std::int64_t>> coefficients;
      std::string token;
      while (ls >> token && token != "<=") {
        const auto colon = token.find(':');
        if (colon == std::string::npos) fail("bad coefficient '" + token + "'");
        coefficients.emplace_back(std::stoull(token.substr(0, colon)),
                                  std::stoll(token.substr(colon + 1)));
      }
      if (token != "<=") fail("row without '<='");
      std::string rhs_text;
      ls >> rhs_text;
      std::int64_t rhs = bound_from(rhs_text);
      std::vector<std::pair<std::size_t, std::int64_t>> expected;
      for (std::size_t c = 0; c <= block; ++c) {
        for (std::size_t k = 0; k < 5; ++k) {
          if (ilp.a[row][k] != 0) expected.emplace_back(5 * c + k, s * ilp.a[row][k]);
        }
      }
      if (coefficients != expected) fail("row coefficients break the block structure");
      if (rhs != kInfinity) rhs *= s;
      auto& slot = seen[{block, row}];
      (s > 0 ? slot.first : slot.second) = rhs;
    } else if (tag == "ub") {
      std::size_t v = 0;
      std::string bound;
      if (!(ls >> v >> bound) || v >= upper.size()) fail("bad bound line: " + line);
      upper[v] = bound_from(bound);
    } else if (tag == "end") {
      ended = true;
      break;
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  if (!ended) fail("missing 'end'");
  if (a_rows != 3) fail("expected 3 A rows");

  ilp.constraints.assign(ilp.constraint_count(), Constraint{});
  for (const auto& [key, rhs] : seen) {
    Constraint& c = ilp.constraints[3 * key.first + key.second];
    if (rhs.first && rhs.second) {
      if (*rhs.first != *rhs.second) fail("equality copies disagree");
      c = {Relation::kEq, *rhs.first};
    } else if (rhs.first) {
      c = {Relation::kLe, *rhs.first};
    } else {
      c = {Relation::kGe, *rhs.second};
    }
  }
  if (seen.size() != ilp.constraint_count()) fail("missing constraint rows");
  for (const auto& u : upper) {
    if (!u) fail("missing variable bound");
    ilp.upper.push_back(*u);
  }
  return ilp;
}

}  // namespace

TriangleFoldILP parse_ilp(std::string_view text, ExportFormat format) {
  return format == ExportFormat::kJson ? parse_json(text) : parse_text(text);
}

}  // namespace tardy
