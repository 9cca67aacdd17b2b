#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tardy {

struct SubsetSumInstance {
  std::vector<std::int64_t> elements;
  std::int64_t target = 0;

  friend bool operator==(const SubsetSumInstance&, const SubsetSumInstance&) = default;
};

// Columns (y, p, q, r, w).
inline constexpr std::array<std::array<std::int64_t, 5>, 3> kTriangleFoldBlock = {{
    {1, -2, -2, -2, 1},
    {1, -1, -1, -1, 0},
    {0, 0, 1, -1, 0},
}};

inline constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

enum class Relation { kLe, kEq, kGe };

struct Constraint {
  Relation relation = Relation::kLe;
  std::int64_t rhs = kInfinity;  // 0, 1 or kInfinity

  bool cancelled() const { return relation == Relation::kLe && rhs == kInfinity; }
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

enum class VariableKind { kY, kP, kQ, kR, kW };

// Block-triangular system: block row b (0-based) constrains
// sum_{c <= b} A x_c, where x_c holds the five variables of block column c.
// Constraint 3b + k is row k of block row b; variable 5c + k is column k of
// block column c.
//
// Super-block i (0-based, i = n is the target block) spans 2(J+2) block rows
// and columns: pairs (y_s, z_s) for s = 1..J+1, then w, then an empty pair.
struct TriangleFoldILP {
  std::array<std::array<std::int64_t, 5>, 3> a = kTriangleFoldBlock;
  std::size_t block_count = 0;
  std::vector<Constraint> constraints;
  std::vector<std::int64_t> upper;  // 0 or kInfinity
  SubsetSumInstance source;
  int bits = 0;  // J

  std::size_t super_blocks() const { return source.elements.size() + 1; }
  std::size_t blocks_per_super() const { return 2 * (static_cast<std::size_t>(bits) + 2); }
  std::size_t chain_length() const { return static_cast<std::size_t>(bits) + 1; }
  std::size_t variable_count() const { return 5 * block_count; }
  std::size_t constraint_count() const { return 3 * block_count; }

  friend bool operator==(const TriangleFoldILP&, const TriangleFoldILP&) = default;
};

// Throws Error(kInvalidInput) for an empty or negative instance, or values
// of 2^62 and above.
TriangleFoldILP build_trianglefold(const SubsetSumInstance& instance);

// Index of z_s's carrier (p, q or r) in super-block i, s = 1..J+1.
std::size_t chain_variable(const TriangleFoldILP& ilp, std::size_t super_block, std::size_t s);
// Index of the y_s variable in super-block i.
std::size_t chain_y(const TriangleFoldILP& ilp, std::size_t super_block, std::size_t s);
std::size_t chain_w(const TriangleFoldILP& ilp, std::size_t super_block);

struct VariableRole {
  std::size_t super_block = 0;
  std::size_t local_block = 0;  // 0-based within the super-block
  VariableKind kind = VariableKind::kY;
};

VariableRole variable_role(const TriangleFoldILP& ilp, std::size_t variable);

// Per super-block all-zeros or powers-of-two, split over p/q/r by the bound
// mask, w = sum of z. `subset` holds 0-based element indices. Throws
// Error(kInvalidInput) for out-of-range or repeated indices.
std::vector<std::int64_t> witness_from_subset(const TriangleFoldILP& ilp,
                                              const std::vector<std::size_t>& subset);

struct Violation {
  enum class Kind { kBound, kConstraint } kind = Kind::kConstraint;
  std::size_t index = 0;  // constraint or variable index
  std::size_t block = 0;  // block row or block column
  std::size_t row = 0;    // row of A or column of A
  std::size_t super_block = 0;
  std::size_t local_block = 0;
  std::string detail;
};

struct CheckResult {
  bool feasible = true;
  std::optional<Violation> violation;  // first one, constraints after bounds
};

// Throws Error(kDimension) when x has the wrong length.
CheckResult check_assignment(const TriangleFoldILP& ilp, const std::vector<std::int64_t>& x);

inline constexpr std::size_t kEnumerateLimit = 20;

// Tries the witness of every subset. Throws Error(kSizeGuard) beyond
// kEnumerateLimit elements and std::logic_error if a witness verdict ever
// disagrees with the subset sum itself.
bool enumerate_feasible(const SubsetSumInstance& instance);

// b in {0, 1, inf}, u in {0, inf} and A equal to the fixed block.
bool satisfies_format(const TriangleFoldILP& ilp);

// One row of the pure "<=" normal form: `sign` is -1 for the negated copy
// of an equality or ">=" row.
struct NormalRow {
  std::size_t block = 0;
  std::size_t row = 0;
  int sign = 1;
  std::vector<std::pair<std::size_t, std::int64_t>> coefficients;
  std::int64_t rhs = kInfinity;
};

std::vector<NormalRow> normal_form(const TriangleFoldILP& ilp);

enum class ExportFormat { kText, kJson };

// Throws Error(kInvalidInput) on an unknown name.
ExportFormat parse_export_format(std::string_view name);

std::string export_ilp(const TriangleFoldILP& ilp, ExportFormat format);
// Inverse of export_ilp. Throws Error(kInvalidInput) on malformed input or
// rows whose coefficients disagree with the block structure.
TriangleFoldILP parse_ilp(std::string_view text, ExportFormat format);

}  // namespace tardy
