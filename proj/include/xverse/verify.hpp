#pragma once

// Invariance checks on augmentation counts, and the knot table.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "xverse/augmentation.hpp"
#include "xverse/braid.hpp"

namespace xverse {

enum class CheckKind { Conjugation, StabPos, StabNegInfinity, Mirror, OpSwap, Rescale, DoubleHatStab, LamOverride };

std::string_view check_name(CheckKind k) noexcept;
CheckKind parse_check(std::string_view text);

struct GridPoint {
  std::uint32_t lam = 1;
  std::uint32_t mu = 1;
  std::optional<std::uint32_t> u;
  std::optional<std::uint32_t> v;

  bool operator==(const GridPoint&) const = default;
};

std::string to_string(const GridPoint& g);
/// "2,1;1,1" or "2,1,1,2;..." (lambda, mu[, U, V]).
std::vector<GridPoint> parse_grid(std::string_view text);

struct CheckSpec {
  BraidWord braid;
  CheckKind check = CheckKind::Conjugation;
  /// Used by conjugation, stab_pos, mirror and lam_override; the other checks
  /// fix their own flavor.
  Flavor flavor = Flavor::Hat;
  std::uint32_t prime = 3;
  /// Empty: default_grid(check_flavor(spec), prime).
  std::vector<GridPoint> grid;
  int samples = 5;
  std::uint64_t seed = 0;
  CountOptions options;
};

/// Every (lambda0, mu0) in {1,2}^2 (just (1,1) over Z/2); infinity and
/// minus also vary U0, V0.
std::vector<GridPoint> default_grid(Flavor flavor, std::uint32_t prime);

/// Flavor in which a check is evaluated.
Flavor check_flavor(const CheckSpec& s);

struct CheckCase {
  std::string move;
  GridPoint point;
  std::uint64_t left = 0;
  std::uint64_t right = 0;
};

struct CheckReport {
  CheckKind check = CheckKind::Conjugation;
  bool passed = true;
  std::vector<CheckCase> cases;
};

/// Counts of braids with five or more strands are split at the midpoint.
/// Throws BudgetExceeded when a count does not fit the budget.
CheckReport run_check(const CheckSpec& spec);

nlohmann::json to_json(const CheckReport& r);

struct TableRow {
  std::string name;
  std::vector<std::string> braids;
  std::uint32_t lam = 2;
  std::uint32_t mu = 1;
  std::vector<std::uint64_t> expected;
};

/// Hat-flavor rows over Z/3.
const std::vector<TableRow>& knot_table();

struct TableEntry {
  std::string braid;
  int strands = 0;
  std::optional<std::size_t> split;
  std::uint64_t expected = 0;
  std::optional<std::uint64_t> computed;
  std::string error;
  double seconds = 0;
  bool passed() const { return computed && *computed == expected; }
};

struct TableRowReport {
  TableRow row;
  std::vector<TableEntry> entries;
  bool passed() const;
};

struct TableReport {
  std::vector<TableRowReport> rows;
  bool passed() const;
};

/// Runs the named rows (all when empty). Budget failures are recorded in
/// the entry instead of thrown.
TableReport reproduce_table(std::uint32_t prime = 3, const std::vector<std::string>& rows = {},
                            const CountOptions& options = {});

nlohmann::json to_json(const TableReport& r, bool with_times = false);

}  // namespace xverse
