#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "jfunc/jtable.hpp"
#include "jfunc/poly.hpp"
#include "jfunc/root_system.hpp"

namespace jfunc {

/// Checks a scan can run. The first five are consequences of proved
/// statements and abort the scan on failure; the last three are conjectural
/// and are recorded as findings.
enum class Check { denominator, palindromic, symmetry, toda, k_alpha, positivity, unimodal, poincare };

enum class Tier { theorem, conjecture };

Tier tier_of(Check c);
std::string check_name(Check c);
/// Accepts the names above; throws InvalidArgument otherwise.
Check parse_check(const std::string& name);
/// Comma-separated list; "all" selects every check, "" or "none" none.
std::set<Check> parse_checks(const std::string& list);
std::set<Check> all_checks();

struct Budget {
  /// Largest allowed degree of (q)_alpha^2.
  int max_degree = 4000;
  /// Largest fixed-point count the poincare check will enumerate.
  long max_fixed_points = 20'000'000;
};

struct ScanOptions {
  int max_coeff = 0;
  std::set<Check> checks;
  int workers = 1;
  bool timings = false;
  Budget budget;
};

enum class Outcome { pass, fail, skip };

struct AlphaRecord {
  LatticeVector alpha;
  IntPoly numerator;
  std::map<std::string, Outcome> checks;
  double ms = 0;
};

struct Finding {
  LatticeVector alpha;
  std::string check;
  std::string detail;
};

struct ScanReport {
  explicit ScanReport(RootSystem s) : spec(std::move(s)) {}

  RootSystem spec;
  int max_coeff = 0;
  bool timings = false;
  std::vector<AlphaRecord> results;
  std::vector<Finding> findings;
  long passed = 0;
  long failed = 0;

  nlohmann::json to_json() const;
};

/// Runs `options.checks` on every alpha with 0 <= a_i <= max_coeff, in
/// lexicographic order. `table` is filled (and may be pre-seeded from a
/// cache). Theorem-tier failures throw TheoremViolation with diagnostics;
/// conjecture-tier failures become findings. Throws BudgetExceeded when an
/// alpha exceeds the budget. The report does not depend on the worker count.
ScanReport run_checks(const RootSystem& spec, const ScanOptions& options, JTable& table);
ScanReport run_checks(const RootSystem& spec, const ScanOptions& options);

}  // namespace jfunc
