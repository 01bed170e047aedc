#include <doctest.h>

#include "jfunc/conjecture_lab.hpp"
#include "jfunc/errors.hpp"
#include "jfunc/jfunction.hpp"
#include "support.hpp"

using namespace jfunc;
namespace ts = testing_support;

namespace {

ScanOptions options(int max_coeff, const std::string& checks, int workers = 1) {
  ScanOptions o;
  o.max_coeff = max_coeff;
  o.checks = parse_checks(checks);
  o.workers = workers;
  return o;
}

IntPoly one_minus_q_to(int k) {
  IntPoly r{1};
  for (int i = 0; i < k; ++i) r *= IntPoly{1, -1};
  return r;
}

}  // namespace

TEST_CASE("check names and tiers") {
  for (Check c : all_checks()) CHECK(parse_check(check_name(c)) == c);
  CHECK(all_checks().size() == 8);
  CHECK(tier_of(Check::denominator) == Tier::theorem);
  CHECK(tier_of(Check::k_alpha) == Tier::theorem);
  CHECK(tier_of(Check::unimodal) == Tier::conjecture);
  CHECK(tier_of(Check::poincare) == Tier::conjecture);
  CHECK(parse_checks("none").empty());
  CHECK(parse_checks("").empty());
  CHECK(parse_checks("symmetry,toda") == std::set<Check>{Check::symmetry, Check::toda});
  CHECK_THROWS_AS(parse_checks("symmetry,,toda"), InvalidArgument);
  CHECK_THROWS_AS(parse_check("bogus"), InvalidArgument);
}

TEST_CASE("A2 scan passes every check") {
  const ScanReport r = run_checks(RootSystem::parse("A2"), options(3, "all"));
  CHECK(r.results.size() == 16);
  CHECK(r.failed == 0);
  CHECK(r.passed == 16 * 8);
  CHECK(r.findings.empty());
  for (const auto& rec : r.results) {
    CAPTURE(rec.alpha.to_string());
    CHECK(rec.checks.size() == 8);
    CHECK(rec.checks.at("toda") == Outcome::pass);
    CHECK(rec.checks.at("poincare") == Outcome::pass);
    CHECK(rec.numerator == ts::gaussian_quotient(rec.alpha[0] + rec.alpha[1], rec.alpha[0]));
  }
}

TEST_CASE("G2 theorem checks pass, type-A checks are skipped") {
  const ScanReport r = run_checks(RootSystem::parse("G2"), options(2, "denominator,palindromic,symmetry,toda,poincare"));
  CHECK(r.results.size() == 9);
  CHECK(r.failed == 0);
  for (const auto& rec : r.results) {
    CHECK(rec.checks.at("denominator") == Outcome::pass);
    CHECK(rec.checks.at("symmetry") == Outcome::pass);
    CHECK(rec.checks.at("toda") == Outcome::skip);
    CHECK(rec.checks.at("poincare") == Outcome::skip);
  }
}

TEST_CASE("empty check set reports only numerators") {
  const ScanReport r = run_checks(RootSystem::parse("A3"), options(1, "none"));
  CHECK(r.results.size() == 8);
  CHECK(r.results.back().numerator == IntPoly{1, 3, 1});
  for (const auto& rec : r.results) CHECK(rec.checks.empty());
  const auto doc = r.to_json();
  CHECK(doc["summary"]["pass"] == 0);
  CHECK(doc["range"]["count"] == 8);
}

TEST_CASE("max_coeff 0 reports only alpha = 0") {
  const ScanReport r = run_checks(RootSystem::parse("D4"), options(0, "all"));
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].alpha.is_zero());
  CHECK(r.results[0].numerator == IntPoly{1});
}

TEST_CASE("unimodality findings are recorded, not thrown") {
  // Coefficients 1,1,3,2,5,2,3,1,1 at (2,2) in B2.
  const ScanReport r = run_checks(RootSystem::parse("B2"), options(2, "positivity,unimodal"));
  bool seen = false;
  for (const auto& f : r.findings) {
    CHECK(f.check == "unimodal");
    if (f.alpha == LatticeVector{2, 2}) seen = true;
  }
  CHECK(seen);
  const auto& rec = r.results.back();
  CHECK(rec.numerator == IntPoly{1, 1, 3, 2, 5, 2, 3, 1, 1});
  CHECK(rec.checks.at("positivity") == Outcome::pass);
  CHECK(rec.checks.at("unimodal") == Outcome::fail);
  CHECK(r.failed == static_cast<long>(r.findings.size()));
}

TEST_CASE("theorem failures abort the scan") {
  const RootSystem a1 = RootSystem::parse("A1");
  JTable bad_denominator(a1);
  bad_denominator.insert({1}, RatFunc(IntPoly{1}, one_minus_q_to(3)));
  CHECK_THROWS_AS(run_checks(a1, options(1, "denominator"), bad_denominator), TheoremViolation);

  JTable bad_shape(a1);
  bad_shape.insert({1}, RatFunc(IntPoly{1, 2}, one_minus_q_to(2)));
  CHECK_THROWS_AS(run_checks(a1, options(1, "palindromic"), bad_shape), TheoremViolation);

  JTable bad_symmetry(a1);
  bad_symmetry.insert({1}, RatFunc(IntPoly{1, 0, 1}, one_minus_q_to(2)));
  CHECK_THROWS_AS(run_checks(a1, options(1, "symmetry"), bad_symmetry), TheoremViolation);
}

TEST_CASE("budget") {
  ScanOptions o = options(3, "denominator");
  o.budget.max_degree = 10;
  CHECK_THROWS_AS(run_checks(RootSystem::parse("A2"), o), BudgetExceeded);
  ScanOptions p = options(2, "poincare");
  p.budget.max_fixed_points = 3;
  CHECK_THROWS_AS(run_checks(RootSystem::parse("A3"), p), BudgetExceeded);
}

TEST_CASE("reports do not depend on the worker count") {
  for (const char* name : {"A3", "C3"}) {
    const RootSystem spec = RootSystem::parse(name);
    const std::string one = run_checks(spec, options(2, "all", 1)).to_json().dump(2);
    const std::string many = run_checks(spec, options(2, "all", 6)).to_json().dump(2);
    CHECK(one == many);
  }
}

TEST_CASE("report JSON shape") {
  ScanOptions o = options(1, "symmetry");
  o.timings = true;
  const auto doc = run_checks(RootSystem::parse("A1"), o).to_json();
  CHECK(doc["spec"] == "A1");
  CHECK(doc["range"]["max_coeff"] == 1);
  REQUIRE(doc["results"].size() == 2);
  CHECK(doc["results"][1]["alpha"] == nlohmann::json::array({1}));
  CHECK(doc["results"][1]["numerator"] == nlohmann::json::array({"1"}));
  CHECK(doc["results"][1]["checks"]["symmetry"] == "pass");
  CHECK(doc["results"][1].contains("ms"));
  CHECK(doc["findings"].is_array());
  const auto plain = run_checks(RootSystem::parse("A1"), options(1, "symmetry")).to_json();
  CHECK_FALSE(plain["results"][1].contains("ms"));
}
