#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "jfunc/errors.hpp"
#include "jfunc/jfunction.hpp"
#include "jfunc/jtable.hpp"
#include "jfunc/qcombinatorics.hpp"
#include "support.hpp"

using namespace jfunc;
namespace ts = testing_support;

namespace {

IntPoly one_minus_q_to(int k) {
  IntPoly r{1};
  for (int i = 0; i < k; ++i) r *= IntPoly{1, -1};
  return r;
}

const char* const theorem_types[] = {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"};

}  // namespace

TEST_CASE("j_fermionic examples") {
  JTable a1(RootSystem::parse("A1"));
  CHECK(j_fermionic({0}, a1) == RatFunc::constant(1));
  CHECK(j_fermionic({1}, a1) == RatFunc(IntPoly{1}, one_minus_q_to(2)));
  JTable a2(RootSystem::parse("A2"));
  CHECK(j_fermionic({1, 1}, a2) == RatFunc(IntPoly{1, 1}, one_minus_q_to(4)));
  CHECK(a2.size() == 4);
  CHECK_THROWS_AS(j_fermionic({1, -1}, a2), InvalidArgument);
  CHECK_THROWS_AS(j_fermionic({1}, a2), InvalidArgument);
}

TEST_CASE("j_toda_typeA examples") {
  JTable a1(RootSystem::parse("A1"));
  CHECK(j_toda_typeA({1}, a1) == RatFunc(IntPoly{1}, one_minus_q_to(2)));
  JTable a2(RootSystem::parse("A2"));
  CHECK(j_toda_typeA({1, 1}, a2) == RatFunc(IntPoly{1, 1}, one_minus_q_to(4)));
  CHECK(j_toda_typeA({1, 0}, a2) == RatFunc(IntPoly{1}, one_minus_q_to(2)));
  const LaurentPoly left = toda_left_coefficient({1, 1});
  CHECK(left == LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1) - LaurentPoly::monomial(2, 0));
  JTable b2(RootSystem::parse("B2"));
  CHECK_THROWS_AS(j_toda_typeA({1, 1}, b2), InvalidArgument);
}

TEST_CASE("numerator examples") {
  const RootSystem a1 = RootSystem::parse("A1");
  for (int k = 0; k <= 6; ++k) CHECK(numerator(a1, {k}) == IntPoly{1});
  CHECK(numerator(RootSystem::parse("A2"), {1, 1}) == IntPoly{1, 1});
  CHECK(numerator(RootSystem::parse("A3"), {1, 1, 1}) == IntPoly{1, 3, 1});
}

TEST_CASE("numerator_of rejects non-integral input") {
  const RootSystem a1 = RootSystem::parse("A1");
  CHECK_THROWS_AS(numerator_of(a1, {1}, RatFunc(IntPoly{1}, one_minus_q_to(3))), NotPolynomial);
  CHECK_THROWS_AS(numerator_of(a1, {1}, RatFunc(IntPoly{1}, IntPoly{2})), NonIntegerCoefficient);
  CHECK_THROWS_AS(numerator_of(a1, {1}, RatFunc(IntPoly{1}, IntPoly{1, 1, 1})), NotPolynomial);
  CHECK(numerator_of(a1, {1}, RatFunc(IntPoly{1}, one_minus_q_to(2))) == IntPoly{1});
}

TEST_CASE("K_alpha examples") {
  const RootSystem a2 = RootSystem::parse("A2"), a3 = RootSystem::parse("A3");
  JTable t2(a2), t3(a3);
  CHECK(k_alpha_limit(a2, {1, 1}, t2) == 2);
  CHECK(k_alpha_limit(a2, {0, 0}, t2) == 1);
  CHECK(k_alpha_limit(a3, {1, 1, 1}, t3) == 5);
  CHECK(k_alpha_recursive(a2, {1, 1}) == 2);
  CHECK(k_alpha_recursive(RootSystem::parse("A1"), {1}) == 1);
  CHECK(k_alpha_recursive(a3, {0, 0, 0}) == 1);
}

TEST_CASE("property: fermionic values match the plain rational-function oracle") {
  for (const char* name : theorem_types) {
    CAPTURE(name);
    const RootSystem spec = RootSystem::parse(name);
    const int bound = spec.rank() >= 3 ? 1 : 2;
    JTable table(spec);
    std::map<LatticeVector, RatFunc> memo;
    for (const auto& alpha : enumerate_box(spec.rank(), bound)) {
      CAPTURE(alpha.to_string());
      CHECK(j_fermionic(alpha, table) == ts::j_plain(spec, alpha, memo));
    }
  }
}

TEST_CASE("property: denominator, palindromicity, degree and symmetry") {
  for (const char* name : theorem_types) {
    CAPTURE(name);
    const RootSystem spec = RootSystem::parse(name);
    const int bound = spec.rank() >= 3 ? 2 : 3;
    JTable table(spec);
    fill_fermionic(table, {LatticeVector(std::vector<int>(spec.rank(), bound))}, 2);
    for (const auto& alpha : enumerate_box(spec.rank(), bound)) {
      CAPTURE(alpha.to_string());
      const RatFunc j = *table.find(alpha);
      const IntPoly h = numerator_of(spec, alpha, j);
      CHECK(is_palindromic(h));
      CHECK(h.leading() == 1);
      CHECK(h.coeff(0) == 1);
      const long deg = 2L * ts::pochhammer(spec, alpha).degree() - ts::form(spec, alpha, alpha) / 2 -
                       rho_pairing(spec, alpha);
      CHECK(h.degree() == deg);
      CHECK(predicted_numerator_degree(spec, alpha) == deg);
      CHECK(invert_q(j) == j.shifted(symmetry_exponent(spec, alpha)));
    }
  }
}

TEST_CASE("property: Toda and fermionic agree in type A") {
  for (int n = 1; n <= 3; ++n) {
    const RootSystem spec(Family::A, n);
    JTable fermi(spec), toda(spec);
    for (const auto& alpha : enumerate_box(n, n == 3 ? 2 : 3)) {
      if (alpha.is_zero()) continue;
      CAPTURE(alpha.to_string());
      CHECK(j_toda_typeA(alpha, toda) == j_fermionic(alpha, fermi));
    }
  }
}

TEST_CASE("property: K_alpha limit equals its recursion") {
  for (const char* name : theorem_types) {
    CAPTURE(name);
    const RootSystem spec = RootSystem::parse(name);
    JTable table(spec);
    for (const auto& alpha : enumerate_box(spec.rank(), spec.rank() >= 3 ? 1 : 2)) {
      CAPTURE(alpha.to_string());
      const Rational limit = k_alpha_limit(spec, alpha, table);
      CHECK(limit == k_alpha_recursive(spec, alpha));
      Integer fact = 1;
      for (int a : alpha.coeffs()) fact *= ts::factorial(a) * ts::factorial(a);
      Rational expected(numerator(spec, alpha, table).eval_at_one(), fact);
      expected.canonicalize();
      CHECK(limit == expected);
    }
  }
}

TEST_CASE("fill_fermionic does not depend on the worker count") {
  const RootSystem spec = RootSystem::parse("B3");
  JTable one(spec), many(spec);
  const std::vector<LatticeVector> targets{{2, 1, 2}, {1, 2, 0}};
  fill_fermionic(one, targets, 1);
  fill_fermionic(many, targets, 8);
  CHECK(one.snapshot() == many.snapshot());
  CHECK(one.size() == 18 + 6 - 4);  // union of the two order ideals
}

TEST_CASE("JTable rejects conflicting inserts and keeps factored forms") {
  JTable table(RootSystem::parse("A1"));
  CHECK(table.contains({0}));
  table.insert({1}, RatFunc(IntPoly{1}, one_minus_q_to(2)));
  CHECK_NOTHROW(table.insert({1}, RatFunc(IntPoly{1}, one_minus_q_to(2))));
  CHECK_THROWS_AS(table.insert({1}, RatFunc::constant(2)), InternalError);
  const auto f = table.find_factored({1});
  REQUIRE(f.has_value());
  CHECK(f->to_ratfunc() == *table.find({1}));
  CHECK_FALSE(table.find({5}).has_value());
}

TEST_CASE("cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "jfunc_cache_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const RootSystem spec = RootSystem::parse("C3");
  JTable table(spec);
  fill_fermionic(table, {{1, 2, 1}}, 2);
  const auto file = cache_file_path(dir, spec);
  save_cache(table, file);
  JTable loaded(spec);
  CHECK(load_cache(loaded, file) == table.size());
  CHECK(loaded.snapshot() == table.snapshot());
  CHECK(loaded.find_factored({1, 2, 1}).has_value());

  JTable missing(spec);
  CHECK(load_cache(missing, dir / "absent.json") == 0);

  JTable other(RootSystem::parse("B3"));
  CHECK_THROWS_AS(load_cache(other, file), InvalidArgument);

  const auto bad = dir / "bad.json";
  std::ofstream(bad) << "{\"family\":\"C\",\"rank\":3,\"entries\":[{\"alpha\":[1]}]}";
  JTable broken(spec);
  CHECK_THROWS_AS(load_cache(broken, bad), InvalidArgument);
  std::ofstream(bad) << "{\"family\":\"C\",\"rank\":3,\"entries\":[{\"alpha\":[1],\"num\":[\"1\"],\"den\":[\"1\"]}]}";
  CHECK_THROWS_AS(load_cache(broken, bad), InvalidArgument);
  std::filesystem::remove_all(dir);
}
