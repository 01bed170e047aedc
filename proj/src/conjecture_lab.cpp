#include "jfunc/conjecture_lab.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "jfunc/betti.hpp"
#include "jfunc/errors.hpp"
#include "jfunc/jfunction.hpp"
#include "jfunc/qcombinatorics.hpp"
#include "jfunc/serialize.hpp"
#include "jfunc/type_a.hpp"

namespace jfunc {

namespace {

const std::vector<std::pair<Check, std::string>>& check_names() {
  static const std::vector<std::pair<Check, std::string>> names = {
      {Check::denominator, "denominator"}, {Check::palindromic, "palindromic"}, {Check::symmetry, "symmetry"},
      {Check::toda, "toda"},               {Check::k_alpha, "k_alpha"},         {Check::positivity, "positivity"},
      {Check::unimodal, "unimodal"},       {Check::poincare, "poincare"},
  };
  return names;
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::skip: return "skip";
  }
  return "skip";
}

struct Evaluation {
  AlphaRecord record;
  std::vector<Finding> findings;
  std::exception_ptr error;
};

class Evaluator {
 public:
  Evaluator(const RootSystem& spec, const ScanOptions& options, const JTable& table, const JTable* toda)
      : spec_(spec), options_(options), table_(table), toda_(toda) {}

  Evaluation operator()(const LatticeVector& alpha) const {
    Evaluation ev;
    ev.record.alpha = alpha;
    const auto start = std::chrono::steady_clock::now();
    try {
      evaluate(alpha, ev);
    } catch (...) {
      ev.error = std::current_exception();
    }
    ev.record.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return ev;
  }

 private:
  bool wants(Check c) const { return options_.checks.count(c) > 0; }

  void theorem(Evaluation& ev, Check c, bool ok, const std::string& detail) const {
    if (!ok) {
      throw TheoremViolation(spec_.name() + " alpha=" + ev.record.alpha.to_string() + ": " + check_name(c) +
                             " check failed: " + detail);
    }
    ev.record.checks[check_name(c)] = Outcome::pass;
  }

  void conjecture(Evaluation& ev, Check c, bool ok, const std::string& detail) const {
    ev.record.checks[check_name(c)] = ok ? Outcome::pass : Outcome::fail;
    if (!ok) ev.findings.push_back({ev.record.alpha, check_name(c), detail});
  }

  void skip(Evaluation& ev, Check c) const { ev.record.checks[check_name(c)] = Outcome::skip; }

  void evaluate(const LatticeVector& alpha, Evaluation& ev) const {
    const RatFunc j = *table_.find(alpha);
    // numerator_of throws NotPolynomial / NonIntegerCoefficient itself
    const IntPoly h = numerator_of(spec_, alpha, j);
    ev.record.numerator = h;
    const bool type_a = spec_.family() == Family::A;

    if (wants(Check::denominator)) ev.record.checks[check_name(Check::denominator)] = Outcome::pass;

    if (wants(Check::palindromic)) {
      const int expected = predicted_numerator_degree(spec_, alpha);
      std::ostringstream why;
      why << "numerator " << to_string(h) << ", expected monic palindromic of degree " << expected;
      const bool ok = !h.is_zero() && is_palindromic(h) && h.leading() == 1 && h.coeff(0) == 1 && h.degree() == expected;
      theorem(ev, Check::palindromic, ok, why.str());
    }

    if (wants(Check::symmetry)) {
      const int e = symmetry_exponent(spec_, alpha);
      theorem(ev, Check::symmetry, invert_q(j) == RatFunc::q_power(e) * j,
              "J(1/q) != q^" + std::to_string(e) + " J(q)");
    }

    if (wants(Check::toda)) {
      if (type_a && toda_ != nullptr) {
        auto t = toda_->find(alpha);
        theorem(ev, Check::toda, t && *t == j, "Toda value " + (t ? to_string(*t) : std::string("missing")) +
                                                   " differs from fermionic value " + to_string(j));
      } else {
        skip(ev, Check::toda);
      }
    }

    if (wants(Check::k_alpha)) {
      Integer factorials = 1;
      for (int i = 0; i < alpha.size(); ++i) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), alpha[i]);
        factorials *= f * f;
      }
      Rational limit(h.eval_at_one(), factorials);
      limit.canonicalize();
      const Rational recursive = k_alpha_recursive(spec_, alpha);
      bool ok = limit == recursive;
      std::string detail = "limit " + limit.get_str() + ", recursion " + recursive.get_str();
      if (type_a) {
        const Rational arrays = k_alpha_binomial_arrays(alpha);
        ok = ok && arrays == limit;
        detail += ", binomial arrays " + arrays.get_str();
      }
      theorem(ev, Check::k_alpha, ok, detail);
    }

    if (wants(Check::positivity)) {
      conjecture(ev, Check::positivity, has_nonnegative_coefficients(h), "numerator " + to_string(h));
    }
    if (wants(Check::unimodal)) {
      conjecture(ev, Check::unimodal, is_unimodal(h), "numerator " + to_string(h));
    }
    if (wants(Check::poincare)) {
      if (type_a && spec_.rank() <= 4) {
        if (h.eval_at_one() > options_.budget.max_fixed_points) {
          throw BudgetExceeded(spec_.name() + " alpha=" + alpha.to_string() + ": " + h.eval_at_one().get_str() +
                               " fixed points exceed the budget of " +
                               std::to_string(options_.budget.max_fixed_points));
        }
        const IntPoly p = poincare_polynomial(alpha);
        conjecture(ev, Check::poincare, p == h, "Poincare polynomial " + to_string(p) + ", numerator " + to_string(h));
      } else {
        skip(ev, Check::poincare);
      }
    }
  }

  const RootSystem& spec_;
  const ScanOptions& options_;
  const JTable& table_;
  const JTable* toda_;
};

}  // namespace

Tier tier_of(Check c) {
  switch (c) {
    case Check::positivity:
    case Check::unimodal:
    case Check::poincare: return Tier::conjecture;
    default: return Tier::theorem;
  }
}

std::string check_name(Check c) {
  for (const auto& [k, name] : check_names())
    if (k == c) return name;
  throw InternalError("unnamed check");
}

Check parse_check(const std::string& name) {
  for (const auto& [k, n] : check_names())
    if (n == name) return k;
  throw InvalidArgument("unknown check '" + name + "'");
}

std::set<Check> all_checks() {
  std::set<Check> out;
  for (const auto& [k, n] : check_names()) out.insert(k);
  return out;
}

std::set<Check> parse_checks(const std::string& list) {
  if (list == "all") return all_checks();
  std::set<Check> out;
  if (list.empty() || list == "none") return out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw InvalidArgument("empty check name in '" + list + "'");
    out.insert(parse_check(item));
  }
  return out;
}

nlohmann::json ScanReport::to_json() const {
  nlohmann::json doc;
  doc["spec"] = spec.name();
  doc["range"] = {{"max_coeff", max_coeff}, {"count", results.size()}};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json row;
    row["alpha"] = jfunc::to_json(r.alpha);
    row["numerator"] = jfunc::to_json(r.numerator);
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& [name, outcome] : r.checks) checks[name] = outcome_name(outcome);
    row["checks"] = std::move(checks);
    if (timings) row["ms"] = r.ms;
    rows.push_back(std::move(row));
  }
  doc["results"] = std::move(rows);
  doc["summary"] = {{"pass", passed}, {"fail", failed}, {"findings", findings.size()}};
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : findings) fs.push_back({{"alpha", jfunc::to_json(f.alpha)}, {"check", f.check}, {"detail", f.detail}});
  doc["findings"] = std::move(fs);
  return doc;
}

ScanReport run_checks(const RootSystem& spec, const ScanOptions& options, JTable& table) {
  if (!(table.spec() == spec)) throw InvalidArgument("table root system does not match");
  if (options.max_coeff < 0) throw InvalidArgument("max coefficient must be >= 0");
  const std::vector<LatticeVector> alphas = enumerate_box(spec.rank(), options.max_coeff);
  const LatticeVector corner(std::vector<int>(spec.rank(), options.max_coeff));
  const int degree = 2 * q_pochhammer_degree(spec, corner);
  if (degree > options.budget.max_degree) {
    throw BudgetExceeded("deg (q)_alpha^2 = " + std::to_string(degree) + " at " + corner.to_string() +
                         " exceeds the degree budget " + std::to_string(options.budget.max_degree));
  }
  const int workers = std::max(1, options.workers);
  fill_fermionic(table, {corner}, workers);

  std::optional<JTable> toda;
  if (options.checks.count(Check::toda) && spec.family() == Family::A) {
    toda.emplace(spec);
    j_toda_typeA(corner, *toda);
  }

  const Evaluator evaluate(spec, options, table, toda ? &*toda : nullptr);
  std::vector<Evaluation> evals(alphas.size());
  const int n_threads = std::min<int>(workers, static_cast<int>(alphas.size()));
  if (n_threads <= 1) {
    for (std::size_t k = 0; k < alphas.size(); ++k) evals[k] = evaluate(alphas[k]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < alphas.size(); k = next++) evals[k] = evaluate(alphas[k]);
      });
    }
    for (auto& th : pool) th.join();
  }

  ScanReport report(spec);
  report.max_coeff = options.max_coeff;
  report.timings = options.timings;
  for (auto& ev : evals) {
    if (ev.error) std::rethrow_exception(ev.error);
    for (const auto& [name, outcome] : ev.record.checks) {
      if (outcome == Outcome::pass) ++report.passed;
      if (outcome == Outcome::fail) ++report.failed;
    }
    report.results.push_back(std::move(ev.record));
    for (auto& f : ev.findings) report.findings.push_back(std::move(f));
  }
  return report;
}

ScanReport run_checks(const RootSystem& spec, const ScanOptions& options) {
  JTable table(spec);
  return run_checks(spec, options, table);
}

}  // namespace jfunc
