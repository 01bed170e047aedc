#include "jfunc/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <thread>

#include "jfunc/betti.hpp"
#include "jfunc/conjecture_lab.hpp"
#include "jfunc/errors.hpp"
#include "jfunc/jfunction.hpp"
#include "jfunc/jtable.hpp"
#include "jfunc/monopole.hpp"
#include "jfunc/qcombinatorics.hpp"
#include "jfunc/serialize.hpp"
#include "jfunc/series.hpp"
#include "jfunc/type_a.hpp"

namespace jfunc {

namespace {

constexpr const char* cache_env = "JFUNC_CACHE_DIR";

std::string default_cache_dir() {
  const char* v = std::getenv(cache_env);
  return v ? std::string(v) : std::string();
}

LatticeVector parse_alpha(const RootSystem& spec, const std::string& text) {
  LatticeVector alpha = LatticeVector::parse(text);
  if (alpha.size() != spec.rank()) {
    throw InvalidArgument("alpha " + text + " has " + std::to_string(alpha.size()) + " coefficients, " + spec.name() +
                          " needs " + std::to_string(spec.rank()));
  }
  if (!alpha.is_nonnegative()) throw InvalidArgument("alpha must lie in Q>=0, got " + text);
  return alpha;
}

void require_type_a(const RootSystem& spec, const std::string& what) {
  if (spec.family() != Family::A) throw InvalidArgument(what + " requires type A, got " + spec.name());
}

// Loads the cache for spec from dir (if set), runs fn, and writes the table
// back when it grew.
template <class Fn>
auto with_cached_table(const RootSystem& spec, const std::string& dir, Fn&& fn) {
  JTable table(spec);
  std::filesystem::path file;
  if (!dir.empty()) {
    file = cache_file_path(dir, spec);
    load_cache(table, file);
  }
  const std::size_t before = table.size();
  auto result = fn(table);
  if (!dir.empty() && table.size() != before) save_cache(table, file);
  return result;
}

std::string join(const std::vector<Integer>& coeffs) {
  std::string s;
  for (std::size_t k = 0; k < coeffs.size(); ++k) s += (k ? "," : "") + coeffs[k].get_str();
  return s.empty() ? "0" : s;
}

Rational k_from_numerator(const LatticeVector& alpha, const IntPoly& h) {
  Integer factorials = 1;
  for (int i = 0; i < alpha.size(); ++i) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), alpha[i]);
    factorials *= f * f;
  }
  Rational k(h.eval_at_one(), factorials);
  k.canonicalize();
  return k;
}

std::string latex_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  std::string sign = sgn(r) < 0 ? "-" : "";
  Integer num = abs(r.get_num());
  return sign + "\\frac{" + num.get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string latex_alpha(const LatticeVector& alpha) {
  std::string s;
  for (int i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (alpha[i] != 1) s += std::to_string(alpha[i]);
    s += "\\alpha_{" + std::to_string(i + 1) + "}";
  }
  return s.empty() ? "0" : s;
}

// (q)_alpha^2 as a product of powers of (1 - q^k).
std::string latex_pochhammer_squared(const RootSystem& spec, const LatticeVector& alpha) {
  std::map<int, int> counts;
  for (int i = 0; i < spec.rank(); ++i)
    for (int j = 1; j <= alpha[i]; ++j) counts[spec.symmetrizer(i) * j] += 2;
  std::string s;
  for (const auto& [k, e] : counts) {
    s += k == 1 ? "(1 - q)" : "(1 - q^{" + std::to_string(k) + "})";
    s += "^{" + std::to_string(e) + "}";
  }
  return s;
}

// Bracket form [a_i + a_{i+1} choose a_i] when alpha is supported on two
// adjacent type-A nodes and the numerator matches it.
std::optional<std::string> latex_bracket(const RootSystem& spec, const LatticeVector& alpha, const IntPoly& h) {
  if (spec.family() != Family::A) return std::nullopt;
  int first = -1, last = -1;
  for (int i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (first < 0) first = i;
    last = i;
  }
  if (first < 0 || last - first > 1) return std::nullopt;
  const int a = alpha[first], b = last > first ? alpha[last] : 0;
  if (b == 0 || gaussian_binomial(a + b, a) != h) return std::nullopt;
  return "\\genfrac{[}{]}{0pt}{}{" + std::to_string(a + b) + "}{" + std::to_string(a) + "}_{q}";
}

struct ComputeArgs {
  std::string system, alpha, method = "fermionic", format = "plain", cache = default_cache_dir();
};

int cmd_compute(const ComputeArgs& args, std::ostream& out) {
  const RootSystem spec = RootSystem::parse(args.system);
  const LatticeVector alpha = parse_alpha(spec, args.alpha);
  RatFunc j;
  if (args.method == "fermionic") {
    j = with_cached_table(spec, args.cache, [&](JTable& t) { return j_fermionic(alpha, t); });
  } else if (args.method == "toda") {
    require_type_a(spec, "method toda");
    JTable t(spec);
    j = j_toda_typeA(alpha, t);
  } else {
    require_type_a(spec, "method typea");
    const IntPoly poch = q_pochhammer_alpha(spec, alpha);
    j = RatFunc(h_recursive(alpha), poch * poch);
  }
  const IntPoly h = numerator_of(spec, alpha, j);
  const Rational k = k_from_numerator(alpha, h);

  if (args.format == "json") {
    nlohmann::json doc;
    doc["system"] = spec.name();
    doc["alpha"] = to_json(alpha);
    doc["method"] = args.method;
    doc["j"] = {{"num", to_json(j.num())}, {"den", to_json(j.den())}};
    doc["numerator"] = to_json(h);
    doc["degree"] = h.degree();
    doc["k_alpha"] = k.get_str();
    out << doc.dump(2) << '\n';
  } else if (args.format == "csv") {
    out << "series,exponent,coefficient\n";
    auto rows = [&](const char* name, const IntPoly& p) {
      for (int e = 0; e <= p.degree(); ++e) out << name << ',' << e << ',' << p.coeffs()[e].get_str() << '\n';
    };
    rows("numerator", h);
    rows("j_num", j.num());
    rows("j_den", j.den());
  } else if (args.format == "latex") {
    const std::string den = latex_pochhammer_squared(spec, alpha);
    const auto bracket = latex_bracket(spec, alpha, h);
    const std::string top = bracket ? *bracket : to_latex(h);
    out << "\\alpha = " << latex_alpha(alpha) << "\n";
    if (den.empty()) out << "\\mathfrak{J}_\\alpha = " << top << "\n";
    else if (bracket) out << "\\mathfrak{J}_\\alpha = \\frac{1}{" << den << "} " << top << "\n";
    else out << "\\mathfrak{J}_\\alpha = \\frac{" << top << "}{" << den << "}\n";
    out << "(q)_\\alpha^{2} \\mathfrak{J}_\\alpha = " << to_latex(h) << "\n";
    out << "K_\\alpha = " << latex_rational(k) << "\n";
  } else {
    out << "system: " << spec.name() << "\n";
    out << "alpha: " << alpha.to_string() << "\n";
    out << "method: " << args.method << "\n";
    out << "J: " << to_string(j, true) << "\n";
    out << "numerator: " << to_string(h, true) << "\n";
    out << "degree: " << h.degree() << "\n";
    out << "K: " << k.get_str() << "\n";
  }
  return exit_ok;
}

struct SeriesArgs {
  std::string system, alpha, oracle = "expand", cache = default_cache_dir();
  int order = 10;
  bool compare = false;
};

int cmd_series(const SeriesArgs& args, std::ostream& out) {
  const RootSystem spec = RootSystem::parse(args.system);
  const LatticeVector alpha = parse_alpha(spec, args.alpha);
  if (args.order < 0) throw InvalidArgument("--order must be >= 0");
  auto expand = [&] {
    RatFunc j = with_cached_table(spec, args.cache, [&](JTable& t) { return j_fermionic(alpha, t); });
    return series_expand(j, args.order);
  };
  if (!args.compare) {
    const TruncatedSeries s = args.oracle == "monopole" ? monopole_series(spec, alpha, args.order) : expand();
    out << join(s.coeffs()) << "\n";
    return exit_ok;
  }
  const TruncatedSeries e = expand();
  const MonopoleResult m = monopole_series_certified(spec, alpha, args.order);
  const bool match = e == m.series;
  out << "expand: " << join(e.coeffs()) << "\n";
  out << "monopole: " << join(m.series.coeffs()) << "\n";
  out << "bound: " << m.bound << "\n";
  out << "verdict: " << (match ? "match" : "mismatch") << "\n";
  return match ? exit_ok : exit_theorem;
}

struct BettiArgs {
  std::string system, alpha;
};

int cmd_betti(const BettiArgs& args, std::ostream& out) {
  const RootSystem spec = RootSystem::parse(args.system);
  require_type_a(spec, "betti");
  const LatticeVector alpha = parse_alpha(spec, args.alpha);
  const IntPoly p = poincare_polynomial(alpha);
  const IntPoly h = h_recursive(alpha);
  const bool match = p == h;
  // proved for rank <= 3, conjectural above
  const bool proved = spec.rank() <= 3;
  out << "P: " << to_string(p, true) << "\n";
  out << "chi: " << p.eval_at_one().get_str() << "\n";
  out << "numerator: " << to_string(h, true) << "\n";
  out << "verdict: " << (match ? "match" : "mismatch") << (proved ? "" : " (conjecture)") << "\n";
  return match || !proved ? exit_ok : exit_theorem;
}

struct ScanArgs {
  std::string system, checks = "all", out_file, cache = default_cache_dir();
  int max_coeff = 0;
  int workers = 1;
  int max_degree = Budget{}.max_degree;
  bool timings = false;
};

int cmd_scan(const ScanArgs& args, std::ostream& out) {
  const RootSystem spec = RootSystem::parse(args.system);
  ScanOptions options;
  options.max_coeff = args.max_coeff;
  options.checks = parse_checks(args.checks);
  options.workers = args.workers;
  options.timings = args.timings;
  options.budget.max_degree = args.max_degree;
  const ScanReport report =
      with_cached_table(spec, args.cache, [&](JTable& t) { return run_checks(spec, options, t); });
  const std::string text = report.to_json().dump(2) + "\n";
  if (args.out_file.empty() || args.out_file == "-") {
    out << text;
  } else {
    std::ofstream file(args.out_file, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text)) throw Error("cannot write report " + args.out_file);
    out << "wrote " << args.out_file << ": " << report.results.size() << " alphas, " << report.passed << " pass, "
        << report.failed << " fail, " << report.findings.size() << " findings\n";
  }
  return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation and verification of the J_alpha rational functions"};
  app.name("jfunc");
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "J_alpha, its numerator and K_alpha");
  c->add_option("--system", compute.system, "root system, e.g. A3 or G2")->required();
  c->add_option("--alpha", compute.alpha, "coefficients in the simple-root basis, e.g. 1,1,1")->required();
  c->add_option("--method", compute.method)->check(CLI::IsMember({"fermionic", "toda", "typea"}));
  c->add_option("--format", compute.format)->check(CLI::IsMember({"plain", "json", "csv", "latex"}));
  c->add_option("--cache", compute.cache, "cache directory (default $JFUNC_CACHE_DIR)");

  SeriesArgs series;
  auto* s = app.add_subcommand("series", "Taylor coefficients of J_alpha at q = 0");
  s->add_option("--system", series.system)->required();
  s->add_option("--alpha", series.alpha)->required();
  s->add_option("--order", series.order, "last exponent N");
  s->add_option("--oracle", series.oracle)->check(CLI::IsMember({"expand", "monopole"}));
  s->add_flag("--compare", series.compare, "print both oracles and a verdict");
  s->add_option("--cache", series.cache);

  BettiArgs betti;
  auto* b = app.add_subcommand("betti", "fixed-point Poincare polynomial (type A)");
  b->add_option("--system", betti.system)->required();
  b->add_option("--alpha", betti.alpha)->required();

  ScanArgs scan;
  auto* sc = app.add_subcommand("scan", "theorem checks and conjecture scan over a coefficient box");
  sc->add_option("--system", scan.system)->required();
  sc->add_option("--max-coeff", scan.max_coeff)->required();
  sc->add_option("--checks", scan.checks, "comma list, 'all' or 'none'");
  sc->add_option("--out", scan.out_file, "report file (default stdout)");
  sc->add_option("--cache", scan.cache);
  sc->add_option("--workers", scan.workers)->check(CLI::PositiveNumber);
  sc->add_option("--max-degree", scan.max_degree, "budget on deg (q)_alpha^2");
  sc->add_flag("--timings", scan.timings, "add per-alpha milliseconds to the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (c->parsed()) return cmd_compute(compute, out);
    if (s->parsed()) return cmd_series(series, out);
    if (b->parsed()) return cmd_betti(betti, out);
    return cmd_scan(scan, out);
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return exit_theorem;
  } catch (const InternalError& e) {
    err << "internal invariant failed: " << e.what() << "\n";
    return exit_theorem;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return exit_budget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace jfunc
