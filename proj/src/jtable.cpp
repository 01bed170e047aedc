#include "jfunc/jtable.hpp"

#include <fstream>
#include <mutex>

#include "jfunc/errors.hpp"
#include "jfunc/serialize.hpp"

namespace jfunc {

namespace {

// Every cyclotomic factor of a J_beta denominator, beta <= alpha, divides
// (q)_alpha or some 1 - q^{(beta,beta)/2}; both indices are <= sum d_i a_i^2.
int cyclotomic_bound(const RootSystem& spec, const LatticeVector& alpha) {
  int bound = 1;
  for (int i = 0; i < spec.rank(); ++i) bound += spec.symmetrizer(i) * alpha[i] * alpha[i];
  return bound;
}

}  // namespace

JTable::JTable(RootSystem spec) : spec_(std::move(spec)) {
  CyclotomicFraction one;
  one.num = IntPoly{1};
  entries_.emplace(LatticeVector::zero(spec_.rank()), Entry{RatFunc::constant(1), one});
}

JTable::JTable(const JTable& other) : spec_(other.spec_) {
  std::shared_lock lock(other.mutex_);
  entries_ = other.entries_;
}

std::optional<RatFunc> JTable::find(const LatticeVector& alpha) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(alpha);
  if (it == entries_.end()) return std::nullopt;
  return it->second.value;
}

std::optional<CyclotomicFraction> JTable::find_factored(const LatticeVector& alpha) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(alpha);
  if (it == entries_.end()) return std::nullopt;
  return it->second.factored;
}

bool JTable::contains(const LatticeVector& alpha) const {
  std::shared_lock lock(mutex_);
  return entries_.count(alpha) > 0;
}

std::size_t JTable::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void JTable::insert_entry(const LatticeVector& alpha, Entry entry) {
  if (alpha.size() != spec_.rank() || !alpha.is_nonnegative()) {
    throw InvalidArgument("JTable key " + alpha.to_string() + " is not in the positive cone of " + spec_.name());
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.try_emplace(alpha, std::move(entry));
  if (!inserted && !(it->second.value == entry.value)) {
    throw InternalError("conflicting values for J_" + alpha.to_string() + " in " + spec_.name() + " table");
  }
}

void JTable::insert(const LatticeVector& alpha, const RatFunc& value) {
  auto factored = CyclotomicFraction::from_ratfunc(value, cyclotomic_bound(spec_, alpha));
  insert_entry(alpha, Entry{value, std::move(factored)});
}

void JTable::insert(const LatticeVector& alpha, const CyclotomicFraction& value) {
  insert_entry(alpha, Entry{value.to_ratfunc(), value});
}

std::vector<std::pair<LatticeVector, RatFunc>> JTable::snapshot() const {
  std::shared_lock lock(mutex_);
  std::vector<std::pair<LatticeVector, RatFunc>> out;
  out.reserve(entries_.size());
  for (const auto& [k, e] : entries_) out.emplace_back(k, e.value);
  return out;
}

std::filesystem::path cache_file_path(const std::filesystem::path& dir, const RootSystem& spec) {
  return dir / (spec.name() + ".json");
}

void save_cache(const JTable& table, const std::filesystem::path& file) {
  nlohmann::json doc;
  doc["family"] = std::string(1, static_cast<char>(table.spec().family()));
  doc["rank"] = table.spec().rank();
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [alpha, value] : table.snapshot()) {
    entries.push_back({{"alpha", to_json(alpha)}, {"num", to_json(value.num())}, {"den", to_json(value.den())}});
  }
  doc["entries"] = std::move(entries);
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::filesystem::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << doc.dump(1) << '\n';
    if (!out) throw Error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

std::size_t load_cache(JTable& table, const std::filesystem::path& file) {
  if (!std::filesystem::exists(file)) return 0;
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot read cache file " + file.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("malformed cache file " + file.string() + ": " + e.what());
  }
  const std::string family(1, static_cast<char>(table.spec().family()));
  if (!doc.is_object() || doc.value("family", std::string()) != family || !doc.contains("rank") ||
      doc["rank"] != table.spec().rank() || !doc.contains("entries") || !doc["entries"].is_array()) {
    throw InvalidArgument("cache file " + file.string() + " does not describe " + table.spec().name());
  }
  std::size_t loaded = 0;
  for (const auto& entry : doc["entries"]) {
    LatticeVector alpha;
    RatFunc value;
    try {
      alpha = lattice_vector_from_json(entry.at("alpha"));
      value = RatFunc(int_poly_from_json(entry.at("num")), int_poly_from_json(entry.at("den")));
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument("malformed cache entry in " + file.string() + ": " + e.what());
    } catch (const DomainError& e) {
      throw InvalidArgument("malformed cache entry in " + file.string() + ": " + e.what());
    }
    if (alpha.size() != table.spec().rank() || !alpha.is_nonnegative()) {
      throw InvalidArgument("cache entry " + alpha.to_string() + " in " + file.string() + " is not in the positive cone of " +
                            table.spec().name());
    }
    table.insert(alpha, value);
    ++loaded;
  }
  return loaded;
}

}  // namespace jfunc
