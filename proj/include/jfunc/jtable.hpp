#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "jfunc/cyclotomic.hpp"
#include "jfunc/ratfunc.hpp"
#include "jfunc/root_system.hpp"

namespace jfunc {

/// Memo of J_alpha values for one root system.
///
/// Entries for 0 is the constant 1 and is present from construction. The
/// fermionic fill keeps the table downward closed. Safe for concurrent
/// readers and writers; inserting a key twice with different values is an
/// InternalError.
class JTable {
 public:
  explicit JTable(RootSystem spec);
  JTable(const JTable& other);
  JTable& operator=(const JTable&) = delete;

  const RootSystem& spec() const { return spec_; }

  std::optional<RatFunc> find(const LatticeVector& alpha) const;
  bool contains(const LatticeVector& alpha) const;
  std::size_t size() const;

  /// Inserts alpha -> value. The cyclotomic factorization of the
  /// denominator is stored alongside when it exists.
  void insert(const LatticeVector& alpha, const RatFunc& value);
  void insert(const LatticeVector& alpha, const CyclotomicFraction& value);

  /// Cyclotomic form of an entry, nullopt if absent or not of that form.
  std::optional<CyclotomicFraction> find_factored(const LatticeVector& alpha) const;

  /// Snapshot of all entries in lexicographic order of alpha.
  std::vector<std::pair<LatticeVector, RatFunc>> snapshot() const;

 private:
  struct Entry {
    RatFunc value;
    std::optional<CyclotomicFraction> factored;
  };
  void insert_entry(const LatticeVector& alpha, Entry entry);

  RootSystem spec_;
  mutable std::shared_mutex mutex_;
  std::map<LatticeVector, Entry> entries_;
};

/// Cache file for one (family, rank):
/// {"family","rank","entries":[{"alpha":[...],"num":[...],"den":[...]}]},
/// coefficients as decimal strings, entries sorted by alpha.
std::filesystem::path cache_file_path(const std::filesystem::path& dir, const RootSystem& spec);
void save_cache(const JTable& table, const std::filesystem::path& file);
/// Merges the file's entries into the table. Missing file is not an error
/// (returns the number of entries loaded, 0 then). Throws InvalidArgument on
/// malformed content or a family/rank mismatch.
std::size_t load_cache(JTable& table, const std::filesystem::path& file);

}  // namespace jfunc
