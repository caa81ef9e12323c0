#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <shared_mutex>
#include <utility>

#include "polya/integer.hpp"
#include "polya/limits.hpp"
#include "polya/quadfield.hpp"

namespace polya {

/// x > 0, y > 0, norm = +-1 and x^2 - d*y^2 = 4*norm.
bool is_valid_unit_entry(const QuadUnit& u);

/// Fundamental units keyed by radicand, backed by an append-only text file of
/// `d x y norm` lines. Safe for one writer and many readers.
class UnitCache {
 public:
  UnitCache() = default;
  UnitCache(UnitCache&& other) noexcept
      : entries_(std::move(other.entries_)), path_(std::move(other.path_)) {}

  /// Reads every valid line of `path`; a missing file gives an empty cache.
  /// Malformed or invalid lines are skipped with a warning on `warnings`,
  /// and for a repeated d the first line wins. Later inserts append to path.
  static UnitCache load(const std::filesystem::path& path, std::ostream& warnings);

  std::optional<QuadUnit> find(const Int& d) const;
  /// Adds u unless d is present; appends the line when file-backed.
  /// DomainError when u fails is_valid_unit_entry.
  bool insert(const QuadUnit& u);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<Int, QuadUnit> entries_;
  std::optional<std::filesystem::path> path_;
};

/// Appends one entry line to `path`.
void cache_store(const std::filesystem::path& path, const QuadUnit& u);

/// The fundamental unit from the cache when present, otherwise computed and
/// inserted.
QuadUnit cached_fundamental_unit(const QuadField& field, UnitCache* cache,
                                 const Limits& limits = {});

}  // namespace polya
