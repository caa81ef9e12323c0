#include "polya/unit_cache.hpp"

#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "polya/errors.hpp"

namespace polya {

namespace {

std::string entry_line(const QuadUnit& u) {
  return to_string(u.d) + " " + to_string(u.x) + " " + to_string(u.y) + " " +
         std::to_string(u.norm);
}

std::optional<QuadUnit> parse_line(const std::string& line, std::string& reason) {
  std::istringstream in(line);
  std::vector<std::string> fields;
  for (std::string f; in >> f;) fields.push_back(f);
  if (fields.size() != 4) {
    reason = "expected 4 fields, found " + std::to_string(fields.size());
    return std::nullopt;
  }
  QuadUnit u;
  try {
    u.d = parse_int(fields[0]);
    u.x = parse_int(fields[1]);
    u.y = parse_int(fields[2]);
    const Int norm = parse_int(fields[3]);
    if (norm != 1 && norm != -1) {
      reason = "norm must be 1 or -1";
      return std::nullopt;
    }
    u.norm = static_cast<int>(norm.get_si());
  } catch (const DomainError& e) {
    reason = e.what();
    return std::nullopt;
  }
  if (!is_valid_unit_entry(u)) {
    reason = "x^2 - d*y^2 != 4*norm";
    return std::nullopt;
  }
  return u;
}

}  // namespace

bool is_valid_unit_entry(const QuadUnit& u) {
  return u.d > 1 && u.x > 0 && u.y > 0 && (u.norm == 1 || u.norm == -1) &&
         u.x * u.x - u.d * u.y * u.y == 4 * u.norm;
}

UnitCache UnitCache::load(const std::filesystem::path& path, std::ostream& warnings) {
  UnitCache cache;
  cache.path_ = path;
  std::ifstream in(path);
  if (!in) {
    if (std::filesystem::exists(path)) {
      warnings << "warning: cannot read unit cache " << path.string() << "\n";
    }
    return cache;
  }
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string reason;
    auto u = parse_line(line, reason);
    if (!u) {
      warnings << "warning: " << path.string() << ":" << number << ": skipped (" << reason
               << ")\n";
      continue;
    }
    cache.entries_.emplace(u->d, *u);
  }
  return cache;
}

std::optional<QuadUnit> UnitCache::find(const Int& d) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(d);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool UnitCache::insert(const QuadUnit& u) {
  if (!is_valid_unit_entry(u)) {
    throw DomainError("invalid unit entry: " + entry_line(u));
  }
  std::unique_lock lock(mutex_);
  if (!entries_.emplace(u.d, u).second) return false;
  if (path_) cache_store(*path_, u);
  return true;
}

std::size_t UnitCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void cache_store(const std::filesystem::path& path, const QuadUnit& u) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw DomainError("cannot append to unit cache " + path.string());
  out << entry_line(u) << "\n";
}

QuadUnit cached_fundamental_unit(const QuadField& field, UnitCache* cache, const Limits& limits) {
  if (cache) {
    if (auto hit = cache->find(field.radicand())) return *hit;
  }
  QuadUnit u = fundamental_unit(field, limits);
  if (cache) cache->insert(u);
  return u;
}

}  // namespace polya
