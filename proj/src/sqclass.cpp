#include "polya/sqclass.hpp"

#include <algorithm>
#include <cstdint>

#include "polya/arith.hpp"
#include "polya/errors.hpp"

namespace polya {

namespace {

constexpr std::size_t kMaxClosureRank = 20;

// Row of an F2 matrix; bit 0 is the sign coordinate.
using Row = std::vector<std::uint64_t>;

void set_bit(Row& row, std::size_t i) { row[i / 64] |= std::uint64_t{1} << (i % 64); }
bool get_bit(const Row& row, std::size_t i) { return (row[i / 64] >> (i % 64)) & 1; }

}  // namespace

SquareClass SquareClass::from_primes(int sign, std::vector<Int> primes) {
  if (sign != 1 && sign != -1) throw DomainError("square class sign must be +1 or -1");
  std::sort(primes.begin(), primes.end());
  SquareClass c;
  c.sign = sign;
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    if (!is_prime(primes[i])) throw DomainError(polya::to_string(primes[i]) + " is not prime");
    if ((j - i) % 2) c.kernel.push_back(primes[i]);
    i = j;
  }
  return c;
}

Int SquareClass::value() const {
  Int v = sign;
  for (const auto& p : kernel) v *= p;
  return v;
}

std::string SquareClass::to_string() const {
  std::string s = sign < 0 ? "-{" : "+{";
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    if (i) s += ",";
    s += polya::to_string(kernel[i]);
  }
  return s + "}";
}

bool operator<(const SquareClass& a, const SquareClass& b) {
  if (a.sign != b.sign) return a.sign < b.sign;
  return std::lexicographical_compare(a.kernel.begin(), a.kernel.end(), b.kernel.begin(),
                                      b.kernel.end());
}

SquareClass mul(const SquareClass& a, const SquareClass& b) {
  SquareClass c;
  c.sign = a.sign * b.sign;
  std::set_symmetric_difference(a.kernel.begin(), a.kernel.end(), b.kernel.begin(),
                                b.kernel.end(), std::back_inserter(c.kernel));
  return c;
}

std::size_t subgroup_rank(std::span<const SquareClass> generators) {
  std::vector<Int> basis;
  for (const auto& g : generators) basis.insert(basis.end(), g.kernel.begin(), g.kernel.end());
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

  const std::size_t cols = basis.size() + 1;
  const std::size_t words = (cols + 63) / 64;
  std::vector<Row> rows;
  for (const auto& g : generators) {
    Row row(words, 0);
    if (g.sign < 0) set_bit(row, 0);
    for (const auto& p : g.kernel) {
      auto it = std::lower_bound(basis.begin(), basis.end(), p);
      set_bit(row, 1 + static_cast<std::size_t>(it - basis.begin()));
    }
    rows.push_back(std::move(row));
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !get_bit(rows[pivot], col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && get_bit(rows[r], col)) {
        for (std::size_t w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
      }
    }
    ++rank;
  }
  return rank;
}

std::set<SquareClass> subgroup_members(std::span<const SquareClass> generators) {
  if (subgroup_rank(generators) > kMaxClosureRank) {
    throw EffortExceeded("subgroup_members: rank exceeds 20");
  }
  std::set<SquareClass> members{SquareClass::identity()};
  for (const auto& g : generators) {
    if (members.count(g)) continue;
    std::vector<SquareClass> extra;
    extra.reserve(members.size());
    for (const auto& m : members) extra.push_back(mul(m, g));
    members.insert(extra.begin(), extra.end());
  }
  return members;
}

}  // namespace polya
