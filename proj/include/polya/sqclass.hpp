#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "polya/integer.hpp"

namespace polya {

/// An element of Q*/(Q*)^2: a sign and the primes dividing a representative
/// to odd exponent. Viewed as an F2-vector indexed by {-1} and the primes.
struct SquareClass {
  int sign = 1;
  std::vector<Int> kernel;  // strictly increasing primes

  static SquareClass identity() { return {}; }

  /// Builds a class from a multiset of primes; repeated primes cancel in
  /// pairs. Every prime is checked with is_prime (DomainError otherwise).
  static SquareClass from_primes(int sign, std::vector<Int> primes);

  bool is_identity() const { return sign == 1 && kernel.empty(); }

  /// The square-free representative sign * prod(kernel).
  Int value() const;

  std::string to_string() const;

  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.sign == b.sign && a.kernel == b.kernel;
  }
  friend bool operator<(const SquareClass& a, const SquareClass& b);
};

SquareClass mul(const SquareClass& a, const SquareClass& b);

/// F2-dimension of the span of the generators.
std::size_t subgroup_rank(std::span<const SquareClass> generators);

/// Every element of the generated subgroup. Throws EffortExceeded when the
/// rank exceeds 20.
std::set<SquareClass> subgroup_members(std::span<const SquareClass> generators);

}  // namespace polya
