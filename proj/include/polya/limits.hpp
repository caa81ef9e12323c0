#pragma once

#include <cstdint>

namespace polya {

/// Work bounds shared by the expensive operations. Every bound turns a
/// potential hang into EffortExceeded or SearchExhausted.
struct Limits {
  /// Continued-fraction steps allowed when walking a period.
  std::uint64_t cf_bound = 100'000'000;
  /// Miller-Rabin rounds for inputs at or above 2^64.
  unsigned mr_rounds = 40;
  /// Progression terms examined per prime scan.
  std::uint64_t search_bound = 10'000'000;
  /// Pollard rho iterations per factorization.
  std::uint64_t rho_iterations = 10'000'000;
};

}  // namespace polya
