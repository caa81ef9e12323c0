#pragma once

#include <cstdint>

namespace polya {

/// Largest n for which rho counts roots by direct enumeration.
inline constexpr std::uint64_t kRhoEnumerationLimit = 1'000'000;

/// #{b in (Z/nZ)* : h(b) = 0 (mod n), b = a (mod gcd(m, n))} for
/// h(X) = X^2 + 3X + 9. Enumerates for n <= kRhoEnumerationLimit, lifts roots
/// from q for n = q^2 beyond it, and throws EffortExceeded otherwise.
/// DomainError when n = 0, m = 0 or gcd(a, m) != 1.
std::uint64_t rho(std::uint64_t n, std::int64_t a, std::uint64_t m);

/// rho(q^2, a, m) for a prime q by Hensel lifting the roots of h mod q.
std::uint64_t rho_prime_square(std::uint64_t q, std::int64_t a, std::uint64_t m);

/// prod over primes q <= cutoff of 1 - rho(q^2) phi(gcd(m, q^2)) / phi(q^2).
/// m must be square-free with every prime factor <= cutoff, and cutoff >= 100.
double euler_product_c(std::uint64_t m, std::int64_t a, std::uint32_t cutoff);

/// Lower bound for the omitted factors with q > cutoff, from rho(q^2) <= 2:
/// prod (1 - 2/(q(q-1))) >= 1 - 2/cutoff.
double euler_tail_lower_bound(std::uint32_t cutoff);

struct EmpiricalCount {
  std::uint64_t squarefree = 0;
  std::uint64_t primes_in_ap = 0;
};

/// Counts primes p <= X with p = a (mod m), and those with h(p) square-free.
EmpiricalCount empirical_count(std::uint32_t X, std::int64_t a, std::uint64_t m);

struct DensityReport {
  std::uint32_t X = 0;
  std::int64_t a = 0;
  std::uint64_t m = 1;
  std::uint32_t cutoff = 0;
  std::uint64_t empirical = 0;
  std::uint64_t primes_in_ap = 0;
  double euler_c = 0;
  /// euler_c times euler_tail_lower_bound(cutoff); the untruncated constant
  /// lies between this and euler_c.
  double euler_c_lower = 0;
  /// euler_c / phi(m) * X / ln X.
  double main_term = 0;
  /// empirical / primes_in_ap.
  double ratio = 0;
  /// empirical / main_term.
  double raw_ratio = 0;
};

DensityReport density_report(std::uint32_t X, std::int64_t a, std::uint64_t m,
                             std::uint32_t cutoff = 10'000);

}  // namespace polya
