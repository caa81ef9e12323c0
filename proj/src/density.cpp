#include "polya/density.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "polya/arith.hpp"
#include "polya/errors.hpp"

namespace polya {

namespace {

using u128 = unsigned __int128;

std::uint64_t residue(std::int64_t a, std::uint64_t m) {
  const auto r = static_cast<std::int64_t>(static_cast<__int128>(a) % static_cast<__int128>(m));
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

void check_ap(std::int64_t a, std::uint64_t m) {
  if (m == 0) throw DomainError("modulus must be >= 1");
  if (std::gcd(residue(a, m), m) != 1) {
    throw DomainError("gcd(" + std::to_string(a) + ", " + std::to_string(m) + ") != 1");
  }
}

void check_squarefree_modulus(std::uint64_t m) {
  if (!is_squarefree_u64(m)) throw DomainError(std::to_string(m) + " is not square-free");
}

std::uint64_t h_mod(std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<u128>(b) * b + 3 * static_cast<u128>(b) + 9) % n);
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t rho_enumerate(std::uint64_t n, std::int64_t a, std::uint64_t m) {
  const std::uint64_t g = std::gcd(m, n);
  const std::uint64_t target = residue(a, g);
  std::uint64_t count = 0;
  for (std::uint64_t b = 0; b < n; ++b) {
    if (b % g != target || std::gcd(b, n) != 1) continue;
    if (h_mod(b, n) == 0) ++count;
  }
  return count;
}

}  // namespace

std::uint64_t rho_prime_square(std::uint64_t q, std::int64_t a, std::uint64_t m) {
  check_ap(a, m);
  if (!is_prime_u64(q)) throw DomainError(std::to_string(q) + " is not prime");
  // h(b) is odd for every b, and h(b) = b^2 (mod 3) vanishes only at b = 0.
  if (q <= 3 || jacobi(Int(-3), from_uint64(q)) != 1) return 0;
  const Int Q = from_uint64(q);
  const Int s = sqrt_mod_prime(mod(Int(-27), Q), Q);
  const Int half = inv_mod(Int(2), Q);
  const bool restricted = m % q == 0;
  std::uint64_t count = 0;
  for (const Int& r : {mod((-3 + s) * half, Q), mod((-3 - s) * half, Q)}) {
    // The roots are simple since q does not divide disc(h) = -27, so each
    // lifts to exactly one root modulo q^2, congruent to r modulo q.
    if (!restricted || r == Int(static_cast<unsigned long>(residue(a, q)))) ++count;
  }
  return count;
}

std::uint64_t rho(std::uint64_t n, std::int64_t a, std::uint64_t m) {
  if (n == 0) throw DomainError("rho: n must be >= 1");
  check_ap(a, m);
  if (n <= kRhoEnumerationLimit) return rho_enumerate(n, a, m);
  const std::uint64_t q = isqrt_u64(n);
  if (q * q == n && is_prime_u64(q)) return rho_prime_square(q, a, m);
  throw EffortExceeded("rho(" + std::to_string(n) + ") is beyond the enumeration range");
}

double euler_product_c(std::uint64_t m, std::int64_t a, std::uint32_t cutoff) {
  check_ap(a, m);
  check_squarefree_modulus(m);
  if (cutoff < 100) throw DomainError("cutoff must be >= 100");
  for (const auto& q : factor(from_uint64(m)).primes()) {
    if (q > cutoff) throw DomainError("prime factor " + to_string(q) + " of m exceeds the cutoff");
  }
  long double product = 1;
  for (std::uint32_t q : primes_up_to(cutoff)) {
    const std::uint64_t r = rho_prime_square(q, a, m);
    if (r == 0) continue;
    const long double phi_gcd = (m % q == 0) ? q - 1 : 1;
    const long double phi_q2 = static_cast<long double>(q) * (q - 1);
    product *= 1 - r * phi_gcd / phi_q2;
  }
  return static_cast<double>(product);
}

double euler_tail_lower_bound(std::uint32_t cutoff) {
  if (cutoff < 100) throw DomainError("cutoff must be >= 100");
  return 1.0 - 2.0 / cutoff;
}

EmpiricalCount empirical_count(std::uint32_t X, std::int64_t a, std::uint64_t m) {
  check_ap(a, m);
  check_squarefree_modulus(m);
  const std::uint64_t target = residue(a, m);
  EmpiricalCount count;
  for (std::uint32_t p : primes_up_to(X)) {
    if (p % m != target) continue;
    ++count.primes_in_ap;
    const std::uint64_t hp = static_cast<std::uint64_t>(p) * p + 3ULL * p + 9;
    if (is_squarefree_u64(hp)) ++count.squarefree;
  }
  return count;
}

DensityReport density_report(std::uint32_t X, std::int64_t a, std::uint64_t m,
                             std::uint32_t cutoff) {
  DensityReport r;
  r.X = X;
  r.a = a;
  r.m = m;
  r.cutoff = cutoff;
  const EmpiricalCount count = empirical_count(X, a, m);
  r.empirical = count.squarefree;
  r.primes_in_ap = count.primes_in_ap;
  r.euler_c = euler_product_c(m, a, cutoff);
  r.euler_c_lower = r.euler_c * euler_tail_lower_bound(cutoff);
  const double phi_m = euler_phi(from_uint64(m)).get_d();
  r.main_term = r.euler_c / phi_m * X / std::log(static_cast<double>(X));
  r.ratio = r.primes_in_ap ? static_cast<double>(r.empirical) / r.primes_in_ap : 0.0;
  r.raw_ratio = r.main_term > 0 ? r.empirical / r.main_term : 0.0;
  return r;
}

}  // namespace polya
