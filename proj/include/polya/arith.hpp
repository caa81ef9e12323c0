#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polya/integer.hpp"
#include "polya/limits.hpp"
#include "polya/sqclass.hpp"

namespace polya {

struct PrimePower {
  Int prime;
  unsigned exponent = 1;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// value = prod prime^exponent with strictly increasing primes.
struct Factorization {
  Int value = 1;
  std::vector<PrimePower> factors;

  std::vector<Int> primes() const;
  bool is_squarefree() const;
  /// Factorization of the square-free kernel (primes with odd exponent).
  Factorization kernel() const;
  /// Rebuilds value from factors and checks the ordering invariant.
  static Factorization from_factors(std::vector<PrimePower> factors);
};

/// Square-free kernel of a*b from the factorizations of two square-free
/// numbers (symmetric difference of their primes).
Factorization kernel_product(const Factorization& a, const Factorization& b);

/// Deterministic below 2^64; Miller-Rabin with mr_rounds fixed-seed bases
/// above. Negative input is not prime.
bool is_prime(const Int& n, unsigned mr_rounds = 40);
bool is_prime_u64(std::uint64_t n);

/// Jacobi symbol (a/n); n odd and positive, otherwise DomainError.
int jacobi(const Int& a, const Int& n);

struct Congruence {
  Int residue;
  Int modulus;
};

struct CrtSolution {
  Int x = 0;
  Int modulus = 1;
};

/// Solves x = residue_i (mod modulus_i) for pairwise coprime moduli.
CrtSolution crt(std::span<const Congruence> congruences);

/// Tonelli-Shanks; returns the smaller of the two roots.
Int sqrt_mod_prime(const Int& a, const Int& p);

Int inv_mod(const Int& a, const Int& m);

/// Trial division, then Brent's variant of Pollard rho on what remains.
Factorization factor(const Int& n, const Limits& limits = {});

bool is_squarefree(const Int& n, const Limits& limits = {});
bool is_squarefree_u64(std::uint64_t n);

SquareClass squarefree_kernel(const Int& n, const Limits& limits = {});

/// Square class of n when n is +-1 times a product of the given primes times
/// a perfect square; nullopt otherwise. Needs no factorization of the square.
std::optional<SquareClass> square_class_supported_on(const Int& n, std::span<const Int> primes);

/// Smallest prime p > from with p = a (mod m). Examines at most
/// limits.search_bound terms of the progression.
Int next_prime_in_ap(const Int& a, const Int& m, const Int& from,
                     const Limits& limits = {});

Int euler_phi(const Int& n, const Limits& limits = {});

/// Primes up to `limit` (sieve of Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

}  // namespace polya
