#pragma once

#include <cstdint>
#include <vector>

#include "polya/arith.hpp"
#include "polya/integer.hpp"
#include "polya/limits.hpp"

namespace polya {

/// h(n) = n^2 + 3n + 9.
Int h_value(const Int& n);

/// Shanks' simplest cubic field K_n, the splitting field of
/// X^3 + (n+3)X^2 + nX - 1, for n >= -1.
struct SimplestCubic {
  Int n;
  Int hn;
  bool squarefree = false;
  /// The fields below are filled only when hn is square-free.
  Factorization hn_factors;
  std::vector<Int> ramified;
  unsigned r_K = 0;
  Int po_order;
};

/// DomainError for n < -1.
SimplestCubic simplest_cubic(const Int& n, const Limits& limits = {});

/// h(n)^2. Unsupported when h(n) is not square-free.
Int discriminant_simplest_cubic(const Int& n, const Limits& limits = {});

/// 3^(r_K - 1) with r_K the number of primes dividing h(n). Unsupported when
/// h(n) is not square-free.
Int polya_order_cubic(const Int& n, const Limits& limits = {});

/// x = -3b + 3ab (mod p) with a^2 = -3 and 2b = 1 (mod p), a root of h mod p.
/// NonResidue when (-3/p) != 1; DomainError when p is not a prime > 3.
Int root_of_h_mod_p(const Int& p);

struct CubicCertificate {
  double M = 0;
  unsigned t = 0;
  std::vector<Int> auxiliary_primes;
  Int x0;
  Int modulus;
  Int p;
  Int hn;
  Factorization hn_factors;
  Int po_lower_bound;
  /// Progression terms examined before p was accepted.
  std::uint64_t terms_scanned = 0;
};

/// Smallest t with 3^(t-1) > M. DomainError unless M > 0 and finite.
unsigned cubic_t_for(double M);

/// The t smallest primes = 1 (mod 3).
std::vector<Int> auxiliary_primes(unsigned t);

/// Smallest prime p = x0 (mod p_1...p_t) with h(p) square-free, where x0 is
/// the CRT lift of root_of_h_mod_p(p_i). SearchExhausted after
/// limits.search_bound progression terms.
CubicCertificate find_large_polya_cubic(double M, const Limits& limits = {});

}  // namespace polya
