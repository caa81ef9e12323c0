#include "polya/cubic.hpp"

#include <cmath>
#include <stdexcept>

#include "polya/errors.hpp"

namespace polya {

Int h_value(const Int& n) { return n * n + 3 * n + 9; }

SimplestCubic simplest_cubic(const Int& n, const Limits& limits) {
  if (n < -1) throw DomainError("simplest cubic parameter must be >= -1, got " + to_string(n));
  SimplestCubic k;
  k.n = n;
  k.hn = h_value(n);
  const Factorization f = factor(k.hn, limits);
  k.squarefree = f.is_squarefree();
  if (k.squarefree) {
    k.hn_factors = f;
    k.ramified = f.primes();
    k.r_K = static_cast<unsigned>(k.ramified.size());
    k.po_order = power(Int(3), k.r_K - 1);
  }
  return k;
}

namespace {

SimplestCubic squarefree_cubic(const Int& n, const Limits& limits) {
  SimplestCubic k = simplest_cubic(n, limits);
  if (!k.squarefree) {
    throw Unsupported("h(" + to_string(n) + ") = " + to_string(k.hn) + " is not square-free");
  }
  return k;
}

}  // namespace

Int discriminant_simplest_cubic(const Int& n, const Limits& limits) {
  const SimplestCubic k = squarefree_cubic(n, limits);
  return k.hn * k.hn;
}

Int polya_order_cubic(const Int& n, const Limits& limits) {
  return squarefree_cubic(n, limits).po_order;
}

Int root_of_h_mod_p(const Int& p) {
  if (p <= 3 || !is_prime(p)) throw DomainError(to_string(p) + " is not a prime > 3");
  if (jacobi(Int(-3), p) != 1) throw NonResidue("-3 is not a square modulo " + to_string(p));
  const Int a = sqrt_mod_prime(mod(Int(-3), p), p);
  const Int b = inv_mod(Int(2), p);
  const Int x = mod(-3 * b + 3 * a * b, p);
  if (mod(h_value(x), p) != 0 || gcd(x, p) != 1) {
    throw std::logic_error("root_of_h_mod_p: postcondition failed for p = " + to_string(p));
  }
  return x;
}

unsigned cubic_t_for(double M) {
  if (!std::isfinite(M) || !(M > 0)) throw DomainError("M must be a positive finite number");
  unsigned t = 1;
  for (double bound = 1; !(bound > M); bound *= 3) ++t;
  return t;
}

std::vector<Int> auxiliary_primes(unsigned t) {
  std::vector<Int> primes;
  for (Int q = 7; primes.size() < t; q += 6) {
    if (is_prime(q)) primes.push_back(q);
  }
  return primes;
}

CubicCertificate find_large_polya_cubic(double M, const Limits& limits) {
  CubicCertificate cert;
  cert.M = M;
  cert.t = cubic_t_for(M);
  cert.auxiliary_primes = auxiliary_primes(cert.t);
  std::vector<Congruence> system;
  for (const auto& q : cert.auxiliary_primes) system.push_back({root_of_h_mod_p(q), q});
  const CrtSolution sol = crt(system);
  cert.x0 = sol.x;
  cert.modulus = sol.modulus;
  cert.po_lower_bound = power(Int(3), cert.t - 1);

  Int from = 0;
  std::uint64_t used = 0;
  while (used < limits.search_bound) {
    Limits scan = limits;
    scan.search_bound = limits.search_bound - used;
    Int p;
    try {
      p = next_prime_in_ap(cert.x0, cert.modulus, from, scan);
    } catch (const SearchExhausted&) {
      break;
    }
    used = *to_uint64((p - cert.x0) / cert.modulus + 1);
    const Int hp = h_value(p);
    Factorization f = factor(hp, limits);
    if (f.is_squarefree()) {
      cert.p = p;
      cert.hn = hp;
      cert.hn_factors = std::move(f);
      cert.terms_scanned = used;
      return cert;
    }
    from = p;
  }
  throw SearchExhausted("no prime p = " + to_string(cert.x0) + " (mod " +
                        to_string(cert.modulus) + ") with square-free h(p) within " +
                        std::to_string(limits.search_bound) + " terms");
}

}  // namespace polya
