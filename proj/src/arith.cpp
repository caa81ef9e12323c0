#include "polya/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "polya/errors.hpp"

namespace polya {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Covers cbrt(2^64) so the u64 square-free test never needs more primes.
constexpr std::uint32_t kSmallPrimeLimit = 2'700'000;
// Trial division bound used by factor() before switching to rho.
constexpr std::uint32_t kTrialLimit = 1u << 16;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = primes_up_to(kSmallPrimeLimit);
  return primes;
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool mr_witness_u64(u64 n, u64 d, unsigned s, u64 a) {
  a %= n;
  if (a == 0) return false;
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

bool mr_witness(const Int& n, const Int& d, unsigned s, const Int& a) {
  const Int n_minus_1 = n - 1;
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return false;
  }
  return true;
}

// Brent's cycle finding on x -> x^2 + c. Returns a nontrivial divisor or 0
// when this c fails. `budget` is decremented per polynomial evaluation.
Int brent_rho(const Int& n, unsigned long c, std::uint64_t& budget) {
  constexpr std::uint64_t kBlock = 128;
  Int y = 2, x, ys, q = 1, g = 1;
  std::uint64_t r = 1;
  auto f = [&](Int& v) {
    v = (v * v + c) % n;
    if (budget == 0) throw EffortExceeded("factorization exceeded rho iteration bound");
    --budget;
  };
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t lim = std::min(kBlock, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        f(y);
        Int diff = x - y;
        q = q * abs(diff) % n;
      }
      g = gcd(q, n);
      k += kBlock;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      f(ys);
      Int diff = x - ys;
      g = gcd(abs(diff), n);
    } while (g == 1);
  }
  if (g == n) return 0;
  return g;
}

void split_composite(const Int& n, std::vector<Int>& out, const Limits& limits,
                     std::uint64_t& budget) {
  if (n == 1) return;
  if (is_prime(n, limits.mr_rounds)) {
    out.push_back(n);
    return;
  }
  if (is_perfect_square(n)) {
    const Int root = isqrt(n);
    split_composite(root, out, limits, budget);
    split_composite(root, out, limits, budget);
    return;
  }
  for (unsigned long c = 1;; ++c) {
    Int d = brent_rho(n, c, budget);
    if (d != 0) {
      split_composite(d, out, limits, budget);
      split_composite(n / d, out, limits, budget);
      return;
    }
  }
}

}  // namespace

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<Int> Factorization::primes() const {
  std::vector<Int> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

bool Factorization::is_squarefree() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const PrimePower& f) { return f.exponent == 1; });
}

Factorization Factorization::kernel() const {
  std::vector<PrimePower> odd;
  for (const auto& f : factors) {
    if (f.exponent % 2 == 1) odd.push_back({f.prime, 1});
  }
  return from_factors(std::move(odd));
}

Factorization Factorization::from_factors(std::vector<PrimePower> factors) {
  Factorization out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].exponent == 0) throw DomainError("zero exponent in factorization");
    if (i > 0 && !(factors[i - 1].prime < factors[i].prime)) {
      throw DomainError("factorization primes must be strictly increasing");
    }
    out.value *= power(factors[i].prime, factors[i].exponent);
  }
  out.factors = std::move(factors);
  return out;
}

Factorization kernel_product(const Factorization& a, const Factorization& b) {
  std::vector<PrimePower> out;
  auto ia = a.factors.begin(), ib = b.factors.begin();
  while (ia != a.factors.end() || ib != b.factors.end()) {
    if (ib == b.factors.end() || (ia != a.factors.end() && ia->prime < ib->prime)) {
      if (ia->exponent % 2) out.push_back({ia->prime, 1});
      ++ia;
    } else if (ia == a.factors.end() || ib->prime < ia->prime) {
      if (ib->exponent % 2) out.push_back({ib->prime, 1});
      ++ib;
    } else {
      if ((ia->exponent + ib->exponent) % 2) out.push_back({ia->prime, 1});
      ++ia;
      ++ib;
    }
  }
  return Factorization::from_factors(std::move(out));
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve primes are a deterministic witness set below 3.3e24.
  for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (mr_witness_u64(n, d, s, a)) return false;
  }
  return true;
}

bool is_prime(const Int& n, unsigned mr_rounds) {
  if (sgn(n) <= 0) return false;
  if (auto small = to_uint64(n)) return is_prime_u64(*small);
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Int d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  if (mr_witness(n, d, s, Int(2))) return false;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eed);
  const Int span = n - 3;
  for (unsigned round = 0; round < mr_rounds; ++round) {
    Int a = rng.get_z_range(span) + 2;
    if (mr_witness(n, d, s, a)) return false;
  }
  return true;
}

int jacobi(const Int& a, const Int& n) {
  if (sgn(n) <= 0 || mpz_even_p(n.get_mpz_t())) {
    throw DomainError("jacobi: modulus must be odd and positive, got " + to_string(n));
  }
  const Int r = mod(a, n);
  return mpz_jacobi(r.get_mpz_t(), n.get_mpz_t());
}

CrtSolution crt(std::span<const Congruence> congruences) {
  CrtSolution sol;
  for (const auto& c : congruences) {
    if (c.modulus < 1) throw DomainError("crt: modulus must be >= 1");
    if (gcd(sol.modulus, c.modulus) != 1) {
      throw DomainError("crt: moduli are not pairwise coprime (" + to_string(c.modulus) + ")");
    }
    if (c.modulus == 1) continue;
    const Int inv = inv_mod(mod(sol.modulus, c.modulus), c.modulus);
    const Int k = mod((c.residue - sol.x) * inv, c.modulus);
    sol.x += sol.modulus * k;
    sol.modulus *= c.modulus;
  }
  sol.x = mod(sol.x, sol.modulus);
  return sol;
}

Int sqrt_mod_prime(const Int& a, const Int& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t())) {
    throw DomainError("sqrt_mod_prime: modulus must be an odd prime");
  }
  const Int r0 = mod(a, p);
  if (r0 == 0) return 0;
  if (jacobi(r0, p) != 1) {
    throw NonResidue(to_string(a) + " is not a square modulo " + to_string(p));
  }
  auto powm = [&](const Int& b, const Int& e) {
    Int out;
    mpz_powm(out.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return out;
  };
  Int root;
  if (mod(p, 4) == 3) {
    root = powm(r0, (p + 1) / 4);
  } else {
    Int q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
      q >>= 1;
      ++s;
    }
    Int z = 2;
    while (jacobi(z, p) != -1) ++z;
    Int c = powm(z, q);
    Int t = powm(r0, q);
    root = powm(r0, (q + 1) / 2);
    unsigned long m = s;
    while (t != 1) {
      unsigned long i = 0;
      Int t2 = t;
      while (t2 != 1) {
        t2 = t2 * t2 % p;
        ++i;
      }
      Int b = c;
      for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
      m = i;
      c = b * b % p;
      t = t * c % p;
      root = root * b % p;
    }
  }
  const Int other = p - root;
  return root < other ? root : other;
}

Int inv_mod(const Int& a, const Int& m) {
  if (m < 2) throw DomainError("inv_mod: modulus must be >= 2");
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw NotInvertible(to_string(a) + " is not invertible modulo " + to_string(m));
  }
  return mod(r, m);
}

Factorization factor(const Int& n, const Limits& limits) {
  if (n < 1) throw DomainError("factor: input must be >= 1, got " + to_string(n));
  std::vector<Int> primes;
  Int rest = n;
  for (std::uint32_t p : small_primes()) {
    if (p > kTrialLimit) break;
    if (Int(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      primes.emplace_back(p);
    }
  }
  if (rest > 1) {
    std::uint64_t budget = limits.rho_iterations;
    split_composite(rest, primes, limits, budget);
  }
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> factors;
  for (const auto& p : primes) {
    if (!factors.empty() && factors.back().prime == p) {
      ++factors.back().exponent;
    } else {
      factors.push_back({p, 1});
    }
  }
  Factorization out;
  out.value = n;
  out.factors = std::move(factors);
  return out;
}

bool is_squarefree_u64(std::uint64_t n) {
  if (n == 0) return false;
  for (std::uint32_t p : small_primes()) {
    const u64 pp = static_cast<u64>(p) * p;
    if (static_cast<u128>(pp) * p > n) break;
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  // Whatever remains has at most two prime factors, all larger than the
  // primes removed above.
  if (n < 4) return true;
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return static_cast<u128>(r) * r != n;
}

bool is_squarefree(const Int& n, const Limits& limits) {
  if (n < 1) throw DomainError("is_squarefree: input must be >= 1");
  if (auto small = to_uint64(n)) return is_squarefree_u64(*small);
  return factor(n, limits).is_squarefree();
}

SquareClass squarefree_kernel(const Int& n, const Limits& limits) {
  if (n == 0) throw DomainError("squarefree_kernel of zero");
  SquareClass c;
  c.sign = sgn(n) < 0 ? -1 : 1;
  for (const auto& f : factor(abs(n), limits).factors) {
    if (f.exponent % 2) c.kernel.push_back(f.prime);
  }
  return c;
}

std::optional<SquareClass> square_class_supported_on(const Int& n, std::span<const Int> primes) {
  if (n == 0) throw DomainError("square class of zero");
  std::vector<Int> sorted(primes.begin(), primes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  SquareClass c;
  c.sign = sgn(n) < 0 ? -1 : 1;
  Int rest = abs(n);
  for (const auto& p : sorted) {
    unsigned long e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    if (e % 2) c.kernel.push_back(p);
  }
  if (!is_perfect_square(rest)) return std::nullopt;
  return c;
}

Int next_prime_in_ap(const Int& a, const Int& m, const Int& from, const Limits& limits) {
  if (m < 1) throw DomainError("next_prime_in_ap: modulus must be >= 1");
  if (gcd(a, m) != 1) {
    throw DomainError("next_prime_in_ap: gcd(" + to_string(a) + ", " + to_string(m) + ") != 1");
  }
  const Int start = from + 1;
  Int candidate = start + mod(a - start, m);
  for (std::uint64_t i = 0; i < limits.search_bound; ++i, candidate += m) {
    if (is_prime(candidate, limits.mr_rounds)) return candidate;
  }
  throw SearchExhausted("no prime = " + to_string(a) + " (mod " + to_string(m) + ") within " +
                        std::to_string(limits.search_bound) + " terms above " + to_string(from));
}

Int euler_phi(const Int& n, const Limits& limits) {
  Int phi = 1;
  for (const auto& f : factor(n, limits).factors) {
    phi *= (f.prime - 1) * power(f.prime, f.exponent - 1);
  }
  return phi;
}

}  // namespace polya
