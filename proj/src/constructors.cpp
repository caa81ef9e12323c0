#include "polya/constructors.hpp"

#include <algorithm>
#include <set>

#include "polya/errors.hpp"
#include "polya/sqclass.hpp"

namespace polya {

namespace {

void check_sophie_germain(const Int& p, const Int& q, unsigned mr_rounds) {
  if (p != 2 * q + 1) {
    throw InvalidSophieGermain("p = " + to_string(p) + " is not 2q + 1 for q = " + to_string(q));
  }
  if (q < 3 || !is_prime(q, mr_rounds) || !is_prime(p, mr_rounds)) {
    throw InvalidSophieGermain("q = " + to_string(q) + " and p = " + to_string(p) +
                               " are not both odd primes");
  }
}

Int smallest_non_residue(const Int& r) {
  for (Int n = 2;; ++n) {
    if (jacobi(n, r) == -1) return n;
  }
}

Factorization prime_product(std::vector<Int> primes) {
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> factors;
  for (auto& r : primes) factors.push_back({std::move(r), 1});
  return Factorization::from_factors(std::move(factors));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailed(what);
}

}  // namespace

TupleCertificate crt_prime_tuple(unsigned t, const Int& p, const Int& q, const Limits& limits) {
  if (t < 2) throw DomainError("tuple length must be >= 2");
  check_sophie_germain(p, q, limits.mr_rounds);
  TupleCertificate cert;
  cert.t = t;
  cert.p = p;
  cert.q = q;
  cert.search_bound = limits.search_bound;
  const Int base = 8 * p * q;
  for (unsigned k = 0; k < t; ++k) {
    TupleStep step;
    step.system.push_back({Int(1), base});
    for (const auto& r : cert.r) {
      step.non_residues.push_back(smallest_non_residue(r));
      step.system.push_back({step.non_residues.back(), r});
    }
    step.solution = crt(step.system);
    step.prime = next_prime_in_ap(step.solution.x, step.solution.modulus, Int(0), limits);
    cert.r.push_back(step.prime);
    cert.transcript.push_back(std::move(step));
  }
  check_tuple_certificate(cert, limits);
  return cert;
}

void check_tuple_certificate(const TupleCertificate& cert, const Limits& limits) {
  require(cert.r.size() == cert.t, "tuple has the wrong length");
  const Int base = 8 * cert.p * cert.q;
  for (std::size_t i = 0; i < cert.r.size(); ++i) {
    const Int& ri = cert.r[i];
    require(is_prime(ri, limits.mr_rounds), to_string(ri) + " is not prime");
    require(mod(ri, base) == 1, to_string(ri) + " is not 1 mod " + to_string(base));
    for (std::size_t j = 0; j < cert.r.size(); ++j) {
      if (i == j) continue;
      require(ri != cert.r[j], "tuple primes are not distinct");
      require(jacobi(ri, cert.r[j]) == -1,
              "(" + to_string(ri) + " / " + to_string(cert.r[j]) + ") != -1");
    }
  }
}

bool check_h1_structure(const BiquadField& field, const Limits& limits) {
  const SquareClass target_gens[] = {SquareClass::from_primes(1, {Int(2)}),
                                     field.subfields()[0].discriminant_class(),
                                     field.subfields()[1].discriminant_class()};
  const auto target = subgroup_members(target_gens);
  const H1Generators gens = h1_generators(field, limits);
  std::set<bool> outcomes;
  for (const auto& a1 : gens.units[0].a_options) {
    for (const auto& a2 : gens.units[1].a_options) {
      for (const auto& a3 : gens.units[2].a_options) {
        const SquareClass six[] = {gens.discriminant_classes[0], gens.discriminant_classes[1],
                                   gens.discriminant_classes[2], a1, a2, a3};
        outcomes.insert(subgroup_members(six) == target);
      }
    }
  }
  if (outcomes.size() != 1) {
    throw EffortExceeded("H1 subgroup of Q(sqrt(" + to_string(field.m()) + "), sqrt(" +
                         to_string(field.n()) + ")) undetermined within the configured bounds");
  }
  return *outcomes.begin();
}

bool check_h1_structure(const Int& m, const Int& p, const Limits& limits) {
  return check_h1_structure(BiquadField(m, p, limits), limits);
}

BiquadTheoremReport verify_theorem_biquad(unsigned t, const Int& q, const Limits& limits) {
  if (t < 3 || t % 2 == 0) throw DomainError("t must be odd and >= 3, got " + std::to_string(t));
  BiquadTheoremReport report;
  report.t = t;
  report.q = q;
  report.p = 2 * q + 1;
  report.expected = static_cast<int>(t) - 1;
  report.tuple = crt_prime_tuple(t, report.p, q, limits);
  const Factorization m = prime_product(report.tuple.r);
  report.m = m.value;
  const BiquadField k_mp(m, prime_product({report.p}));
  const BiquadField k_mp1(m, prime_product({Int(2), q}));
  report.rank_Kmp = polya_rank_biquad(k_mp, limits);
  report.rank_Kmp_minus_1 = polya_rank_biquad(k_mp1, limits);
  report.h1_structure_ok = check_h1_structure(k_mp, limits);
  report.passed = report.rank_Kmp == report.expected &&
                  report.rank_Kmp_minus_1 == report.expected && report.h1_structure_ok;
  return report;
}

void check_cubic_certificate(const CubicCertificate& cert, const Limits& limits) {
  require(cert.t >= 1 && cert.auxiliary_primes.size() == cert.t, "wrong number of auxiliary primes");
  require(power(Int(3), cert.t - 1) == cert.po_lower_bound, "lower bound is not 3^(t-1)");
  require(cert.po_lower_bound > cert.M, "lower bound does not exceed M");
  require(is_prime(cert.p, limits.mr_rounds), to_string(cert.p) + " is not prime");
  Int modulus = 1;
  const Int hp = cert.p * cert.p + 3 * cert.p + 9;
  require(hp == cert.hn, "recorded h(p) is wrong");
  for (const auto& pi : cert.auxiliary_primes) {
    require(is_prime(pi, limits.mr_rounds) && mod(pi, 3) == 1,
            to_string(pi) + " is not a prime = 1 mod 3");
    require(mod(hp, pi) == 0, to_string(pi) + " does not divide h(p)");
    modulus *= pi;
  }
  require(modulus == cert.modulus, "modulus is not the product of the auxiliary primes");
  require(mod(cert.p - cert.x0, modulus) == 0, "p is not congruent to x0");
  const Factorization f = factor(hp, limits);
  require(f.is_squarefree(), "h(p) is not square-free");
  for (const auto& pp : f.factors) {
    require(is_prime(pp.prime, limits.mr_rounds), "factor " + to_string(pp.prime) + " not prime");
  }
  require(f.factors == cert.hn_factors.factors,
          "recorded factorization of h(p) differs");
  const Int order = power(Int(3), f.factors.size() - 1);
  require(order >= cert.po_lower_bound && order > cert.M, "3^(r_K - 1) does not exceed M");
}

CubicCertificate verify_theorem_cubic(double M, const Limits& limits) {
  CubicCertificate cert = find_large_polya_cubic(M, limits);
  check_cubic_certificate(cert, limits);
  return cert;
}

}  // namespace polya
