#pragma once

#include <cstdint>
#include <vector>

#include "polya/arith.hpp"
#include "polya/biquad.hpp"
#include "polya/cubic.hpp"
#include "polya/integer.hpp"
#include "polya/limits.hpp"

namespace polya {

/// One step of the tuple construction: the congruences solved, their CRT
/// solution and the prime taken from that progression.
struct TupleStep {
  std::vector<Congruence> system;
  CrtSolution solution;
  /// Smallest quadratic non-residue modulo each earlier prime.
  std::vector<Int> non_residues;
  Int prime;
};

struct TupleCertificate {
  unsigned t = 0;
  Int p;
  Int q;
  std::vector<Int> r;
  std::vector<TupleStep> transcript;
  std::uint64_t search_bound = 0;
};

/// Primes r_1 < ... in turn, each the smallest prime = 1 (mod 8pq) that is a
/// non-residue modulo every earlier r_i. t >= 2 (DomainError);
/// InvalidSophieGermain unless q and p = 2q + 1 are odd primes.
TupleCertificate crt_prime_tuple(unsigned t, const Int& p, const Int& q,
                                 const Limits& limits = {});

/// Re-checks primality, the congruences r_i = 1 (mod 8pq) and every pairwise
/// Jacobi symbol. Throws VerificationFailed.
void check_tuple_certificate(const TupleCertificate& cert, const Limits& limits = {});

/// The subgroup spanned by the six H^1 generators of Q(sqrt(m), sqrt(p))
/// equals <[2], [m], [p]>. EffortExceeded when the admissible unit
/// signatures disagree.
bool check_h1_structure(const BiquadField& field, const Limits& limits = {});
bool check_h1_structure(const Int& m, const Int& p, const Limits& limits = {});

struct BiquadTheoremReport {
  unsigned t = 0;
  Int q;
  Int p;
  TupleCertificate tuple;
  Int m;
  int rank_Kmp = 0;
  int rank_Kmp_minus_1 = 0;
  int expected = 0;
  bool h1_structure_ok = false;
  bool passed = false;
};

/// Builds m = r_1...r_t and computes the Polya ranks of Q(sqrt(m), sqrt(p))
/// and Q(sqrt(m), sqrt(2q)). t must be odd and >= 3 (DomainError).
BiquadTheoremReport verify_theorem_biquad(unsigned t, const Int& q, const Limits& limits = {});

/// find_large_polya_cubic followed by an independent re-check of the
/// certificate. Throws VerificationFailed.
CubicCertificate verify_theorem_cubic(double M, const Limits& limits = {});
void check_cubic_certificate(const CubicCertificate& cert, const Limits& limits = {});

}  // namespace polya
