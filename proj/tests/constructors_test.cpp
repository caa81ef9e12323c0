#include <doctest.h>

#include "oracles.hpp"
#include "polya/arith.hpp"
#include "polya/constructors.hpp"
#include "polya/cubic.hpp"
#include "polya/errors.hpp"
#include "polya/quadfield.hpp"

using namespace polya;

namespace {

void check_tuple_independently(const TupleCertificate& c) {
  const Int modulus = 8 * c.p * c.q;
  REQUIRE(c.r.size() == c.t);
  for (std::size_t i = 0; i < c.r.size(); ++i) {
    const auto ri = to_int64(c.r[i]);
    REQUIRE(ri.has_value());
    CHECK(oracle::is_prime(static_cast<std::uint64_t>(*ri)));
    CHECK(mod(c.r[i], modulus) == 1);
    for (std::size_t j = 0; j < c.r.size(); ++j) {
      if (i == j) continue;
      const auto rj = to_int64(c.r[j]);
      CHECK(oracle::legendre(*ri, static_cast<std::uint64_t>(*rj)) == -1);
    }
  }
}

}  // namespace

TEST_CASE("crt_prime_tuple for t = 2") {
  const TupleCertificate c = crt_prime_tuple(2, Int(7), Int(3));
  REQUIRE(c.r.size() == 2);
  CHECK(c.r[0] == 337);
  CHECK(c.transcript.size() == 2);
  CHECK(c.transcript[0].prime == 337);
  CHECK(jacobi(c.r[1], Int(337)) == -1);
  CHECK(jacobi(Int(337), c.r[1]) == -1);
  check_tuple_independently(c);
  CHECK_NOTHROW(check_tuple_certificate(c));
}

TEST_CASE("crt_prime_tuple for t = 3 and its transcript") {
  const TupleCertificate c = crt_prime_tuple(3, Int(7), Int(3));
  check_tuple_independently(c);
  for (std::size_t k = 0; k < c.transcript.size(); ++k) {
    const TupleStep& step = c.transcript[k];
    CHECK(step.non_residues.size() == k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto ri = static_cast<std::uint64_t>(*to_int64(c.r[i]));
      const auto ni = *to_int64(step.non_residues[i]);
      CHECK(oracle::legendre(ni, ri) == -1);
      for (std::int64_t smaller = 1; smaller < ni; ++smaller) CHECK(oracle::legendre(smaller, ri) == 1);
    }
    CHECK(mod(step.prime - step.solution.x, step.solution.modulus) == 0);
    CHECK(step.prime == c.r[k]);
  }
}

TEST_CASE("crt_prime_tuple is deterministic under a larger search bound") {
  Limits wide;
  wide.search_bound = 100'000'000;
  CHECK(crt_prime_tuple(3, Int(11), Int(5)).r == crt_prime_tuple(3, Int(11), Int(5), wide).r);
  Limits tight;
  tight.search_bound = 1;
  CHECK_THROWS_AS(crt_prime_tuple(3, Int(7), Int(3), tight), SearchExhausted);
}

TEST_CASE("crt_prime_tuple rejects invalid inputs") {
  CHECK_THROWS_AS(crt_prime_tuple(3, Int(9), Int(3)), InvalidSophieGermain);
  CHECK_THROWS_AS(crt_prime_tuple(3, Int(13), Int(5)), InvalidSophieGermain);
  CHECK_THROWS_AS(crt_prime_tuple(3, Int(5), Int(2)), InvalidSophieGermain);
  CHECK_THROWS_AS(crt_prime_tuple(1, Int(7), Int(3)), DomainError);
}

TEST_CASE("check_tuple_certificate detects tampering") {
  TupleCertificate c = crt_prime_tuple(3, Int(7), Int(3));
  TupleCertificate swapped = c;
  swapped.r[1] = c.r[1] + 8 * 7 * 3;
  CHECK_THROWS_AS(check_tuple_certificate(swapped), VerificationFailed);
  TupleCertificate composite = c;
  composite.r[0] = 169;
  CHECK_THROWS_AS(check_tuple_certificate(composite), VerificationFailed);
}

TEST_CASE("theorem family products are 1 (mod 8)") {
  for (auto [p, q] : {std::pair{7, 3}, {11, 5}, {23, 11}}) {
    const TupleCertificate c = crt_prime_tuple(3, Int(p), Int(q));
    CHECK(mod(c.r[0] * c.r[1] * c.r[2], Int(8)) == 1);
  }
}

TEST_CASE("verify_theorem_biquad for t = 3, (q, p) = (3, 7)") {
  const BiquadTheoremReport r = verify_theorem_biquad(3, Int(3));
  CHECK(r.p == 7);
  CHECK(r.expected == 2);
  CHECK(r.rank_Kmp == 2);
  CHECK(r.rank_Kmp_minus_1 == 2);
  CHECK(r.h1_structure_ok);
  CHECK(r.passed);
  CHECK(r.m == r.tuple.r[0] * r.tuple.r[1] * r.tuple.r[2]);
  CHECK(check_h1_structure(r.m, Int(7)));
}

TEST_CASE("verify_theorem_biquad rejects even or small t") {
  CHECK_THROWS_AS(verify_theorem_biquad(2, Int(3)), DomainError);
  CHECK_THROWS_AS(verify_theorem_biquad(4, Int(3)), DomainError);
  CHECK_THROWS_AS(verify_theorem_biquad(1, Int(3)), DomainError);
  CHECK_THROWS_AS(verify_theorem_biquad(3, Int(7)), InvalidSophieGermain);
}

TEST_CASE("check_h1_structure outside the family") {
  // K(5,3) has the full group <[2],[3],[5]> as H^1, while <[2],[m],[p]> is too.
  CHECK(check_h1_structure(Int(5), Int(3)));
  CHECK_FALSE(check_h1_structure(Int(5), Int(13)));
}

TEST_CASE("cubic certificates") {
  const CubicCertificate c = verify_theorem_cubic(25);
  CHECK(c.po_lower_bound == 27);
  CHECK_NOTHROW(check_cubic_certificate(c));
  CHECK(verify_theorem_cubic(2).po_lower_bound == 3);
  CHECK(verify_theorem_cubic(0.5).t == 1);

  CubicCertificate bad = c;
  bad.p = c.p + c.modulus;
  CHECK_THROWS_AS(check_cubic_certificate(bad), VerificationFailed);
  bad = c;
  bad.po_lower_bound = 81;
  CHECK_THROWS_AS(check_cubic_certificate(bad), VerificationFailed);
  bad = c;
  bad.auxiliary_primes.pop_back();
  CHECK_THROWS_AS(check_cubic_certificate(bad), VerificationFailed);
}
