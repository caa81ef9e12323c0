#include <doctest.h>

#include "oracles.hpp"
#include "polya/arith.hpp"
#include "polya/cubic.hpp"
#include "polya/errors.hpp"

using namespace polya;

TEST_CASE("h_value") {
  CHECK(h_value(Int(1)) == 13);
  CHECK(h_value(Int(0)) == 9);
  CHECK(h_value(Int(-3)) == 9);
  CHECK(h_value(Int(5)) == 49);
  for (long n = -50; n <= 50; ++n) CHECK(h_value(Int(n)) == h_value(Int(-3 - n)));
}

TEST_CASE("discriminant_simplest_cubic") {
  CHECK(discriminant_simplest_cubic(Int(1)) == 169);
  CHECK(discriminant_simplest_cubic(Int(4)) == 1369);
  CHECK_THROWS_AS(discriminant_simplest_cubic(Int(5)), Unsupported);
  CHECK_THROWS_AS(discriminant_simplest_cubic(Int(-2)), DomainError);
}

TEST_CASE("polya_order_cubic") {
  CHECK(polya_order_cubic(Int(1)) == 1);
  CHECK(polya_order_cubic(Int(7)) == 1);
  CHECK(polya_order_cubic(Int(13)) == 3);
  CHECK_THROWS_AS(polya_order_cubic(Int(12)), Unsupported);
  CHECK_THROWS_AS(polya_order_cubic(Int(54)), Unsupported);
  const SimplestCubic k = simplest_cubic(Int(13));
  CHECK(k.hn == 217);
  CHECK(k.squarefree);
  CHECK(k.ramified == std::vector<Int>{7, 31});
  CHECK(k.r_K == 2);
  CHECK_FALSE(simplest_cubic(Int(5)).squarefree);
}

TEST_CASE("root_of_h_mod_p") {
  CHECK(root_of_h_mod_p(Int(7)) == 5);
  CHECK(root_of_h_mod_p(Int(13)) == 1);
  CHECK_THROWS_AS(root_of_h_mod_p(Int(5)), NonResidue);
  CHECK_THROWS_AS(root_of_h_mod_p(Int(3)), DomainError);
  CHECK_THROWS_AS(root_of_h_mod_p(Int(2)), DomainError);
  CHECK_THROWS_AS(root_of_h_mod_p(Int(91)), DomainError);
  for (std::uint64_t p = 7; p < 5000; p += 6) {
    if (!oracle::is_prime(p)) continue;
    const Int x = root_of_h_mod_p(from_uint64(p));
    INFO("p = ", p);
    CHECK(mod(h_value(x), from_uint64(p)) == 0);
    // The other root is -3 - x, and the product of the roots is 9.
    CHECK(mod(x * (-3 - x) - 9, from_uint64(p)) == 0);
  }
}

TEST_CASE("3 divides h(n) only when 3 divides n, and then 9 does") {
  for (long n = -1; n <= 10'000; ++n) {
    const Int h = h_value(Int(n));
    if (n % 3 == 0) {
      CHECK(h % 9 == 0);
    } else {
      CHECK(h % 3 != 0);
    }
  }
}

TEST_CASE("cubic_t_for and auxiliary_primes") {
  CHECK(cubic_t_for(2) == 2);
  CHECK(cubic_t_for(25) == 4);
  CHECK(cubic_t_for(26.9) == 4);
  CHECK(cubic_t_for(27) == 5);
  CHECK(cubic_t_for(80) == 5);
  CHECK(cubic_t_for(0.5) == 1);
  CHECK_THROWS_AS(cubic_t_for(0), DomainError);
  CHECK_THROWS_AS(cubic_t_for(-1), DomainError);
  CHECK_THROWS_AS(cubic_t_for(std::numeric_limits<double>::infinity()), DomainError);
  CHECK(auxiliary_primes(4) == std::vector<Int>{7, 13, 19, 31});
}

TEST_CASE("find_large_polya_cubic") {
  for (double M : {0.5, 2.0, 25.0, 80.0}) {
    const CubicCertificate c = find_large_polya_cubic(M);
    INFO("M = ", M);
    CHECK(c.t == cubic_t_for(M));
    Int modulus = 1;
    for (const Int& q : c.auxiliary_primes) {
      modulus *= q;
      CHECK(c.hn % q == 0);
      CHECK(mod(c.x0, q) == root_of_h_mod_p(q));
    }
    CHECK(c.modulus == modulus);
    CHECK(mod(c.p - c.x0, c.modulus) == 0);
    CHECK(is_prime(c.p));
    CHECK(c.hn == h_value(c.p));
    CHECK(is_squarefree(c.hn));
    CHECK(Int(c.hn_factors.factors.size()) >= Int(c.t));
    CHECK(c.po_lower_bound == power(Int(3), c.t - 1));
    CHECK(c.po_lower_bound > M);
    CHECK(c.terms_scanned >= 1);
  }
  CHECK(find_large_polya_cubic(25).modulus == 53599);
  CHECK(find_large_polya_cubic(2).modulus == 91);
  Limits tight;
  tight.search_bound = 0;
  CHECK_THROWS_AS(find_large_polya_cubic(25, tight), SearchExhausted);
}
