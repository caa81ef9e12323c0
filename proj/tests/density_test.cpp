#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "polya/density.hpp"
#include "polya/errors.hpp"

using namespace polya;

TEST_CASE("rho") {
  CHECK(rho(9, 1, 1) == 0);
  CHECK(rho(49, 1, 1) == 2);
  CHECK(rho(25, 1, 1) == 0);
  CHECK(rho(4, 1, 1) == 0);
  CHECK(rho(7, 1, 1) == 2);
  CHECK(rho(13, 1, 1) == 2);
  CHECK(rho(1, 1, 1) == 1);
  // The roots of h mod 7 are 5 and 6; the residue condition keeps one of them.
  CHECK(rho(49, 5, 7) == 1);
  CHECK(rho(49, 1, 7) == 0);
  CHECK_THROWS_AS(rho(0, 1, 1), DomainError);
  CHECK_THROWS_AS(rho(9, 1, 0), DomainError);
  CHECK_THROWS_AS(rho(9, 3, 6), DomainError);
}

TEST_CASE("rho agrees with enumeration") {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    for (auto [a, m] : {std::pair<std::int64_t, std::uint64_t>{1, 1}, {2, 3}, {1, 6}, {5, 7}}) {
      INFO("n = ", n, ", a = ", a, ", m = ", m);
      REQUIRE(rho(n, a, m) == oracle::rho(n, a, m));
    }
  }
}

TEST_CASE("rho_prime_square beyond the enumeration range") {
  for (std::uint64_t q : {1009ULL, 1013ULL, 10007ULL, 10009ULL}) {
    const std::uint64_t expected = q % 3 == 1 ? 2 : 0;
    CHECK(rho_prime_square(q, 1, 1) == expected);
    CHECK(rho(q * q, 1, 1) == expected);
  }
  CHECK(rho_prime_square(3, 1, 1) == 0);
  CHECK(rho_prime_square(7, 1, 1) == rho(49, 1, 1));
  CHECK(rho_prime_square(7, 5, 7) == rho(49, 5, 7));
  CHECK_THROWS_AS(rho(1'000'003ULL * 1'000'033ULL, 1, 1), EffortExceeded);
}

TEST_CASE("euler_product_c") {
  const double c100 = euler_product_c(1, 1, 100);
  const double c1000 = euler_product_c(1, 1, 1000);
  const double c10000 = euler_product_c(1, 1, 10000);
  CHECK(c100 > c1000);
  CHECK(c1000 > c10000);
  CHECK(c10000 > 0);
  CHECK(c10000 * euler_tail_lower_bound(10000) > 0);
  CHECK(c10000 * euler_tail_lower_bound(10000) < c10000);
  // Only q = 7 contributes below 13: its factor is 20/21.
  double direct = 1;
  for (std::uint64_t q = 2; q <= 100; ++q) {
    if (!oracle::is_prime(q)) continue;
    direct *= 1.0 - static_cast<double>(oracle::rho(q * q, 1, 1)) / static_cast<double>(q * (q - 1));
  }
  CHECK(c100 == doctest::Approx(direct).epsilon(1e-12));
  CHECK(20.0 / 21.0 * (1 - 2.0 / 156) * (1 - 2.0 / 342) * (1 - 2.0 / 930) * (1 - 2.0 / 1332) >
        c100);
  CHECK_THROWS_AS(euler_product_c(1, 1, 99), DomainError);
  CHECK_THROWS_AS(euler_product_c(12, 1, 100), DomainError);
  CHECK_THROWS_AS(euler_product_c(3 * 101, 1, 100), DomainError);
  CHECK_THROWS_AS(euler_product_c(6, 3, 100), DomainError);
}

TEST_CASE("empirical_count") {
  const EmpiricalCount c100 = empirical_count(100, 1, 1);
  CHECK(c100.primes_in_ap == 25);
  // h(3) = 27, h(5) = 49 and h(41) = 1813 = 7^2 * 37 are the failures below 100.
  CHECK(c100.squarefree == 22);
  const EmpiricalCount c10 = empirical_count(10, 2, 3);
  CHECK(c10.squarefree == 1);
  CHECK(c10.primes_in_ap == 2);
  const EmpiricalCount c50 = empirical_count(50, 1, 6);
  CHECK(c50.primes_in_ap == 6);
  for (auto [a, m] : {std::pair<std::int64_t, std::uint64_t>{1, 1}, {2, 3}, {1, 6}, {3, 10}}) {
    const EmpiricalCount c = empirical_count(20000, a, m);
    const auto [primes, squarefree] = oracle::density_counts(20000, a, m);
    INFO("a = ", a, ", m = ", m);
    CHECK(c.primes_in_ap == primes);
    CHECK(c.squarefree == squarefree);
  }
}

TEST_CASE("density_report") {
  const DensityReport r = density_report(1000, 1, 1, 1000);
  CHECK(r.empirical <= r.primes_in_ap);
  CHECK(r.ratio == doctest::Approx(static_cast<double>(r.empirical) / r.primes_in_ap));
  CHECK(r.euler_c_lower < r.euler_c);
  CHECK(r.main_term == doctest::Approx(r.euler_c * 1000 / std::log(1000.0)));
  CHECK(r.raw_ratio == doctest::Approx(r.empirical / r.main_term));
  const DensityReport big = density_report(200'000, 2, 3);
  CHECK(std::abs(big.ratio - big.euler_c) < 0.03);
}
