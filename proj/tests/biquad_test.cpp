#include <doctest.h>

#include <optional>

#include "polya/biquad.hpp"
#include "polya/errors.hpp"

using namespace polya;

namespace {

std::vector<Int> primes_of(const std::vector<RamifiedPrime>& ramified) {
  std::vector<Int> out;
  for (const RamifiedPrime& r : ramified) out.push_back(r.prime);
  return out;
}

}  // namespace

TEST_CASE("subfields") {
  CHECK(subfields(Int(6), Int(2)) == std::array<Int, 3>{6, 2, 3});
  CHECK(subfields(Int(5), Int(13)) == std::array<Int, 3>{5, 13, 65});
  CHECK_THROWS_AS(subfields(Int(2), Int(8)), DomainError);
  CHECK_THROWS_AS(subfields(Int(4), Int(3)), DomainError);
  CHECK_THROWS_AS(subfields(Int(1), Int(3)), DomainError);
  CHECK_THROWS_AS(subfields(Int(3), Int(0)), DomainError);
}

TEST_CASE("radicands are reduced to their square-free kernels") {
  const BiquadField k(Int(12), Int(5));
  CHECK(k.radicands() == std::array<Int, 3>{3, 5, 15});
  CHECK(k.m() == 12);
}

TEST_CASE("ramified_primes_biquad") {
  const auto r23 = ramified_primes_biquad(Int(2), Int(3));
  REQUIRE(r23.size() == 2);
  CHECK(r23[0] == RamifiedPrime{Int(2), 4});
  CHECK(r23[1] == RamifiedPrime{Int(3), 2});
  CHECK(BiquadField(Int(2), Int(3)).two_totally_ramified());

  const auto r513 = ramified_primes_biquad(Int(5), Int(13));
  CHECK(r513 == std::vector<RamifiedPrime>{{Int(5), 2}, {Int(13), 2}});

  const auto r53 = ramified_primes_biquad(Int(5), Int(3));
  CHECK(r53 == std::vector<RamifiedPrime>{{Int(2), 2}, {Int(3), 2}, {Int(5), 2}});
  CHECK_FALSE(BiquadField(Int(5), Int(3)).two_totally_ramified());
}

TEST_CASE("h1 and Polya ranks of K(5,3)") {
  CHECK(h1_rank_biquad(Int(5), Int(3)) == 3);
  CHECK(polya_rank_biquad(Int(5), Int(3)) == 0);
  CHECK(h1_rank_biquad(Int(5), Int(3), {}, UnitMethod::FullUnit) == 3);
  const H1Generators g = h1_generators(BiquadField(Int(5), Int(3)));
  CHECK(g.units[0].a_options.front().is_identity());
}

TEST_CASE("2 totally ramified is refused") {
  CHECK_THROWS_AS(h1_rank_biquad(Int(2), Int(3)), TotallyRamifiedTwo);
  CHECK_THROWS_AS(polya_rank_biquad(Int(2), Int(3)), TotallyRamifiedTwo);
  CHECK_THROWS_AS(polya_rank_biquad(Int(7), Int(6)), TotallyRamifiedTwo);
}

TEST_CASE("ranks are symmetric in m and n and independent of the unit method") {
  int compared = 0;
  for (long m = 2; m <= 40; ++m) {
    for (long n = m + 1; n <= 40; ++n) {
      std::optional<BiquadField> field;
      try {
        field.emplace(Int(m), Int(n));
      } catch (const DomainError&) {
        continue;
      }
      const BiquadField& k = *field;
      if (k.two_totally_ramified()) continue;
      INFO("m = ", m, ", n = ", n);
      const int full = polya_rank_biquad(k, {}, UnitMethod::FullUnit);
      CHECK(polya_rank_biquad(k) == full);
      CHECK(polya_rank_biquad(k, {}, UnitMethod::CycleMidpoint) == full);
      CHECK(polya_rank_biquad(Int(n), Int(m)) == full);
      CHECK(primes_of(k.ramified()) == primes_of(BiquadField(Int(n), Int(m)).ramified()));
      const int h1 = h1_rank_biquad(k, {}, UnitMethod::FullUnit);
      CHECK(h1 >= 2);
      CHECK(h1 <= static_cast<int>(k.s()));
      CHECK(full == static_cast<int>(k.s()) - h1);
      ++compared;
    }
  }
  CHECK(compared > 200);
}

TEST_CASE("h1 rank above 3 outside the theorem family") {
  // Subfields 3, 35, 105 ramify at 2, 3, 5, 7 and every generator is independent.
  CHECK(h1_rank_biquad(Int(3), Int(35)) == 4);
  CHECK(polya_rank_biquad(Int(3), Int(35)) == 0);
}

TEST_CASE("known factorizations") {
  const Factorization m = Factorization::from_factors({{Int(5), 1}});
  const Factorization n = Factorization::from_factors({{Int(3), 1}});
  const BiquadField k(m, n);
  CHECK(k.radicands() == std::array<Int, 3>{5, 3, 15});
  CHECK(polya_rank_biquad(k) == 0);
}
