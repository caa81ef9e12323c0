#pragma once

#include <array>
#include <vector>

#include "polya/arith.hpp"
#include "polya/integer.hpp"
#include "polya/limits.hpp"
#include "polya/quadfield.hpp"
#include "polya/sqclass.hpp"

namespace polya {

struct RamifiedPrime {
  Int prime;
  unsigned e = 2;

  friend bool operator==(const RamifiedPrime&, const RamifiedPrime&) = default;
};

/// Real bi-quadratic field Q(sqrt(m), sqrt(n)) with its three quadratic
/// subfields Q(sqrt(d1)), Q(sqrt(d2)), Q(sqrt(d3)), d3 = kernel(d1*d2).
class BiquadField {
 public:
  BiquadField(const Int& m, const Int& n, const Limits& limits = {});
  /// For radicands whose factorizations are already known (any exponents).
  BiquadField(const Factorization& m, const Factorization& n);

  const Int& m() const { return m_; }
  const Int& n() const { return n_; }
  const std::array<QuadField, 3>& subfields() const { return subfields_; }
  std::array<Int, 3> radicands() const;
  const std::vector<RamifiedPrime>& ramified() const { return ramified_; }
  std::size_t s() const { return ramified_.size(); }
  bool two_totally_ramified() const;

 private:
  Int m_;
  Int n_;
  std::array<QuadField, 3> subfields_;
  std::vector<RamifiedPrime> ramified_;
};

/// (d1, d2, d3). DomainError unless m, n, mn are all non-squares > 1.
std::array<Int, 3> subfields(const Int& m, const Int& n, const Limits& limits = {});

/// Ramified primes in increasing order with their ramification indices.
std::vector<RamifiedPrime> ramified_primes_biquad(const Int& m, const Int& n,
                                                  const Limits& limits = {});

/// The six classes [D(d_i)] and a(d_i), the a-classes listed as every option
/// the chosen method leaves open.
struct H1Generators {
  std::array<SquareClass, 3> discriminant_classes;
  std::array<UnitSignature, 3> units;
};

H1Generators h1_generators(const BiquadField& field, const Limits& limits = {},
                           UnitMethod method = UnitMethod::Auto);

/// Rank of <[D(d_i)], a(d_i)>. TotallyRamifiedTwo when e = 4 at 2;
/// EffortExceeded when the admissible unit signatures disagree on the rank.
int h1_rank_biquad(const BiquadField& field, const Limits& limits = {},
                   UnitMethod method = UnitMethod::Auto);
int h1_rank_biquad(const Int& m, const Int& n, const Limits& limits = {},
                   UnitMethod method = UnitMethod::Auto);

/// s - h1_rank_biquad; Po(K) is elementary abelian of this rank.
int polya_rank_biquad(const BiquadField& field, const Limits& limits = {},
                      UnitMethod method = UnitMethod::Auto);
int polya_rank_biquad(const Int& m, const Int& n, const Limits& limits = {},
                      UnitMethod method = UnitMethod::Auto);

}  // namespace polya
