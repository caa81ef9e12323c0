#include "polya/biquad.hpp"

#include <algorithm>
#include <set>

#include "polya/errors.hpp"

namespace polya {

namespace {

Factorization checked_kernel(const Factorization& f, const char* what) {
  if (f.value <= 1) throw DomainError(std::string(what) + " must be > 1, got " + to_string(f.value));
  Factorization k = f.kernel();
  if (k.value == 1) {
    throw DomainError(std::string(what) + " = " + to_string(f.value) + " is a perfect square");
  }
  return k;
}

std::array<QuadField, 3> make_subfields(const Factorization& m, const Factorization& n) {
  const Factorization d1 = checked_kernel(m, "m");
  const Factorization d2 = checked_kernel(n, "n");
  const Factorization d3 = kernel_product(d1, d2);
  if (d3.value == 1) {
    throw DomainError("m*n = " + to_string(m.value * n.value) +
                      " is a perfect square; not a bi-quadratic field");
  }
  return {QuadField(d1), QuadField(d2), QuadField(d3)};
}

std::vector<int> ranks_over_combinations(const H1Generators& gens) {
  std::set<int> ranks;
  for (const auto& a1 : gens.units[0].a_options) {
    for (const auto& a2 : gens.units[1].a_options) {
      for (const auto& a3 : gens.units[2].a_options) {
        const SquareClass six[] = {gens.discriminant_classes[0], gens.discriminant_classes[1],
                                   gens.discriminant_classes[2], a1, a2, a3};
        ranks.insert(static_cast<int>(subgroup_rank(six)));
      }
    }
  }
  return {ranks.begin(), ranks.end()};
}

}  // namespace

BiquadField::BiquadField(const Int& m, const Int& n, const Limits& limits)
    : BiquadField(factor(m > 1 ? m : throw DomainError("m must be > 1, got " + to_string(m)),
                         limits),
                  factor(n > 1 ? n : throw DomainError("n must be > 1, got " + to_string(n)),
                         limits)) {}

BiquadField::BiquadField(const Factorization& m, const Factorization& n)
    : m_(m.value), n_(n.value), subfields_(make_subfields(m, n)) {
  std::set<Int> odd;
  unsigned ramified_at_two = 0;
  for (const auto& k : subfields_) {
    for (const auto& q : k.ramified()) {
      if (q == 2) {
        ++ramified_at_two;
      } else {
        odd.insert(q);
      }
    }
  }
  if (ramified_at_two == 1) {
    throw std::logic_error("2 ramifies in exactly one quadratic subfield");
  }
  if (ramified_at_two > 0) ramified_.push_back({Int(2), ramified_at_two == 3 ? 4u : 2u});
  for (const auto& q : odd) ramified_.push_back({q, 2});
}

std::array<Int, 3> BiquadField::radicands() const {
  return {subfields_[0].radicand(), subfields_[1].radicand(), subfields_[2].radicand()};
}

bool BiquadField::two_totally_ramified() const {
  return !ramified_.empty() && ramified_.front().prime == 2 && ramified_.front().e == 4;
}

std::array<Int, 3> subfields(const Int& m, const Int& n, const Limits& limits) {
  return BiquadField(m, n, limits).radicands();
}

std::vector<RamifiedPrime> ramified_primes_biquad(const Int& m, const Int& n,
                                                  const Limits& limits) {
  return BiquadField(m, n, limits).ramified();
}

H1Generators h1_generators(const BiquadField& field, const Limits& limits, UnitMethod method) {
  H1Generators gens;
  for (std::size_t i = 0; i < 3; ++i) {
    gens.discriminant_classes[i] = field.subfields()[i].discriminant_class();
  }
  if (method != UnitMethod::Auto) {
    for (std::size_t i = 0; i < 3; ++i) {
      gens.units[i] = unit_signature(field.subfields()[i], limits, method);
    }
    return gens;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    gens.units[i] = unit_signature(field.subfields()[i], limits, UnitMethod::Genus);
  }
  if (ranks_over_combinations(gens).size() == 1) return gens;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!gens.units[i].determined()) {
      gens.units[i] = unit_signature(field.subfields()[i], limits, UnitMethod::Auto);
    }
  }
  return gens;
}

int h1_rank_biquad(const BiquadField& field, const Limits& limits, UnitMethod method) {
  if (field.two_totally_ramified()) {
    throw TotallyRamifiedTwo("2 is totally ramified in Q(sqrt(" + to_string(field.m()) +
                             "), sqrt(" + to_string(field.n()) + "))");
  }
  const auto ranks = ranks_over_combinations(h1_generators(field, limits, method));
  if (ranks.size() != 1) {
    throw EffortExceeded("H1 rank of Q(sqrt(" + to_string(field.m()) + "), sqrt(" +
                         to_string(field.n()) + ")) undetermined within the configured bounds");
  }
  return ranks.front();
}

int h1_rank_biquad(const Int& m, const Int& n, const Limits& limits, UnitMethod method) {
  return h1_rank_biquad(BiquadField(m, n, limits), limits, method);
}

int polya_rank_biquad(const BiquadField& field, const Limits& limits, UnitMethod method) {
  return static_cast<int>(field.s()) - h1_rank_biquad(field, limits, method);
}

int polya_rank_biquad(const Int& m, const Int& n, const Limits& limits, UnitMethod method) {
  return polya_rank_biquad(BiquadField(m, n, limits), limits, method);
}

}  // namespace polya
