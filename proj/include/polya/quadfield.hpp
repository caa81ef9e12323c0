#pragma once

#include <vector>

#include "polya/arith.hpp"
#include "polya/integer.hpp"
#include "polya/limits.hpp"
#include "polya/sqclass.hpp"

namespace polya {

/// Fundamental unit u = (x + y*sqrt(d))/2 > 1 of the maximal order of
/// Q(sqrt(d)), with x^2 - d*y^2 = 4*norm.
struct QuadUnit {
  Int d;
  Int x;
  Int y;
  int norm = 1;

  friend bool operator==(const QuadUnit&, const QuadUnit&) = default;
};

/// Real quadratic field Q(sqrt(d)) for square-free d > 1, carrying the
/// factorization of d so that large radicands are never refactored.
class QuadField {
 public:
  explicit QuadField(const Int& d, const Limits& limits = {});
  explicit QuadField(Factorization radicand);

  const Int& radicand() const { return factors_.value; }
  const Factorization& radicand_factors() const { return factors_; }
  const Int& discriminant() const { return disc_; }
  const std::vector<Int>& ramified() const { return ramified_; }

  /// [D] = [d] in Q*/(Q*)^2.
  SquareClass discriminant_class() const;

 private:
  Factorization factors_;
  Int disc_;
  std::vector<Int> ramified_;
};

Int discriminant(const Int& d);
std::vector<Int> ramified_primes(const Int& d, const Limits& limits = {});

/// Continued-fraction expansion of sqrt(d) (d = 2,3 mod 4) or (1+sqrt(d))/2
/// (d = 1 mod 4) over one period; convergents are accumulated in a product
/// tree of 2x2 matrices. EffortExceeded if the period exceeds cf_bound.
QuadUnit fundamental_unit(const Int& d, const Limits& limits = {});
QuadUnit fundamental_unit(const QuadField& field, const Limits& limits = {});

/// Period length of the expansion used by fundamental_unit.
std::uint64_t period_length(const QuadField& field, const Limits& limits = {});

/// N(u + 1) = x + 2. Throws NormMinusOne when u has norm -1.
Int norm_u_plus_one(const QuadUnit& u);

/// Hilbert symbol (a, b)_q at a finite prime q; a, b nonzero.
int hilbert_symbol(const Int& a, const Int& b, const Int& q);

/// How the norm of the fundamental unit and the class [N(u+1)] are found.
enum class UnitMethod {
  /// Genus first; the cycle walk only when genus theory leaves a choice.
  Auto,
  /// Explicit fundamental unit and x + 2.
  FullUnit,
  /// Half-period walk of the principal cycle with no convergents: the
  /// ambiguous element at the symmetry point gives both answers.
  CycleMidpoint,
  /// Local conditions only: [N(u+1)] is the norm of a totally positive
  /// ambiguous principal ideal, so it is a product of ramified primes that
  /// is a local norm everywhere and differs from [1] and [d]. May leave
  /// several options.
  Genus,
};

/// Norm of the fundamental unit and the possible values of the class a:
/// [N(u+1)] when the norm is +1, the identity otherwise.
struct UnitSignature {
  /// +1, -1, or 0 when undetermined.
  int norm = 0;
  /// Every class a can take given what was computed; one entry when known.
  std::vector<SquareClass> a_options;
  UnitMethod method = UnitMethod::Auto;

  bool determined() const { return norm != 0 && a_options.size() == 1; }
};

/// Genus-theoretic candidates for [N(u+1)] under the assumption norm = +1.
std::vector<SquareClass> genus_a_candidates(const QuadField& field);

/// True when -1 is a local norm from Q(sqrt(d)) at every place, which a unit
/// of norm -1 requires.
bool minus_one_is_local_norm(const QuadField& field);

/// Never throws EffortExceeded under Auto or Genus; other methods propagate it.
UnitSignature unit_signature(const QuadField& field, const Limits& limits = {},
                             UnitMethod method = UnitMethod::Auto);

/// [N(u+1)] if the fundamental unit has norm +1, identity otherwise.
/// EffortExceeded when the chosen method cannot pin it down.
SquareClass a_class(const Int& d, const Limits& limits = {},
                    UnitMethod method = UnitMethod::Auto);
SquareClass a_class(const QuadField& field, const Limits& limits = {},
                    UnitMethod method = UnitMethod::Auto);

/// subgroup_rank([D], a): 1 or 2.
int quad_h1_rank(const Int& d, const Limits& limits = {}, UnitMethod method = UnitMethod::Auto);
int quad_h1_rank(const QuadField& field, const Limits& limits = {},
                 UnitMethod method = UnitMethod::Auto);

/// Number of ramified primes minus quad_h1_rank; Po(Q(sqrt(d))) is
/// elementary abelian of this rank.
int quad_polya_rank(const Int& d, const Limits& limits = {},
                    UnitMethod method = UnitMethod::Auto);
int quad_polya_rank(const QuadField& field, const Limits& limits = {},
                    UnitMethod method = UnitMethod::Auto);

}  // namespace polya
