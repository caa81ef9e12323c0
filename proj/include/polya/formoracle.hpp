#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polya/integer.hpp"

namespace polya {

/// Coefficient type for the form oracle. Discriminants are capped at
/// kMaxOracleDiscriminant so compositions stay exact in 128-bit scratch.
using FormInt = std::int64_t;
inline constexpr FormInt kMaxOracleDiscriminant = FormInt{1} << 40;

/// Indefinite binary quadratic form a x^2 + b xy + c y^2.
struct QuadraticForm {
  FormInt a = 0;
  FormInt b = 0;
  FormInt c = 0;

  FormInt discriminant() const { return b * b - 4 * a * c; }
  std::string to_string() const;

  friend auto operator<=>(const QuadraticForm&, const QuadraticForm&) = default;
};

QuadraticForm principal_form(FormInt D);

/// 0 < b < sqrt(D) and |sqrt(D) - 2|a|| < b.
bool is_reduced(const QuadraticForm& f);

/// One step of the reduction operator (a,b,c) -> (c, b', a'); maps reduced
/// forms to reduced forms and walks a cycle.
QuadraticForm rho_step(const QuadraticForm& f);

/// Lexicographically smallest reduced form of the cycle of f; the canonical
/// label of its proper equivalence class.
QuadraticForm reduce_cycle(const QuadraticForm& f);

/// Gauss composition. Both forms must share a discriminant (DomainError).
QuadraticForm compose(const QuadraticForm& f, const QuadraticForm& g);

/// Form class group of a positive fundamental discriminant, which is the
/// narrow ideal class group. Class 0 is the principal class.
class NarrowClassGroup {
 public:
  explicit NarrowClassGroup(FormInt D);

  FormInt discriminant() const { return D_; }
  std::size_t size() const { return classes_.size(); }
  const std::vector<QuadraticForm>& classes() const { return classes_; }

  std::size_t index_of(const QuadraticForm& f) const;
  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const;
  static constexpr std::size_t identity() { return 0; }

 private:
  FormInt D_;
  std::vector<QuadraticForm> classes_;
  std::map<QuadraticForm, std::size_t> index_;
};

/// D must be a positive, non-square, fundamental discriminant (DomainError).
NarrowClassGroup narrow_class_group(FormInt D);

/// Label of the class of the prime ideal above a ramified prime q | D.
QuadraticForm ramified_prime_class(FormInt D, FormInt q);

/// Label of the class of (-1, b0, (D - b0^2)/4); the narrow-to-wide kernel.
QuadraticForm wide_quotient_kernel(FormInt D);

struct OracleReport {
  Int d;
  FormInt D = 0;
  std::size_t narrow_class_number = 0;
  std::size_t class_number = 0;
  /// Whether the kernel class is principal, i.e. the unit has norm -1.
  bool narrow_equals_wide = false;
  std::vector<FormInt> ramified;
  std::vector<QuadraticForm> ramified_classes;
  int rank = 0;
};

/// Rank of the subgroup of Cl = Cl+ / <kernel> generated by the classes of
/// the ramified primes, by closure enumeration.
OracleReport polya_oracle_report(const Int& d);
int polya_group_oracle(const Int& d);

}  // namespace polya
