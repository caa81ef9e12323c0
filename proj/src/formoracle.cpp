#include "polya/formoracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "polya/arith.hpp"
#include "polya/errors.hpp"
#include "polya/quadfield.hpp"

namespace polya {

namespace {

using i128 = __int128;

constexpr int kMaxReductionSteps = 1'000'000;

FormInt isqrt_floor(FormInt n) {
  auto r = static_cast<FormInt>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

FormInt floor_mod(FormInt a, FormInt m) {
  FormInt r = a % m;
  return r < 0 ? r + m : r;
}

// (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0.
std::tuple<FormInt, FormInt, FormInt> ext_gcd(FormInt a, FormInt b) {
  FormInt old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    const FormInt q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_x, x) = std::pair{x, old_x - q * x};
    std::tie(old_y, y) = std::pair{y, old_y - q * y};
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

void check_discriminant(FormInt D) {
  if (D <= 0) throw DomainError("form discriminant must be positive");
  if (D > kMaxOracleDiscriminant) {
    throw DomainError("discriminant " + std::to_string(D) + " exceeds the oracle range");
  }
  const FormInt s = isqrt_floor(D);
  if (s * s == D) throw DomainError("discriminant " + std::to_string(D) + " is a perfect square");
  if (floor_mod(D, 4) != 0 && floor_mod(D, 4) != 1) {
    throw DomainError("discriminant " + std::to_string(D) + " is not 0 or 1 mod 4");
  }
}

void check_fundamental(FormInt D) {
  check_discriminant(D);
  FormInt d = D;
  if (D % 4 == 0) {
    d = D / 4;
    if (floor_mod(d, 4) != 2 && floor_mod(d, 4) != 3) {
      throw DomainError(std::to_string(D) + " is not a fundamental discriminant");
    }
  }
  if (!is_squarefree_u64(static_cast<std::uint64_t>(d))) {
    throw DomainError(std::to_string(D) + " is not a fundamental discriminant");
  }
}

// A form of the same proper class with a > 0 (signs of a alternate along a
// reduced cycle).
QuadraticForm positive_representative(const QuadraticForm& f) {
  QuadraticForm g = f;
  for (int i = 0; !is_reduced(g); ++i) {
    if (i > kMaxReductionSteps) throw std::logic_error("form reduction did not terminate");
    g = rho_step(g);
  }
  if (g.a < 0) g = rho_step(g);
  return g;
}

}  // namespace

std::string QuadraticForm::to_string() const {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

QuadraticForm principal_form(FormInt D) {
  check_discriminant(D);
  return D % 4 == 0 ? QuadraticForm{1, 0, -D / 4} : QuadraticForm{1, 1, (1 - D) / 4};
}

bool is_reduced(const QuadraticForm& f) {
  const FormInt s = isqrt_floor(f.discriminant());
  const FormInt two_a = 2 * (f.a < 0 ? -f.a : f.a);
  return f.b >= 1 && f.b <= s && two_a + f.b > s && two_a - f.b <= s;
}

QuadraticForm rho_step(const QuadraticForm& f) {
  const FormInt D = f.discriminant();
  const FormInt s = isqrt_floor(D);
  const FormInt abs_c = f.c < 0 ? -f.c : f.c;
  if (abs_c == 0) throw DomainError("form with c = 0 has a square discriminant");
  const FormInt m = 2 * abs_c;
  FormInt b = floor_mod(-f.b, m);
  if (abs_c > s) {
    if (b > abs_c) b -= m;
  } else {
    b += ((s - b) / m) * m;  // largest representative <= s
  }
  const FormInt num = b * b - D;
  if (num % (4 * f.c) != 0) throw std::logic_error("rho_step: inexact division");
  return {f.c, b, num / (4 * f.c)};
}

QuadraticForm reduce_cycle(const QuadraticForm& f) {
  check_discriminant(f.discriminant());
  QuadraticForm g = f;
  for (int i = 0; !is_reduced(g); ++i) {
    if (i > kMaxReductionSteps) throw std::logic_error("form reduction did not terminate");
    g = rho_step(g);
  }
  QuadraticForm best = g;
  for (QuadraticForm h = rho_step(g); h != g; h = rho_step(h)) best = std::min(best, h);
  return best;
}

QuadraticForm compose(const QuadraticForm& f, const QuadraticForm& g) {
  const FormInt D = f.discriminant();
  if (g.discriminant() != D) {
    throw DomainError("compose: discriminants differ (" + std::to_string(D) + " vs " +
                      std::to_string(g.discriminant()) + ")");
  }
  QuadraticForm f1 = positive_representative(f);
  QuadraticForm f2 = positive_representative(g);
  if (f1.a > f2.a) std::swap(f1, f2);
  const FormInt s = (f1.b + f2.b) / 2;
  const FormInt n = f2.b - s;

  FormInt y1 = 0, d = f1.a;
  if (f2.a % f1.a != 0) {
    auto [g1, u, v] = ext_gcd(f2.a, f1.a);
    (void)v;
    d = g1;
    y1 = u;
  }
  FormInt x2 = 0, y2 = -1, d1 = d;
  if (s % d != 0) {
    auto [g2, xs, yd] = ext_gcd(s, d);
    d1 = g2;
    x2 = xs;
    y2 = -yd;
  }
  const FormInt v1 = f1.a / d1;
  const FormInt v2 = f2.a / d1;
  const i128 r_raw = (static_cast<i128>(y1) * y2 % v1 * n - static_cast<i128>(x2) * f2.c) % v1;
  FormInt r = static_cast<FormInt>(r_raw);
  if (r < 0) r += v1;
  const i128 b3 = static_cast<i128>(f2.b) + 2 * static_cast<i128>(v2) * r;
  const i128 a3 = static_cast<i128>(v1) * v2;
  const i128 num = b3 * b3 - D;
  if (num % (4 * a3) != 0) throw std::logic_error("compose: inexact division");
  const i128 c3 = num / (4 * a3);
  QuadraticForm h{static_cast<FormInt>(a3), static_cast<FormInt>(b3), static_cast<FormInt>(c3)};
  if (h.a != a3 || h.b != b3 || h.c != c3) throw std::logic_error("compose: overflow");
  return h;
}

NarrowClassGroup::NarrowClassGroup(FormInt D) : D_(D) {
  check_fundamental(D);
  const FormInt s = isqrt_floor(D);
  std::set<QuadraticForm> reduced;
  for (FormInt b = (D % 2 == 0) ? 2 : 1; b <= s; b += 2) {
    const FormInt n = (D - b * b) / 4;  // = -a*c > 0
    for (FormInt a0 = 1; a0 * a0 <= n; ++a0) {
      if (n % a0) continue;
      for (FormInt abs_a : {a0, n / a0}) {
        for (FormInt a : {abs_a, -abs_a}) {
          const QuadraticForm f{a, b, -n / a};
          if (std::gcd(std::gcd(f.a, f.b), f.c) != 1) continue;
          if (is_reduced(f)) reduced.insert(f);
        }
      }
    }
  }
  std::set<QuadraticForm> seen;
  std::vector<QuadraticForm> labels;
  for (const auto& f : reduced) {
    if (seen.count(f)) continue;
    QuadraticForm best = f;
    QuadraticForm g = f;
    do {
      seen.insert(g);
      best = std::min(best, g);
      g = rho_step(g);
    } while (g != f);
    labels.push_back(best);
  }
  const QuadraticForm principal = reduce_cycle(principal_form(D));
  std::sort(labels.begin(), labels.end());
  auto it = std::find(labels.begin(), labels.end(), principal);
  if (it == labels.end()) throw std::logic_error("principal cycle missing");
  std::rotate(labels.begin(), it, it + 1);
  classes_ = std::move(labels);
  for (std::size_t i = 0; i < classes_.size(); ++i) index_[classes_[i]] = i;
}

std::size_t NarrowClassGroup::index_of(const QuadraticForm& f) const {
  if (f.discriminant() != D_) throw DomainError("form has the wrong discriminant");
  auto it = index_.find(reduce_cycle(f));
  if (it == index_.end()) throw std::logic_error("cycle label not in class list");
  return it->second;
}

std::size_t NarrowClassGroup::multiply(std::size_t i, std::size_t j) const {
  return index_of(compose(classes_.at(i), classes_.at(j)));
}

std::size_t NarrowClassGroup::inverse(std::size_t i) const {
  const auto& f = classes_.at(i);
  return index_of({f.a, -f.b, f.c});
}

NarrowClassGroup narrow_class_group(FormInt D) { return NarrowClassGroup(D); }

QuadraticForm ramified_prime_class(FormInt D, FormInt q) {
  check_discriminant(D);
  if (q < 2 || D % q != 0) {
    throw DomainError(std::to_string(q) + " does not divide " + std::to_string(D));
  }
  for (FormInt b = D % 2; b < 2 * q; b += 2) {
    const FormInt num = b * b - D;
    if (num % (4 * q) == 0) return reduce_cycle({q, b, num / (4 * q)});
  }
  throw std::logic_error("no square root of D modulo 4q");
}

QuadraticForm wide_quotient_kernel(FormInt D) {
  check_discriminant(D);
  const FormInt b0 = D % 2;
  return reduce_cycle({-1, b0, (D - b0 * b0) / 4});
}

OracleReport polya_oracle_report(const Int& d) {
  const QuadField field(d);
  const auto D = to_int64(field.discriminant());
  if (!D || *D > kMaxOracleDiscriminant) {
    throw DomainError("discriminant of " + to_string(d) + " exceeds the oracle range");
  }
  const NarrowClassGroup group(*D);
  const std::size_t kernel = group.index_of(wide_quotient_kernel(*D));
  auto coset = [&](std::size_t x) { return std::min(x, group.multiply(x, kernel)); };

  OracleReport report;
  report.d = d;
  report.D = *D;
  report.narrow_class_number = group.size();
  report.narrow_equals_wide = kernel == NarrowClassGroup::identity();
  report.class_number = report.narrow_equals_wide ? group.size() : group.size() / 2;

  std::set<std::size_t> closure{coset(NarrowClassGroup::identity())};
  for (const auto& q : field.ramified()) {
    const FormInt qi = *to_int64(q);
    const QuadraticForm label = ramified_prime_class(*D, qi);
    const std::size_t g = group.index_of(label);
    if (coset(group.multiply(g, g)) != coset(NarrowClassGroup::identity())) {
      throw std::logic_error("ramified class is not 2-torsion in Cl");
    }
    report.ramified.push_back(qi);
    report.ramified_classes.push_back(label);
    std::set<std::size_t> next = closure;
    for (std::size_t x : closure) next.insert(coset(group.multiply(x, g)));
    closure = std::move(next);
  }
  const std::size_t order = closure.size();
  if ((order & (order - 1)) != 0) throw std::logic_error("Polya group order is not a 2-power");
  while ((std::size_t{1} << report.rank) < order) ++report.rank;
  return report;
}

int polya_group_oracle(const Int& d) { return polya_oracle_report(d).rank; }

}  // namespace polya
