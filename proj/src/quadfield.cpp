#include "polya/quadfield.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "polya/errors.hpp"

namespace polya {

namespace {

// Radicands below this bound run the cycle walks in 64-bit arithmetic:
// P, Q < 2*sqrt(d) < 2^32 and d - P^2 stays in range.
const Int kMachineWalkLimit = Int(1) << 62;
constexpr std::size_t kMaxGenusPrimes = 24;

struct Mat2 {
  Int a, b, c, d;
};

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

// Ordered product of [[q,1],[1,0]] over a stream of partial quotients,
// merged as a balanced tree so that long periods stay quasi-linear.
class QuotientProduct {
 public:
  void push(Int q) {
    Mat2 m{std::move(q), 1, 1, 0};
    unsigned level = 0;
    while (!stack_.empty() && stack_.back().second == level) {
      m = stack_.back().first * m;
      stack_.pop_back();
      ++level;
    }
    stack_.emplace_back(std::move(m), level);
  }

  Mat2 result() const {
    Mat2 r{1, 0, 0, 1};
    for (const auto& [m, level] : stack_) r = r * m;
    return r;
  }

 private:
  std::vector<std::pair<Mat2, unsigned>> stack_;
};

template <class T>
T narrow(const Int& v);

template <>
std::int64_t narrow<std::int64_t>(const Int& v) {
  return *to_int64(v);
}

template <>
Int narrow<Int>(const Int& v) {
  return v;
}

Int widen(std::int64_t v) { return Int(static_cast<long>(v)); }
const Int& widen(const Int& v) { return v; }

// Complete quotients (P + sqrt(d))/Q of omega = (P0 + sqrt(d))/Q0.
template <class T>
struct CycleState {
  T d, s, P0, Q0, P, Q;

  CycleState(const Int& radicand, bool one_mod_four)
      : d(narrow<T>(radicand)),
        s(narrow<T>(isqrt(radicand))),
        P0(one_mod_four ? 1 : 0),
        Q0(one_mod_four ? 2 : 1),
        P(P0),
        Q(Q0) {}

  // Returns the partial quotient and advances to the next complete quotient.
  T step() {
    T a = (P + s) / Q;
    T next_p = a * Q - P;
    T next_q = (d - next_p * next_p) / Q;
    P = std::move(next_p);
    Q = std::move(next_q);
    return a;
  }
};

struct PeriodResult {
  Mat2 convergents;
  std::uint64_t length = 0;
};

template <class T>
PeriodResult expand_period(const Int& d, bool one_mod_four, const Limits& limits,
                           bool accumulate) {
  CycleState<T> st(d, one_mod_four);
  QuotientProduct product;
  for (std::uint64_t i = 0;; ++i) {
    if (i >= limits.cf_bound) {
      throw EffortExceeded("continued-fraction period of sqrt(" + to_string(d) +
                           ") exceeds " + std::to_string(limits.cf_bound) + " steps");
    }
    T a = st.step();
    if (accumulate) product.push(Int(widen(a)));
    if (st.Q == st.Q0) return {accumulate ? product.result() : Mat2{}, i + 1};
  }
}

struct Midpoint {
  bool even_period = false;
  Int q_mid;          // Q_h at the symmetry point
  std::uint64_t h = 0;
};

// First symmetry point of the principal cycle: P_h = P_{h+1} (period 2h) or
// Q_h = Q_{h+1} (period 2h+1).
template <class T>
Midpoint walk_to_midpoint(const Int& d, bool one_mod_four, const Limits& limits) {
  CycleState<T> st(d, one_mod_four);
  for (std::uint64_t i = 0;; ++i) {
    if (i >= limits.cf_bound) {
      throw EffortExceeded("principal cycle of sqrt(" + to_string(d) + ") exceeds " +
                           std::to_string(limits.cf_bound) + " steps before its midpoint");
    }
    const T p = st.P, q = st.Q;
    st.step();
    if (i >= 1 && st.P == p) return {true, Int(widen(q)), i};
    if (st.Q == q) return {false, Int(widen(q)), i};
  }
}

bool one_mod_four(const Int& d) { return mod(d, 4) == 1; }

SquareClass class_of(const Factorization& f) {
  SquareClass c;
  for (const auto& pp : f.factors) {
    if (pp.exponent % 2) c.kernel.push_back(pp.prime);
  }
  return c;
}

UnitSignature midpoint_signature(const QuadField& field, const Limits& limits) {
  const Int& d = field.radicand();
  const bool omf = one_mod_four(d);
  const Midpoint mid = d < kMachineWalkLimit
                           ? walk_to_midpoint<std::int64_t>(d, omf, limits)
                           : walk_to_midpoint<Int>(d, omf, limits);
  UnitSignature sig;
  sig.method = UnitMethod::CycleMidpoint;
  if (!mid.even_period) {
    sig.norm = -1;
    sig.a_options = {SquareClass::identity()};
    return sig;
  }
  // The ambiguous element alpha at the midpoint has norm (-1)^h * Q_h/Q0 and
  // u = alpha^2 / |N(alpha)|, so [N(u+1)] = [N(alpha)] or [-d N(alpha)].
  const Int q0 = omf ? 2 : 1;
  if (mod(mid.q_mid, q0) != 0) {
    throw std::logic_error("midpoint Q not divisible by Q0 for d = " + to_string(d));
  }
  SquareClass a = squarefree_kernel(mid.q_mid / q0, limits);
  if (mid.h % 2 == 1) a = mul(a, field.discriminant_class());
  sig.norm = 1;
  sig.a_options = {a};
  return sig;
}

UnitSignature full_unit_signature(const QuadField& field, const Limits& limits) {
  const QuadUnit u = fundamental_unit(field, limits);
  UnitSignature sig;
  sig.method = UnitMethod::FullUnit;
  sig.norm = u.norm;
  if (u.norm == -1) {
    sig.a_options = {SquareClass::identity()};
    return sig;
  }
  auto a = square_class_supported_on(norm_u_plus_one(u), field.ramified());
  if (!a) {
    throw std::logic_error("N(u+1) is not supported on ramified primes for d = " +
                           to_string(field.radicand()));
  }
  sig.a_options = {*a};
  return sig;
}

std::vector<Int> local_test_primes(const QuadField& field) {
  std::vector<Int> primes = field.ramified();
  if (std::find(primes.begin(), primes.end(), Int(2)) == primes.end()) {
    primes.insert(primes.begin(), Int(2));
  }
  return primes;
}

UnitSignature genus_signature(const QuadField& field) {
  UnitSignature sig;
  sig.method = UnitMethod::Genus;
  const auto candidates = genus_a_candidates(field);
  const bool minus_one = minus_one_is_local_norm(field);
  if (candidates.empty()) {
    if (!minus_one) {
      throw std::logic_error("no admissible unit signature for d = " +
                             to_string(field.radicand()));
    }
    sig.norm = -1;
    sig.a_options = {SquareClass::identity()};
  } else if (!minus_one) {
    sig.norm = 1;
    sig.a_options = candidates;
  } else {
    sig.norm = 0;
    sig.a_options.push_back(SquareClass::identity());
    sig.a_options.insert(sig.a_options.end(), candidates.begin(), candidates.end());
  }
  return sig;
}

std::vector<int> ranks_over_options(const QuadField& field, const UnitSignature& sig) {
  std::vector<int> ranks;
  for (const auto& a : sig.a_options) {
    const SquareClass gens[] = {field.discriminant_class(), a};
    ranks.push_back(static_cast<int>(subgroup_rank(gens)));
  }
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  return ranks;
}

}  // namespace

QuadField::QuadField(const Int& d, const Limits& limits)
    : QuadField(d > 1 ? factor(d, limits)
                      : throw DomainError("radicand must be > 1, got " + to_string(d))) {}

QuadField::QuadField(Factorization radicand) : factors_(std::move(radicand)) {
  const Int& d = factors_.value;
  if (d <= 1) throw DomainError("radicand must be > 1, got " + to_string(d));
  if (!factors_.is_squarefree()) {
    throw DomainError("radicand must be square-free, got " + to_string(d));
  }
  disc_ = one_mod_four(d) ? d : 4 * d;
  ramified_ = factors_.primes();
  if (!one_mod_four(d) && (ramified_.empty() || ramified_.front() != 2)) {
    ramified_.insert(ramified_.begin(), Int(2));
  }
}

SquareClass QuadField::discriminant_class() const { return class_of(factors_); }

Int discriminant(const Int& d) { return QuadField(d).discriminant(); }

std::vector<Int> ramified_primes(const Int& d, const Limits& limits) {
  return QuadField(d, limits).ramified();
}

QuadUnit fundamental_unit(const Int& d, const Limits& limits) {
  return fundamental_unit(QuadField(d, limits), limits);
}

QuadUnit fundamental_unit(const QuadField& field, const Limits& limits) {
  const Int& d = field.radicand();
  const bool omf = one_mod_four(d);
  const PeriodResult period = d < kMachineWalkLimit
                                  ? expand_period<std::int64_t>(d, omf, limits, true)
                                  : expand_period<Int>(d, omf, limits, true);
  const Int& a_last = period.convergents.a;  // A_{l-1}
  const Int& b_last = period.convergents.c;  // B_{l-1}
  QuadUnit u;
  u.d = d;
  u.norm = period.length % 2 == 0 ? 1 : -1;
  if (omf) {
    u.x = 2 * a_last - b_last;
    u.y = b_last;
  } else {
    u.x = 2 * a_last;
    u.y = 2 * b_last;
  }
  if (u.x * u.x - d * u.y * u.y != 4 * u.norm) {
    throw std::logic_error("Pell identity failed for d = " + to_string(d));
  }
  return u;
}

std::uint64_t period_length(const QuadField& field, const Limits& limits) {
  const Int& d = field.radicand();
  const bool omf = one_mod_four(d);
  return d < kMachineWalkLimit ? expand_period<std::int64_t>(d, omf, limits, false).length
                               : expand_period<Int>(d, omf, limits, false).length;
}

Int norm_u_plus_one(const QuadUnit& u) {
  if (u.norm != 1) {
    throw NormMinusOne("fundamental unit of Q(sqrt(" + to_string(u.d) + ")) has norm -1");
  }
  return u.x + 2;
}

int hilbert_symbol(const Int& a, const Int& b, const Int& q) {
  if (a == 0 || b == 0) throw DomainError("hilbert_symbol of zero");
  auto split = [&q](Int v) {
    unsigned long e = 0;
    while (mpz_divisible_p(v.get_mpz_t(), q.get_mpz_t())) {
      v /= q;
      ++e;
    }
    return std::pair{e, v};
  };
  const auto [alpha, u] = split(a);
  const auto [beta, v] = split(b);
  if (q == 2) {
    auto eps = [](const Int& x) { return mod(x, 4) == 3 ? 1 : 0; };
    auto omega = [](const Int& x) {
      const Int r = mod(x, 8);
      return (r == 3 || r == 5) ? 1 : 0;
    };
    const unsigned long e = eps(u) * eps(v) + (alpha % 2) * omega(v) + (beta % 2) * omega(u);
    return e % 2 ? -1 : 1;
  }
  int s = 1;
  if ((alpha % 2) && (beta % 2) && mod(q, 4) == 3) s = -s;
  if (beta % 2) s *= jacobi(u, q);
  if (alpha % 2) s *= jacobi(v, q);
  return s;
}

std::vector<SquareClass> genus_a_candidates(const QuadField& field) {
  const auto& ramified = field.ramified();
  if (ramified.size() > kMaxGenusPrimes) {
    throw EffortExceeded("too many ramified primes for genus enumeration");
  }
  const auto test_primes = local_test_primes(field);
  const SquareClass d_class = field.discriminant_class();
  const Int& d = field.radicand();
  std::vector<SquareClass> out;
  const std::uint64_t subsets = std::uint64_t{1} << ramified.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    SquareClass c;
    Int n = 1;
    for (std::size_t i = 0; i < ramified.size(); ++i) {
      if (mask >> i & 1) {
        c.kernel.push_back(ramified[i]);
        n *= ramified[i];
      }
    }
    if (c == d_class) continue;
    const bool local_norm = std::all_of(test_primes.begin(), test_primes.end(),
                                        [&](const Int& q) { return hilbert_symbol(n, d, q) == 1; });
    if (local_norm) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool minus_one_is_local_norm(const QuadField& field) {
  const auto test_primes = local_test_primes(field);
  return std::all_of(test_primes.begin(), test_primes.end(), [&](const Int& q) {
    return hilbert_symbol(Int(-1), field.radicand(), q) == 1;
  });
}

UnitSignature unit_signature(const QuadField& field, const Limits& limits, UnitMethod method) {
  switch (method) {
    case UnitMethod::FullUnit:
      return full_unit_signature(field, limits);
    case UnitMethod::CycleMidpoint:
      return midpoint_signature(field, limits);
    case UnitMethod::Genus:
      return genus_signature(field);
    case UnitMethod::Auto:
      break;
  }
  UnitSignature genus = genus_signature(field);
  if (genus.determined()) return genus;
  try {
    return midpoint_signature(field, limits);
  } catch (const EffortExceeded&) {
    return genus;
  }
}

SquareClass a_class(const Int& d, const Limits& limits, UnitMethod method) {
  return a_class(QuadField(d, limits), limits, method);
}

SquareClass a_class(const QuadField& field, const Limits& limits, UnitMethod method) {
  const UnitSignature sig = unit_signature(field, limits, method);
  if (!sig.determined()) {
    throw EffortExceeded("a-class of Q(sqrt(" + to_string(field.radicand()) +
                         ")) undetermined within the configured bounds");
  }
  return sig.a_options.front();
}

int quad_h1_rank(const Int& d, const Limits& limits, UnitMethod method) {
  return quad_h1_rank(QuadField(d, limits), limits, method);
}

int quad_h1_rank(const QuadField& field, const Limits& limits, UnitMethod method) {
  const auto ranks = ranks_over_options(field, unit_signature(field, limits, method));
  if (ranks.size() != 1) {
    throw EffortExceeded("H1 rank of Q(sqrt(" + to_string(field.radicand()) +
                         ")) undetermined within the configured bounds");
  }
  return ranks.front();
}

int quad_polya_rank(const Int& d, const Limits& limits, UnitMethod method) {
  return quad_polya_rank(QuadField(d, limits), limits, method);
}

int quad_polya_rank(const QuadField& field, const Limits& limits, UnitMethod method) {
  return static_cast<int>(field.ramified().size()) - quad_h1_rank(field, limits, method);
}

}  // namespace polya
