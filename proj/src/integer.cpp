#include "polya/integer.hpp"

#include <cctype>

#include "polya/errors.hpp"

namespace polya {

Int parse_int(std::string_view text) {
  std::string s(text);
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw DomainError("not an integer: '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw DomainError("not an integer: '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

std::string to_string(const Int& v) { return v.get_str(10); }

std::optional<std::int64_t> to_int64(const Int& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) return std::nullopt;
  return static_cast<std::int64_t>(v.get_si());
}

std::optional<std::uint64_t> to_uint64(const Int& v) {
  if (sgn(v) < 0 || !mpz_fits_ulong_p(v.get_mpz_t())) return std::nullopt;
  return static_cast<std::uint64_t>(v.get_ui());
}

Int from_uint64(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

Int isqrt(const Int& n) {
  if (sgn(n) < 0) throw DomainError("isqrt of a negative number");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int power(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace polya
