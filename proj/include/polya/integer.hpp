#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace polya {

/// Arbitrary-precision signed integer used for every rational integer.
using Int = mpz_class;

/// Parses a base-10 integer with optional leading sign. Throws DomainError.
Int parse_int(std::string_view text);

std::string to_string(const Int& v);

std::optional<std::int64_t> to_int64(const Int& v);
std::optional<std::uint64_t> to_uint64(const Int& v);
Int from_uint64(std::uint64_t v);

/// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);
bool is_perfect_square(const Int& n);
Int power(const Int& base, unsigned long exponent);

/// Non-negative residue of a modulo m (m > 0).
Int mod(const Int& a, const Int& m);

}  // namespace polya
