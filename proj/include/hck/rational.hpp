#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hck {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" exactly. Decimal points and exponents are
/// rejected: every numeric input stays exact.
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals, e.g. "1/2,0,0".
std::vector<Rational> parse_rational_list(std::string_view text);

std::int64_t floor_to_int(const Rational& x);
std::int64_t ceil_to_int(const Rational& x);

bool is_integral(const Rational& x);

std::string to_string(const Rational& x);
std::string to_string(const std::vector<Rational>& xs);

}  // namespace hck
