#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qu2 {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 2^n as an exact integer.
Int pow2(std::size_t n);

/// Floor division by 2^n: returns q with n = 2^e*q + r, 0 <= r < 2^e.
Int floor_div_pow2(const Int& n, std::size_t e, Int* remainder = nullptr);

std::string to_string(const Int& n);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Returns nullopt on malformed text or q == 0.
std::optional<Rational> parse_rational(std::string_view text);
std::optional<Int> parse_int(std::string_view text);

/// Fits in a signed 64-bit value.
bool fits_int64(const Int& n);

}  // namespace qu2
