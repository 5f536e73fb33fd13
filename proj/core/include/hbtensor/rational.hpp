#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hbtensor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n! as an arbitrary precision integer. Results are memoized per thread.
const BigInt& factorial(unsigned n);

/// r! / prod(parts!) where the parts sum to r.
BigInt multinomial(unsigned r, const std::vector<unsigned>& parts);

bool is_integer(const Rational& q);

/// Integral value of q; throws Error(NotNatural) if q is not a non-negative
/// integer that fits in 32 bits.
unsigned to_natural(const Rational& q);

double to_double(const Rational& q);

/// "p" for integers and "p/q" otherwise.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", and decimal forms such as "-1.25" or "3e-2".
/// Throws Error(Parse) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace hbtensor
