#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace orbimod {

/// Note: compare against Rational(k), never a bare integer: boost's mixed
/// rational/integer == recurses under C++20 rewritten comparisons.
///
/// Exact rational used for every degree, Euler characteristic and critical
/// value. Denominators always divide the lcm of the cone orders, which is
/// capped on input so that 64-bit arithmetic cannot overflow.
using Rational = boost::rational<std::int64_t>;

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

/// Largest integer not exceeding q.
std::int64_t floor_int(const Rational& q);

/// "p/q" in lowest terms with q > 0. Integers are written "p/1".
std::string to_string(const Rational& q);

/// Accepts "p/q", "p" or "-p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

}  // namespace orbimod
