#pragma once

// Exact rational scalar used throughout the engine. Values are always kept
// in canonical form (reduced, positive denominator) so that == is structural.

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace cake {

using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

/// Parses "p/q", an integer, or a finite decimal such as "2.5" or "-0.125".
/// Throws std::invalid_argument on anything else (including q == 0).
Rat parse_rat(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

/// Fixed-point rendering with `digits` decimals, rounded half away from zero.
/// Display only; never feed the result back into computations.
std::string to_decimal(const Rat& r, int digits);

inline Rat rat(long long num, long long den = 1) { return Rat(num) / Rat(den); }

}  // namespace cake
