// Exact arithmetic carriers (arbitrary-precision integers and rationals),
// the "num/den" wire format, and small combinatorial helpers used throughout.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace sodcorr {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Always "num/den" with the slash, in lowest terms, denominator positive.
std::string to_wire(const Rational& r);

// Accepts "num/den" or a bare integer. Throws std::invalid_argument on junk
// or a zero denominator.
Rational rational_from_wire(const std::string& text);

// C(n, k) with exact integers; 0 when k > n.
Int binomial(std::uint64_t n, std::uint64_t k);

// 2^e for any signed e.
Rational pow2(std::int64_t e);

Int int_pow(Int base, std::uint64_t e);
Rational rat_pow(Rational base, std::uint64_t e);

}  // namespace sodcorr
