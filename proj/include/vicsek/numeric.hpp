#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace vicsek {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline double to_double(const BigRat& r) { return r.convert_to<double>(); }

/// Exact rational value of a finite double (every finite double is m*2^e).
BigRat rational_of_double(double x);

/// The rational with the smallest denominator inside the closed interval
/// [lo, hi] (Stern-Brocot walk). Requires lo <= hi.
BigRat simplest_rational_in(const BigRat& lo, const BigRat& hi);

/// Rounds through 15 significant decimal digits; used for stable output.
double round15(double x);

/// Formats with 15 significant digits ("%.15g").
std::string format15(double x);

/// base^exp if it fits in a signed 64-bit integer, nullopt otherwise.
std::optional<long long> checked_pow_ll(long long base, int exp);

}  // namespace vicsek
