#include "vicsek/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace vicsek {

BigRat rational_of_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_of_double: non-finite");
    if (x == 0.0) return BigRat(0);
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    // 53 doublings make the mantissa integral.
    long long mi = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    BigRat r(mi);
    if (exp >= 0) {
        r *= BigRat(BigInt(1) << exp);
    } else {
        r /= BigRat(BigInt(1) << (-exp));
    }
    return r;
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// Smallest-denominator rational in [lo, hi], both > 0.
BigRat simplest_positive(BigRat lo, BigRat hi) {
    // Continued-fraction descent: integer part, then recurse on reciprocals.
    BigInt fl = floor_div(numerator(lo), denominator(lo));
    if (BigRat(fl) >= lo) return BigRat(fl);          // lo is an integer
    if (BigRat(fl + 1) <= hi) return BigRat(fl + 1);  // an integer inside
    BigRat sub = simplest_positive(1 / (hi - BigRat(fl)), 1 / (lo - BigRat(fl)));
    return BigRat(fl) + 1 / sub;
}

}  // namespace

BigRat simplest_rational_in(const BigRat& lo, const BigRat& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
    if (lo <= 0 && hi >= 0) return BigRat(0);
    if (lo > 0) return simplest_positive(lo, hi);
    return -simplest_positive(-hi, -lo);
}

double round15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

std::string format15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::optional<long long> checked_pow_ll(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<long long>::max() / base) return std::nullopt;
        r *= base;
    }
    return r;
}

}  // namespace vicsek
