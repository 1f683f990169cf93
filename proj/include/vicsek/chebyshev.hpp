#pragma once

#include "vicsek/numeric.hpp"

#include <utility>
#include <vector>

namespace vicsek {

/// Dense integer-coefficient polynomial, coeffs[k] multiplies x^k.
/// Normalized: the leading coefficient is nonzero unless the polynomial is
/// zero (empty vector).
struct IntPoly {
    std::vector<BigInt> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> c) : coeffs(std::move(c)) { normalize(); }

    static IntPoly constant(const BigInt& c);
    static IntPoly x();

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    void normalize();

    double eval(double x) const;
    BigRat eval(const BigRat& x) const;
    /// Sign of the value at p/q (q > 0), computed exactly: -1, 0 or +1.
    int sign_at(const BigInt& p, const BigInt& q) const;
    int sign_at(const BigRat& x) const;

    IntPoly derivative() const;
    /// p(a + b*y) as a polynomial in y.
    IntPoly compose_linear(const BigInt& a, const BigInt& b) const;

    bool operator==(const IntPoly&) const = default;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const BigInt& c, const IntPoly& a);

// Chebyshev polynomials via the three-term recurrences
//   T_k = 2t T_{k-1} - T_{k-2},  T_0 = 1, T_1 = t
//   U_k = 2t U_{k-1} - U_{k-2},  U_0 = 1, U_1 = 2t
// valid on all of R, not just [-1,1].

double cheb_t(int k, double t);
double cheb_u(int k, double t);

/// (P_j(t), Q_j(t)) with P_j = 2T_j - U_j and Q_j = U_{j-1} for j >= 1,
/// Q_0 = 0 by convention.
std::pair<double, double> cheb_pq(int j, double t);

enum class ChebKind { First, Second };

IntPoly cheb_coeffs(ChebKind kind, int k);

/// Exact rational evaluation of T_k or U_k through the recurrence itself
/// (independent of the coefficient route).
BigRat cheb_eval_exact(ChebKind kind, int k, const BigRat& t);

}  // namespace vicsek
