#include "vicsek/chebyshev.hpp"

#include <stdexcept>

namespace vicsek {

IntPoly IntPoly::constant(const BigInt& c) {
    IntPoly p;
    if (c != 0) p.coeffs = {c};
    return p;
}

IntPoly IntPoly::x() {
    IntPoly p;
    p.coeffs = {0, 1};
    return p;
}

void IntPoly::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

double IntPoly::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + it->convert_to<double>();
    return acc;
}

BigRat IntPoly::eval(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + BigRat(*it);
    return acc;
}

int IntPoly::sign_at(const BigInt& p, const BigInt& q) const {
    // value * q^deg = sum c_k p^k q^(deg-k), exact
    if (q <= 0) throw std::invalid_argument("sign_at: q must be positive");
    BigInt acc = 0;
    BigInt qpow = 1;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * p + *it * qpow;
        qpow *= q;
    }
    return acc == 0 ? 0 : (acc > 0 ? 1 : -1);
}

int IntPoly::sign_at(const BigRat& x) const {
    return sign_at(numerator(x), denominator(x));
}

IntPoly IntPoly::derivative() const {
    IntPoly r;
    for (std::size_t k = 1; k < coeffs.size(); ++k) r.coeffs.push_back(coeffs[k] * BigInt(k));
    r.normalize();
    return r;
}

IntPoly IntPoly::compose_linear(const BigInt& a, const BigInt& b) const {
    IntPoly lin;
    lin.coeffs = {a, b};
    lin.normalize();
    IntPoly acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * lin + IntPoly::constant(*it);
    return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), BigInt(0));
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) r.coeffs[k] += a.coeffs[k];
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) r.coeffs[k] += b.coeffs[k];
    r.normalize();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    return a + BigInt(-1) * b;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    r.normalize();
    return r;
}

IntPoly operator*(const BigInt& c, const IntPoly& a) {
    IntPoly r = a;
    for (auto& x : r.coeffs) x *= c;
    r.normalize();
    return r;
}

double cheb_t(int k, double t) {
    if (k < 0) throw std::invalid_argument("cheb_t: k < 0");
    if (k == 0) return 1.0;
    double prev = 1.0, cur = t;
    for (int i = 2; i <= k; ++i) {
        double next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double cheb_u(int k, double t) {
    if (k < 0) throw std::invalid_argument("cheb_u: k < 0");
    if (k == 0) return 1.0;
    double prev = 1.0, cur = 2.0 * t;
    for (int i = 2; i <= k; ++i) {
        double next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::pair<double, double> cheb_pq(int j, double t) {
    if (j < 0) throw std::invalid_argument("cheb_pq: j < 0");
    double p = 2.0 * cheb_t(j, t) - cheb_u(j, t);
    double q = j == 0 ? 0.0 : cheb_u(j - 1, t);
    return {p, q};
}

IntPoly cheb_coeffs(ChebKind kind, int k) {
    if (k < 0) throw std::invalid_argument("cheb_coeffs: k < 0");
    IntPoly prev = IntPoly::constant(1);
    if (k == 0) return prev;
    IntPoly cur = kind == ChebKind::First ? IntPoly::x() : BigInt(2) * IntPoly::x();
    IntPoly twoX = BigInt(2) * IntPoly::x();
    for (int i = 2; i <= k; ++i) {
        IntPoly next = twoX * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

BigRat cheb_eval_exact(ChebKind kind, int k, const BigRat& t) {
    if (k < 0) throw std::invalid_argument("cheb_eval_exact: k < 0");
    BigRat prev = 1;
    if (k == 0) return prev;
    BigRat cur = kind == ChebKind::First ? t : 2 * t;
    for (int i = 2; i <= k; ++i) {
        BigRat next = 2 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace vicsek
