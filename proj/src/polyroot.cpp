#include "vicsek/polyroot.hpp"

#include "vicsek/errors.hpp"

#include <algorithm>
#include <cmath>

namespace vicsek {

namespace {

// Bisect a sign-change bracket [a, b] (signA * signB < 0) down to widthTol.
Root bisect(const IntPoly& p, BigRat a, BigRat b, int signA, double widthTol) {
    while (to_double(b - a) > widthTol) {
        BigRat mid = (a + b) / 2;
        int s = p.sign_at(mid);
        if (s == 0) {
            Root r;
            r.exact = mid;
            r.value = to_double(mid);
            return r;
        }
        if (s == signA) {
            a = mid;
        } else {
            b = mid;
        }
    }
    Root r;
    // A rational of small height inside the bracket is the root iff it
    // evaluates to exactly zero.
    BigRat cand = simplest_rational_in(a, b);
    if (p.sign_at(cand) == 0) {
        r.exact = cand;
        r.value = to_double(cand);
        return r;
    }
    double x = to_double((a + b) / 2);
    // Newton polish of the double value, clamped to the bracket.
    IntPoly dp = p.derivative();
    double lo = to_double(a), hi = to_double(b);
    for (int it = 0; it < 3; ++it) {
        double fx = p.eval(x), dfx = dp.eval(x);
        if (dfx == 0.0) break;
        double nx = x - fx / dfx;
        if (!(nx >= lo && nx <= hi)) break;
        x = nx;
    }
    r.value = x;
    return r;
}

std::vector<Root> scan(const IntPoly& p, const BigRat& lo, const BigRat& hi, int cells,
                       double widthTol) {
    std::vector<Root> roots;
    BigRat width = hi - lo;
    int prevSign = 0;
    BigRat prevX = lo;
    for (int k = 0; k <= cells; ++k) {
        BigRat x = lo + width * k / cells;
        int s = p.sign_at(x);
        if (s == 0) {
            Root r;
            r.exact = x;
            r.value = to_double(x);
            roots.push_back(std::move(r));
            prevSign = 0;  // the sign change across this root is accounted for
        } else {
            if (prevSign != 0 && s != prevSign)
                roots.push_back(bisect(p, prevX, x, prevSign, widthTol));
            prevSign = s;
            prevX = x;
        }
    }
    return roots;
}

}  // namespace

std::vector<Root> isolate_roots(const IntPoly& p, const BigRat& lo, const BigRat& hi,
                                int expectedCount, int gridCells, double widthTol) {
    if (p.is_zero()) throw RootCountMismatch("isolate_roots: zero polynomial");
    if (lo >= hi) throw DomainError("isolate_roots: empty interval");
    std::vector<Root> roots = scan(p, lo, hi, gridCells, widthTol);
    if (expectedCount >= 0 && static_cast<int>(roots.size()) != expectedCount) {
        roots = scan(p, lo, hi, gridCells * 4, widthTol);
        if (static_cast<int>(roots.size()) != expectedCount)
            throw RootCountMismatch("isolate_roots: expected " +
                                    std::to_string(expectedCount) + " roots, found " +
                                    std::to_string(roots.size()));
    }
    return roots;
}

}  // namespace vicsek
