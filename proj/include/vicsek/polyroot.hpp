#pragma once

#include "vicsek/chebyshev.hpp"
#include "vicsek/numeric.hpp"

#include <optional>
#include <vector>

namespace vicsek {

/// An isolated simple real root. `exact` is set when the root is a rational
/// number (verified by exact evaluation).
struct Root {
    double value = 0.0;
    std::optional<BigRat> exact;
};

/// Isolates the real roots of an integer polynomial on [lo, hi] by exact-sign
/// bracketing on a uniform rational grid followed by bisection to width
/// <= widthTol, then a short Newton polish of the double value. Signs are
/// evaluated exactly at rational points, so clustered simple roots are
/// separated as long as the grid resolves them.
///
/// When expectedCount >= 0 and the first pass finds a different number of
/// roots, the grid is refined x4 and the scan retried once; a second failure
/// throws RootCountMismatch.
std::vector<Root> isolate_roots(const IntPoly& p, const BigRat& lo, const BigRat& hi,
                                int expectedCount = -1, int gridCells = 1 << 14,
                                double widthTol = 1e-13);

}  // namespace vicsek
