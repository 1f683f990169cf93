#pragma once

#include <Eigen/Dense>

#include <vector>

namespace vicsek {

/// Full spectrum of a dense symmetric matrix, ascending. The independent
/// brute-force oracle for everything the decimation engine produces.
struct DenseSpectrum {
    std::vector<double> values;
    Eigen::MatrixXd vectors;  // columns, only when requested
    bool hasVectors = false;

    int dimension() const { return static_cast<int>(values.size()); }
};

/// Throws NotSymmetric when max |M - M^T| exceeds symTol.
DenseSpectrum dense_spectrum(const Eigen::MatrixXd& m, bool wantVectors = false,
                             double symTol = 1e-12);

struct Cluster {
    double value = 0.0;  // cluster mean
    long long multiplicity = 0;
};

/// Consecutive values within tol are merged. minGap is the smallest distance
/// between neighbouring cluster means (infinity for < 2 clusters); callers
/// treat minGap <= 10*tol as a failed separation.
struct Clustering {
    std::vector<Cluster> clusters;
    double minGap = 0.0;

    long long total() const;
    bool gapOk(double tol) const { return minGap > 10.0 * tol; }
};

Clustering cluster_multiplicities(const std::vector<double>& ascending, double tol);

}  // namespace vicsek
