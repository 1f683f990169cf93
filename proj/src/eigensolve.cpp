#include "vicsek/eigensolve.hpp"

#include "vicsek/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vicsek {

DenseSpectrum dense_spectrum(const Eigen::MatrixXd& m, bool wantVectors, double symTol) {
    if (m.rows() != m.cols()) throw NotSymmetric("matrix is not square");
    double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (m.size() > 0 && asym > symTol)
        throw NotSymmetric("matrix asymmetry " + std::to_string(asym));

    DenseSpectrum out;
    if (m.rows() == 0) return out;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        m, wantVectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error("dense_spectrum: solver failed");
    out.values.assign(solver.eigenvalues().data(),
                      solver.eigenvalues().data() + m.rows());
    if (wantVectors) {
        out.vectors = solver.eigenvectors();
        out.hasVectors = true;
    }
    return out;
}

long long Clustering::total() const {
    long long t = 0;
    for (const auto& c : clusters) t += c.multiplicity;
    return t;
}

Clustering cluster_multiplicities(const std::vector<double>& ascending, double tol) {
    Clustering out;
    out.minGap = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    long long count = 0;
    for (std::size_t k = 0; k < ascending.size(); ++k) {
        if (count > 0 && ascending[k] - ascending[k - 1] > tol) {
            out.clusters.push_back({sum / count, count});
            sum = 0.0;
            count = 0;
        }
        sum += ascending[k];
        ++count;
    }
    if (count > 0) out.clusters.push_back({sum / count, count});
    for (std::size_t k = 1; k < out.clusters.size(); ++k)
        out.minGap = std::min(out.minGap,
                              out.clusters[k].value - out.clusters[k - 1].value);
    return out;
}

}  // namespace vicsek
