#pragma once

#include "vicsek/decimation.hpp"
#include "vicsek/graph.hpp"

#include <Eigen/Dense>

#include <vector>

namespace vicsek {

/// Two consecutive approximating graphs plus the embedding of the coarse
/// vertex set into the fine one (coordinates scale by 2n-1).
struct GraphPair {
    const VicsekGraph* coarse = nullptr;
    const VicsekGraph* fine = nullptr;
    std::vector<int> coarseToFine;
};

GraphPair make_graph_pair(const VicsekGraph& coarse, const VicsekGraph& fine);

struct RestrictReport {
    double rValue = 0.0;      // eigenvalue of the restricted function
    double maxResidual = 0.0;
    bool pass = false;
};

/// Restricts a fine-level eigenfunction (eigenvalue lambda) to the coarse
/// vertex set and measures how well it satisfies the coarse eigen-equation
/// with eigenvalue R(lambda). lambda = 2^d/(2^d-1) is excluded.
RestrictReport restrict_check(const GraphPair& pair, const std::vector<double>& fFine,
                              double lambda, bool neumann, double tol = 1e-7);

/// Unique extension of a coarse eigenfunction with eigenvalue R(lambda) to a
/// fine eigenfunction with eigenvalue lambda, solved cell by cell with the
/// coarse values as boundary data. Throws ForbiddenEigenvalue /
/// NearForbidden / SingularSystem.
std::vector<double> extend_eigenfunction(const GraphPair& pair,
                                         const std::vector<double>& fCoarse,
                                         double lambda);

/// Three-term arm recurrence J_j = 2t J_{j-1} - J_{j-2} anchored at
/// J_1, J_2; closed form P_{j-1}(t) J_1 + Q_{j-1}(t) J_2.
double arm_propagate(double t, double j1, double j2, int j);

/// Common side value (J_left + J_right)/(1 + t); t = -1 excluded.
double side_value(double t, double jLeft, double jRight);

/// Arm and side values of a function on the level-1 graph:
/// J[i][j] = f(F_{i,j} q_i) for 1 <= j <= n plus the ghost J[i][n+1],
/// L[i][j][k] = f(F_{i,j} q_k) for k not on the arm axis {i, 2^d+1-i}.
struct CellTrace {
    int d = 0, n = 0;
    std::vector<std::vector<double>> J;  // [i-1][j-1], j = 1..n+1
    std::vector<std::vector<std::vector<double>>> L;  // [i-1][j-1][slot]
    std::vector<std::vector<int>> sideCorner;  // slot -> corner index k
};

CellTrace extract_cell_trace(const VicsekGraph& level1, const std::vector<double>& f,
                             double t);

/// The homogeneous local extension system at level 1: the symmetrized
/// interior operator minus lambda. Singular exactly at forbidden values.
Eigen::MatrixXd local_system(const Params& p, double lambda);

/// Smallest singular value of local_system(p, lambda).
double local_system_min_sv(const Params& p, double lambda);

}  // namespace vicsek
