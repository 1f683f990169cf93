#pragma once

#include "vicsek/decimation.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <utility>
#include <vector>

namespace vicsek {

/// Vertex coordinates are exact integers at scale 2*(2n-1)^m, so junction
/// identification is plain equality. 128-bit is enough for any graph that
/// fits in memory by a wide margin.
using Coord = __int128;

/// One contraction: Arm(i, j) with 1 <= i <= 2^d, 1 <= j <= n-1, or the
/// center cell (shared by all arms at j = n).
struct CellLetter {
    int i = 0;  // 0 encodes the center letter
    int j = 0;

    static CellLetter center() { return {0, 0}; }
    static CellLetter arm(int i, int j) { return {i, j}; }
    bool is_center() const { return i == 0; }

    bool operator==(const CellLetter&) const = default;
    friend bool operator<(const CellLetter& a, const CellLetter& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    }
};

/// Letters indexed 0..cellCount-1: index 0 is the center cell, then arm
/// letters ordered by (i, j).
int letter_index(const Params& p, const CellLetter& l);
CellLetter letter_of_index(const Params& p, int index);

/// Image of an integer point under one contraction, taking scale
/// 2*(2n-1)^scaleExponent to scale 2*(2n-1)^(scaleExponent+1).
std::vector<Coord> apply_map(const Params& p, const CellLetter& letter,
                             const std::vector<Coord>& point, int scaleExponent);

/// Default cap on the construction level; override with VICSEK_MAX_LEVEL or
/// per call.
int max_level_policy();

struct VicsekGraph {
    Params params;
    int level = 0;
    std::vector<std::vector<Coord>> vertices;  // lexicographically sorted
    std::vector<std::pair<int, int>> edges;    // a < b, sorted
    std::vector<int> degree;
    std::vector<char> isBoundary;              // membership in the corner set
    std::vector<std::vector<int>> cells;       // per cell: corner indices in q-order
    std::vector<std::vector<std::uint8_t>> cellWords;  // letter indices, length = level

    int vertexCount() const { return static_cast<int>(vertices.size()); }
};

/// Level-m approximating graph: 2^d*n - 2^d + 1 cells per level, a complete
/// graph on each cell's 2^d corners, junctions glued by coordinate equality.
VicsekGraph build_graph(const Params& p, int m, int maxLevel = -1);

/// (-Delta f)(x) = f(x) - (1/N_x) sum_{y~x} f(y), at every vertex.
std::vector<double> apply_laplacian(const VicsekGraph& g, const std::vector<double>& f);

/// max_x |(-Delta f)(x) - lambda f(x)| over interior vertices, and over the
/// boundary too when includeBoundary is set.
double eigen_residual(const VicsekGraph& g, const std::vector<double>& f, double lambda,
                      bool includeBoundary);

/// E_m(f) = (2n-1)^m sum_{x~y} (f(x)-f(y))^2, each edge counted once.
double energy(const VicsekGraph& g, const std::vector<double>& f);

enum class Mode { Neumann, Dirichlet };

/// The symmetrized operator I - D^{-1/2} A D^{-1/2}; Dirichlet mode keeps the
/// principal submatrix on interior vertices (full degrees either way). Its
/// eigenvalues are those of -Delta under the corresponding boundary condition.
struct OperatorMatrix {
    Eigen::MatrixXd mat;
    std::vector<int> vertexOfRow;  // row index -> graph vertex index
};

OperatorMatrix operator_matrix(const VicsekGraph& g, Mode mode);

bool is_connected(const VicsekGraph& g);

}  // namespace vicsek
