#include "vicsek/eigenmap.hpp"

#include "vicsek/eigensolve.hpp"
#include "vicsek/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace vicsek {

namespace {

int find_vertex(const VicsekGraph& g, const std::vector<Coord>& coords) {
    auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), coords);
    if (it == g.vertices.end() || *it != coords) return -1;
    return static_cast<int>(it - g.vertices.begin());
}

std::vector<std::vector<int>> adjacency(const VicsekGraph& g) {
    std::vector<std::vector<int>> adj(g.vertices.size());
    for (auto [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

}  // namespace

GraphPair make_graph_pair(const VicsekGraph& coarse, const VicsekGraph& fine) {
    if (!(coarse.params == fine.params) || fine.level != coarse.level + 1)
        throw InvalidParams("make_graph_pair: levels must be consecutive");
    GraphPair pair{&coarse, &fine, {}};
    Coord s = 2 * coarse.params.n - 1;
    pair.coarseToFine.reserve(coarse.vertices.size());
    for (const auto& pt : coarse.vertices) {
        std::vector<Coord> scaled(pt);
        for (auto& c : scaled) c *= s;
        int idx = find_vertex(fine, scaled);
        if (idx < 0) throw Error("make_graph_pair: coarse vertex missing upstairs");
        pair.coarseToFine.push_back(idx);
    }
    return pair;
}

RestrictReport restrict_check(const GraphPair& pair, const std::vector<double>& fFine,
                              double lambda, bool neumann, double tol) {
    const Params& p = pair.coarse->params;
    if (fFine.size() != pair.fine->vertices.size())
        throw LengthMismatch("restrict_check: size");
    if (std::abs(lambda - p.topValueD()) <= 1e-12)
        throw TopValueExcluded("restriction is undefined at 2^d/(2^d-1)");

    std::vector<double> fCoarse(pair.coarse->vertices.size());
    for (std::size_t v = 0; v < fCoarse.size(); ++v)
        fCoarse[v] = fFine[pair.coarseToFine[v]];

    RestrictReport rep;
    rep.rValue = eval_R(p, lambda);
    rep.maxResidual = eigen_residual(*pair.coarse, fCoarse, rep.rValue, neumann);
    rep.pass = rep.maxResidual <= tol;
    return rep;
}

std::vector<double> extend_eigenfunction(const GraphPair& pair,
                                         const std::vector<double>& fCoarse,
                                         double lambda) {
    const Params& p = pair.coarse->params;
    const VicsekGraph& fine = *pair.fine;
    if (fCoarse.size() != pair.coarse->vertices.size())
        throw LengthMismatch("extend_eigenfunction: size");

    if (std::abs(eval_S(p, lambda)) <= 1e-9 || std::abs(eval_A(p, lambda)) <= 1e-9 ||
        std::abs(lambda - p.topValueD()) <= 1e-9)
        throw ForbiddenEigenvalue("extension is degenerate at lambda = " +
                                  std::to_string(lambda));
    ForbiddenSet fs = forbidden_set(p);
    if (fs.distance(lambda) < 1e-7)
        throw NearForbidden("lambda within 1e-7 of a forbidden value");

    std::vector<double> out(fine.vertices.size(),
                            std::numeric_limits<double>::quiet_NaN());
    std::vector<char> isOld(fine.vertices.size(), 0);
    for (std::size_t v = 0; v < fCoarse.size(); ++v) {
        out[pair.coarseToFine[v]] = fCoarse[v];
        isOld[pair.coarseToFine[v]] = 1;
    }

    // Fine cells grouped by their coarse cell (word prefix).
    std::map<std::vector<std::uint8_t>, std::vector<int>> groups;
    for (std::size_t c = 0; c < fine.cells.size(); ++c) {
        std::vector<std::uint8_t> prefix(fine.cellWords[c].begin(),
                                         fine.cellWords[c].end() - 1);
        groups[prefix].push_back(static_cast<int>(c));
    }

    auto adj = adjacency(fine);
    long long expectUnknowns = p.vertexCount(1) - p.boundaryCount();

    for (const auto& [prefix, cellIds] : groups) {
        std::vector<int> members;
        for (int c : cellIds)
            for (int v : fine.cells[c]) members.push_back(v);
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());

        std::vector<int> unknowns;
        int boundary = 0;
        for (int v : members) {
            if (isOld[v])
                ++boundary;
            else
                unknowns.push_back(v);
        }
        if (boundary != p.boundaryCount() ||
            static_cast<long long>(unknowns.size()) != expectUnknowns)
            throw Error("extend_eigenfunction: unexpected cell decomposition");

        std::vector<int> localOf(fine.vertices.size(), -1);
        for (std::size_t k = 0; k < unknowns.size(); ++k)
            localOf[unknowns[k]] = static_cast<int>(k);

        Eigen::MatrixXd sys =
            Eigen::MatrixXd::Zero(unknowns.size(), unknowns.size());
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(unknowns.size());
        for (std::size_t k = 0; k < unknowns.size(); ++k) {
            int x = unknowns[k];
            sys(k, k) = 1.0 - lambda;
            double invDeg = 1.0 / fine.degree[x];
            for (int y : adj[x]) {
                if (localOf[y] >= 0) {
                    sys(k, localOf[y]) -= invDeg;
                } else if (isOld[y]) {
                    rhs(k) += invDeg * out[y];
                } else {
                    throw Error("extend_eigenfunction: neighbour escapes the cell");
                }
            }
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
        if (!lu.isInvertible())
            throw SingularSystem("local extension system is singular at lambda = " +
                                 std::to_string(lambda));
        Eigen::VectorXd sol = lu.solve(rhs);
        for (std::size_t k = 0; k < unknowns.size(); ++k) out[unknowns[k]] = sol(k);
    }

    for (double v : out)
        if (std::isnan(v)) throw Error("extend_eigenfunction: unassigned vertex");
    return out;
}

double arm_propagate(double t, double j1, double j2, int j) {
    if (j < 1) throw DomainError("arm_propagate: j must be >= 1");
    if (j == 1) return j1;
    if (j == 2) return j2;
    double prev = j1, cur = j2;
    for (int k = 3; k <= j; ++k) {
        double next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double side_value(double t, double jLeft, double jRight) {
    if (std::abs(1.0 + t) <= 1e-12)
        throw TopValueExcluded("side value undefined at t = -1");
    return (jLeft + jRight) / (1.0 + t);
}

CellTrace extract_cell_trace(const VicsekGraph& level1, const std::vector<double>& f,
                             double t) {
    const Params& p = level1.params;
    if (level1.level != 1) throw InvalidParams("extract_cell_trace: level-1 graph");
    if (f.size() != level1.vertices.size()) throw LengthMismatch("extract_cell_trace");

    int twoD = p.boundaryCount();
    CellTrace tr;
    tr.d = p.d;
    tr.n = p.n;
    tr.J.assign(twoD, std::vector<double>(p.n + 1, 0.0));
    tr.L.assign(twoD, {});
    tr.sideCorner.assign(twoD, {});

    auto corner_coords = [&](int i) {
        std::vector<Coord> c(p.d);
        for (int axis = 0; axis < p.d; ++axis) c[axis] = 2 * (((i - 1) >> axis) & 1);
        return c;
    };
    auto image_index = [&](const CellLetter& letter, int k) {
        auto img = apply_map(p, letter, corner_coords(k), 0);
        int idx = find_vertex(level1, img);
        if (idx < 0) throw Error("extract_cell_trace: image not a vertex");
        return idx;
    };

    for (int i = 1; i <= twoD; ++i) {
        int opp = twoD + 1 - i;
        for (int j = 1; j <= p.n; ++j) {
            CellLetter letter =
                j == p.n ? CellLetter::center() : CellLetter::arm(i, j);
            tr.J[i - 1][j - 1] = f[image_index(letter, i)];
        }
        // ghost continuation one step past the arm
        tr.J[i - 1][p.n] = 2.0 * t * tr.J[i - 1][p.n - 1] - tr.J[i - 1][p.n - 2];

        tr.L[i - 1].assign(p.n - 1, {});
        for (int k = 1; k <= twoD; ++k) {
            if (k == i || k == opp) continue;
            tr.sideCorner[i - 1].push_back(k);
            for (int j = 1; j <= p.n - 1; ++j)
                tr.L[i - 1][j - 1].push_back(f[image_index(CellLetter::arm(i, j), k)]);
        }
    }
    return tr;
}

Eigen::MatrixXd local_system(const Params& p, double lambda) {
    VicsekGraph g = build_graph(p, 1);
    OperatorMatrix op = operator_matrix(g, Mode::Dirichlet);
    return op.mat - lambda * Eigen::MatrixXd::Identity(op.mat.rows(), op.mat.cols());
}

double local_system_min_sv(const Params& p, double lambda) {
    VicsekGraph g = build_graph(p, 1);
    OperatorMatrix op = operator_matrix(g, Mode::Dirichlet);
    DenseSpectrum sp = dense_spectrum(op.mat);
    double best = std::numeric_limits<double>::infinity();
    for (double v : sp.values) best = std::min(best, std::abs(v - lambda));
    return best;
}

}  // namespace vicsek
