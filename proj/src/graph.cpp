#include "vicsek/graph.hpp"

#include "vicsek/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <queue>

namespace vicsek {

int letter_index(const Params& p, const CellLetter& l) {
    if (l.is_center()) return 0;
    if (l.i < 1 || l.i > p.boundaryCount() || l.j < 1 || l.j > p.n - 1)
        throw DomainError("letter out of range");
    return 1 + (l.i - 1) * (p.n - 1) + (l.j - 1);
}

CellLetter letter_of_index(const Params& p, int index) {
    if (index == 0) return CellLetter::center();
    int k = index - 1;
    if (k < 0 || k >= p.boundaryCount() * (p.n - 1))
        throw DomainError("letter index out of range");
    return CellLetter::arm(k / (p.n - 1) + 1, k % (p.n - 1) + 1);
}

namespace {

// Bits of corner i (1-based): q_i = (a_1..a_d) with i = 1 + sum 2^(l-1) a_l.
int corner_bit(int i, int axis) { return ((i - 1) >> axis) & 1; }

Coord pow_coord(long long base, int e) {
    Coord r = 1;
    for (int k = 0; k < e; ++k) r *= base;
    return r;
}

// 2*(2n-1)^m overflows the coordinate type past this level.
bool scale_fits(const Params& p, int m) {
    long double bits = (m + 1) * std::log2l(2.0L * p.n - 1.0L) + 1;
    return bits < 126.0L;
}

}  // namespace

std::vector<Coord> apply_map(const Params& p, const CellLetter& letter,
                             const std::vector<Coord>& point, int scaleExponent) {
    if (static_cast<int>(point.size()) != p.d) throw LengthMismatch("point dimension");
    Coord scale = 2 * pow_coord(2 * p.n - 1, scaleExponent);
    int i = letter.is_center() ? 1 : letter.i;
    int j = letter.is_center() ? p.n : letter.j;
    std::vector<Coord> out(point.size());
    for (int axis = 0; axis < p.d; ++axis) {
        Coord shift = scale * (2 * (p.n - j) * corner_bit(i, axis) + (j - 1));
        out[axis] = point[axis] + shift;
    }
    return out;
}

int max_level_policy() {
    if (const char* env = std::getenv("VICSEK_MAX_LEVEL")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 25;
}

VicsekGraph build_graph(const Params& p, int m, int maxLevel) {
    if (m < 0) throw InvalidParams("level must be >= 0");
    if (maxLevel < 0) maxLevel = max_level_policy();
    if (m > maxLevel)
        throw CapacityExceeded("level " + std::to_string(m) + " exceeds the cap of " +
                               std::to_string(maxLevel));
    if (!scale_fits(p, m)) throw CapacityExceeded("coordinates exceed 128 bits");
    p.vertexCount(m);  // side effect: throws when the count overflows

    int twoD = p.boundaryCount();
    int nLetters = static_cast<int>(p.cellCount());

    // Corner coordinates of every cell, by iterating words depth-first so a
    // prefix's partial images are reused.
    std::vector<std::vector<Coord>> corners(twoD);
    for (int i = 1; i <= twoD; ++i) {
        corners[i - 1].resize(p.d);
        for (int axis = 0; axis < p.d; ++axis)
            corners[i - 1][axis] = 2 * corner_bit(i, axis);
    }

    struct CellRec {
        std::vector<std::uint8_t> word;  // outermost letter first
        std::vector<std::vector<Coord>> pts;  // images of the corners, q-order
    };
    std::vector<CellRec> cells;
    // Words are built innermost letter first (the innermost map acts on the
    // raw corners at scale exponent 0), then reversed for storage so that
    // cellWords reads left-to-right from the outermost map.
    std::vector<std::uint8_t> word(m);
    std::vector<std::vector<std::vector<Coord>>> stack(m + 1);
    stack[0] = corners;
    std::function<void(int)> rec = [&](int depth) {
        if (depth == m) {
            CellRec rec_{word, stack[m]};
            std::reverse(rec_.word.begin(), rec_.word.end());
            cells.push_back(std::move(rec_));
            return;
        }
        for (int letter = 0; letter < nLetters; ++letter) {
            word[depth] = static_cast<std::uint8_t>(letter);
            CellLetter cl = letter_of_index(p, letter);
            auto& next = stack[depth + 1];
            next.resize(twoD);
            for (int c = 0; c < twoD; ++c)
                next[c] = apply_map(p, cl, stack[depth][c], depth);
            rec(depth + 1);
        }
    };
    if (m == 0) {
        cells.push_back({{}, corners});
    } else {
        rec(0);
    }

    // Deduplicate vertices; map is ordered so indices follow coordinate order.
    std::map<std::vector<Coord>, int> index;
    for (const auto& cell : cells)
        for (const auto& pt : cell.pts) index.emplace(pt, 0);
    VicsekGraph g{p, m, {}, {}, {}, {}, {}, {}};
    g.vertices.reserve(index.size());
    int next = 0;
    for (auto& [coords, idx] : index) {
        idx = next++;
        g.vertices.push_back(coords);
    }

    Coord scale = 2 * pow_coord(2 * p.n - 1, m);
    g.isBoundary.assign(g.vertices.size(), 0);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        bool corner = true;
        for (Coord c : g.vertices[v])
            if (c != 0 && c != scale) corner = false;
        g.isBoundary[v] = corner ? 1 : 0;
    }

    g.degree.assign(g.vertices.size(), 0);
    for (const auto& cell : cells) {
        std::vector<int> ids(twoD);
        for (int c = 0; c < twoD; ++c) ids[c] = index.at(cell.pts[c]);
        g.cells.push_back(ids);
        g.cellWords.push_back(cell.word);
        for (int a = 0; a < twoD; ++a)
            for (int b = a + 1; b < twoD; ++b) {
                auto e = std::minmax(ids[a], ids[b]);
                g.edges.emplace_back(e.first, e.second);
                ++g.degree[ids[a]];
                ++g.degree[ids[b]];
            }
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
        throw Error("build_graph: duplicate edge; cells overlap unexpectedly");
    return g;
}

namespace {

std::vector<std::vector<int>> adjacency(const VicsekGraph& g) {
    std::vector<std::vector<int>> adj(g.vertices.size());
    for (auto [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

}  // namespace

std::vector<double> apply_laplacian(const VicsekGraph& g, const std::vector<double>& f) {
    if (f.size() != g.vertices.size()) throw LengthMismatch("apply_laplacian: size");
    std::vector<double> out(f.size(), 0.0);
    for (auto [a, b] : g.edges) {
        out[a] += f[b];
        out[b] += f[a];
    }
    for (std::size_t v = 0; v < f.size(); ++v) out[v] = f[v] - out[v] / g.degree[v];
    return out;
}

double eigen_residual(const VicsekGraph& g, const std::vector<double>& f, double lambda,
                      bool includeBoundary) {
    auto lf = apply_laplacian(g, f);
    double worst = 0.0;
    for (std::size_t v = 0; v < f.size(); ++v) {
        if (!includeBoundary && g.isBoundary[v]) continue;
        worst = std::max(worst, std::abs(lf[v] - lambda * f[v]));
    }
    return worst;
}

double energy(const VicsekGraph& g, const std::vector<double>& f) {
    if (f.size() != g.vertices.size()) throw LengthMismatch("energy: size");
    double sum = 0.0;
    for (auto [a, b] : g.edges) {
        double diff = f[a] - f[b];
        sum += diff * diff;
    }
    double factor = 1.0;
    for (int k = 0; k < g.level; ++k) factor *= 2.0 * g.params.n - 1.0;
    return factor * sum;
}

OperatorMatrix operator_matrix(const VicsekGraph& g, Mode mode) {
    std::vector<int> rows;
    for (int v = 0; v < g.vertexCount(); ++v)
        if (mode == Mode::Neumann || !g.isBoundary[v]) rows.push_back(v);
    if (rows.empty()) throw EmptyInterior("no interior vertices at level 0");

    std::vector<int> rowOf(g.vertexCount(), -1);
    for (std::size_t r = 0; r < rows.size(); ++r) rowOf[rows[r]] = static_cast<int>(r);

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows.size(), rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) m(r, r) = 1.0;
    for (auto [a, b] : g.edges) {
        int ra = rowOf[a], rb = rowOf[b];
        if (ra < 0 || rb < 0) continue;
        double w = -1.0 / std::sqrt(static_cast<double>(g.degree[a]) * g.degree[b]);
        m(ra, rb) = w;
        m(rb, ra) = w;
    }
    return {std::move(m), std::move(rows)};
}

bool is_connected(const VicsekGraph& g) {
    if (g.vertices.empty()) return true;
    auto adj = adjacency(g);
    std::vector<char> seen(g.vertices.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == g.vertices.size();
}

}  // namespace vicsek
