#include "vicsek/decimation.hpp"

#include "vicsek/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vicsek {

Params::Params(int d_, int n_) : d(d_), n(n_) {
    if (d < 2 || d > 20)
        throw InvalidParams("d must be >= 2 (got " + std::to_string(d) + ")");
    if (n < 2 || n > 1000)
        throw InvalidParams("n must be >= 2 (got " + std::to_string(n) + ")");
}

long long Params::vertexCount(int m) const {
    if (m < 0) throw InvalidParams("level must be >= 0");
    auto cm = checked_pow_ll(cellCount(), m);
    if (!cm || *cm > (std::numeric_limits<long long>::max() - 1) / degreeN())
        throw CapacityExceeded("vertex count overflows at level " + std::to_string(m));
    return *cm * degreeN() + 1;
}

long long Params::edgeCount(int m) const {
    auto cm = checked_pow_ll(cellCount(), m);
    long long perCell = (1LL << d) * ((1LL << d) - 1) / 2;
    if (!cm || *cm > std::numeric_limits<long long>::max() / perCell)
        throw CapacityExceeded("edge count overflows at level " + std::to_string(m));
    return *cm * perCell;
}

long long Params::interiorCount(int m) const { return vertexCount(m) - (1LL << d); }

namespace {

// U_{n-1} and U_{n-2} as integer polynomials in lambda via t = 1 - N*lambda.
std::pair<IntPoly, IntPoly> u_pair_in_lambda(const Params& p) {
    BigInt negN = -BigInt(p.degreeN());
    IntPoly u1 = cheb_coeffs(ChebKind::Second, p.n - 1).compose_linear(1, negN);
    IntPoly u2 = cheb_coeffs(ChebKind::Second, p.n - 2).compose_linear(1, negN);
    return {u1, u2};
}

}  // namespace

IntPoly r_coeffs(const Params& p) {
    auto [u1, u2] = u_pair_in_lambda(p);
    BigInt N(p.degreeN());
    IntPoly lam = IntPoly::x();
    IntPoly one = IntPoly::constant(1);
    // t + lambda + 1 = 2 + (1-N) lambda,  t = 1 - N lambda
    IntPoly tl1(std::vector<BigInt>{2, 1 - N});
    IntPoly t(std::vector<BigInt>{1, -N});
    return one + (lam - one) * u1 * u1 + tl1 * u1 * u2 - t * u2 * u2;
}

IntPoly s_coeffs(const Params& p) {
    BigInt negN = -BigInt(p.degreeN());
    IntPoly tn = cheb_coeffs(ChebKind::First, p.n).compose_linear(1, negN);
    IntPoly tn1 = cheb_coeffs(ChebKind::First, p.n - 1).compose_linear(1, negN);
    return tn + BigInt(p.degreeN()) * tn1;
}

IntPoly a_coeffs(const Params& p) {
    auto [u1, u2] = u_pair_in_lambda(p);
    return u1 + u2;
}

IntPoly top_factor_coeffs(const Params& p) {
    auto [u1, u2] = u_pair_in_lambda(p);
    return u2 - u1;
}

IntPoly zero_factor_coeffs(const Params& p) {
    auto [u1, u2] = u_pair_in_lambda(p);
    return u1 + BigInt(p.degreeN()) * u2;
}

double eval_R(const Params& p, double lambda) {
    double t = t_of_lambda(p, lambda);
    double u1 = cheb_u(p.n - 1, t);
    double u2 = cheb_u(p.n - 2, t);
    return 1.0 + (lambda - 1.0) * u1 * u1 + (t + lambda + 1.0) * u1 * u2 - t * u2 * u2;
}

double eval_S(const Params& p, double lambda) {
    double t = t_of_lambda(p, lambda);
    return cheb_t(p.n, t) + static_cast<double>(p.degreeN()) * cheb_t(p.n - 1, t);
}

double eval_A(const Params& p, double lambda) {
    double t = t_of_lambda(p, lambda);
    return cheb_u(p.n - 1, t) + cheb_u(p.n - 2, t);
}

double ForbiddenSet::distance(double lambda) const {
    double best = std::abs(lambda - top);
    for (const auto& r : alphas) best = std::min(best, std::abs(lambda - r.value));
    for (const auto& r : betas) best = std::min(best, std::abs(lambda - r.value));
    return best;
}

std::vector<double> ForbiddenSet::values() const {
    std::vector<double> v;
    v.reserve(size());
    for (const auto& r : alphas) v.push_back(r.value);
    for (const auto& r : betas) v.push_back(r.value);
    v.push_back(top);
    std::sort(v.begin(), v.end());
    return v;
}

ForbiddenSet forbidden_set(const Params& p) {
    ForbiddenSet fs;
    fs.top = p.topValueD();
    fs.alphas = isolate_roots(s_coeffs(p), BigRat(0), p.topValue(), p.n);
    fs.betas = isolate_roots(a_coeffs(p), BigRat(0), p.topValue(), p.n - 1);
    return fs;
}

std::vector<Root> inverse_branches_exact(const Params& p, const BigRat& lambdaPrime) {
    if (lambdaPrime < 0 || lambdaPrime > p.topValue())
        throw DomainError("inverse_branches: value outside [0, 2^d/(2^d-1)]");
    // b*R(lambda) - a has integer coefficients for lambdaPrime = a/b.
    IntPoly poly = denominator(lambdaPrime) * r_coeffs(p) -
                   IntPoly::constant(numerator(lambdaPrime));
    return isolate_roots(poly, BigRat(0), BigRat(1), p.armAlphabet());
}

std::vector<double> inverse_branches(const Params& p, double lambdaPrime) {
    auto roots = inverse_branches_exact(p, rational_of_double(lambdaPrime));
    std::vector<double> v;
    v.reserve(roots.size());
    for (const auto& r : roots) v.push_back(r.value);
    return v;
}

double psi_word(const Params& p, const std::vector<int>& word, double seed) {
    double cur = seed;
    for (int letter : word) {
        if (letter < 0 || letter >= p.armAlphabet())
            throw DomainError("psi_word: branch index out of range");
        cur = inverse_branches(p, cur)[letter];
    }
    return cur;
}

std::string seed_name(SeedKind kind, int index) {
    switch (kind) {
        case SeedKind::Top: return "top";
        case SeedKind::Zero: return "zero";
        case SeedKind::Alpha: return "alpha" + std::to_string(index);
        case SeedKind::Beta: return "beta" + std::to_string(index);
    }
    return "?";
}

bool operator<(const Genealogy& a, const Genealogy& b) {
    if (a.seed != b.seed) return static_cast<int>(a.seed) < static_cast<int>(b.seed);
    if (a.seedIndex != b.seedIndex) return a.seedIndex < b.seedIndex;
    return a.word < b.word;
}

long long Spectrum::totalMultiplicity() const {
    long long t = 0;
    for (const auto& e : entries) t += e.multiplicity;
    return t;
}

double Spectrum::trace() const {
    double t = 0;
    for (const auto& e : entries) t += e.value * static_cast<double>(e.multiplicity);
    return t;
}

namespace {

struct MatchedRoots {
    std::vector<Root> roots;
    std::vector<int> branchIndex;
};

// Locates each factor root among the ascending preimages of the seed and
// records its branch index.
MatchedRoots match_branches(const Params& p, const std::vector<Root>& factorRoots,
                            const BigRat& seed) {
    auto pre = inverse_branches_exact(p, seed);
    MatchedRoots out;
    for (const auto& r : factorRoots) {
        int found = -1;
        for (std::size_t l = 0; l < pre.size(); ++l) {
            if (std::abs(pre[l].value - r.value) <= 1e-9) {
                if (found >= 0)
                    throw RootCountMismatch("first generation: ambiguous branch match");
                found = static_cast<int>(l);
            }
        }
        if (found < 0)
            throw RootCountMismatch("first generation: factor root is not a preimage");
        out.roots.push_back(r);
        out.branchIndex.push_back(found);
    }
    return out;
}

FirstGeneration to_first_gen(MatchedRoots&& m) {
    return FirstGeneration{std::move(m.roots), std::move(m.branchIndex)};
}

struct Expander {
    const Params& p;

    std::vector<Root> children(const Root& node) const {
        if (node.exact) return inverse_branches_exact(p, *node.exact);
        return inverse_branches_exact(p, rational_of_double(node.value));
    }
};

void sort_and_merge(Spectrum& spec) {
    auto& es = spec.entries;
    std::sort(es.begin(), es.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.genealogy < b.genealogy;
    });
    std::vector<SpectrumEntry> merged;
    for (auto& e : es) {
        if (!merged.empty() && std::abs(merged.back().value - e.value) <= 1e-9) {
            merged.back().multiplicity += e.multiplicity;
            ++spec.mergedEntries;
        } else {
            merged.push_back(std::move(e));
        }
    }
    es = std::move(merged);
}

}  // namespace

FirstGeneration first_generation_top(const Params& p) {
    auto roots = isolate_roots(top_factor_coeffs(p), BigRat(0), BigRat(1), p.n - 1);
    return to_first_gen(match_branches(p, roots, p.topValue()));
}

FirstGeneration first_generation_zero(const Params& p) {
    auto roots = isolate_roots(zero_factor_coeffs(p), BigRat(0), BigRat(1), p.n - 1);
    return to_first_gen(match_branches(p, roots, BigRat(0)));
}

namespace {

// Expands a seed down to words of length maxLen and feeds (root, word) pairs
// to the sink: the seed itself (empty word), then its first-generation
// branches (restricted set if given, otherwise all), then all 2n-1 branches
// per later generation. fullLengthOnly keeps only words of length maxLen.
template <typename Sink>
void expand_genealogy(const Params& p, const Root& seed,
                      const FirstGeneration* restrictedFirstGen, int maxLen,
                      bool fullLengthOnly, Sink&& sink) {
    if (!fullLengthOnly || maxLen == 0) sink(seed, std::vector<int>{});
    if (maxLen == 0) return;
    Expander ex{p};
    struct Node {
        Root root;
        std::vector<int> word;
    };
    std::vector<Node> frontier;
    if (restrictedFirstGen) {
        for (std::size_t k = 0; k < restrictedFirstGen->roots.size(); ++k)
            frontier.push_back(
                {restrictedFirstGen->roots[k], {restrictedFirstGen->branchIndex[k]}});
    } else {
        auto kids = ex.children(seed);
        for (std::size_t l = 0; l < kids.size(); ++l)
            frontier.push_back({kids[l], {static_cast<int>(l)}});
    }
    for (int len = 1; len <= maxLen; ++len) {
        for (const auto& node : frontier)
            if (!fullLengthOnly || len == maxLen) sink(node.root, node.word);
        if (len == maxLen) break;
        std::vector<Node> next;
        for (const auto& node : frontier) {
            auto kids = ex.children(node.root);
            for (std::size_t l = 0; l < kids.size(); ++l) {
                auto word = node.word;
                word.push_back(static_cast<int>(l));
                next.push_back({kids[l], std::move(word)});
            }
        }
        frontier = std::move(next);
    }
}

long long checked_cell_pow(const Params& p, int e) {
    auto v = checked_pow_ll(p.cellCount(), e);
    if (!v) throw CapacityExceeded("multiplicity overflows 64 bits");
    return *v;
}

}  // namespace

Spectrum neumann_spectrum(const Params& p, int m) {
    if (m < 0) throw InvalidParams("level must be >= 0");
    Spectrum spec;
    long long twoD = 1LL << p.d;

    Root topSeed;
    topSeed.exact = p.topValue();
    topSeed.value = p.topValueD();
    auto pushTop = [&](const Root& r, const std::vector<int>& word) {
        long long mult =
            checked_cell_pow(p, m - static_cast<int>(word.size())) * (twoD - 2) + 1;
        spec.entries.push_back(
            {r.value, r.exact, mult, {SeedKind::Top, 0, word}});
    };
    FirstGeneration fgTop = first_generation_top(p);
    expand_genealogy(p, topSeed, &fgTop, m, false, pushTop);

    Root zeroSeed;
    zeroSeed.exact = BigRat(0);
    zeroSeed.value = 0.0;
    auto pushZero = [&](const Root& r, const std::vector<int>& word) {
        spec.entries.push_back({r.value, r.exact, 1, {SeedKind::Zero, 0, word}});
    };
    FirstGeneration fgZero = first_generation_zero(p);
    expand_genealogy(p, zeroSeed, &fgZero, m, false, pushZero);

    sort_and_merge(spec);
    return spec;
}

Spectrum dirichlet_spectrum(const Params& p, int m) {
    if (m < 0) throw InvalidParams("level must be >= 0");
    Spectrum spec;
    if (m == 0) return spec;  // no interior vertices
    long long twoD = 1LL << p.d;

    Root topSeed;
    topSeed.exact = p.topValue();
    topSeed.value = p.topValueD();
    auto pushTop = [&](const Root& r, const std::vector<int>& word) {
        long long mult =
            checked_cell_pow(p, m - static_cast<int>(word.size())) * (twoD - 2) + 1 - twoD;
        spec.entries.push_back(
            {r.value, r.exact, mult, {SeedKind::Top, 0, word}});
    };
    FirstGeneration fgTop = first_generation_top(p);
    expand_genealogy(p, topSeed, &fgTop, m - 1, false, pushTop);

    ForbiddenSet fs = forbidden_set(p);
    for (std::size_t i = 0; i < fs.alphas.size(); ++i) {
        auto push = [&](const Root& r, const std::vector<int>& word) {
            spec.entries.push_back(
                {r.value, r.exact, 1,
                 {SeedKind::Alpha, static_cast<int>(i) + 1, word}});
        };
        // Words of exact length m-1 over all branches.
        expand_genealogy(p, fs.alphas[i], nullptr, m - 1, true, push);
    }
    for (std::size_t i = 0; i < fs.betas.size(); ++i) {
        auto push = [&](const Root& r, const std::vector<int>& word) {
            spec.entries.push_back(
                {r.value, r.exact, p.degreeN(),
                 {SeedKind::Beta, static_cast<int>(i) + 1, word}});
        };
        expand_genealogy(p, fs.betas[i], nullptr, m - 1, false, push);
    }

    sort_and_merge(spec);
    return spec;
}

}  // namespace vicsek
