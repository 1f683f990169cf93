#pragma once

#include "vicsek/chebyshev.hpp"
#include "vicsek/numeric.hpp"
#include "vicsek/polyroot.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vicsek {

/// The pair (d, n) defining the d-dimensional Vicsek construction with arm
/// length n, plus the constants derived from it.
struct Params {
    int d;
    int n;

    Params(int d_, int n_);

    int boundaryCount() const { return 1 << d; }     // 2^d cube corners
    long long degreeN() const { return (1LL << d) - 1; }
    int armAlphabet() const { return 2 * n - 1; }    // inverse branch count
    long long cellCount() const {                    // contractions per level
        return (1LL << d) * n - (1LL << d) + 1;
    }
    BigRat topValue() const {                        // 2^d / (2^d - 1)
        return BigRat(1LL << d, (1LL << d) - 1);
    }
    double topValueD() const { return to_double(topValue()); }

    /// #V_m = cellCount^m * (2^d - 1) + 1; throws CapacityExceeded past the
    /// 64-bit range.
    long long vertexCount(int m) const;
    long long edgeCount(int m) const;
    long long interiorCount(int m) const;  // #V_m - 2^d

    bool operator==(const Params&) const = default;
};

/// t = 1 - (2^d - 1) * lambda, the substitution threading all formulas here.
inline double t_of_lambda(const Params& p, double lambda) {
    return 1.0 - static_cast<double>(p.degreeN()) * lambda;
}

// Integer coefficient vectors in the eigenvalue variable.
IntPoly r_coeffs(const Params& p);   // decimation polynomial, degree 2n-1
IntPoly s_coeffs(const Params& p);   // T_n(t) + N T_{n-1}(t)
IntPoly a_coeffs(const Params& p);   // U_{n-1}(t) + U_{n-2}(t)
IntPoly top_factor_coeffs(const Params& p);   // U_{n-2}(t) - U_{n-1}(t)
IntPoly zero_factor_coeffs(const Params& p);  // U_{n-1}(t) + N U_{n-2}(t)

// Direct evaluation through the Chebyshev recurrences.
double eval_R(const Params& p, double lambda);
double eval_S(const Params& p, double lambda);
double eval_A(const Params& p, double lambda);

/// The values at which level-to-level eigenfunction extension degenerates:
/// 2^d/(2^d-1), the n roots of S and the n-1 roots of A. Cardinality 2n.
struct ForbiddenSet {
    double top;
    std::vector<Root> alphas;  // roots of S, ascending
    std::vector<Root> betas;   // roots of A, ascending

    std::size_t size() const { return 1 + alphas.size() + betas.size(); }
    /// Distance from lambda to the nearest member.
    double distance(double lambda) const;
    std::vector<double> values() const;
};

ForbiddenSet forbidden_set(const Params& p);

/// Ascending solutions of R(lambda) = lambdaPrime in [0, 1]; there are
/// exactly 2n - 1 of them for lambdaPrime in [0, 2^d/(2^d-1)].
std::vector<Root> inverse_branches_exact(const Params& p, const BigRat& lambdaPrime);
std::vector<double> inverse_branches(const Params& p, double lambdaPrime);

/// Applies inverse branches along a word, first letter first; the empty word
/// is the identity.
double psi_word(const Params& p, const std::vector<int>& word, double seed);

enum class SeedKind { Top, Zero, Alpha, Beta };

std::string seed_name(SeedKind kind, int index);

/// Where a spectrum entry came from: a seed value and the branch word
/// applied to it.
struct Genealogy {
    SeedKind seed = SeedKind::Top;
    int seedIndex = 0;  // 1-based for Alpha/Beta, 0 otherwise
    std::vector<int> word;

    friend bool operator<(const Genealogy& a, const Genealogy& b);
    bool operator==(const Genealogy&) const = default;
};

struct SpectrumEntry {
    double value = 0.0;
    std::optional<BigRat> exact;  // set when the value is a known rational
    long long multiplicity = 0;
    Genealogy genealogy;
};

/// Eigenvalues with multiplicities, ascending; ties in value are broken by
/// genealogy order. mergedEntries counts tolerance merges (expected 0).
struct Spectrum {
    std::vector<SpectrumEntry> entries;
    int mergedEntries = 0;

    long long totalMultiplicity() const;
    double trace() const;  // sum of value * multiplicity
};

/// Closed-form spectrum of the level-m operator with the eigen-equation
/// imposed at every vertex including the boundary.
Spectrum neumann_spectrum(const Params& p, int m);

/// Closed-form spectrum with zero boundary values; empty for m = 0.
Spectrum dirichlet_spectrum(const Params& p, int m);

/// First-generation continuations: the n-1 non-degenerate preimages of the
/// seed under R, each tagged with its branch index in the ascending preimage
/// list.
struct FirstGeneration {
    std::vector<Root> roots;
    std::vector<int> branchIndex;
};

FirstGeneration first_generation_top(const Params& p);
FirstGeneration first_generation_zero(const Params& p);

}  // namespace vicsek
