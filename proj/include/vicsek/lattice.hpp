#pragma once

#include "vicsek/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vicsek {

/// Eventually periodic generating sequence for a lattice blow-up: a finite
/// prefix followed by a repeating nonempty cycle. Letters are center (0) or
/// arm pairs (i,j) with j <= n-1.
struct OmegaSeq {
    std::vector<CellLetter> prefix;
    std::vector<CellLetter> cycle;

    CellLetter at(int m) const;  // 1-based position
    std::string str() const;
};

/// Parses "prefix|cycle", letters comma-separated, letter = "0" or "(i,j)".
/// Example: "0,(1,1)|(2,1),(4,1)". Throws ParseError with a position.
OmegaSeq parse_omega(const std::string& text, const Params& p);

/// Finite blow-up tree at horizon h, in the frame of the h-th blow-up:
/// every length-h cell contributes a star (its 2^d corners joined to its
/// center). Coordinates are exact integers at scale 2*(2n-1)^h.
struct BlowupTree {
    Params params;
    int horizon = 0;
    std::vector<std::vector<Coord>> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> centers;  // vertex index of c_0 .. c_h

    int vertexCount() const { return static_cast<int>(vertices.size()); }
};

BlowupTree build_blowup_tree(const Params& p, const OmegaSeq& omega, int h,
                             int maxLevel = -1);

/// Pairwise tree distances between the centers c_M .. c_h.
struct CenterMatrix {
    int baseIndex = 0;
    std::vector<std::vector<long long>> dist;

    bool operator==(const CenterMatrix&) const = default;
};

/// Closed-form center distances from the word combinatorics of the cell
/// tree; never materializes the tree, so large horizons are fine.
CenterMatrix center_matrix(const Params& p, const OmegaSeq& omega, int M, int h);

/// Same distances by breadth-first search on a built tree (reference route).
CenterMatrix center_matrix_bfs(const BlowupTree& tree, int M);

/// Same distances recovered from the lattice graph (complete cells, no
/// centers): cells are re-detected as maximal cliques and a star tree is
/// rebuilt from them. Independent of the star-edge construction.
CenterMatrix center_matrix_via_lattice_graph(const Params& p, const OmegaSeq& omega,
                                             int M, int h);

/// Anchored isomorphism of the center-spanned subtrees over [M, h]: a tree
/// spanned by labeled terminals is determined by its terminal distance
/// matrix, so this is plain matrix equality.
bool gamma_oracle_iso(const Params& p, const OmegaSeq& a, const OmegaSeq& b, int M,
                      int h);

/// The letter-combinatorial isomorphism conditions checked over M <= m <= h:
/// (a) zero letters aligned, (b) arm positions equal, (c) the
/// opposite-corner chaining predicate matches for every window.
bool thm56_check(const Params& p, const OmegaSeq& a, const OmegaSeq& b, int M, int h);

struct IsoResult {
    bool isomorphic = false;
    std::optional<int> witnessM;
};

/// Decides isomorphism of two eventually periodic lattices by searching for
/// the smallest witness M <= searchBound, verifying over one aligned period
/// beyond the prefixes. Throws InconclusiveBound when a witness may exist
/// beyond the bound.
IsoResult iso_decide_periodic(const Params& p, const OmegaSeq& a, const OmegaSeq& b,
                              int searchBound);

}  // namespace vicsek
