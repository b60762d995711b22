#ifndef TOKENHOM_HOMOLOGY_HPP
#define TOKENHOM_HOMOLOGY_HPP

#include <array>
#include <string>
#include <vector>

#include "tokenhom/complex.hpp"
#include "tokenhom/power.hpp"
#include "tokenhom/snf.hpp"

namespace tokenhom {

/// Finitely generated abelian group: free rank plus invariant factors
/// d_1 | d_2 | ..., each > 1.
struct AbelianGroupDesc {
    long long free_rank = 0;
    std::vector<long long> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const AbelianGroupDesc&, const AbelianGroupDesc&) = default;
    std::string to_string() const;
};

/// Cellular H_1 of a connected 2-complex:
/// free rank (|E| - |V| + 1) - rank(d2), torsion from the invariant factors
/// of d2.
AbelianGroupDesc h1_cellular(const TwoComplex& x);

// --- discrete singular cubical homology (dimensions 0..2) -----------------

/// Chain bases for the cubical complex of G: nondegenerate graph maps
/// Q_0, Q_1, Q_2 -> G. Dim-1 basis elements are ordered adjacent pairs
/// (u, v) with u != v; dim-2 elements are corner quadruples
/// (f00, f10, f01, f11), nondegenerate in both directions.
struct CubicalBasis {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> dim1;
    std::vector<std::array<int, 4>> dim2;
};

CubicalBasis cubical_basis(const Graph& g, long long basis_cap = 5'000'000);

/// Boundary matrices over the nondegenerate bases, with the alternating sign
/// (-1)^k; degenerate faces project to zero.
IntMatrix cubical_boundary_1(const CubicalBasis& basis);
IntMatrix cubical_boundary_2(const CubicalBasis& basis);

/// Direct H_1 from the singular cubical chain complex. Desk-scale oracle;
/// requires G connected and the bases within cap.
AbelianGroupDesc cubical_h1(const Graph& g, long long basis_cap = 5'000'000);

// --- cycle-basis decomposition of SP^n(G) ---------------------------------

struct HombasisReport {
    bool ok = false;
    std::string detail;
    long long cycle_rank = 0;      // |E| - |V| + 1 of SP^n(G)
    long long n_squares = 0;       // Cartesian squares contributing rows
    long long n_tree_cycles = 0;   // fundamental cycles of G, embedded via x
    explicit operator bool() const { return ok; }
};

/// Verifies that the chains [C_e x] (fundamental cycles of a spanning tree
/// of G embedded along x) together with the boundaries of all Cartesian
/// squares span the full cycle lattice of SP^n(G) unimodularly, and that phi
/// sends the embedded cycles to the [C_e] basis and square boundaries to 0.
HombasisReport verify_hombasis(const Graph& g, int n, const TokenConfig& x,
                               long long vertex_cap = kDefaultVertexCap);

}  // namespace tokenhom

#endif
