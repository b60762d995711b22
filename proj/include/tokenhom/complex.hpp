#ifndef TOKENHOM_COMPLEX_HPP
#define TOKENHOM_COMPLEX_HPP

#include <string>
#include <vector>

#include "tokenhom/power.hpp"
#include "tokenhom/snf.hpp"

namespace tokenhom {

/// A 2-complex: 1-skeleton plus faces given as closed boundary walks of
/// length 3 or 4. Face walks are stored without the repeated endpoint, in the
/// canonical orientation: least vertex first, then its lesser walk-neighbor.
struct TwoComplex {
    int n_vertices = 0;
    std::vector<EdgeId> edges;           // sorted
    std::vector<std::vector<int>> faces; // canonical walks, sorted

    int edge_index(const EdgeId& e) const;  // throws if absent

    /// Boundary of a face as a signed edge chain on edge indices.
    IntMatrix boundary_1() const;  // vertices x edges
    IntMatrix boundary_2() const;  // edges x faces

    bool is_connected() const;
};

/// Canonical orientation for a closed walk given without its endpoint.
std::vector<int> canonical_face(std::vector<int> walk);

/// X(G): attach a 2-cell to every 3-cycle and chordless 4-cycle.
TwoComplex build_x(const Graph& g);
TwoComplex build_x(const PowerGraph& p);

// --- Abrams discrete configuration space (dimensions 0..2) ----------------

/// A cell of UD^n(G): n pairwise-disjoint closed cells of the base graph,
/// stored as the vertex cells plus 0, 1 or 2 edge cells. Dimension = number
/// of edge cells.
struct ConfigCell {
    std::vector<int> vertex_cells;  // sorted
    std::vector<EdgeId> edge_cells; // sorted, at most 2
};

struct UDComplex {
    std::vector<ConfigCell> cells0, cells1, cells2;
    /// Induced 2-complex: vertices are the 0-cells indexed like the token
    /// configurations of T_n(G) (lexicographic), edges come from 1-cells,
    /// quadrilateral faces from 2-cells.
    TwoComplex complex;
};

/// Builds dimensions 0..2 of UD^n(G); cells of dimension >= 3 do not affect
/// the fundamental group or H_1 and are not materialized.
UDComplex build_ud(const Graph& g, int n, long long vertex_cap = kDefaultVertexCap);

// --- skeleton isomorphisms ------------------------------------------------

struct SkeletonIsoReport {
    bool sk1_ok = false;
    bool sk2_checked = false;  // requires G free of 3- and 4-cycles
    bool sk2_ok = false;
    std::string detail;
    bool passed() const { return sk1_ok && (!sk2_checked || sk2_ok); }
};

/// Verifies T_n(G) = sk_1 UD^n(G) via the explicit n-subset bijection, and,
/// when G has no 3- or 4-cycles, that the faces of X(T_n(G)) are exactly the
/// 2-cells of UD^n(G) (equivalently the token Cartesian squares).
SkeletonIsoReport verify_skeleton_iso(const Graph& g, int n,
                                      long long vertex_cap = kDefaultVertexCap);

}  // namespace tokenhom

#endif
