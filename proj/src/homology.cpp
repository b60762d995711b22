#include "tokenhom/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tokenhom {

std::string AbelianGroupDesc::to_string() const {
    if (trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) out << " + ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        out << "Z";
    } else if (free_rank > 1) {
        sep();
        out << "Z^" << free_rank;
    }
    for (long long d : torsion) {
        sep();
        out << "Z/" << d;
    }
    return out.str();
}

AbelianGroupDesc h1_cellular(const TwoComplex& x) {
    if (!x.is_connected())
        throw std::invalid_argument("h1_cellular: complex must be connected");
    long long cycle_rank = static_cast<long long>(x.edges.size()) - x.n_vertices + 1;
    SnfResult snf = smith_normal_form(x.boundary_2());
    AbelianGroupDesc h1;
    h1.free_rank = cycle_rank - snf.rank;
    h1.torsion = snf.nontrivial_factors();
    return h1;
}

// --- cubical homology -----------------------------------------------------

CubicalBasis cubical_basis(const Graph& g, long long basis_cap) {
    CubicalBasis basis;
    basis.n_vertices = g.num_vertices();
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(u)) basis.dim1.emplace_back(u, v);
    std::sort(basis.dim1.begin(), basis.dim1.end());

    auto closed = [&](int u) {
        std::vector<int> out = g.neighbors(u);
        out.insert(std::lower_bound(out.begin(), out.end(), u), u);
        return out;
    };
    for (int f00 = 0; f00 < g.num_vertices(); ++f00) {
        auto n00 = closed(f00);
        for (int f10 : n00)
            for (int f01 : n00) {
                auto n10 = closed(f10);
                auto n01 = closed(f01);
                std::vector<int> common;
                std::set_intersection(n10.begin(), n10.end(), n01.begin(), n01.end(),
                                      std::back_inserter(common));
                for (int f11 : common) {
                    // nondegenerate in both directions
                    if (f00 == f10 && f01 == f11) continue;
                    if (f00 == f01 && f10 == f11) continue;
                    basis.dim2.push_back({f00, f10, f01, f11});
                    if (static_cast<long long>(basis.dim2.size()) > basis_cap)
                        throw ResourceLimitError("cubical_basis: dim-2 basis exceeds cap");
                }
            }
    }
    std::sort(basis.dim2.begin(), basis.dim2.end());
    return basis;
}

IntMatrix cubical_boundary_1(const CubicalBasis& basis) {
    IntMatrix d1(basis.n_vertices, static_cast<int>(basis.dim1.size()));
    for (size_t j = 0; j < basis.dim1.size(); ++j) {
        auto [u, v] = basis.dim1[j];
        // (-1)^1 (D_1^- f - D_1^+ f) = v - u
        d1.at(v, static_cast<int>(j)) += 1;
        d1.at(u, static_cast<int>(j)) -= 1;
    }
    return d1;
}

IntMatrix cubical_boundary_2(const CubicalBasis& basis) {
    std::map<std::pair<int, int>, int> index1;
    for (size_t j = 0; j < basis.dim1.size(); ++j)
        index1.emplace(basis.dim1[j], static_cast<int>(j));

    IntMatrix d2(static_cast<int>(basis.dim1.size()),
                 static_cast<int>(basis.dim2.size()));
    auto add = [&](int col, int u, int v, int sign) {
        if (u == v) return;  // degenerate face projects to zero
        d2.at(index1.at({u, v}), col) += sign;
    };
    for (size_t j = 0; j < basis.dim2.size(); ++j) {
        auto [f00, f10, f01, f11] = basis.dim2[j];
        int col = static_cast<int>(j);
        // sum_k (-1)^k (D_k^- f - D_k^+ f) with D_1^{+-} slicing the first
        // coordinate and D_2^{+-} the second
        add(col, f00, f01, -1);
        add(col, f10, f11, +1);
        add(col, f00, f10, +1);
        add(col, f01, f11, -1);
    }
    return d2;
}

AbelianGroupDesc cubical_h1(const Graph& g, long long basis_cap) {
    if (!g.is_connected())
        throw std::invalid_argument("cubical_h1: graph must be connected");
    CubicalBasis basis = cubical_basis(g, basis_cap);
    SnfResult s1 = smith_normal_form(cubical_boundary_1(basis));
    SnfResult s2 = smith_normal_form(cubical_boundary_2(basis));
    AbelianGroupDesc h1;
    h1.free_rank = static_cast<long long>(basis.dim1.size()) - s1.rank - s2.rank;
    h1.torsion = s2.nontrivial_factors();
    return h1;
}

// --- cycle-basis decomposition --------------------------------------------

namespace {

// Fundamental cycle of a non-tree edge through the BFS tree, as a closed
// vertex walk (u, ..., v, u).
std::vector<int> fundamental_cycle(const std::vector<int>& parent, int u, int v) {
    auto root_path = [&](int w) {
        std::vector<int> path{w};
        while (parent[path.back()] != -1) path.push_back(parent[path.back()]);
        return path;
    };
    std::vector<int> pu = root_path(u), pv = root_path(v);
    // strip the common tail above the meeting point
    while (pu.size() >= 2 && pv.size() >= 2 &&
           pu[pu.size() - 1] == pv[pv.size() - 1] &&
           pu[pu.size() - 2] == pv[pv.size() - 2]) {
        pu.pop_back();
        pv.pop_back();
    }
    std::vector<int> walk(pu);
    for (size_t i = pv.size() - 1; i-- > 0;) walk.push_back(pv[i]);
    walk.push_back(u);
    return walk;
}

}  // namespace

HombasisReport verify_hombasis(const Graph& g, int n, const TokenConfig& x,
                               long long vertex_cap) {
    HombasisReport report;
    if (n < 2) throw std::invalid_argument("verify_hombasis: n must be >= 2");
    if (static_cast<int>(x.size()) != n - 1)
        throw std::invalid_argument("verify_hombasis: x must have degree n-1");
    if (!g.is_connected())
        throw std::invalid_argument("verify_hombasis: graph must be connected");

    PowerGraph sp = reduced_power(g, n, vertex_cap);
    auto sp_edges = sp.graph.edges();
    std::map<EdgeId, int> edge_index;
    for (size_t j = 0; j < sp_edges.size(); ++j)
        edge_index.emplace(sp_edges[j], static_cast<int>(j));
    report.cycle_rank = static_cast<long long>(sp_edges.size()) - sp.graph.num_vertices() + 1;

    // BFS spanning tree of G
    std::vector<int> parent(g.num_vertices(), -2);
    parent[0] = -1;
    std::vector<int> queue{0};
    for (size_t qi = 0; qi < queue.size(); ++qi)
        for (int w : g.neighbors(queue[qi]))
            if (parent[w] == -2) {
                parent[w] = queue[qi];
                queue.push_back(w);
            }

    auto embed = embed_gx(sp, x);
    std::vector<EdgeChain> rows;
    std::vector<EdgeChain> expected_phi;  // [C_e] for tree-cycle rows
    for (const EdgeId& e : g.edges()) {
        if (parent[e.v] == e.u || parent[e.u] == e.v) continue;  // tree edge
        auto walk = fundamental_cycle(parent, e.u, e.v);
        std::vector<int> embedded;
        for (int w : walk) embedded.push_back(static_cast<int>(embed[w]));
        rows.push_back(walk_chain(embedded));
        expected_phi.push_back(walk_chain(walk));
    }
    report.n_tree_cycles = static_cast<long long>(rows.size());

    auto squares = cartesian_squares(sp);
    report.n_squares = static_cast<long long>(squares.size());
    for (const CartesianSquare& sq : squares)
        rows.push_back(square_boundary_chain(sp, sq));

    // phi must send embedded cycles to [C_e] and square boundaries to 0
    for (size_t i = 0; i < rows.size(); ++i) {
        EdgeChain projected = project_chain_phi(sp, rows[i]);
        const EdgeChain expected =
            i < expected_phi.size() ? expected_phi[i] : EdgeChain{};
        if (projected != expected) {
            report.detail = "phi image mismatch on row " + std::to_string(i);
            return report;
        }
    }

    IntMatrix matrix(static_cast<int>(rows.size()), static_cast<int>(sp_edges.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [e, coeff] : rows[i])
            matrix.at(static_cast<int>(i), edge_index.at(e)) = coeff;
    SnfResult snf = smith_normal_form(matrix);

    if (snf.rank != report.cycle_rank) {
        report.detail = "span rank " + std::to_string(snf.rank) + " != cycle rank " +
                        std::to_string(report.cycle_rank);
        return report;
    }
    if (!snf.nontrivial_factors().empty()) {
        report.detail = "span is not unimodular in the cycle lattice";
        return report;
    }
    report.ok = true;
    report.detail = "ok";
    return report;
}

}  // namespace tokenhom
