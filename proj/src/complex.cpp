#include "tokenhom/complex.hpp"

#include <algorithm>
#include <map>

#include "tokenhom/combinatorics.hpp"

namespace tokenhom {

int TwoComplex::edge_index(const EdgeId& e) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || !(*it == e))
        throw std::invalid_argument("TwoComplex: unknown edge");
    return static_cast<int>(it - edges.begin());
}

IntMatrix TwoComplex::boundary_1() const {
    IntMatrix d1(n_vertices, static_cast<int>(edges.size()));
    for (size_t j = 0; j < edges.size(); ++j) {
        d1.at(edges[j].u, static_cast<int>(j)) = -1;
        d1.at(edges[j].v, static_cast<int>(j)) = 1;
    }
    return d1;
}

IntMatrix TwoComplex::boundary_2() const {
    IntMatrix d2(static_cast<int>(edges.size()), static_cast<int>(faces.size()));
    for (size_t j = 0; j < faces.size(); ++j) {
        const auto& walk = faces[j];
        int len = static_cast<int>(walk.size());
        for (int k = 0; k < len; ++k) {
            int u = walk[k], v = walk[(k + 1) % len];
            int e = edge_index(EdgeId(u, v));
            d2.at(e, static_cast<int>(j)) += (u < v ? 1 : -1);
        }
    }
    return d2;
}

bool TwoComplex::is_connected() const {
    if (n_vertices == 0) return true;
    Graph g(n_vertices);
    for (const EdgeId& e : edges) g.add_edge(e.u, e.v);
    return g.is_connected();
}

std::vector<int> canonical_face(std::vector<int> walk) {
    int len = static_cast<int>(walk.size());
    if (len != 3 && len != 4) throw std::invalid_argument("canonical_face: bad length");
    int start = static_cast<int>(std::min_element(walk.begin(), walk.end()) - walk.begin());
    int prev = walk[(start + len - 1) % len];
    int next = walk[(start + 1) % len];
    int step = next < prev ? 1 : -1;
    std::vector<int> out(len);
    for (int k = 0; k < len; ++k) out[k] = walk[((start + step * k) % len + len) % len];
    return out;
}

namespace {

TwoComplex complex_from_graph(const Graph& g) {
    TwoComplex x;
    x.n_vertices = g.num_vertices();
    x.edges = g.edges();
    for (const auto& tri : triangles(g))
        x.faces.push_back(canonical_face({tri[0], tri[1], tri[2]}));
    for (const auto& quad : chordless_4cycles(g))
        x.faces.push_back(canonical_face({quad[0], quad[1], quad[2], quad[3]}));
    std::sort(x.faces.begin(), x.faces.end());
    return x;
}

}  // namespace

TwoComplex build_x(const Graph& g) { return complex_from_graph(g); }
TwoComplex build_x(const PowerGraph& p) { return complex_from_graph(p.graph); }

// --- UD^n(G) --------------------------------------------------------------

namespace {

// vertices blocked by a cell's closure
void block_vertex(std::vector<char>& blocked, int v) { blocked[v] = 1; }
void block_edge(std::vector<char>& blocked, const EdgeId& e) {
    blocked[e.u] = 1;
    blocked[e.v] = 1;
}

}  // namespace

UDComplex build_ud(const Graph& g, int n, long long vertex_cap) {
    if (n < 1) throw std::invalid_argument("build_ud: n must be >= 1");
    int t = g.num_vertices();
    if (n > t) throw std::invalid_argument("build_ud: n exceeds vertex count");
    if (binomial(t, n) > vertex_cap)
        throw ResourceLimitError("build_ud: 0-cell count exceeds cap");

    UDComplex ud;
    // 0-cells: n-subsets, in the token-configuration order
    for (auto& subset : all_subsets(t, n)) ud.cells0.push_back({std::move(subset), {}});

    auto edges = g.edges();
    // 1-cells: one edge plus n-1 vertices avoiding its closure
    for (const EdgeId& e : edges) {
        std::vector<char> blocked(t, 0);
        block_edge(blocked, e);
        std::vector<int> allowed;
        for (int v = 0; v < t; ++v)
            if (!blocked[v]) allowed.push_back(v);
        for (auto& pick : all_subsets(static_cast<int>(allowed.size()), n - 1)) {
            std::vector<int> verts;
            for (int i : pick) verts.push_back(allowed[i]);
            ud.cells1.push_back({std::move(verts), {e}});
        }
    }
    // 2-cells: two vertex-disjoint edges plus n-2 vertices avoiding both
    if (n >= 2)
        for (size_t i = 0; i < edges.size(); ++i)
            for (size_t j = i + 1; j < edges.size(); ++j) {
                const EdgeId &e1 = edges[i], &e2 = edges[j];
                if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v)
                    continue;
                std::vector<char> blocked(t, 0);
                block_edge(blocked, e1);
                block_edge(blocked, e2);
                std::vector<int> allowed;
                for (int v = 0; v < t; ++v)
                    if (!blocked[v]) allowed.push_back(v);
                for (auto& pick : all_subsets(static_cast<int>(allowed.size()), n - 2)) {
                    std::vector<int> verts;
                    for (int idx : pick) verts.push_back(allowed[idx]);
                    ud.cells2.push_back({std::move(verts), {e1, e2}});
                }
            }

    // induced 2-complex on the 0-cells
    auto corner = [&](const std::vector<int>& verts, int a, int b) {
        std::vector<int> cfg = verts;
        cfg.push_back(a);
        if (b >= 0) cfg.push_back(b);
        std::sort(cfg.begin(), cfg.end());
        return static_cast<int>(subset_rank(cfg, t));
    };
    ud.complex.n_vertices = static_cast<int>(ud.cells0.size());
    for (const ConfigCell& cell : ud.cells1) {
        const EdgeId& e = cell.edge_cells[0];
        ud.complex.edges.emplace_back(corner(cell.vertex_cells, e.u, -1),
                                      corner(cell.vertex_cells, e.v, -1));
    }
    std::sort(ud.complex.edges.begin(), ud.complex.edges.end());
    for (const ConfigCell& cell : ud.cells2) {
        const EdgeId &e1 = cell.edge_cells[0], &e2 = cell.edge_cells[1];
        ud.complex.faces.push_back(canonical_face(
            {corner(cell.vertex_cells, e1.u, e2.u), corner(cell.vertex_cells, e1.u, e2.v),
             corner(cell.vertex_cells, e1.v, e2.v), corner(cell.vertex_cells, e1.v, e2.u)}));
    }
    std::sort(ud.complex.faces.begin(), ud.complex.faces.end());
    return ud;
}

SkeletonIsoReport verify_skeleton_iso(const Graph& g, int n, long long vertex_cap) {
    SkeletonIsoReport report;
    PowerGraph tok = token_graph(g, n, vertex_cap);
    UDComplex ud = build_ud(g, n, vertex_cap);

    // sk_1: the 0-cells are indexed exactly like the token configurations,
    // so the bijection is the identity on indices; compare edge sets.
    std::vector<EdgeId> tok_edges = tok.graph.edges();
    report.sk1_ok = tok_edges == ud.complex.edges &&
                    tok.graph.num_vertices() == ud.complex.n_vertices;
    if (!report.sk1_ok) {
        report.detail = "sk_1 edge sets differ";
        return report;
    }
    report.detail = "sk_1 ok";

    if (!triangles(g).empty() || !chordless_4cycles(g).empty()) {
        report.detail += "; sk_2 clause skipped (G has 3- or 4-cycles)";
        return report;
    }
    report.sk2_checked = true;

    // faces of X(T_n(G)) vs the quadrilaterals induced by UD 2-cells
    TwoComplex x = build_x(tok);
    report.sk2_ok = x.faces == ud.complex.faces;
    if (!report.sk2_ok) {
        report.detail += "; sk_2 face sets differ";
        return report;
    }

    // same faces again via the token Cartesian squares
    std::vector<std::vector<int>> square_faces;
    for (const CartesianSquare& sq : cartesian_squares(tok))
        square_faces.push_back(canonical_face(
            {static_cast<int>(sq.corners[0]), static_cast<int>(sq.corners[1]),
             static_cast<int>(sq.corners[2]), static_cast<int>(sq.corners[3])}));
    std::sort(square_faces.begin(), square_faces.end());
    report.sk2_ok = square_faces == x.faces;
    report.detail += report.sk2_ok ? "; sk_2 ok" : "; Cartesian squares disagree with faces";
    return report;
}

}  // namespace tokenhom
