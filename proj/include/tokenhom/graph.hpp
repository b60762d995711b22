#ifndef TOKENHOM_GRAPH_HPP
#define TOKENHOM_GRAPH_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tokenhom {

/// An edge of a simple graph, stored with endpoints in increasing order.
struct EdgeId {
    int u, v;

    EdgeId(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("EdgeId: self-loop");
    }
    friend bool operator==(const EdgeId&, const EdgeId&) = default;
    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

/// Finite simple undirected graph with dense vertex ids 0..n-1.
/// Neighbor lists are kept sorted and duplicate-free. Connectivity is not
/// an invariant; operations that need it check explicitly.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n_vertices);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return n_edges_; }

    /// Throws on self-loops, duplicate edges and out-of-range ids.
    void add_edge(int u, int v);
    /// Adds the edge if absent; returns false if it was already there.
    bool add_edge_if_absent(int u, int v);

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<EdgeId> edges() const;

    bool is_connected() const;

    /// BFS distances from source; unreachable vertices get -1.
    std::vector<int> bfs_distances(int source) const;
    /// Multi-source BFS distances.
    std::vector<int> bfs_distances(const std::vector<int>& sources) const;

    void set_label(int v, std::string label);
    const std::string& label(int v) const;
    bool has_labels() const { return !labels_.empty(); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
    int n_edges_ = 0;
};

// --- generators -----------------------------------------------------------

/// Path graph I_m on vertices 0..m (m >= 0).
Graph make_path(int m);
/// Cycle graph C_m on vertices 0..m-1 (m >= 3).
Graph make_cycle(int m);
/// Star S_m: hub 0, leaves 1..m (m >= 1).
Graph make_star(int m);
/// Complete graph K_t (t >= 1).
Graph make_complete(int t);
/// Wedge of k m-cycles identified at hub vertex 0 (k >= 1, m >= 3).
/// Cycle j uses the hub plus vertices 1+(j)(m-1) .. (j+1)(m-1).
Graph make_wedge_cycles(int k, int m);
/// 1-skeleton of the s x s square grid with Klein-bottle identifications:
/// left/right columns glued straight, top/bottom rows glued with a flip.
/// Vertex (x, y) has id x + s*y for 0 <= x, y < s. Requires s >= 2.
Graph make_klein_grid(int s);

enum class GraphFamily { path, cycle, star, complete, wedge_cycles, klein_grid };

/// Dispatch on family name; params are family-specific (see the makers).
Graph generate(GraphFamily family, const std::vector<int>& params);

// --- structural operations ------------------------------------------------

/// Cartesian (box) product. Vertex (u, v) gets id u * |V(H)| + v.
Graph box_product(const Graph& g, const Graph& h);
/// n-fold box power (n >= 1).
Graph box_power(const Graph& g, int n);

/// Replace each edge e by a path with counts.at(e) interior vertices
/// (missing edges default to 0). Original vertices keep their ids; interior
/// vertices are appended sorted by edge, then by position along the edge.
Graph subdivide(const Graph& g, const std::map<EdgeId, int>& counts);
Graph subdivide_uniform(const Graph& g, int k_per_edge);

/// Vertices of degree != 2.
std::vector<int> essential_vertices(const Graph& g);

struct SubdivisionWitness {
    // Condition 1 failure: a pair of essential vertices too close.
    std::optional<std::pair<int, int>> close_pair;
    // Condition 2 failure: an essential vertex and a short reachable cycle.
    std::optional<int> vertex;
    std::optional<std::vector<int>> short_cycle;
};

struct SubdivisionCheck {
    bool ok = false;
    SubdivisionWitness witness;
    explicit operator bool() const { return ok; }
};

/// Checks the two path/cycle length conditions for n. Requires g connected.
///
/// Condition 2 is evaluated as: for each essential vertex v, the minimum over
/// simple cycles C of length(C) + 2*dist(v, C) must be >= n+1. Every reduced
/// non-nullhomotopic closed walk based at v contains a simple cycle, and the
/// shortest such walk is realized by a shortest access path to a cycle,
/// traversed out and back; cycles longer than n satisfy the bound outright,
/// so enumeration is capped at length n.
SubdivisionCheck is_sufficiently_subdivided(const Graph& g, int n);

/// Uniformly subdivides g with the smallest per-edge count that makes it
/// sufficiently subdivided for n. Requires g connected.
Graph subdivide_for(const Graph& g, int n);

// --- cycle enumeration ----------------------------------------------------

/// All 3-cycles as sorted vertex triples, sorted.
std::vector<std::array<int, 3>> triangles(const Graph& g);

/// All chordless 4-cycles in canonical walk order: lowest vertex first, then
/// its lower cycle-neighbor. "Chordless" means the four vertices induce
/// exactly the four cycle edges.
std::vector<std::array<int, 4>> chordless_4cycles(const Graph& g);

/// Simple cycles of length 3..max_length, each as a canonical vertex walk
/// (minimum vertex first, lower neighbor second), without repetition.
std::vector<std::vector<int>> simple_cycles_up_to(const Graph& g, int max_length);

}  // namespace tokenhom

#endif
