#ifndef TOKENHOM_POWER_HPP
#define TOKENHOM_POWER_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tokenhom/graph.hpp"

namespace tokenhom {

/// Sorted multiset of vertex ids; a configuration of tokens on the base
/// graph. Squarefree configurations are strictly increasing.
using TokenConfig = std::vector<int>;

bool is_squarefree(const TokenConfig& config);

/// Thrown when a construction would exceed a configured vertex cap.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr long long kDefaultVertexCap = 1'000'000;

enum class PowerVariant { reduced, token };

/// Reduced power SP^n(G) or token graph T_n(G): vertices are token
/// configurations indexed in lexicographic order, adjacency by single token
/// moves along base edges.
struct PowerGraph {
    Graph base;
    int n = 0;
    PowerVariant variant = PowerVariant::reduced;
    std::vector<TokenConfig> configs;  // index -> configuration, lex sorted
    Graph graph;                       // adjacency on configuration indices

    /// Arithmetic rank via the combinatorial number system; throws if the
    /// configuration is not a vertex of this power graph.
    long long index_of(const TokenConfig& config) const;
};

/// SP^n(G). |V| = C(t+n-1, n). n = 0 yields the single empty configuration.
PowerGraph reduced_power(const Graph& g, int n,
                         long long vertex_cap = kDefaultVertexCap);

/// T_n(G). |V| = C(t, n); empty (and flagged via the returned graph being
/// empty) when n > t.
PowerGraph token_graph(const Graph& g, int n,
                       long long vertex_cap = kDefaultVertexCap);

/// "u^2·3"-style monomial label for DOT output.
std::string config_label(const TokenConfig& config);

// --- Cartesian squares ----------------------------------------------------

/// The 4-cycle (ac·x, ad·x, bd·x, bc·x) induced by distinct base edges
/// e1 = ab, e2 = cd and a background configuration x of degree n-2.
struct CartesianSquare {
    EdgeId e1, e2;       // e1 < e2
    TokenConfig background;
    std::array<long long, 4> corners;  // config indices, walk order
};

/// All Cartesian squares of P. For the token variant only the squares lying
/// in the token graph survive: e1, e2 vertex-disjoint, background squarefree
/// and coprime to all four endpoints.
std::vector<CartesianSquare> cartesian_squares(const PowerGraph& p);

// --- maps -----------------------------------------------------------------

/// v -> v·x embedding of G into SP^n(G), x of degree n-1. The returned
/// vector maps base vertex ids to config indices; verified injective and
/// edge-preserving.
std::vector<long long> embed_gx(const PowerGraph& p, const TokenConfig& x);

/// Quotient map from a box-power vertex tuple to its configuration.
TokenConfig eta(std::vector<int> vertex_tuple);

/// Lift of a closed walk in SP^n(G) to the box power G^n via a constructive
/// trace. `trace` has one tuple per input configuration with
/// eta(trace[i]) == cycle[i]; `closing` is an appended walk from trace.back()
/// to trace.front() whenever the naive trace ends at a permuted tuple. It
/// realizes each residual transposition by out-and-back path moves, so its
/// eta image is a closed walk at cycle.front() with vanishing edge chain.
/// The full closed walk is trace + closing.
struct LiftedCycle {
    std::vector<std::vector<int>> trace;
    std::vector<std::vector<int>> closing;
};

LiftedCycle lift_cycle(const PowerGraph& p, const std::vector<TokenConfig>& cycle);

/// Integer edge chain on a graph: canonical edge -> coefficient.
using EdgeChain = std::map<EdgeId, long long>;

/// Signed single-edge chain [u, v]: +uv if u < v, -vu if u > v, 0 if u == v.
void add_signed_edge(EdgeChain& chain, int u, int v, long long coeff = 1);

/// Chain of a closed walk (or path) given as a vertex sequence.
EdgeChain walk_chain(const std::vector<int>& walk);

/// The projection phi: C_1(SP^n(G)) -> C_1(G), edge (x, y) -> [u, v] where
/// x/y = u/v.
EdgeChain project_chain_phi(const PowerGraph& p, const EdgeChain& chain);

/// Chain of the boundary walk of a Cartesian square in SP^n(G).
EdgeChain square_boundary_chain(const PowerGraph& p, const CartesianSquare& sq);

// --- explicit isomorphisms ------------------------------------------------

/// Verified graph isomorphism as an explicit vertex bijection.
struct IsoReport {
    bool ok = false;
    std::string detail;
    std::vector<long long> map;  // domain index -> codomain index
    explicit operator bool() const { return ok; }
};

/// SP^n(I_m) ~ Delta_{m,n}, the integer points 0 <= x_1 <= ... <= x_m <= n
/// with unit-step adjacency, via phi_k(x) = sum of the top k multiplicities.
/// Also checks the shift identity SP^n(I_m) ~ T_m(I_{n+m-1}).
IsoReport path_iso(int m, int n);

/// T_n(I_m) ~ Gamma_{n,m}, the strictly increasing integer tuples.
IsoReport token_path_iso(int n, int m);

/// SP^n(S_m) ~ Theta_{m,n} (integer points of the m-simplex of size n) via
/// leaf multiplicities; also verifies the token-graph description inside the
/// m-cube (coordinate sums n-1 or n).
IsoReport star_iso(int m, int n);

/// Explicit complement bijection T_n(G) ~ T_{t-n}(G).
IsoReport complement_iso(const PowerGraph& token_power);

/// Test oracle: SP^n(G) built the slow way, as the Sigma_n-quotient of the
/// box power G^n. Intended for small graphs only.
Graph reduced_power_via_quotient(const Graph& g, int n);

}  // namespace tokenhom

#endif
