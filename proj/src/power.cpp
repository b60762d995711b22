#include "tokenhom/power.hpp"

#include <algorithm>
#include <sstream>

#include "tokenhom/combinatorics.hpp"

namespace tokenhom {

bool is_squarefree(const TokenConfig& config) {
    return std::adjacent_find(config.begin(), config.end()) == config.end();
}

long long PowerGraph::index_of(const TokenConfig& config) const {
    if (static_cast<int>(config.size()) != n)
        throw std::invalid_argument("index_of: wrong degree");
    return variant == PowerVariant::reduced
               ? multiset_rank(config, base.num_vertices())
               : subset_rank(config, base.num_vertices());
}

namespace {

// Multiset difference between adjacent configurations: x = y - u + v.
// Returns (u, v) with u removed from `from` and v added in `to`.
std::pair<int, int> move_between(const TokenConfig& from, const TokenConfig& to) {
    size_t i = 0, j = 0;
    int removed = -1, added = -1;
    while (i < from.size() || j < to.size()) {
        if (i < from.size() && j < to.size() && from[i] == to[j]) {
            ++i, ++j;
        } else if (j == to.size() || (i < from.size() && from[i] < to[j])) {
            if (removed != -1) throw std::invalid_argument("configs differ by more than one move");
            removed = from[i++];
        } else {
            if (added != -1) throw std::invalid_argument("configs differ by more than one move");
            added = to[j++];
        }
    }
    if (removed == -1 || added == -1)
        throw std::invalid_argument("configs are equal");
    return {removed, added};
}

TokenConfig moved(const TokenConfig& config, size_t pos, int value) {
    TokenConfig out = config;
    out[pos] = value;
    std::sort(out.begin(), out.end());
    return out;
}

PowerGraph build_power(const Graph& g, int n, PowerVariant variant,
                       long long vertex_cap) {
    int t = g.num_vertices();
    long long n_configs = variant == PowerVariant::reduced
                              ? binomial(t + n - 1, n)
                              : binomial(t, n);
    if (n_configs > vertex_cap)
        throw ResourceLimitError("power graph would exceed vertex cap");

    PowerGraph p;
    p.base = g;
    p.n = n;
    p.variant = variant;
    p.configs = variant == PowerVariant::reduced ? all_multisets(t, n)
                                                 : all_subsets(t, n);
    p.graph = Graph(static_cast<int>(p.configs.size()));
    for (long long i = 0; i < static_cast<long long>(p.configs.size()); ++i) {
        const TokenConfig& x = p.configs[i];
        for (size_t pos = 0; pos < x.size(); ++pos) {
            if (pos > 0 && x[pos] == x[pos - 1]) continue;  // one move per value
            for (int v : g.neighbors(x[pos])) {
                if (variant == PowerVariant::token &&
                    std::binary_search(x.begin(), x.end(), v))
                    continue;
                TokenConfig y = moved(x, pos, v);
                long long j = variant == PowerVariant::reduced
                                  ? multiset_rank(y, t)
                                  : subset_rank(y, t);
                if (j > i)
                    p.graph.add_edge_if_absent(static_cast<int>(i),
                                               static_cast<int>(j));
            }
        }
    }
    return p;
}

}  // namespace

PowerGraph reduced_power(const Graph& g, int n, long long vertex_cap) {
    if (n < 0) throw std::invalid_argument("reduced_power: n must be >= 0");
    return build_power(g, n, PowerVariant::reduced, vertex_cap);
}

PowerGraph token_graph(const Graph& g, int n, long long vertex_cap) {
    if (n < 0) throw std::invalid_argument("token_graph: n must be >= 0");
    return build_power(g, n, PowerVariant::token, vertex_cap);
}

std::string config_label(const TokenConfig& config) {
    if (config.empty()) return "1";
    std::ostringstream out;
    for (size_t i = 0; i < config.size();) {
        size_t j = i;
        while (j < config.size() && config[j] == config[i]) ++j;
        if (i > 0) out << "·";
        out << config[i];
        if (j - i > 1) out << "^" << (j - i);
        i = j;
    }
    return out.str();
}

// --- Cartesian squares ----------------------------------------------------

std::vector<CartesianSquare> cartesian_squares(const PowerGraph& p) {
    if (p.n < 2) throw std::invalid_argument("cartesian_squares: n must be >= 2");
    int t = p.base.num_vertices();
    auto edges = p.base.edges();
    bool token = p.variant == PowerVariant::token;
    auto backgrounds = token ? all_subsets(t, p.n - 2) : all_multisets(t, p.n - 2);

    std::vector<CartesianSquare> out;
    auto corner = [&](int a, int c, const TokenConfig& x) {
        TokenConfig cfg = x;
        cfg.push_back(a);
        cfg.push_back(c);
        std::sort(cfg.begin(), cfg.end());
        return p.index_of(cfg);
    };
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const EdgeId& e1 = edges[i];
            const EdgeId& e2 = edges[j];
            if (token && (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v))
                continue;
            for (const TokenConfig& x : backgrounds) {
                if (token) {
                    auto hits = [&](int v) {
                        return std::binary_search(x.begin(), x.end(), v);
                    };
                    if (hits(e1.u) || hits(e1.v) || hits(e2.u) || hits(e2.v)) continue;
                }
                // (ab [] cd)x = (acx, adx, bdx, bcx)
                out.push_back({e1, e2, x,
                               {corner(e1.u, e2.u, x), corner(e1.u, e2.v, x),
                                corner(e1.v, e2.v, x), corner(e1.v, e2.u, x)}});
            }
        }
    return out;
}

// --- maps -----------------------------------------------------------------

std::vector<long long> embed_gx(const PowerGraph& p, const TokenConfig& x) {
    if (static_cast<int>(x.size()) != p.n - 1)
        throw std::invalid_argument("embed_gx: background must have degree n-1");
    int t = p.base.num_vertices();
    std::vector<long long> map(t);
    for (int v = 0; v < t; ++v) {
        TokenConfig cfg = x;
        cfg.insert(std::upper_bound(cfg.begin(), cfg.end(), v), v);
        map[v] = p.index_of(cfg);
    }
    // postcondition: injective and edge-preserving
    std::vector<long long> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::logic_error("embed_gx: map not injective");
    for (const EdgeId& e : p.base.edges())
        if (!p.graph.has_edge(static_cast<int>(map[e.u]), static_cast<int>(map[e.v])))
            throw std::logic_error("embed_gx: map not edge-preserving");
    return map;
}

TokenConfig eta(std::vector<int> vertex_tuple) {
    std::sort(vertex_tuple.begin(), vertex_tuple.end());
    return vertex_tuple;
}

LiftedCycle lift_cycle(const PowerGraph& p, const std::vector<TokenConfig>& cycle) {
    if (p.variant != PowerVariant::reduced)
        throw std::invalid_argument("lift_cycle: reduced power expected");
    if (cycle.size() < 2 || cycle.front() != cycle.back())
        throw std::invalid_argument("lift_cycle: input is not a closed walk");

    LiftedCycle lift;
    lift.trace.push_back(cycle.front());  // sorted tuple
    for (size_t i = 0; i + 1 < cycle.size(); ++i) {
        auto [u, v] = move_between(cycle[i], cycle[i + 1]);
        if (!p.base.has_edge(u, v))
            throw std::invalid_argument("lift_cycle: consecutive configs not adjacent");
        std::vector<int> next = lift.trace.back();
        auto it = std::find(next.begin(), next.end(), u);
        if (it == next.end()) throw std::logic_error("lift_cycle: lost a token");
        *it = v;  // lowest qualifying coordinate
        lift.trace.push_back(std::move(next));
    }

    // Close up with eta-trivial transposition paths if the trace ended at a
    // permutation of the start tuple.
    std::vector<int> current = lift.trace.back();
    const std::vector<int>& target = lift.trace.front();
    for (size_t pos = 0; pos < current.size(); ++pos) {
        if (current[pos] == target[pos]) continue;
        size_t other = pos + 1;
        while (other < current.size() && current[other] != target[pos]) ++other;
        if (other == current.size())
            throw std::logic_error("lift_cycle: trace end is not a permutation of start");
        // transpose coordinates pos/other along a shortest path a -> b
        int a = current[pos], b = current[other];
        auto dist = p.base.bfs_distances(b);
        std::vector<int> path{a};  // a = p_0, ..., p_l = b
        while (path.back() != b) {
            for (int w : p.base.neighbors(path.back()))
                if (dist[w] == dist[path.back()] - 1) {
                    path.push_back(w);
                    break;
                }
        }
        for (size_t k = 1; k < path.size(); ++k) {
            current[pos] = path[k];
            lift.closing.push_back(current);
        }
        for (size_t k = path.size() - 1; k-- > 0;) {
            current[other] = path[k];
            lift.closing.push_back(current);
        }
    }
    return lift;
}

void add_signed_edge(EdgeChain& chain, int u, int v, long long coeff) {
    if (u == v || coeff == 0) return;
    EdgeId e(u, v);
    chain[e] += (u < v ? coeff : -coeff);
    if (chain[e] == 0) chain.erase(e);
}

EdgeChain walk_chain(const std::vector<int>& walk) {
    EdgeChain chain;
    for (size_t i = 0; i + 1 < walk.size(); ++i)
        add_signed_edge(chain, walk[i], walk[i + 1]);
    return chain;
}

EdgeChain project_chain_phi(const PowerGraph& p, const EdgeChain& chain) {
    EdgeChain out;
    for (const auto& [edge, coeff] : chain) {
        if (!p.graph.has_edge(edge.u, edge.v))
            throw std::invalid_argument("project_chain_phi: chain not supported on edges");
        // oriented from the lower config index to the higher
        auto [u, v] = move_between(p.configs[edge.u], p.configs[edge.v]);
        add_signed_edge(out, u, v, coeff);
    }
    return out;
}

EdgeChain square_boundary_chain(const PowerGraph& p, const CartesianSquare& sq) {
    (void)p;
    EdgeChain chain;
    for (int k = 0; k < 4; ++k)
        add_signed_edge(chain, static_cast<int>(sq.corners[k]),
                        static_cast<int>(sq.corners[(k + 1) % 4]));
    return chain;
}

// --- explicit isomorphisms ------------------------------------------------

namespace {

IsoReport verify_iso(const Graph& a, const Graph& b, std::vector<long long> map,
                     const std::string& name) {
    IsoReport report;
    report.map = std::move(map);
    if (a.num_vertices() != b.num_vertices()) {
        report.detail = name + ": vertex counts differ";
        return report;
    }
    if (a.num_edges() != b.num_edges()) {
        report.detail = name + ": edge counts differ";
        return report;
    }
    std::vector<char> seen(b.num_vertices(), 0);
    for (long long img : report.map) {
        if (img < 0 || img >= b.num_vertices() || seen[img]) {
            report.detail = name + ": map is not a bijection";
            return report;
        }
        seen[img] = 1;
    }
    for (const EdgeId& e : a.edges())
        if (!b.has_edge(static_cast<int>(report.map[e.u]),
                        static_cast<int>(report.map[e.v]))) {
            report.detail = name + ": map does not preserve edges";
            return report;
        }
    report.ok = true;
    report.detail = name + ": ok";
    return report;
}

// Graph on integer tuples with unit-step adjacency in one coordinate.
Graph tuple_graph(const std::vector<std::vector<int>>& tuples) {
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < tuples.size(); ++i) index.emplace(tuples[i], static_cast<int>(i));
    Graph g(static_cast<int>(tuples.size()));
    for (size_t i = 0; i < tuples.size(); ++i)
        for (size_t k = 0; k < tuples[i].size(); ++k) {
            std::vector<int> up = tuples[i];
            ++up[k];
            auto it = index.find(up);
            if (it != index.end()) g.add_edge_if_absent(static_cast<int>(i), it->second);
        }
    return g;
}

std::vector<int> multiplicities(const TokenConfig& config, int t) {
    std::vector<int> mult(t, 0);
    for (int v : config) ++mult[v];
    return mult;
}

}  // namespace

IsoReport path_iso(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("path_iso: m, n must be >= 1");
    PowerGraph sp = reduced_power(make_path(m), n);

    // Delta_{m,n}: weakly increasing m-tuples with entries in 0..n.
    auto delta_tuples = all_multisets(n + 1, m);
    Graph delta = tuple_graph(delta_tuples);
    std::map<std::vector<int>, long long> delta_index;
    for (size_t i = 0; i < delta_tuples.size(); ++i)
        delta_index.emplace(delta_tuples[i], static_cast<long long>(i));

    std::vector<long long> map(sp.configs.size());
    for (size_t i = 0; i < sp.configs.size(); ++i) {
        auto mult = multiplicities(sp.configs[i], m + 1);
        std::vector<int> phi(m);
        int suffix = 0;
        for (int k = 1; k <= m; ++k) {
            suffix += mult[m - k + 1];
            phi[k - 1] = suffix;
        }
        auto it = delta_index.find(phi);
        if (it == delta_index.end()) {
            IsoReport r;
            r.detail = "path_iso: phi image outside Delta";
            return r;
        }
        map[i] = it->second;
    }
    IsoReport report = verify_iso(sp.graph, delta, std::move(map), "path_iso");
    if (!report.ok) return report;

    // Shift identity: Delta_{m,n} + (0,...,m-1) = Gamma_{m,n+m-1}, giving
    // SP^n(I_m) ~ T_m(I_{n+m-1}).
    PowerGraph tok = token_graph(make_path(n + m - 1), m);
    std::vector<long long> shift_map(sp.configs.size());
    for (size_t i = 0; i < sp.configs.size(); ++i) {
        std::vector<int> gamma = delta_tuples[report.map[i]];
        for (int k = 0; k < m; ++k) gamma[k] += k;
        shift_map[i] = tok.index_of(gamma);
    }
    IsoReport shifted = verify_iso(sp.graph, tok.graph, std::move(shift_map),
                                   "path_iso shift identity");
    if (!shifted.ok) return shifted;
    return report;
}

IsoReport token_path_iso(int n, int m) {
    if (m < 1 || n < 1) throw std::invalid_argument("token_path_iso: m, n must be >= 1");
    PowerGraph tok = token_graph(make_path(m), n);
    auto gamma_tuples = all_subsets(m + 1, n);
    Graph gamma = tuple_graph(gamma_tuples);
    // token configurations on I_m are exactly the Gamma_{n,m} tuples, in the
    // same lexicographic order
    std::vector<long long> map(tok.configs.size());
    for (size_t i = 0; i < map.size(); ++i) map[i] = static_cast<long long>(i);
    if (tok.configs != gamma_tuples) {
        IsoReport r;
        r.detail = "token_path_iso: vertex orders disagree";
        return r;
    }
    return verify_iso(tok.graph, gamma, std::move(map), "token_path_iso");
}

IsoReport star_iso(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("star_iso: m, n must be >= 1");
    PowerGraph sp = reduced_power(make_star(m), n);

    // Theta_{m,n}: nonnegative m-tuples with coordinate sum <= n.
    std::vector<std::vector<int>> theta_tuples;
    std::vector<int> current(m, 0);
    // enumerate in lexicographic order
    for (;;) {
        int sum = 0;
        for (int c : current) sum += c;
        if (sum <= n) theta_tuples.push_back(current);
        int k = m - 1;
        while (k >= 0 && current[k] == n) current[k--] = 0;
        if (k < 0) break;
        ++current[k];
    }
    Graph theta = tuple_graph(theta_tuples);
    std::map<std::vector<int>, long long> theta_index;
    for (size_t i = 0; i < theta_tuples.size(); ++i)
        theta_index.emplace(theta_tuples[i], static_cast<long long>(i));

    std::vector<long long> map(sp.configs.size());
    for (size_t i = 0; i < sp.configs.size(); ++i) {
        auto mult = multiplicities(sp.configs[i], m + 1);
        std::vector<int> psi(mult.begin() + 1, mult.end());
        auto it = theta_index.find(psi);
        if (it == theta_index.end()) {
            IsoReport r;
            r.detail = "star_iso: psi image outside Theta";
            return r;
        }
        map[i] = it->second;
    }
    IsoReport report = verify_iso(sp.graph, theta, std::move(map), "star_iso");
    if (!report.ok) return report;

    // Token part: T_n(S_m) is the subgraph of the m-cube induced by 0/1
    // leaf-occupancy vectors summing to n-1 (hub occupied) or n.
    if (n <= m + 1) {
        PowerGraph tok = token_graph(make_star(m), n);
        std::vector<std::vector<int>> cube_tuples;
        std::vector<long long> tok_map;
        std::map<std::vector<int>, long long> cube_index;
        for (const TokenConfig& cfg : tok.configs) {
            auto mult = multiplicities(cfg, m + 1);
            std::vector<int> occ(mult.begin() + 1, mult.end());
            int sum = static_cast<int>(cfg.size()) - mult[0];
            if (sum != n && sum != n - 1) {
                IsoReport r;
                r.detail = "star_iso: token image has wrong coordinate sum";
                return r;
            }
            auto [it, fresh] = cube_index.emplace(occ, static_cast<long long>(cube_tuples.size()));
            if (fresh) cube_tuples.push_back(occ);
            tok_map.push_back(it->second);
        }
        Graph cube_induced(static_cast<int>(cube_tuples.size()));
        for (size_t i = 0; i < cube_tuples.size(); ++i)
            for (size_t j = i + 1; j < cube_tuples.size(); ++j) {
                int diff = 0;
                for (int k = 0; k < m; ++k) diff += cube_tuples[i][k] != cube_tuples[j][k];
                if (diff == 1)
                    cube_induced.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        IsoReport token_part = verify_iso(tok.graph, cube_induced, std::move(tok_map),
                                          "star_iso token part");
        if (!token_part.ok) return token_part;
    }
    return report;
}

IsoReport complement_iso(const PowerGraph& token_power) {
    if (token_power.variant != PowerVariant::token)
        throw std::invalid_argument("complement_iso: token graph expected");
    int t = token_power.base.num_vertices();
    PowerGraph target = token_graph(token_power.base, t - token_power.n);
    std::vector<long long> map(token_power.configs.size());
    for (size_t i = 0; i < token_power.configs.size(); ++i) {
        const TokenConfig& cfg = token_power.configs[i];
        TokenConfig complement;
        std::size_t pos = 0;
        for (int v = 0; v < t; ++v) {
            if (pos < cfg.size() && cfg[pos] == v)
                ++pos;
            else
                complement.push_back(v);
        }
        map[i] = target.index_of(complement);
    }
    return verify_iso(token_power.graph, target.graph, std::move(map),
                      "complement_iso");
}

Graph reduced_power_via_quotient(const Graph& g, int n) {
    if (n < 1) throw std::invalid_argument("reduced_power_via_quotient: n must be >= 1");
    int t = g.num_vertices();
    Graph box = box_power(g, n);
    long long n_configs = binomial(t + n - 1, n);
    Graph out(static_cast<int>(n_configs));
    // tuple id in the box power: most significant coordinate first
    auto config_of = [&](int id) {
        std::vector<int> tuple(n);
        for (int k = n - 1; k >= 0; --k) {
            tuple[k] = id % t;
            id /= t;
        }
        return eta(std::move(tuple));
    };
    for (const EdgeId& e : box.edges()) {
        long long a = multiset_rank(config_of(e.u), t);
        long long b = multiset_rank(config_of(e.v), t);
        if (a != b)
            out.add_edge_if_absent(static_cast<int>(a), static_cast<int>(b));
    }
    return out;
}

}  // namespace tokenhom
