#include "tokenhom/exchanges.hpp"

#include <algorithm>
#include <set>

#include "tokenhom/combinatorics.hpp"

namespace tokenhom {

std::string to_string(ExchangeKind kind) {
    switch (kind) {
        case ExchangeKind::a: return "a";
        case ExchangeKind::a_prime: return "a'";
        case ExchangeKind::b: return "b";
        case ExchangeKind::b_prime: return "b'";
        case ExchangeKind::c: return "c";
        case ExchangeKind::c_prime: return "c'";
    }
    return "?";
}

namespace {

std::set<int> symmetric_difference(const TokenConfig& a, const TokenConfig& b) {
    std::set<int> out;
    std::vector<int> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(diff));
    out.insert(diff.begin(), diff.end());
    return out;
}

// Walk order of the cycle induced on `support` in G; throws if the induced
// subgraph is not a single cycle.
std::vector<int> support_walk(const Graph& g, const std::set<int>& support) {
    std::vector<int> verts(support.begin(), support.end());
    std::vector<std::vector<int>> nbrs(verts.size());
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = 0; j < verts.size(); ++j)
            if (i != j && g.has_edge(verts[i], verts[j]))
                nbrs[i].push_back(static_cast<int>(j));
    for (const auto& nb : nbrs)
        if (nb.size() != 2)
            throw std::domain_error(
                "local exchange support is not a chordless cycle; the "
                "six-kind taxonomy does not cover this graph");
    std::vector<int> walk{0, nbrs[0][0]};
    while (walk.size() < verts.size()) {
        int prev = walk[walk.size() - 2], at = walk.back();
        walk.push_back(nbrs[at][0] == prev ? nbrs[at][1] : nbrs[at][0]);
    }
    std::vector<int> out;
    for (int i : walk) out.push_back(verts[i]);
    return out;
}

LocalExchange classify(const PowerGraph& tok, const std::vector<int>& cycle) {
    const Graph& g = tok.base;
    int len = static_cast<int>(cycle.size());
    std::set<int> moved;
    for (int i = 0; i < len; ++i) {
        auto diff = symmetric_difference(tok.configs[cycle[i]],
                                         tok.configs[cycle[(i + 1) % len]]);
        moved.insert(diff.begin(), diff.end());
    }
    LocalExchange ex;
    ex.cycle = cycle;
    ex.support = support_walk(g, moved);

    const TokenConfig& initial = tok.configs[cycle[0]];
    std::vector<int> on_support;
    for (int v : initial)
        if (moved.count(v))
            on_support.push_back(v);
        else
            ex.stationary.push_back(v);
    int s = static_cast<int>(on_support.size());

    if (len == 3) {
        if (static_cast<int>(moved.size()) != 3 || (s != 1 && s != 2))
            throw std::domain_error("unclassifiable 3-cycle exchange");
        ex.kind = s == 1 ? ExchangeKind::a : ExchangeKind::a_prime;
        return ex;
    }
    if (static_cast<int>(moved.size()) != 4)
        throw std::domain_error("unclassifiable 4-cycle exchange");
    switch (s) {
        case 1: ex.kind = ExchangeKind::b; break;
        case 3: ex.kind = ExchangeKind::b_prime; break;
        case 2: {
            // adjacent support tokens at the initial configuration -> c
            auto pos = [&](int v) {
                return static_cast<int>(std::find(ex.support.begin(), ex.support.end(), v) -
                                        ex.support.begin());
            };
            int d = std::abs(pos(on_support[0]) - pos(on_support[1]));
            ex.kind = (d == 1 || d == 3) ? ExchangeKind::c : ExchangeKind::c_prime;
            break;
        }
        default:
            throw std::domain_error("unclassifiable 4-cycle exchange");
    }
    return ex;
}

}  // namespace

std::vector<LocalExchange> enumerate_local_exchanges(const Graph& g, int n,
                                                     long long vertex_cap) {
    PowerGraph tok = token_graph(g, n, vertex_cap);

    std::set<std::vector<int>> squares;
    if (n >= 2)
        for (const CartesianSquare& sq : cartesian_squares(tok))
            squares.insert(canonical_face(
                {static_cast<int>(sq.corners[0]), static_cast<int>(sq.corners[1]),
                 static_cast<int>(sq.corners[2]), static_cast<int>(sq.corners[3])}));

    std::vector<LocalExchange> out;
    for (const auto& tri : triangles(tok.graph))
        out.push_back(classify(tok, {tri[0], tri[1], tri[2]}));
    for (const auto& quad : chordless_4cycles(tok.graph)) {
        std::vector<int> face = canonical_face({quad[0], quad[1], quad[2], quad[3]});
        if (squares.count(face)) continue;
        out.push_back(classify(tok, face));
    }
    return out;
}

long long count_local_exchanges(int n_vertices, int n, long long kappa3, long long kappa4) {
    if (n < 3 || n_vertices < n + 3)
        throw std::invalid_argument(
            "count_local_exchanges: formula requires n >= 3 and N >= n+3");
    long long big_n = n_vertices;
    return kappa3 * (binomial(big_n - 3, n - 1) + binomial(big_n - 3, n - 2)) +
           kappa4 * (binomial(big_n - 4, n - 1) + 4 * binomial(big_n - 4, n - 2) +
                     binomial(big_n - 4, n - 3));
}

long long rank_wedge_braid2(long long k) {
    if (k < 1) throw std::invalid_argument("rank_wedge_braid2: k must be >= 1");
    return 3 * binomial(k, 2) + 1;
}

long long rank_wedge_h1(long long n, long long k) {
    if (k < 1 || n < 1) throw std::invalid_argument("rank_wedge_h1: n, k must be >= 1");
    return (2 * n - 1) * binomial(n + k - 2, n) + 1;
}

long long rank_star_conjecture(long long m, long long n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("rank_star_conjecture: m, n must be >= 1");
    return (n - 1) * binomial(m, n) - binomial(m, n - 1) + 1;
}

long long rank_star_braid(long long m, long long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("rank_star_braid: m, n must be >= 1");
    return (m - 2) * binomial(n + m - 2, n - 1) - binomial(n + m - 2, n) + 1;
}

StarConjectureReport verify_star_conjecture(int m, int n, long long vertex_cap) {
    StarConjectureReport report;
    report.expected_rank = rank_star_conjecture(m, n);
    PowerGraph tok = token_graph(make_star(m), n, vertex_cap);
    report.computed = h1_cellular(build_x(tok));
    report.ok = report.computed.torsion.empty() &&
                report.computed.free_rank == report.expected_rank;
    return report;
}

}  // namespace tokenhom
