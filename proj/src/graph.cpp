#include "tokenhom/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tokenhom {

Graph::Graph(int n_vertices) {
    if (n_vertices < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.resize(n_vertices);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= num_vertices())
        throw std::out_of_range("Graph: vertex id out of range");
}

void Graph::add_edge(int u, int v) {
    if (!add_edge_if_absent(u, v))
        throw std::invalid_argument("Graph: duplicate edge");
}

bool Graph::add_edge_if_absent(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return false;
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++n_edges_;
    return true;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<EdgeId> Graph::edges() const {
    std::vector<EdgeId> out;
    out.reserve(n_edges_);
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    if (num_vertices() == 0) return true;
    auto dist = bfs_distances(0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

std::vector<int> Graph::bfs_distances(int source) const {
    return bfs_distances(std::vector<int>{source});
}

std::vector<int> Graph::bfs_distances(const std::vector<int>& sources) const {
    std::vector<int> dist(num_vertices(), -1);
    std::deque<int> queue;
    for (int s : sources) {
        check_vertex(s);
        if (dist[s] == -1) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : adj_[u])
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

void Graph::set_label(int v, std::string label) {
    check_vertex(v);
    if (labels_.empty()) labels_.resize(num_vertices());
    labels_[v] = std::move(label);
}

const std::string& Graph::label(int v) const {
    check_vertex(v);
    static const std::string empty;
    return labels_.empty() ? empty : labels_[v];
}

// --- generators -----------------------------------------------------------

Graph make_path(int m) {
    if (m < 0) throw std::invalid_argument("make_path: m must be >= 0");
    Graph g(m + 1);
    for (int i = 0; i < m; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int m) {
    if (m < 3) throw std::invalid_argument("make_cycle: m must be >= 3");
    Graph g(m);
    for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
    return g;
}

Graph make_star(int m) {
    if (m < 1) throw std::invalid_argument("make_star: m must be >= 1");
    Graph g(m + 1);
    for (int i = 1; i <= m; ++i) g.add_edge(0, i);
    return g;
}

Graph make_complete(int t) {
    if (t < 1) throw std::invalid_argument("make_complete: t must be >= 1");
    Graph g(t);
    for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
    return g;
}

Graph make_wedge_cycles(int k, int m) {
    if (k < 1) throw std::invalid_argument("make_wedge_cycles: k must be >= 1");
    if (m < 3) throw std::invalid_argument("make_wedge_cycles: m must be >= 3");
    Graph g(1 + k * (m - 1));
    for (int j = 0; j < k; ++j) {
        int base = 1 + j * (m - 1);
        g.add_edge(0, base);
        for (int i = 0; i < m - 2; ++i) g.add_edge(base + i, base + i + 1);
        g.add_edge(base + m - 2, 0);
    }
    return g;
}

Graph make_klein_grid(int s) {
    if (s < 2) throw std::invalid_argument("make_klein_grid: s must be >= 2");
    auto id = [s](int x, int y) { return x + s * y; };
    Graph g(s * s);
    for (int y = 0; y < s; ++y)
        for (int x = 0; x < s; ++x) {
            g.add_edge_if_absent(id(x, y), id((x + 1) % s, y));
            if (y < s - 1)
                g.add_edge_if_absent(id(x, y), id(x, y + 1));
            else
                g.add_edge_if_absent(id(x, s - 1), id((s - x) % s, 0));
        }
    return g;
}

Graph generate(GraphFamily family, const std::vector<int>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("generate: wrong parameter count");
    };
    switch (family) {
        case GraphFamily::path: need(1); return make_path(params[0]);
        case GraphFamily::cycle: need(1); return make_cycle(params[0]);
        case GraphFamily::star: need(1); return make_star(params[0]);
        case GraphFamily::complete: need(1); return make_complete(params[0]);
        case GraphFamily::wedge_cycles: need(2); return make_wedge_cycles(params[0], params[1]);
        case GraphFamily::klein_grid: need(1); return make_klein_grid(params[0]);
    }
    throw std::invalid_argument("generate: unknown family");
}

// --- structural operations ------------------------------------------------

Graph box_product(const Graph& g, const Graph& h) {
    int nh = h.num_vertices();
    Graph out(g.num_vertices() * nh);
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v = 0; v < nh; ++v) {
            for (int w : h.neighbors(v))
                if (v < w) out.add_edge(u * nh + v, u * nh + w);
            for (int x : g.neighbors(u))
                if (u < x) out.add_edge(u * nh + v, x * nh + v);
        }
    return out;
}

Graph box_power(const Graph& g, int n) {
    if (n < 1) throw std::invalid_argument("box_power: n must be >= 1");
    Graph out = g;
    for (int i = 1; i < n; ++i) out = box_product(out, g);
    return out;
}

Graph subdivide(const Graph& g, const std::map<EdgeId, int>& counts) {
    auto all_edges = g.edges();
    std::set<EdgeId> known(all_edges.begin(), all_edges.end());
    int extra = 0;
    for (const auto& [e, k] : counts) {
        if (k < 0) throw std::invalid_argument("subdivide: negative count");
        if (!known.count(e)) throw std::invalid_argument("subdivide: unknown edge");
        extra += k;
    }
    Graph out(g.num_vertices() + extra);
    int next = g.num_vertices();
    for (const EdgeId& e : all_edges) {
        auto it = counts.find(e);
        int k = it == counts.end() ? 0 : it->second;
        if (k == 0) {
            out.add_edge(e.u, e.v);
            continue;
        }
        int prev = e.u;
        for (int i = 0; i < k; ++i) {
            out.add_edge(prev, next);
            prev = next++;
        }
        out.add_edge(prev, e.v);
    }
    return out;
}

Graph subdivide_uniform(const Graph& g, int k_per_edge) {
    std::map<EdgeId, int> counts;
    for (const EdgeId& e : g.edges()) counts.emplace(e, k_per_edge);
    return subdivide(g, counts);
}

std::vector<int> essential_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) != 2) out.push_back(v);
    return out;
}

SubdivisionCheck is_sufficiently_subdivided(const Graph& g, int n) {
    if (!g.is_connected())
        throw std::invalid_argument("is_sufficiently_subdivided: graph must be connected");
    SubdivisionCheck result;
    auto essential = essential_vertices(g);

    // Condition 1: essential-to-essential shortest distance >= n-1. The
    // shortest path is the binding case among all paths between the pair.
    for (size_t i = 0; i < essential.size(); ++i) {
        auto dist = g.bfs_distances(essential[i]);
        for (size_t j = i + 1; j < essential.size(); ++j)
            if (dist[essential[j]] < n - 1) {
                result.witness.close_pair = {essential[i], essential[j]};
                return result;
            }
    }

    // Condition 2: cycles longer than n pass outright, so a length-n cap on
    // the enumeration is exact.
    auto cycles = simple_cycles_up_to(g, n);
    for (const auto& cycle : cycles) {
        auto dist = g.bfs_distances(cycle);
        int len = static_cast<int>(cycle.size());
        for (int v : essential)
            if (len + 2 * dist[v] < n + 1) {
                result.witness.vertex = v;
                result.witness.short_cycle = cycle;
                return result;
            }
    }
    result.ok = true;
    return result;
}

Graph subdivide_for(const Graph& g, int n) {
    for (int k = 0;; ++k) {
        Graph candidate = k == 0 ? g : subdivide_uniform(g, k);
        if (is_sufficiently_subdivided(candidate, n).ok) return candidate;
    }
}

// --- cycle enumeration ----------------------------------------------------

std::vector<std::array<int, 3>> triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            // common neighbors above v
            for (int w : g.neighbors(v))
                if (w > v && g.has_edge(u, w)) out.push_back({u, v, w});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<int, 4>> chordless_4cycles(const Graph& g) {
    std::vector<std::array<int, 4>> out;
    int n = g.num_vertices();
    // Scan diagonal pairs {u, w}: a chordless 4-cycle u-a-w-b needs u,w and
    // a,b both non-adjacent. Each cycle has two diagonals; keep the one whose
    // diagonal contains the overall minimum vertex.
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) {
            if (g.has_edge(u, w)) continue;
            const auto& nu = g.neighbors(u);
            const auto& nw = g.neighbors(w);
            std::vector<int> common;
            std::set_intersection(nu.begin(), nu.end(), nw.begin(), nw.end(),
                                  std::back_inserter(common));
            for (size_t i = 0; i < common.size(); ++i)
                for (size_t j = i + 1; j < common.size(); ++j) {
                    int a = common[i], b = common[j];
                    if (a < u) continue;  // min vertex lives on the other diagonal
                    if (g.has_edge(a, b)) continue;
                    out.push_back({u, a, w, b});
                }
        }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void cycle_dfs(const Graph& g, int root, std::vector<int>& path,
               std::vector<char>& on_path, int max_length,
               std::vector<std::vector<int>>& out) {
    int last = path.back();
    for (int w : g.neighbors(last)) {
        if (w == root && path.size() >= 3) {
            // canonical direction: second vertex smaller than last
            if (path[1] < path.back()) out.push_back(path);
            continue;
        }
        if (w <= root || on_path[w]) continue;
        if (static_cast<int>(path.size()) >= max_length) continue;
        path.push_back(w);
        on_path[w] = 1;
        cycle_dfs(g, root, path, on_path, max_length, out);
        on_path[w] = 0;
        path.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> simple_cycles_up_to(const Graph& g, int max_length) {
    std::vector<std::vector<int>> out;
    if (max_length < 3) return out;
    std::vector<char> on_path(g.num_vertices(), 0);
    for (int root = 0; root < g.num_vertices(); ++root) {
        std::vector<int> path{root};
        on_path[root] = 1;
        cycle_dfs(g, root, path, on_path, max_length, out);
        on_path[root] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tokenhom
