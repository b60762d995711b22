#include "tokenhom/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tokenhom {

using nlohmann::json;

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> pairs;
    int n_vertices = 0;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            // optional "# vertices: n" header
            std::istringstream comment(line.substr(hash + 1));
            std::string word;
            long long n;
            if (comment >> word >> n && word == "vertices:")
                n_vertices = std::max<long long>(n_vertices, n);
            line.erase(hash);
        }
        std::istringstream fields(line);
        long long u, v;
        if (!(fields >> u)) continue;
        if (!(fields >> v))
            throw std::invalid_argument("edge list: missing second vertex");
        std::string trailing;
        if (fields >> trailing)
            throw std::invalid_argument("edge list: trailing tokens");
        if (u < 0 || v < 0) throw std::invalid_argument("edge list: negative id");
        if (u == v) throw std::invalid_argument("edge list: self-loop");
        pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
        n_vertices = std::max<long long>({static_cast<long long>(n_vertices), u + 1, v + 1});
    }
    Graph g(n_vertices);
    for (auto [u, v] : pairs)
        if (!g.add_edge_if_absent(u, v))
            throw std::invalid_argument("edge list: duplicate edge");
    return g;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "# vertices: " << g.num_vertices() << "\n";
    for (const EdgeId& e : g.edges()) out << e.u << " " << e.v << "\n";
}

namespace {

std::string dot_of(const Graph& g, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << "  " << v;
        if (!labels.empty()) out << " [label=\"" << labels[v] << "\"]";
        out << ";\n";
    }
    for (const EdgeId& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace

std::string to_dot(const Graph& g) {
    std::vector<std::string> labels;
    if (g.has_labels())
        for (int v = 0; v < g.num_vertices(); ++v) labels.push_back(g.label(v));
    return dot_of(g, labels);
}

std::string to_dot(const PowerGraph& p) {
    std::vector<std::string> labels;
    labels.reserve(p.configs.size());
    for (const TokenConfig& cfg : p.configs) labels.push_back(config_label(cfg));
    return dot_of(p.graph, labels);
}

std::string power_index_json(const PowerGraph& p) {
    json table = json::array();
    for (const TokenConfig& cfg : p.configs) table.push_back(cfg);
    json out{{"base_vertices", p.base.num_vertices()},
             {"n", p.n},
             {"variant", p.variant == PowerVariant::reduced ? "reduced" : "token"},
             {"configs", std::move(table)}};
    return out.dump();
}

std::string to_json(const TwoComplex& x) {
    json edges = json::array();
    for (const EdgeId& e : x.edges) edges.push_back({e.u, e.v});
    json out{{"vertices", x.n_vertices}, {"edges", std::move(edges)}, {"faces", x.faces}};
    return out.dump();
}

std::string to_json(const AbelianGroupDesc& g) {
    return json{{"rank", g.free_rank}, {"torsion", g.torsion}}.dump();
}

std::string to_json(const Presentation& p) {
    return json{{"generators", p.n_generators}, {"relators", p.relators}}.dump();
}

void write_triplets(const IntMatrix& m, std::ostream& out) {
    out << m.rows << " " << m.cols << "\n";
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.at(r, c) != 0) out << r << " " << c << " " << m.at(r, c) << "\n";
}

IntMatrix read_triplets(std::istream& in) {
    int rows, cols;
    if (!(in >> rows >> cols)) throw std::invalid_argument("triplets: missing header");
    IntMatrix m(rows, cols);
    int r, c;
    long long value;
    while (in >> r >> c >> value) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw std::invalid_argument("triplets: index out of range");
        m.at(r, c) = value;
    }
    return m;
}

}  // namespace tokenhom
