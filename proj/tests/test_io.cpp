#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "tokenhom/complex.hpp"
#include "tokenhom/io.hpp"
#include "tokenhom/power.hpp"

using namespace tokenhom;
using nlohmann::json;

namespace {

Graph parse(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

}  // namespace

TEST_CASE("edge-list reading") {
    SUBCASE("plain pairs; vertex count from max id") {
        Graph g = parse("0 1\n1 2\n");
        CHECK(g.num_vertices() == 3);
        CHECK(g.num_edges() == 2);
        CHECK(g.has_edge(1, 2));
    }
    SUBCASE("vertex-count header adds isolated vertices") {
        Graph g = parse("# vertices: 5\n0 1\n");
        CHECK(g.num_vertices() == 5);
        CHECK(g.num_edges() == 1);
    }
    SUBCASE("comments and blank lines are ignored") {
        Graph g = parse("# a comment\n\n0 1  # trailing comment\n\n# another\n");
        CHECK(g.num_vertices() == 2);
        CHECK(g.num_edges() == 1);
    }
    SUBCASE("empty input gives the empty graph") {
        Graph g = parse("");
        CHECK(g.num_vertices() == 0);
        CHECK(g.num_edges() == 0);
    }
    SUBCASE("error cases") {
        CHECK_THROWS_AS(parse("0 1\n1 0\n"), std::invalid_argument);  // duplicate
        CHECK_THROWS_AS(parse("2 2\n"), std::invalid_argument);       // loop
        CHECK_THROWS_AS(parse("-1 0\n"), std::invalid_argument);      // negative
        CHECK_THROWS_AS(parse("0 1 2\n"), std::invalid_argument);     // trailing
        CHECK_THROWS_AS(parse("0\n"), std::invalid_argument);         // missing v
    }
}

TEST_CASE("edge-list round trip") {
    Graph g = make_wedge_cycles(2, 4);
    std::ostringstream out;
    write_edge_list(g, out);
    Graph back = parse(out.str());
    CHECK(back.num_vertices() == g.num_vertices());
    CHECK(back.edges() == g.edges());

    // the header preserves isolated vertices
    std::ostringstream out2;
    write_edge_list(Graph(4), out2);
    CHECK(parse(out2.str()).num_vertices() == 4);
}

TEST_CASE("dot output") {
    SUBCASE("plain graph") {
        std::string dot = to_dot(make_path(3));
        CHECK(dot.find("graph G {") == 0);
        CHECK(dot.find("0 -- 1;") != std::string::npos);
        CHECK(dot.find("1 -- 2;") != std::string::npos);
        CHECK(dot.find("label") == std::string::npos);
    }
    SUBCASE("power graph carries monomial labels") {
        PowerGraph p = reduced_power(make_complete(2), 2);
        std::string dot = to_dot(p);
        for (const TokenConfig& cfg : p.configs)
            CHECK(dot.find("label=\"" + config_label(cfg) + "\"") !=
                  std::string::npos);
    }
}

TEST_CASE("power index json") {
    PowerGraph p = token_graph(make_star(3), 2);
    json parsed = json::parse(power_index_json(p));
    CHECK(parsed["base_vertices"] == 4);
    CHECK(parsed["n"] == 2);
    CHECK(parsed["variant"] == "token");
    REQUIRE(parsed["configs"].size() == p.configs.size());
    for (size_t i = 0; i < p.configs.size(); ++i)
        CHECK(parsed["configs"][i].get<TokenConfig>() == p.configs[i]);

    json reduced = json::parse(power_index_json(reduced_power(make_path(2), 2)));
    CHECK(reduced["variant"] == "reduced");
}

TEST_CASE("json serializers") {
    SUBCASE("two-complex") {
        TwoComplex x = build_x(make_cycle(4));
        json parsed = json::parse(to_json(x));
        CHECK(parsed["vertices"] == 4);
        CHECK(parsed["edges"].size() == 4);
        REQUIRE(parsed["faces"].size() == 1);
        CHECK(parsed["faces"][0].size() == 4);
    }
    SUBCASE("abelian group") {
        json parsed = json::parse(to_json(AbelianGroupDesc{1, {2}}));
        CHECK(parsed["rank"] == 1);
        CHECK(parsed["torsion"] == json::array({2}));
    }
    SUBCASE("presentation") {
        json parsed = json::parse(to_json(Presentation{2, {{1, 2, 1, -2}}}));
        CHECK(parsed["generators"] == 2);
        CHECK(parsed["relators"] == json::array({{1, 2, 1, -2}}));
    }
}

TEST_CASE("triplet matrix round trip") {
    IntMatrix m(3, 4);
    m.at(0, 0) = 5;
    m.at(2, 3) = -7;
    m.at(1, 2) = 1;
    std::ostringstream out;
    write_triplets(m, out);
    std::istringstream in(out.str());
    CHECK(read_triplets(in) == m);

    std::istringstream empty("0 0\n");
    CHECK(read_triplets(empty) == IntMatrix(0, 0));

    std::istringstream bad_header("");
    CHECK_THROWS_AS(read_triplets(bad_header), std::invalid_argument);
    std::istringstream out_of_range("2 2\n2 0 1\n");
    CHECK_THROWS_AS(read_triplets(out_of_range), std::invalid_argument);
}
