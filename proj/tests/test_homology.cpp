#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <vector>

#include "tokenhom/complex.hpp"
#include "tokenhom/homology.hpp"
#include "tokenhom/snf.hpp"

using namespace tokenhom;
using boost::multiprecision::cpp_int;

namespace {

Graph random_connected_graph(std::mt19937& rng, int n, double p) {
    for (;;) {
        Graph g(n);
        std::bernoulli_distribution coin(p);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        if (g.is_connected()) return g;
    }
}

// Exact determinant via fraction-free elimination; independent of the SNF
// code path.
cpp_int determinant(const BigMatrix& m) {
    REQUIRE(m.rows == m.cols);
    int n = m.rows;
    std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[r][c] = m.at(r, c);
    cpp_int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c)
                a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

bool is_zero(const IntMatrix& m) {
    for (long long x : m.data)
        if (x != 0) return false;
    return true;
}

AbelianGroupDesc group(long long rank, std::vector<long long> torsion = {}) {
    return {rank, std::move(torsion)};
}

}  // namespace

TEST_CASE("smith normal form on named matrices") {
    SUBCASE("diag(2,3) -> (1, 6)") {
        IntMatrix m(2, 2);
        m.at(0, 0) = 2;
        m.at(1, 1) = 3;
        SnfResult r = smith_normal_form(m);
        CHECK(r.rank == 2);
        CHECK(r.factors == std::vector<long long>{1, 6});
        CHECK(r.nontrivial_factors() == std::vector<long long>{6});
    }
    SUBCASE("zero matrix") {
        SnfResult r = smith_normal_form(IntMatrix(3, 4));
        CHECK(r.rank == 0);
        CHECK(r.factors.empty());
    }
    SUBCASE("rank-1 multiple") {
        IntMatrix m(2, 2);
        m.at(0, 0) = 2;
        m.at(0, 1) = 4;
        m.at(1, 0) = 4;
        m.at(1, 1) = 8;
        SnfResult r = smith_normal_form(m);
        CHECK(r.rank == 1);
        CHECK(r.factors == std::vector<long long>{2});
    }
    SUBCASE("empty matrix") {
        SnfResult r = smith_normal_form(IntMatrix(0, 5));
        CHECK(r.rank == 0);
    }
}

TEST_CASE("smith normal form property suite: 500 random matrices") {
    std::mt19937 rng(600673);
    std::uniform_int_distribution<int> dim(1, 8), entry(-9, 9);
    for (int trial = 0; trial < 500; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (long long& x : m.data) x = entry(rng);

        SnfResult r = smith_normal_form(m, true);

        // divisibility chain, positivity
        for (size_t i = 0; i < r.factors.size(); ++i) {
            CHECK(r.factors[i] > 0);
            if (i > 0) CHECK(r.factors[i] % r.factors[i - 1] == 0);
        }
        // rank agrees with the independent rational-rank oracle
        CHECK(r.rank == rational_rank(m));
        CHECK(r.rank == static_cast<int>(r.factors.size()));

        // transform identity U * M * V = diag(factors)
        REQUIRE(r.u.has_value());
        REQUIRE(r.v.has_value());
        BigMatrix d = multiply(multiply(*r.u, BigMatrix(m)), *r.v);
        CHECK(d.rows == m.rows);
        CHECK(d.cols == m.cols);
        for (int i = 0; i < d.rows; ++i)
            for (int j = 0; j < d.cols; ++j) {
                long long expected =
                    (i == j && i < r.rank) ? r.factors[i] : 0;
                CHECK(d.at(i, j) == expected);
            }
        // unimodularity
        cpp_int du = determinant(*r.u), dv = determinant(*r.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
    }
}

TEST_CASE("rational rank oracle") {
    IntMatrix m(3, 3);
    // rows: (1,2,3), (2,4,6), (0,1,1) -> rank 2
    long long vals[9] = {1, 2, 3, 2, 4, 6, 0, 1, 1};
    for (int i = 0; i < 9; ++i) m.data[i] = vals[i];
    CHECK(rational_rank(m) == 2);
    CHECK(rational_rank(IntMatrix(4, 2)) == 0);
    CHECK(rational_rank(IntMatrix::identity(5)) == 5);
}

TEST_CASE("cellular H_1") {
    SUBCASE("Klein grid: Z + Z_2") {
        CHECK(h1_cellular(build_x(make_klein_grid(5))) == group(1, {2}));
    }
    SUBCASE("circle: Z") {
        CHECK(h1_cellular(build_x(make_cycle(5))) == group(1));
    }
    SUBCASE("filled square: trivial") {
        CHECK(h1_cellular(build_x(make_cycle(4))).trivial());
        CHECK(h1_cellular(build_x(make_cycle(3))).trivial());
    }
    SUBCASE("wedge of circles: free of the cycle count") {
        CHECK(h1_cellular(build_x(make_wedge_cycles(3, 5))) == group(3));
    }
    SUBCASE("tree: trivial") {
        CHECK(h1_cellular(build_x(make_star(5))).trivial());
    }
    SUBCASE("disconnected complex throws") {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        CHECK_THROWS_AS(h1_cellular(build_x(g)), std::invalid_argument);
    }
    SUBCASE("group description printer") {
        CHECK(group(0).to_string() == "0");
        CHECK(group(1, {2}).to_string() == "Z + Z/2");
        CHECK(group(3).to_string() == "Z^3");
    }
}

TEST_CASE("cubical chain complex") {
    SUBCASE("basis sizes on C_4") {
        CubicalBasis basis = cubical_basis(make_cycle(4));
        CHECK(basis.n_vertices == 4);
        CHECK(basis.dim1.size() == 8);  // each edge in both directions
        // dim-2 maps: neither direction collapses entirely
        for (const auto& q : basis.dim2) {
            CHECK(!(q[0] == q[1] && q[2] == q[3]));
            CHECK(!(q[0] == q[2] && q[1] == q[3]));
        }
    }
    SUBCASE("boundary of boundary vanishes (alternating signs)") {
        std::mt19937 rng(37);
        std::vector<Graph> fixtures = {make_cycle(4), make_cycle(5),
                                       make_complete(4), make_star(3),
                                       make_klein_grid(3)};
        for (int trial = 0; trial < 6; ++trial)
            fixtures.push_back(random_connected_graph(rng, 5, 0.5));
        for (const Graph& g : fixtures) {
            CubicalBasis basis = cubical_basis(g);
            CHECK(is_zero(multiply(cubical_boundary_1(basis),
                                   cubical_boundary_2(basis))));
        }
    }
    SUBCASE("a constant sign in the dim-2 boundary breaks the chain complex") {
        // with (-1)^n instead of (-1)^k both faces of each direction get the
        // same sign and d1 . d2 no longer vanishes
        Graph g = make_cycle(5);
        CubicalBasis basis = cubical_basis(g);
        IntMatrix bad_d2(static_cast<int>(basis.dim1.size()),
                         static_cast<int>(basis.dim2.size()));
        auto edge_pos = [&](int u, int v) {
            for (size_t i = 0; i < basis.dim1.size(); ++i)
                if (basis.dim1[i] == std::make_pair(u, v)) return static_cast<int>(i);
            return -1;
        };
        for (size_t j = 0; j < basis.dim2.size(); ++j) {
            auto [f00, f10, f01, f11] = basis.dim2[j];
            // all four face edges with the same (n = 2, even) sign
            for (auto [a, b] : {std::pair{f00, f01}, {f10, f11},
                                std::pair{f00, f10}, {f01, f11}}) {
                int e = edge_pos(a, b);
                if (e >= 0) bad_d2.at(e, static_cast<int>(j)) += 1;
            }
        }
        CHECK(!is_zero(multiply(cubical_boundary_1(basis), bad_d2)));
    }
    SUBCASE("named H_1 values") {
        CHECK(cubical_h1(make_complete(2)).trivial());
        CHECK(cubical_h1(make_cycle(5)) == group(1));
        CHECK(cubical_h1(make_cycle(4)).trivial());
    }
}

TEST_CASE("cubical oracle equals cellular H_1 on a 50-graph corpus") {
    std::mt19937 rng(50505);
    std::vector<Graph> corpus = {make_cycle(3), make_cycle(4), make_cycle(5),
                                 make_cycle(6), make_path(5), make_star(5),
                                 make_complete(4), make_complete(5),
                                 make_wedge_cycles(2, 3), make_klein_grid(2)};
    while (corpus.size() < 50)
        corpus.push_back(random_connected_graph(
            rng, 4 + static_cast<int>(corpus.size()) % 3, 0.5));
    for (const Graph& g : corpus)
        CHECK(cubical_h1(g) == h1_cellular(build_x(g)));
}

TEST_CASE("H_1 of a box product adds up") {
    std::vector<std::pair<Graph, Graph>> cases = {
        {make_cycle(5), make_complete(2)},
        {make_cycle(5), make_cycle(5)},
        {make_cycle(3), make_cycle(5)},
        {make_star(3), make_cycle(6)},
        {make_klein_grid(3), make_complete(2)},
    };
    for (const auto& [g, h] : cases) {
        AbelianGroupDesc left = h1_cellular(build_x(box_product(g, h)));
        AbelianGroupDesc hg = h1_cellular(build_x(g));
        AbelianGroupDesc hh = h1_cellular(build_x(h));
        CHECK(left.free_rank == hg.free_rank + hh.free_rank);
        std::vector<long long> torsion = hg.torsion;
        torsion.insert(torsion.end(), hh.torsion.begin(), hh.torsion.end());
        std::sort(torsion.begin(), torsion.end());
        std::vector<long long> got = left.torsion;
        std::sort(got.begin(), got.end());
        CHECK(got == torsion);
    }
}

TEST_CASE("cycle-basis decomposition of reduced powers") {
    SUBCASE("SP^2(C_5): rank 11 from 1 embedded cycle + 10 squares") {
        HombasisReport r = verify_hombasis(make_cycle(5), 2, {0});
        CHECK_MESSAGE(r.ok, r.detail);
        CHECK(r.cycle_rank == 11);
        CHECK(r.n_squares == 10);
        CHECK(r.n_tree_cycles == 1);
    }
    SUBCASE("tree base: nothing to span") {
        HombasisReport r = verify_hombasis(make_complete(2), 2, {0});
        CHECK_MESSAGE(r.ok, r.detail);
        CHECK(r.cycle_rank == 0);
        CHECK(r.n_tree_cycles == 0);
    }
    SUBCASE("wedge base") {
        HombasisReport r = verify_hombasis(make_wedge_cycles(2, 5), 2, {0});
        CHECK_MESSAGE(r.ok, r.detail);
        CHECK(r.n_tree_cycles == 2);
    }
    SUBCASE("background off the spanning-tree root") {
        HombasisReport r = verify_hombasis(make_cycle(5), 3, {2, 2});
        CHECK_MESSAGE(r.ok, r.detail);
    }
}
