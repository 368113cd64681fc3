#include <doctest.h>

#include "otsym/graph.hpp"

using namespace otsym;

namespace {

// Independent oracle: count proper colorings with t colors by exhaustive
// assignment.
long long count_colorings(const Graph& g, int t) {
    long long count = 0;
    std::vector<int> color(static_cast<std::size_t>(g.n()), 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == g.n()) {
            ++count;
            return;
        }
        for (int c = 0; c < t; ++c) {
            bool ok = true;
            for (auto [a, b] : g.edges()) {
                int other = a == v ? b : (b == v ? a : -1);
                if (other >= 0 && other < v && color[static_cast<std::size_t>(other)] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            color[static_cast<std::size_t>(v)] = c;
            self(self, v + 1);
        }
    };
    rec(rec, 0);
    return count;
}

IntPoly expand_roots(std::vector<long long> roots) {
    // t (t - r_1) (t - r_2) ...
    IntPoly p{BigInt(0), BigInt(1)};
    for (long long r : roots) p = detail::poly_mul(p, IntPoly{BigInt(-r), BigInt(1)});
    return p;
}

QSeries product_1_plus_kq(int m, int cap) {
    QSeries p = QSeries::one(cap);
    for (int k = 1; k <= m; ++k)
        p = p * (QSeries::one(cap) + QSeries::q_power(1, cap).scaled(Rational(k)));
    return p;
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph star_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("chromatic polynomial goldens") {
    // K_3: t(t-1)(t-2)
    CHECK(chromatic_polynomial(complete_graph(3)) == expand_roots({1, 2}));
    // path on 3 vertices: t(t-1)^2
    CHECK(chromatic_polynomial(path_graph(3)) == expand_roots({1, 1}));
    // K_4 minus an edge: t(t-1)(t-2)^2
    Graph k4_minus(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(chromatic_polynomial(k4_minus) == expand_roots({1, 2, 2}));
    // K_n: falling factorial
    for (int n = 1; n <= 7; ++n) {
        std::vector<long long> roots;
        for (int k = 1; k < n; ++k) roots.push_back(k);
        CHECK(chromatic_polynomial(complete_graph(n)) == expand_roots(roots));
    }
}

TEST_CASE("chromatic polynomial agrees with brute-force coloring counts") {
    std::vector<Graph> graphs = {
        path_graph(4), star_graph(5), complete_graph(4),
        Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}),
        Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}),            // 5-cycle
        Graph(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}}),    // triangle with a tail
        Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {2, 4}}),
    };
    for (const auto& g : graphs) {
        IntPoly p = chromatic_polynomial(g);
        CHECK(static_cast<int>(p.size()) == g.n() + 1);
        for (int t = 0; t <= 5; ++t)
            CHECK(int_poly_eval(p, BigInt(t)) == BigInt(count_colorings(g, t)));
    }
}

TEST_CASE("f and h polynomials: product formulas and forests") {
    // K_n: f = prod_{k=1}^{n-1} (1+kq), h = prod_{k=1}^{n-2} (1+kq)
    for (int n = 2; n <= 10; ++n) {
        Graph k = complete_graph(n);
        CHECK(f_poly(k, n - 1) == product_1_plus_kq(n - 1, n - 1));
        CHECK(h_poly(k, n - 1) == product_1_plus_kq(n - 2, n - 1));
    }

    // path on 3 vertices: f = (1+q)^2, h = 1
    Graph p3 = path_graph(3);
    CHECK(f_poly(p3, 2) == QSeries(2, {Rational(1), Rational(2), Rational(1)}));
    CHECK(h_poly(p3, 2) == QSeries::one(2));

    // trees have h = 1
    for (int n = 2; n <= 7; ++n) {
        CHECK(h_poly(path_graph(n), n - 1).is_one());
        CHECK(h_poly(star_graph(n), n - 1).is_one());
    }
}

TEST_CASE("cone construction") {
    CHECK(Graph(1, {}).cone().canonical_key() == complete_graph(2).canonical_key());
    // cone over the path 1-2-3 is K_4 minus one edge
    Graph k4_minus(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
    CHECK(path_graph(3).cone().canonical_key() == k4_minus.canonical_key());
    for (int n = 1; n <= 6; ++n)
        CHECK(complete_graph(n).cone().canonical_key() == complete_graph(n + 1).canonical_key());
}

TEST_CASE("cone identity h_cone = f on all connected graphs with <= 5 vertices") {
    // labeled connected graph counts, as an enumeration sanity check
    std::vector<std::size_t> labeled_counts = {0, 1, 1, 4, 38, 728};
    for (int n = 1; n <= 5; ++n) {
        std::vector<Graph> graphs = all_connected_graphs(n);
        CHECK(graphs.size() == labeled_counts[static_cast<std::size_t>(n)]);

        for (const Graph& g : graphs) {
            QSeries f = f_poly(g, g.n());
            QSeries h = h_poly(g.cone(), g.n());
            CHECK(f == h);
            // nonnegativity and constant term 1
            CHECK(f.all_nonneg_integers());
            CHECK(f.coeff(0) == Rational(1));
            QSeries hg = h_poly(g, g.n());
            CHECK(hg.all_nonneg_integers());
            CHECK(hg.coeff(0) == Rational(1));
        }
    }
}

TEST_CASE("disconnected input is rejected with the components named") {
    Graph g(5, {{0, 1}, {2, 3}});
    CHECK(!g.is_connected());
    try {
        f_poly(g, 4);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        CHECK(msg.find("disconnected") != std::string::npos);
        CHECK(msg.find("{1,2}") != std::string::npos);
        CHECK(msg.find("{3,4}") != std::string::npos);
        CHECK(msg.find("{5}") != std::string::npos);
    }
}

TEST_CASE("edge list parsing") {
    Graph g = Graph::from_edge_list_text("# a comment\n1 2\n2 3\n\n3 1\n");
    CHECK(g.n() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.canonical_key() == complete_graph(3).canonical_key());
    CHECK_THROWS_AS(Graph::from_edge_list_text("0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list_text("1 x\n"), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
}
