#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "circpow/constructions.hpp"
#include "circpow/hom.hpp"
#include "oracles.hpp"

using namespace circpow;

namespace {

long long choose(int m, int n) {
    long long r = 1;
    for (int i = 1; i <= n; ++i) r = r * (m - n + i) / i;
    return r;
}

} // namespace

TEST_CASE("circular_complete") {
    CHECK(are_isomorphic(circular_complete(5, 1), complete_graph(5)));
    CHECK(are_isomorphic(circular_complete(9, 4), cycle_graph(9)));
    CHECK(are_isomorphic(circular_complete(5, 2), cycle_graph(5)));
    CHECK(circular_complete(9, 4).size() == 9);
    CHECK_THROWS_AS(circular_complete(3, 2), GraphError);
    CHECK_THROWS_AS(circular_complete(5, 0), GraphError);

    // K_{n/1} = K_n and K_{2d+1}/d = C_{2d+1} generally.
    for (int n = 2; n <= 8; ++n)
        CHECK(are_isomorphic(circular_complete(n, 1), complete_graph(n)));
    for (int d = 1; d <= 4; ++d)
        CHECK(are_isomorphic(circular_complete(2 * d + 1, d), cycle_graph(2 * d + 1)));
}

TEST_CASE("kneser") {
    Graph pet = kneser(5, 2, 0);
    CHECK(pet.order() == 10);
    CHECK(pet.size() == 15);
    for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
    CHECK(odd_girth(pet) == 5);

    CHECK(are_isomorphic(kneser(5, 2, 1), complete_graph(10)));
    CHECK_THROWS_AS(kneser(3, 5, 0), GraphError);

    // Vertex order is lexicographic over sorted subsets.
    SetMap sets = kneser_vertex_sets(4, 2);
    CHECK(sets.front() == std::vector<int>{1, 2});
    CHECK(sets.back() == std::vector<int>{3, 4});
    CHECK(std::is_sorted(sets.begin(), sets.end()));

    for (auto [m, n] : {std::pair{5, 2}, std::pair{6, 2}, std::pair{7, 3}})
        CHECK(kneser(m, n, 0).order() == choose(m, n));

    // KG(2n+1, n) has odd girth 2n+1; its shortest odd cycle is an induced
    // C_{2n+1}.
    for (int n = 2; n <= 4; ++n)
        CHECK(odd_girth(kneser(2 * n + 1, n, 0)) == 2 * n + 1);
}

TEST_CASE("subdivide") {
    CHECK(oracles::is_cycle(subdivide(complete_graph(3), 3), 9));
    Graph k4 = complete_graph(4);
    CHECK(subdivide(k4, 1) == k4);
    Graph s = subdivide(k4, 3);
    CHECK(s.order() == 16);
    CHECK(s.size() == 18);
    CHECK_THROWS_AS(subdivide(k4, 0), GraphError);

    // Order and size formulas on random graphs.
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = oracles::random_graph(6, 0.5, rng);
        for (int t = 2; t <= 4; ++t) {
            Graph sub = subdivide(g, t);
            CHECK(sub.order() == g.order() + (t - 1) * g.size());
            CHECK(sub.size() == t * g.size());
        }
    }

    // Internal vertices carry provenance labels.
    CHECK(subdivide(complete_graph(3), 2).labels()[3] == "(0,1,1)");
}

TEST_CASE("frac_power") {
    Graph f = frac_power(complete_graph(4), 1, 3);
    CHECK(f.order() == 16);
    CHECK(f == subdivide(complete_graph(4), 3));

    Graph g = frac_power(complete_graph(4), 3, 5);
    CHECK(g.order() == 28);

    CHECK_THROWS_AS(frac_power(complete_graph(4), 3, 1), LoopCreatedError);
    CHECK_THROWS_AS(frac_power(complete_graph(4), 0, 3), GraphError);
}

TEST_CASE("dual_power_base") {
    Graph c5 = cycle_graph(5);
    CHECK(dual_power_base(c5, 0) == c5);
    CHECK(dual_power_base(c5, 1).order() == 15);
    CHECK(dual_power_base(complete_graph(3), 1).order() == 9);
    CHECK_THROWS_AS(dual_power_base(c5, 2, 50), CapExceededError);

    // Hand count for the triangle: tuples ({v}, A) and ({w}, B) are adjacent
    // iff v != w, w in A, v in B and A, B disjoint; three choices survive per
    // unordered root pair, so 9 edges.
    Graph d3 = dual_power_base(complete_graph(3), 1);
    CHECK(d3.size() == 9);

    // s = 0 keeps any graph fixed.
    std::mt19937 rng(37);
    for (int trial = 0; trial < 5; ++trial) {
        Graph g = oracles::random_graph(6, 0.4, rng);
        CHECK(dual_power_base(g, 0) == g);
    }
}

TEST_CASE("dual_power") {
    Graph c5 = cycle_graph(5);
    CHECK(are_isomorphic(dual_power(c5, 1, 0), complete_graph(5)));
    // Structural equality ignores names, so r = 0 is exactly the base graph.
    CHECK(dual_power(c5, 0, 1) == dual_power_base(c5, 1));
    // Construction used by the adjunction checks: builds without loops.
    Graph d = dual_power(cycle_graph(9), 1, 1);
    CHECK(d.order() == 27);
}

TEST_CASE("hajos_chain") {
    Graph h24 = hajos_chain(2, 4);
    CHECK(h24.order() == 7);
    CHECK(h24.size() == 11);

    Graph h25 = hajos_chain(2, 5);
    CHECK(h25.order() == 9);
    CHECK(h25.size() == 19);

    Graph h34 = hajos_chain(3, 4);
    CHECK(h34.order() == 10);
    CHECK(h34.size() == 16);

    // d*C(n,2) - d + 1 edges, d(n-1)+1 vertices.
    for (int d = 2; d <= 4; ++d)
        for (int n = 3; n <= 5; ++n) {
            Graph h = hajos_chain(d, n);
            CHECK(h.order() == d * (n - 1) + 1);
            CHECK(h.size() == d * (n * (n - 1) / 2) - d + 1);
        }

    CHECK(h24.labels()[0] == "v1");
    CHECK(h24.labels()[3] == "w1");
    CHECK(h24.labels()[6] == "w2");
    CHECK_THROWS_AS(hajos_chain(1, 4), GraphError);
    CHECK_THROWS_AS(hajos_chain(2, 2), GraphError);
}

TEST_CASE("hajos_circular_coloring") {
    ColorMap c = hajos_circular_coloring(2, 4);
    CHECK(c[0] == 7);  // v_1
    CHECK(c[3] == 1);  // w_1
    CHECK(c[6] == 2);  // w_2
    CHECK(c[1] == 3);  // u_{12}

    // Valid homomorphism into K(7/2).
    Graph h24 = hajos_chain(2, 4);
    CHECK(check_homomorphism(certificate_from_coloring(c), h24, circular_complete(7, 2)));

    // Image stays within 1..d(n-1)+1.
    ColorMap c34 = hajos_circular_coloring(3, 4);
    for (int color : c34) {
        CHECK(color >= 1);
        CHECK(color <= 10);
    }
    CHECK(check_homomorphism(certificate_from_coloring(c34), hajos_chain(3, 4),
                             circular_complete(10, 3)));
}

TEST_CASE("fractional_embedding on the K_3 instance") {
    Graph k3 = complete_graph(3);
    SetMap f = {{1}, {2}, {3}};
    SetMap g = fractional_embedding(k3, f, 3, 1, 1);
    for (const auto& set : g) CHECK(set.size() == 4); // sm + n
    for (auto [u, v] : k3.edges()) {
        std::vector<int> common;
        std::set_intersection(g[u].begin(), g[u].end(), g[v].begin(), g[v].end(),
                              std::back_inserter(common));
        CHECK(common.size() == 1); // (m - 2n)s
    }
}

TEST_CASE("fractional_embedding degenerate and error cases") {
    Graph k3 = complete_graph(3);
    SetMap f = {{1}, {2}, {3}};
    // s = 0 is the identity relabeling.
    CHECK(fractional_embedding(k3, f, 3, 1, 0) == f);

    SetMap bad = {{1}, {1}, {3}}; // edge 0-1 not disjoint
    CHECK_THROWS_AS(fractional_embedding(k3, bad, 3, 1, 1), GraphError);
    SetMap wrong_size = {{1, 2}, {2, 3}, {3, 1}};
    CHECK_THROWS_AS(fractional_embedding(k3, wrong_size, 3, 1, 1), GraphError);
}

TEST_CASE("fractional_embedding property on random instances") {
    std::mt19937 rng(41);
    int tested = 0;
    while (tested < 12) {
        int m = 3 + static_cast<int>(rng() % 4); // 3..6
        int n = 1 + static_cast<int>(rng() % 2); // 1..2
        if (m <= 2 * n) continue;
        int s = static_cast<int>(rng() % 3); // 0..2
        Graph g = oracles::random_graph(5, 0.4, rng);
        HomResult f = find_homomorphism(g, kneser(m, n, 0));
        if (f.status != HomStatus::Found) continue;
        ++tested;
        SetMap all = kneser_vertex_sets(m, n);
        SetMap fsets(g.order());
        for (int v = 0; v < g.order(); ++v) fsets[v] = all[f.certificate.map[v]];
        SetMap out = fractional_embedding(g, fsets, m, n, s);
        for (const auto& set : out) {
            CHECK(static_cast<int>(set.size()) == s * m + n);
            std::set<int> uniq(set.begin(), set.end());
            CHECK(uniq.size() == set.size());
            for (int x : set) {
                CHECK(x >= 1);
                CHECK(x <= (2 * s + 1) * m);
            }
        }
        for (auto [u, v] : g.edges()) {
            std::vector<int> common;
            std::set_intersection(out[u].begin(), out[u].end(), out[v].begin(), out[v].end(),
                                  std::back_inserter(common));
            CHECK(static_cast<int>(common.size()) == (m - 2 * n) * s);
        }
    }
}

TEST_CASE("kneser_walk_condition") {
    CHECK(kneser_walk_condition(5, 2, 1, 3));
    CHECK(kneser_walk_condition(5, 2, 2, 2));
    CHECK_FALSE(kneser_walk_condition(5, 2, 2, 3));
    CHECK_THROWS_AS(kneser_walk_condition(4, 2, 1, 2), GraphError);
    CHECK_THROWS_AS(kneser_walk_condition(5, 2, 3, 2), GraphError);

    // Small exhaustive sweep against walk enumeration on the actual graph.
    Graph pet = kneser(5, 2, 0);
    SetMap sets = kneser_vertex_sets(5, 2);
    for (int a = 0; a < pet.order(); ++a)
        for (int b = 0; b < pet.order(); ++b) {
            std::vector<int> common;
            std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(),
                                  sets[b].end(), std::back_inserter(common));
            int k = static_cast<int>(common.size());
            for (int l = 0; l <= 5; ++l)
                CHECK(kneser_walk_condition(5, 2, k, l) ==
                      oracles::brute_walk_reach(pet, a, b, l));
        }
}
