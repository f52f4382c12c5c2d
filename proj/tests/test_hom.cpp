#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "circpow/constructions.hpp"
#include "circpow/hom.hpp"
#include "circpow/rational.hpp"
#include "oracles.hpp"

using namespace circpow;

TEST_CASE("find_homomorphism on known instances") {
    // C_9 has a (9,4)-coloring.
    HomResult r = find_homomorphism(cycle_graph(9), circular_complete(9, 4));
    REQUIRE(r.status == HomStatus::Found);
    CHECK(check_homomorphism(r.certificate, cycle_graph(9), circular_complete(9, 4)));

    // K_4 into K_3: provably none.
    CHECK(find_homomorphism(complete_graph(4), complete_graph(3)).status == HomStatus::None);

    // Any single edge deletion of K_4^{1/3} maps into C_9.
    Graph g = frac_power(complete_graph(4), 1, 3);
    auto edges = g.edges();
    Graph pruned = remove_edge(g, edges.front().first, edges.front().second);
    HomResult e = find_homomorphism(pruned, subdivide(complete_graph(3), 3));
    REQUIRE(e.status == HomStatus::Found);
    CHECK(check_homomorphism(e.certificate, pruned, subdivide(complete_graph(3), 3)));
}

TEST_CASE("check_homomorphism") {
    Graph k3 = complete_graph(3);
    CHECK(check_homomorphism(HomCertificate{{0, 1, 2}}, k3, k3));
    CHECK_FALSE(check_homomorphism(HomCertificate{{0, 0, 0, 0, 0}}, cycle_graph(5), k3));
    CHECK_THROWS_AS(check_homomorphism(HomCertificate{{0, 1}}, k3, k3), GraphError);
    CHECK_THROWS_AS(check_homomorphism(HomCertificate{{0, 1, 7}}, k3, k3), GraphError);
}

TEST_CASE("solver certificates are always valid") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracles::random_graph(6, 0.35, rng);
        Graph h = oracles::random_graph(5, 0.5, rng);
        HomResult r = find_homomorphism(g, h);
        if (r.status == HomStatus::Found) CHECK(check_homomorphism(r.certificate, g, h));
    }
}

TEST_CASE("solver agrees with exhaustive enumeration on a random corpus") {
    std::mt19937 rng(53);
    int pairs = 0;
    while (pairs < 60) {
        int ng = 3 + static_cast<int>(rng() % 5); // 3..7
        int nh = 2 + static_cast<int>(rng() % 4); // 2..5
        Graph g = oracles::random_graph(ng, 0.4, rng);
        Graph h = oracles::random_graph(nh, 0.5, rng);
        ++pairs;
        bool expect = oracles::brute_hom_exists(g, h);
        HomResult r = find_homomorphism(g, h);
        REQUIRE(r.status != HomStatus::Timeout);
        CHECK((r.status == HomStatus::Found) == expect);
    }
}

TEST_CASE("circular clique monotonicity against plain DFS") {
    // All reduced fractions with numerator <= 10 and value >= 2.
    std::vector<Rational> fractions;
    for (int n = 2; n <= 10; ++n)
        for (int d = 1; 2 * d <= n; ++d)
            if (std::gcd(n, d) == 1) fractions.emplace_back(n, d);

    for (const auto& a : fractions)
        for (const auto& b : fractions) {
            Graph ka = circular_complete(static_cast<int>(a.num()), static_cast<int>(a.den()));
            Graph kb = circular_complete(static_cast<int>(b.num()), static_cast<int>(b.den()));
            bool expect = a <= b;
            HomResult r = find_homomorphism(ka, kb);
            REQUIRE(r.status != HomStatus::Timeout);
            CHECK((r.status == HomStatus::Found) == expect);
            // Independent route, no propagation or ordering heuristics.
            CHECK(oracles::dfs_hom_exists(ka, kb) == expect);
        }
}

TEST_CASE("power functor preserves sampled certificates") {
    // G -> H gives G^{r/s} -> H^{r/s}.
    struct Pair {
        Graph g, h;
    };
    std::vector<Pair> pairs;
    pairs.push_back({cycle_graph(9), complete_graph(3)});
    pairs.push_back({cycle_graph(5), complete_graph(4)});
    for (const auto& [g, h] : pairs) {
        REQUIRE(find_homomorphism(g, h).status == HomStatus::Found);
        HomResult lifted = find_homomorphism(subdivide(g, 3), subdivide(h, 3));
        CHECK(lifted.status == HomStatus::Found);
    }
}

TEST_CASE("power composition maps exist on sampled instances") {
    // (G^{a/b})^{c/d} -> G^{ac/bd} with C_9, powers 3/1 then 1/3.
    Graph lhs = subdivide(walk_power(cycle_graph(9), 3), 3);
    Graph rhs = frac_power(cycle_graph(9), 3, 3);
    CHECK(find_homomorphism(lhs, rhs).status == HomStatus::Found);
}

TEST_CASE("homomorphically_equivalent") {
    Graph c5 = cycle_graph(5);
    CHECK(homomorphically_equivalent(c5, c5) == Decision::Yes);
    CHECK(homomorphically_equivalent(c5, cycle_graph(7)) == Decision::No);
    CHECK(homomorphically_equivalent(complete_graph(3), cycle_graph(9)) == Decision::No);
}

TEST_CASE("timeout is inconclusive, never a non-existence answer") {
    // Budget far below anything the search could finish.
    SearchOptions opts;
    opts.budget_seconds = 1e-9;
    Graph g = frac_power(complete_graph(4), 1, 3);
    HomResult r = find_homomorphism(g, circular_complete(12, 5), opts);
    CHECK(r.status == HomStatus::Timeout);
}

TEST_CASE("component decomposition and symmetry keep answers correct") {
    // Two components with different constraints.
    Graph two = disjoint_union(complete_graph(4), cycle_graph(5));
    CHECK(find_homomorphism(two, complete_graph(4)).status == HomStatus::Found);
    CHECK(find_homomorphism(two, complete_graph(3)).status == HomStatus::None);

    // Symmetry cut against plain search on transitive targets.
    std::mt19937 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracles::random_graph(6, 0.45, rng);
        Graph h = circular_complete(7, 2);
        SearchOptions plain;
        plain.symmetry = false;
        bool with_cut = find_homomorphism(g, h).status == HomStatus::Found;
        bool without = find_homomorphism(g, h, plain).status == HomStatus::Found;
        CHECK(with_cut == without);
    }
}

TEST_CASE("path elimination agrees with plain DFS on subdivided sources") {
    // Subdivided sources are mostly degree-2, which drives the solver's
    // variable-elimination phase; compare against the heuristic-free oracle.
    std::mt19937 rng(83);
    int tested = 0;
    while (tested < 25) {
        Graph base = oracles::random_graph(5, 0.5, rng);
        if (base.size() == 0) continue;
        ++tested;
        // s = 3 keeps the plain oracle affordable on the negatives.
        Graph g = subdivide(base, 1 + static_cast<int>(rng() % 2) * 2); // 1 or 3
        int nh = 3 + static_cast<int>(rng() % 3);
        Graph h = oracles::random_graph(nh, 0.5, rng);
        HomResult r = find_homomorphism(g, h);
        REQUIRE(r.status != HomStatus::Timeout);
        CHECK((r.status == HomStatus::Found) == oracles::dfs_hom_exists(g, h));
        if (r.status == HomStatus::Found) CHECK(check_homomorphism(r.certificate, g, h));
    }
    // Cycles collapse entirely inside the elimination phase.
    for (int n = 3; n <= 12; ++n)
        for (int k = 3; k <= 7; k += 2) {
            Graph cyc = cycle_graph(n);
            Graph target = cycle_graph(k);
            bool expect = oracles::dfs_hom_exists(cyc, target);
            HomResult r = find_homomorphism(cyc, target);
            REQUIRE(r.status != HomStatus::Timeout);
            CHECK((r.status == HomStatus::Found) == expect);
            if (r.status == HomStatus::Found)
                CHECK(check_homomorphism(r.certificate, cyc, target));
        }
}

TEST_CASE("paranoia mode accepts honest non-existence") {
    SearchOptions opts;
    opts.paranoia = true;
    CHECK(find_homomorphism(complete_graph(4), complete_graph(3), opts).status ==
          HomStatus::None);
    CHECK(find_homomorphism(cycle_graph(5), cycle_graph(7), opts).status == HomStatus::None);
}

TEST_CASE("parallel root split returns the same answers") {
    SearchOptions par;
    par.parallel = true;
    par.symmetry = false;
    std::mt19937 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = oracles::random_graph(6, 0.4, rng);
        Graph h = oracles::random_graph(5, 0.5, rng);
        HomResult seq = find_homomorphism(g, h);
        HomResult thr = find_homomorphism(g, h, par);
        REQUIRE(seq.status != HomStatus::Timeout);
        REQUIRE(thr.status != HomStatus::Timeout);
        CHECK(seq.status == thr.status);
        if (thr.status == HomStatus::Found)
            CHECK(check_homomorphism(thr.certificate, g, h));
    }
}
