#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "circpow/constructions.hpp"
#include "circpow/invariants.hpp"
#include "circpow/simplex.hpp"
#include "oracles.hpp"

using namespace circpow;

TEST_CASE("chromatic_number") {
    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(hajos_chain(2, 4)) == 4);
    CHECK(chromatic_number(cycle_graph(9)) == 3);
    CHECK(chromatic_number(cycle_graph(6)) == 2);
    CHECK(chromatic_number(make_graph(3, {})) == 1);
    CHECK(chromatic_number(petersen()) == 3);
}

TEST_CASE("circular_chromatic_number") {
    CircularValue c9 = circular_chromatic_number(cycle_graph(9));
    CHECK(c9.value == Rational(9, 4));
    CHECK(check_homomorphism(c9.witness, cycle_graph(9), circular_complete(9, 4)));

    CircularValue h = circular_chromatic_number(hajos_chain(2, 4));
    CHECK(h.value == Rational(7, 2));

    // Bipartite graphs come back as 2 with a 2-coloring witness.
    CircularValue even = circular_chromatic_number(cycle_graph(8));
    CHECK(even.value == Rational(2));
    CHECK(check_homomorphism(even.witness, cycle_graph(8), circular_complete(2, 1)));
}

TEST_CASE("circular chromatic number of circular cliques") {
    for (int n = 3; n <= 10; ++n)
        for (int d = 1; 2 * d < n; ++d) {
            if (std::gcd(n, d) != 1) continue;
            Graph g = circular_complete(n, d);
            CHECK(circular_chromatic_number(g).value == Rational(n, d));
        }
}

TEST_CASE("fractional_chromatic_number") {
    FractionalValue c9 = fractional_chromatic_number(cycle_graph(9));
    CHECK(c9.value == Rational(9, 4));

    for (int n = 2; n <= 6; ++n)
        CHECK(fractional_chromatic_number(complete_graph(n)).value == Rational(n));

    FractionalValue pet = fractional_chromatic_number(petersen());
    CHECK(pet.value == Rational(5, 2));

    // Strong duality, exactly: cover and clique totals both equal the value.
    Rational cover_total(0), clique_total(0);
    for (const auto& [set, w] : pet.cover) cover_total += w;
    for (const auto& w : pet.clique) clique_total += w;
    CHECK(cover_total == pet.value);
    CHECK(clique_total == pet.value);

    // Vertex-transitive oracle: order / independence number.
    for (const Graph& g : {cycle_graph(9), cycle_graph(15), petersen()})
        CHECK(fractional_chromatic_number(g).value ==
              Rational(g.order(), independence_number(g)));

    CHECK_THROWS_AS(fractional_chromatic_number(petersen(), 3), CapExceededError);
}

TEST_CASE("maximal independent set enumeration") {
    auto sets = maximal_independent_sets(cycle_graph(5));
    CHECK(sets.size() == 5); // C_5: the five non-adjacent pairs
    for (const auto& s : sets) CHECK(s.size() == 2);

    auto kn = maximal_independent_sets(complete_graph(4));
    CHECK(kn.size() == 4); // singletons only
}

TEST_CASE("independence_number") {
    CHECK(independence_number(hajos_chain(2, 4)) == 2);
    CHECK(independence_number(cycle_graph(9)) == 4);
    CHECK(independence_number(complete_graph(5)) == 1);
    CHECK(independence_number(petersen()) == 4);

    std::mt19937 rng(67);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracles::random_graph(10, 0.4, rng);
        CHECK(independence_number(g) == oracles::brute_independence(g));
    }
}

TEST_CASE("multichromatic_number") {
    CHECK(multichromatic_number(complete_graph(4), 1) == 4);
    CHECK(multichromatic_number(cycle_graph(5), 2) == 5);
    CHECK(multichromatic_number(cycle_graph(9), 2) == 5);
    // chi_1 is the chromatic number.
    for (const Graph& g : {cycle_graph(9), petersen(), hajos_chain(2, 4)})
        CHECK(multichromatic_number(g, 1) == chromatic_number(g));
}

TEST_CASE("mu") {
    CHECK(mu(complete_graph(4)) == Rational(2, 3));
    CHECK(mu(complete_graph(3)) == Rational(1));
    CHECK(mu(cycle_graph(5)) == Rational(5, 3));
    CHECK_THROWS_AS(mu(cycle_graph(6)), GraphError);
}

TEST_CASE("zeta") {
    CHECK(zeta(hajos_chain(2, 4)) == 1);
    CHECK(zeta(complete_graph(4)) == 1);
    CHECK(zeta(disjoint_union(complete_graph(4), complete_graph(4))) == 2);
}

TEST_CASE("lower_parent") {
    CHECK(lower_parent(12, 5) == Rational(7, 3));
    CHECK(lower_parent(27, 11) == Rational(22, 9));
    CHECK(lower_parent(5, 2) == Rational(2, 1));
    CHECK(lower_parent(9, 4) == Rational(2, 1)); // 9*1 - 2*4 = 1
    CHECK_THROWS_AS(lower_parent(9, 3), GraphError);
    CHECK_THROWS_AS(lower_parent(3, 5), GraphError);

    // Defining property, exhaustively for n <= 40.
    for (long long n = 2; n <= 40; ++n)
        for (long long d = 1; d < n; ++d) {
            if (std::gcd(n, d) != 1) continue;
            Rational f = lower_parent(n, d);
            CHECK(n * f.den() - f.num() * d == 1);
            CHECK(f.num() > 0);
            CHECK(f.num() < n);
        }
}

TEST_CASE("invariant chains: chi_f <= chi_c <= chi and ceil(chi_c) = chi") {
    std::vector<Graph> family = {complete_graph(3),
                                 complete_graph(4),
                                 cycle_graph(5),
                                 cycle_graph(9),
                                 petersen(),
                                 hajos_chain(2, 4),
                                 subdivide(complete_graph(4), 3)};
    for (const Graph& g : family) {
        Rational chif = fractional_chromatic_number(g).value;
        Rational chic = circular_chromatic_number(g).value;
        int chi = chromatic_number(g);
        CHECK(chif <= chic);
        CHECK(chic <= Rational(chi));
        CHECK(chic.ceil() == chi);
    }
}

TEST_CASE("deep subdivision multichromatic identity") {
    // chi_n(G^{1/(2s+1)}) = 2n+1 once s >= n.
    CHECK(multichromatic_number(subdivide(complete_graph(4), 3), 1) == 3);
    CHECK(multichromatic_number(subdivide(complete_graph(3), 7), 2) == 5);
}

TEST_CASE("exact simplex on hand instances") {
    using Row = std::vector<Rational>;
    // max x + y st x <= 1, y <= 1.
    LpSolution lp = simplex_max({Row{Rational(1), Rational(0)}, Row{Rational(0), Rational(1)}},
                                {Rational(1), Rational(1)}, {Rational(1), Rational(1)});
    CHECK(lp.objective == Rational(2));
    CHECK(lp.primal == std::vector<Rational>{Rational(1), Rational(1)});

    // Fractional vertex: max x + y st 2x + y <= 2, x + 2y <= 2 -> 4/3.
    LpSolution frac = simplex_max({Row{Rational(2), Rational(1)}, Row{Rational(1), Rational(2)}},
                                  {Rational(2), Rational(2)}, {Rational(1), Rational(1)});
    CHECK(frac.objective == Rational(4, 3));
    CHECK(frac.primal == std::vector<Rational>{Rational(2, 3), Rational(2, 3)});
}

TEST_CASE("simplex duality certificates on random 0/1 systems") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        int m = 2 + static_cast<int>(rng() % 5), n = 2 + static_cast<int>(rng() % 5);
        std::vector<std::vector<Rational>> A(m, std::vector<Rational>(n, Rational(0)));
        bool any = false;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (rng() % 2) {
                    A[i][j] = Rational(1);
                    any = true;
                }
        if (!any) continue;
        // Ensure boundedness: every variable appears in some constraint.
        for (int j = 0; j < n; ++j) {
            bool covered = false;
            for (int i = 0; i < m; ++i) covered |= (A[i][j] == Rational(1));
            if (!covered) A[0][j] = Rational(1);
        }
        std::vector<Rational> b(m, Rational(1)), c(n, Rational(1));
        LpSolution lp = simplex_max(A, b, c);

        // Primal feasibility.
        for (int i = 0; i < m; ++i) {
            Rational lhs(0);
            for (int j = 0; j < n; ++j) lhs += A[i][j] * lp.primal[j];
            CHECK(lhs <= b[i]);
        }
        for (const auto& x : lp.primal) CHECK(Rational(0) <= x);
        // Dual feasibility: A^T y >= c, y >= 0.
        for (const auto& y : lp.dual) CHECK(Rational(0) <= y);
        for (int j = 0; j < n; ++j) {
            Rational lhs(0);
            for (int i = 0; i < m; ++i) lhs += A[i][j] * lp.dual[i];
            CHECK(c[j] <= lhs);
        }
        // Strong duality.
        Rational primal_total(0), dual_total(0);
        for (int j = 0; j < n; ++j) primal_total += c[j] * lp.primal[j];
        for (int i = 0; i < m; ++i) dual_total += b[i] * lp.dual[i];
        CHECK(primal_total == lp.objective);
        CHECK(dual_total == lp.objective);
    }
}

TEST_CASE("invariant calls respect their budget") {
    SearchOptions opts;
    opts.budget_seconds = 1e-9;
    CHECK_THROWS_AS(circular_chromatic_number(subdivide(complete_graph(4), 3), opts),
                    TimeoutError);
}
