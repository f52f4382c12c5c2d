#pragma once

#include <vector>

#include "circpow/graph.hpp"
#include "circpow/hom.hpp"
#include "circpow/rational.hpp"

namespace circpow {

// Least k with a homomorphism into K_k, searched upward from the clique
// lower bound. Throws TimeoutError when the budget runs out.
int chromatic_number(const Graph& g, const SearchOptions& opts = {});

struct CircularValue {
    Rational value;
    HomCertificate witness; // into circular_complete(value.num(), value.den())
};

// Minimum n/d over reduced fractions with n <= |V| admitting an
// (n,d)-coloring; bipartite graphs return 2 immediately. The candidate list
// is binary-searched using circular-clique monotonicity; every test is an
// exact homomorphism search.
CircularValue circular_chromatic_number(const Graph& g, const SearchOptions& opts = {});

struct FractionalValue {
    Rational value;
    // Fractional cover supported on maximal independent sets, total = value.
    std::vector<std::pair<std::vector<int>, Rational>> cover;
    // Fractional clique per vertex, same total (exact strong duality).
    std::vector<Rational> clique;
};

// Exact LP optimum of the fractional cover over maximal independent sets,
// with exact rational pivoting; both certificates are verified before the
// value is returned. Throws CapExceededError when the maximal independent
// set enumeration exceeds max_sets.
FractionalValue fractional_chromatic_number(const Graph& g, long long max_sets = 100000);

int independence_number(const Graph& g);
int clique_number(const Graph& g);

// Least m with a homomorphism into kneser(m, n, 0); the search starts at the
// exact lower bound ceil(n * chi_f(G)) and is bounded above by n * chi(G).
int multichromatic_number(const Graph& g, int n, const SearchOptions& opts = {});

// chi_c(G) / (3 (chi_c(G) - 2)), computed from the circular chromatic
// number, never by the defining supremum. Rejects bipartite input.
Rational mu(const Graph& g, const SearchOptions& opts = {});

// Minimum number of vertex deletions that lower the chromatic number;
// brute force over subsets by increasing size.
int zeta(const Graph& g, const SearchOptions& opts = {});

// The unique n'/d' with 0 < n' < n and n d' - n' d = 1, by extended Euclid.
// Requires gcd(n, d) = 1 and n > d >= 1.
Rational lower_parent(long long n, long long d);

// All reduced fractions num/den with num <= max_num and lo < num/den <= hi,
// sorted ascending by value.
std::vector<Rational> circular_fractions(int max_num, const Rational& lo, const Rational& hi);

// Maximal independent sets (Bron-Kerbosch with pivoting on the complement).
std::vector<std::vector<int>> maximal_independent_sets(const Graph& g,
                                                       long long cap = 100000);

} // namespace circpow
