#pragma once

#include <vector>

#include "circpow/graph.hpp"

namespace circpow {

// All indices in returned graphs are 0-based; colors and ground-set elements
// in the map types below are 1-based (sets live inside [m]).
using ColorMap = std::vector<int>;              // vertex -> color in 1..k
using SetMap = std::vector<std::vector<int>>;   // vertex -> sorted subset of [m]

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph petersen();

// Circular complete graph K_{n/d}: vertices 0..n-1, ij an edge iff
// d <= |i-j| <= n-d. Requires n >= 2d, d >= 1.
Graph circular_complete(int n, int d);

// (Generalized) Kneser graph on the n-subsets of [m] in lexicographic
// order; A ~ B iff |A intersect B| <= s. s = 0 is plain disjointness.
Graph kneser(int m, int n, int s = 0);

// The vertex sets of kneser(m, n, s) in construction order, 1-based.
SetMap kneser_vertex_sets(int m, int n);

// G^{1/s}: every edge replaced by a path of length s (s-1 fresh internal
// vertices). s = 1 returns G itself.
Graph subdivide(const Graph& g, int s);

// G^{r/s} = (G^{1/s})^r. Propagates LoopCreatedError when r is too large
// for the subdivided girth. All identities in scope use odd r and s; general
// exponents are constructed as written but carry no claims.
Graph frac_power(const Graph& g, int r, int s);

// Dual power base G^{~1/(2s+1)}: vertices are tuples (A_1,...,A_{s+1}) with
// |A_1| = 1 and each A_i a nonempty subset of N_{i-1}(A_1); two tuples are
// adjacent iff A_i is contained in B_{i+1} and B_i in A_{i+1} for i <= s,
// and A_j, B_j span a complete bipartite pair in G for every j <= s+1.
// The construction is exponential in s, hence the vertex cap.
Graph dual_power_base(const Graph& g, int s, long long vertex_cap = 20000);

// G^{~(2r+1)/(2s+1)} = walk_power(dual_power_base(G, s), 2r+1).
Graph dual_power(const Graph& g, int r, int s, long long vertex_cap = 20000);

// Hajos chain H_d(K_n): d copies of K_n with w_i identified with v_{i+1},
// edges v_i w_i deleted and edge v_1 w_d added. Blocks occupy contiguous
// index ranges so the explicit coloring lands on fixed indices.
Graph hajos_chain(int d, int n);

// The explicit (d(n-1)+1, d)-coloring of H_d(K_n): c(u_ij) = (j-1)d + i,
// c(w_i) = i, c(v_1) = d(n-1)+1. 1-based colors aligned with hajos_chain.
ColorMap hajos_circular_coloring(int d, int n);

// Given a homomorphism f from g into kneser(m, n, 0), produces the expanded
// set map g(v) of uniform size s*m + n whose adjacent images intersect in
// exactly (m - 2n)s elements; it is a homomorphism into
// kneser((2s+1)m, sm+n, (m-2n)s). Throws GraphError if f is not a valid
// Kneser homomorphism.
SetMap fractional_embedding(const Graph& g, const SetMap& f, int m, int n, int s);

// Closed-form walk criterion for kneser(m, n, 0), m > 2n: vertices with
// intersection k are joined by a walk of length exactly l iff
// (l even and k >= n - (l/2)(m-2n)) or (l odd and k <= ((l-1)/2)(m-2n)).
bool kneser_walk_condition(int m, int n, int k, int l);

} // namespace circpow
