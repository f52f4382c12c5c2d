#include "circpow/invariants.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <queue>

#include "circpow/constructions.hpp"
#include "circpow/simplex.hpp"

namespace circpow {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
    Clock::time_point deadline;
    explicit Budget(double seconds)
        : deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(seconds))) {}
    double remaining() const {
        double s = std::chrono::duration<double>(deadline - Clock::now()).count();
        if (s <= 0) throw TimeoutError("budget exhausted");
        return s;
    }
    SearchOptions options(const SearchOptions& base) const {
        SearchOptions o = base;
        o.budget_seconds = remaining();
        return o;
    }
};

// Proper 2-coloring of a bipartite graph; vertices of odd BFS depth get
// color 2. Only called on bipartite inputs.
std::vector<int> two_coloring(const Graph& g) {
    std::vector<int> color(g.order(), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (color[s]) continue;
        color[s] = 1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w = g.row(u).first(); w >= 0; w = g.row(u).next(w + 1))
                if (!color[w]) {
                    color[w] = 3 - color[u];
                    q.push(w);
                }
        }
    }
    return color;
}

// Tomita-style maximum clique: branch and bound with a greedy coloring bound.
struct MaxClique {
    const Graph& g;
    int best = 0;

    void expand(Bitset cand, int size) {
        if (cand.none()) {
            best = std::max(best, size);
            return;
        }
        // Greedy color classes over the candidate set.
        std::vector<int> order, bound;
        Bitset rest = cand;
        int color = 0;
        while (rest.any()) {
            ++color;
            Bitset layer = rest;
            while (layer.any()) {
                int v = layer.first();
                order.push_back(v);
                bound.push_back(color);
                rest.reset(v);
                layer.reset(v);
                layer.subtract(g.row(v));
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (size + bound[i] <= best) return;
            int v = order[i];
            expand(cand & g.row(v), size + 1);
            cand.reset(v);
        }
    }
};

} // namespace

int clique_number(const Graph& g) {
    if (g.order() == 0) return 0;
    MaxClique mc{g};
    Bitset all(g.order());
    all.fill();
    mc.expand(all, 0);
    return mc.best;
}

int independence_number(const Graph& g) { return clique_number(complement(g)); }

int chromatic_number(const Graph& g, const SearchOptions& opts) {
    if (g.order() == 0) return 0;
    if (g.size() == 0) return 1;
    if (!odd_girth(g)) return 2;
    Budget budget(opts.budget_seconds);
    for (int k = std::max(3, clique_number(g)); k <= g.order(); ++k) {
        HomResult r = find_homomorphism(g, complete_graph(k), budget.options(opts));
        if (r.status == HomStatus::Found) return k;
        if (r.status == HomStatus::Timeout) throw TimeoutError("chromatic number search timed out");
    }
    throw std::logic_error("chromatic number search fell through");
}

std::vector<Rational> circular_fractions(int max_num, const Rational& lo, const Rational& hi) {
    std::vector<Rational> out;
    for (int num = 1; num <= max_num; ++num)
        for (int den = 1; den <= num; ++den) {
            if (std::gcd(num, den) != 1) continue;
            Rational q(num, den);
            if (lo < q && q <= hi) out.push_back(q);
        }
    std::sort(out.begin(), out.end());
    return out;
}

CircularValue circular_chromatic_number(const Graph& g, const SearchOptions& opts) {
    if (g.order() == 0) throw GraphError("circular chromatic number of the empty graph");
    if (!odd_girth(g)) {
        // Bipartite: value 2 immediately, witnessed by a proper 2-coloring.
        return {Rational(2), certificate_from_coloring(two_coloring(g))};
    }
    Budget budget(opts.budget_seconds);
    int chi = chromatic_number(g, budget.options(opts));

    std::vector<Rational> candidates = circular_fractions(g.order(), Rational(2), Rational(chi));
    // chi/1 is in the list and admits a coloring, so `hi` starts feasible.
    int lo = 0, hi = static_cast<int>(candidates.size()) - 1;
    while (candidates[hi] != Rational(chi)) --hi;
    HomResult witness =
        find_homomorphism(g, complete_graph(chi), budget.options(opts));
    if (witness.status != HomStatus::Found)
        throw std::logic_error("chromatic certificate vanished");

    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        Rational q = candidates[mid];
        Graph target = circular_complete(static_cast<int>(q.num()), static_cast<int>(q.den()));
        HomResult r = find_homomorphism(g, target, budget.options(opts));
        if (r.status == HomStatus::Found) {
            hi = mid;
            witness = std::move(r);
        } else if (r.status == HomStatus::None) {
            lo = mid + 1;
        } else {
            throw TimeoutError("circular chromatic number search timed out");
        }
    }
    return {candidates[hi], std::move(witness.certificate)};
}

std::vector<std::vector<int>> maximal_independent_sets(const Graph& g, long long cap) {
    const int n = g.order();
    std::vector<Bitset> co(n, Bitset(n));
    for (int v = 0; v < n; ++v) {
        Bitset full(n);
        full.fill();
        full.subtract(g.row(v));
        full.reset(v);
        co[v] = full;
    }
    std::vector<std::vector<int>> out;
    // Bron-Kerbosch with pivoting over the complement graph.
    auto bk = [&](auto&& self, Bitset r, Bitset p, Bitset x) -> void {
        if (p.none() && x.none()) {
            if (static_cast<long long>(out.size()) >= cap)
                throw CapExceededError("too many maximal independent sets",
                                       static_cast<unsigned long long>(out.size()) + 1);
            out.push_back(r.to_vector());
            return;
        }
        int pivot = -1, best = -1;
        Bitset both = p | x;
        for (int v = both.first(); v >= 0; v = both.next(v + 1)) {
            int gain = (p & co[v]).count();
            if (gain > best) {
                best = gain;
                pivot = v;
            }
        }
        Bitset ext = p;
        ext.subtract(co[pivot]);
        for (int v = ext.first(); v >= 0; v = ext.next(v + 1)) {
            Bitset r2 = r;
            r2.set(v);
            self(self, r2, p & co[v], x & co[v]);
            p.reset(v);
            x.set(v);
        }
    };
    Bitset empty(n), all(n);
    all.fill();
    if (n > 0) bk(bk, empty, all, Bitset(n));
    return out;
}

FractionalValue fractional_chromatic_number(const Graph& g, long long max_sets) {
    if (g.order() == 0) return {Rational(0), {}, {}};
    auto sets = maximal_independent_sets(g, max_sets);
    const int m = static_cast<int>(sets.size());
    const int n = g.order();

    // Maximize sum(y_v) subject to sum_{v in S} y_v <= 1 per maximal
    // independent set S. The optimum is the fractional clique number, which
    // equals the fractional cover optimum by exact LP duality; the dual
    // values are the cover weights.
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < m; ++i)
        for (int v : sets[i]) A[i][v] = Rational(1);
    std::vector<Rational> b(m, Rational(1)), c(n, Rational(1));
    LpSolution lp = simplex_max(A, b, c);

    FractionalValue out;
    out.value = lp.objective;
    out.clique = lp.primal;
    Rational cover_total(0), clique_total(0);
    for (int i = 0; i < m; ++i) {
        if (lp.dual[i] == Rational(0)) continue;
        cover_total += lp.dual[i];
        out.cover.emplace_back(sets[i], lp.dual[i]);
    }
    for (const auto& w : out.clique) clique_total += w;

    // Exact certificate checks: equal totals, cover feasibility, clique
    // feasibility over maximal sets.
    if (cover_total != out.value || clique_total != out.value)
        throw std::logic_error("fractional LP duality gap");
    std::vector<Rational> vertex_cover(n, Rational(0));
    for (const auto& [set, w] : out.cover) {
        if (w < Rational(0)) throw std::logic_error("negative cover weight");
        for (int v : set) vertex_cover[v] += w;
    }
    for (int v = 0; v < n; ++v)
        if (vertex_cover[v] < Rational(1)) throw std::logic_error("cover misses a vertex");
    for (const auto& set : sets) {
        Rational s(0);
        for (int v : set) s += out.clique[v];
        if (s > Rational(1)) throw std::logic_error("clique weight exceeds a set");
    }
    return out;
}

int multichromatic_number(const Graph& g, int n, const SearchOptions& opts) {
    if (n < 1) throw GraphError("tuple size must be >= 1");
    if (g.order() == 0) return 0;
    if (g.size() == 0) return n;
    Budget budget(opts.budget_seconds);
    Rational lower_bound = Rational(n) * fractional_chromatic_number(g).value;
    int m = std::max<long long>(2 * n, lower_bound.ceil());
    int chi_upper = chromatic_number(g, budget.options(opts));
    for (; m <= n * chi_upper; ++m) {
        HomResult r = find_homomorphism(g, kneser(m, n, 0), budget.options(opts));
        if (r.status == HomStatus::Found) return m;
        if (r.status == HomStatus::Timeout)
            throw TimeoutError("multichromatic search timed out");
    }
    throw std::logic_error("multichromatic search exceeded its n*chi upper bound");
}

Rational mu(const Graph& g, const SearchOptions& opts) {
    if (!odd_girth(g)) throw GraphError("mu is undefined for bipartite graphs");
    Rational chic = circular_chromatic_number(g, opts).value;
    return chic / (Rational(3) * (chic - Rational(2)));
}

int zeta(const Graph& g, const SearchOptions& opts) {
    if (g.order() == 0) throw GraphError("zeta of the empty graph");
    Budget budget(opts.budget_seconds);
    const int chi = chromatic_number(g, budget.options(opts));
    // Test chi(G - S) < chi by homomorphism into K_{chi-1}.
    Graph target = complete_graph(chi - 1);
    std::vector<int> subset;
    auto try_subsets = [&](auto&& self, int next, int want) -> bool {
        if (static_cast<int>(subset.size()) == want) {
            Graph pruned = remove(g, subset, {}).graph;
            HomResult r = find_homomorphism(pruned, target, budget.options(opts));
            if (r.status == HomStatus::Timeout) throw TimeoutError("zeta search timed out");
            return r.status == HomStatus::Found;
        }
        for (int v = next; v < g.order(); ++v) {
            subset.push_back(v);
            if (self(self, v + 1, want)) return true;
            subset.pop_back();
        }
        return false;
    };
    for (int k = 1; k <= g.order(); ++k) {
        subset.clear();
        if (try_subsets(try_subsets, 0, k)) return k;
    }
    throw std::logic_error("zeta fell through");
}

Rational lower_parent(long long n, long long d) {
    if (n <= d || d < 1) throw GraphError("lower parent requires n > d >= 1");
    if (std::gcd(n, d) != 1) throw GraphError("lower parent requires gcd(n, d) = 1");
    // Find d' with n d' == 1 (mod d), 1 <= d' <= d, then n' = (n d' - 1)/d.
    long long dp = 1;
    if (d > 1) {
        long long r0 = n % d;
        // Extended Euclid for the inverse of n mod d.
        long long t = 0, new_t = 1, r = d, new_r = r0;
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        dp = ((t % d) + d) % d;
        if (dp == 0) dp = d;
    }
    long long np = (n * dp - 1) / d;
    Rational result(np, dp);
    if (!(0 < np && np < n) || n * dp - np * d != 1)
        throw std::logic_error("lower parent computation failed");
    // Return unreduced-consistent value: np/dp is automatically reduced
    // because n d' - n' d = 1 forces gcd(n', d') = 1.
    return result;
}

} // namespace circpow
