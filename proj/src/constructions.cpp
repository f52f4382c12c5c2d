#include "circpow/constructions.hpp"

#include <algorithm>
#include <string>

namespace circpow {

Graph complete_graph(int n) {
    if (n < 0) throw GraphError("negative order");
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges, {}, "K" + std::to_string(n), true);
}

Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle needs at least 3 vertices");
    EdgeList edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph(n, edges, {}, "C" + std::to_string(n), true);
}

Graph circular_complete(int n, int d) {
    if (d < 1 || n < 2 * d)
        throw GraphError("circular complete graph requires n >= 2d >= 2");
    EdgeList edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (j - i >= d && j - i <= n - d) edges.emplace_back(i, j);
    return Graph(n, edges, {},
                 "K(" + std::to_string(n) + "/" + std::to_string(d) + ")", true);
}

namespace {

long long binomial(int m, int n) {
    if (n < 0 || n > m) return 0;
    long long r = 1;
    n = std::min(n, m - n);
    for (int i = 1; i <= n; ++i) {
        r = r * (m - n + i) / i;
        if (r > 2'000'000) return -1;
    }
    return r;
}

std::string set_label(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

} // namespace

SetMap kneser_vertex_sets(int m, int n) {
    if (n < 0 || n > m) throw GraphError("subset size out of range");
    SetMap sets;
    std::vector<int> cur(n);
    // Lexicographic n-subsets of {1..m}.
    auto emit = [&](auto&& self, int start, int depth) -> void {
        if (depth == n) {
            sets.push_back(cur);
            return;
        }
        for (int x = start; x <= m - (n - depth - 1); ++x) {
            cur[depth] = x;
            self(self, x + 1, depth + 1);
        }
    };
    emit(emit, 1, 0);
    return sets;
}

Graph kneser(int m, int n, int s) {
    if (m < 1 || n < 1 || n > m) throw GraphError("kneser parameters out of range");
    if (s < 0) throw GraphError("kneser intersection bound must be >= 0");
    long long count = binomial(m, n);
    if (count < 0)
        throw CapExceededError("kneser graph too large", 2'000'001);
    if (m > 62) throw GraphError("kneser ground set too large");
    SetMap sets = kneser_vertex_sets(m, n);
    std::vector<unsigned long long> masks(sets.size(), 0);
    std::vector<std::string> labels(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (int x : sets[i]) masks[i] |= 1ull << x;
        labels[i] = set_label(sets[i]);
    }
    EdgeList edges;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (__builtin_popcountll(masks[i] & masks[j]) <= s)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    std::string name = "KG(" + std::to_string(m) + "," + std::to_string(n);
    if (s > 0) name += "," + std::to_string(s);
    name += ")";
    return Graph(static_cast<int>(sets.size()), edges, std::move(labels), name, true);
}

Graph petersen() { return kneser(5, 2, 0).renamed("Petersen"); }

Graph subdivide(const Graph& g, int s) {
    if (s < 1) throw GraphError("subdivision parameter must be >= 1");
    if (s == 1) return g;
    const int n = g.order();
    const EdgeList base_edges = g.edges();
    const int order = n + (s - 1) * static_cast<int>(base_edges.size());
    EdgeList edges;
    std::vector<std::string> labels(order);
    for (int v = 0; v < n; ++v)
        labels[v] = g.has_labels() ? g.labels()[v] : std::to_string(v);
    int fresh = n;
    for (auto [u, v] : base_edges) {
        int prev = u;
        for (int i = 1; i < s; ++i) {
            labels[fresh] = "(" + std::to_string(u) + "," + std::to_string(v) + "," +
                            std::to_string(i) + ")";
            edges.emplace_back(prev, fresh);
            prev = fresh++;
        }
        edges.emplace_back(prev, v);
    }
    std::string name = g.name().empty() ? "" : g.name() + "^(1/" + std::to_string(s) + ")";
    return Graph(order, edges, std::move(labels), name, false);
}

Graph frac_power(const Graph& g, int r, int s) {
    if (r < 1) throw GraphError("fractional power numerator must be >= 1");
    Graph sub = subdivide(g, s);
    if (r == 1) {
        std::string name =
            g.name().empty() ? "" : g.name() + "^(1/" + std::to_string(s) + ")";
        return sub.renamed(name);
    }
    Graph p = walk_power(sub, r);
    std::string name = g.name().empty()
                           ? ""
                           : g.name() + "^(" + std::to_string(r) + "/" + std::to_string(s) + ")";
    return p.renamed(name);
}

Graph dual_power_base(const Graph& g, int s, long long vertex_cap) {
    if (s < 0) throw GraphError("dual power parameter must be >= 0");
    if (s == 0) return g;
    const int n = g.order();

    // Layered walk neighborhoods N_0..N_s per root vertex.
    std::vector<std::vector<std::vector<int>>> layers(n);
    const auto cap = static_cast<unsigned long long>(vertex_cap);
    unsigned long long total = 0;
    for (int v = 0; v < n; ++v) {
        layers[v].resize(s + 1);
        unsigned long long per_root = 1;
        for (int i = 1; i <= s; ++i) {
            layers[v][i] = walk_neighborhood(g, v, i).to_vector();
            int sz = static_cast<int>(layers[v][i].size());
            if (sz > 30)
                throw CapExceededError("dual power layer too wide", 1ull << 31);
            unsigned long long choices = (1ull << sz) - 1;
            if (choices == 0 || per_root == 0) {
                per_root = 0;
                continue;
            }
            if (per_root > (cap + 1) / choices + 1)
                throw CapExceededError("dual power vertex cap exceeded", cap + 1);
            per_root *= choices;
        }
        total += per_root;
        if (total > cap)
            throw CapExceededError("dual power vertex cap exceeded", total);
    }

    // Tuples in deterministic order: root ascending, then per-layer subset
    // masks ascending, last layer fastest.
    struct Tuple {
        int root;
        std::vector<Bitset> sets; // index 0 = A_1 singleton, 1..s = A_2..A_{s+1}
    };
    std::vector<Tuple> tuples;
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) {
        bool viable = true;
        for (int i = 1; i <= s; ++i)
            if (layers[v][i].empty()) viable = false;
        if (!viable) continue;
        std::vector<unsigned> mask(s + 1, 1);
        while (true) {
            Tuple t;
            t.root = v;
            t.sets.assign(s + 1, Bitset(n));
            t.sets[0].set(v);
            std::string lab = "({" + std::to_string(v) + "}";
            for (int i = 1; i <= s; ++i) {
                std::vector<int> members;
                for (std::size_t b = 0; b < layers[v][i].size(); ++b)
                    if (mask[i] >> b & 1) {
                        t.sets[i].set(layers[v][i][b]);
                        members.push_back(layers[v][i][b]);
                    }
                lab += "|" + set_label(members);
            }
            lab += ")";
            tuples.push_back(std::move(t));
            labels.push_back(std::move(lab));
            int i = s;
            while (i >= 1) {
                if (++mask[i] < (1u << layers[v][i].size())) break;
                mask[i] = 1;
                --i;
            }
            if (i < 1) break;
        }
    }

    auto bowtie = [&](const Bitset& a, const Bitset& b) {
        for (int x = a.first(); x >= 0; x = a.next(x + 1))
            if (!b.is_subset_of(g.row(x))) return false;
        return true;
    };
    auto tuples_adjacent = [&](const Tuple& a, const Tuple& b) {
        for (int i = 0; i < s; ++i) {
            if (!a.sets[i].is_subset_of(b.sets[i + 1])) return false;
            if (!b.sets[i].is_subset_of(a.sets[i + 1])) return false;
        }
        for (int j = 0; j <= s; ++j)
            if (!bowtie(a.sets[j], b.sets[j])) return false;
        return true;
    };

    EdgeList edges;
    for (std::size_t i = 0; i < tuples.size(); ++i)
        for (std::size_t j = i + 1; j < tuples.size(); ++j)
            if (tuples_adjacent(tuples[i], tuples[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));

    std::string name =
        g.name().empty() ? "" : g.name() + "~(1/" + std::to_string(2 * s + 1) + ")";
    return Graph(static_cast<int>(tuples.size()), edges, std::move(labels), name, false);
}

Graph dual_power(const Graph& g, int r, int s, long long vertex_cap) {
    if (r < 0) throw GraphError("dual power numerator parameter must be >= 0");
    Graph base = dual_power_base(g, s, vertex_cap);
    Graph out = r == 0 ? base : walk_power(base, 2 * r + 1);
    std::string name = g.name().empty() ? ""
                                        : g.name() + "~(" + std::to_string(2 * r + 1) + "/" +
                                              std::to_string(2 * s + 1) + ")";
    return out.renamed(name);
}

Graph hajos_chain(int d, int n) {
    if (d < 2 || n < 3) throw GraphError("hajos chain requires d >= 2, n >= 3");
    const int order = d * (n - 1) + 1;
    std::vector<std::string> labels(order);
    labels[0] = "v1";
    for (int i = 1; i <= d; ++i) labels[i * (n - 1)] = "w" + std::to_string(i);
    for (int i = 1; i <= d; ++i)
        for (int j = 2; j <= n - 1; ++j)
            labels[(i - 1) * (n - 1) + (j - 1)] =
                "u" + std::to_string(i) + "_" + std::to_string(j);
    EdgeList edges;
    for (int i = 1; i <= d; ++i) {
        int base = (i - 1) * (n - 1); // v_i
        int top = i * (n - 1);        // w_i
        for (int a = base; a <= top; ++a)
            for (int b = a + 1; b <= top; ++b)
                if (!(a == base && b == top)) edges.emplace_back(a, b);
    }
    edges.emplace_back(0, d * (n - 1));
    return Graph(order, edges, std::move(labels),
                 "H" + std::to_string(d) + "(K" + std::to_string(n) + ")", false);
}

ColorMap hajos_circular_coloring(int d, int n) {
    if (d < 2 || n < 3) throw GraphError("hajos chain requires d >= 2, n >= 3");
    const int order = d * (n - 1) + 1;
    ColorMap c(order, 0);
    c[0] = d * (n - 1) + 1;
    for (int i = 1; i <= d; ++i) c[i * (n - 1)] = i;
    for (int i = 1; i <= d; ++i)
        for (int j = 2; j <= n - 1; ++j) c[(i - 1) * (n - 1) + (j - 1)] = (j - 1) * d + i;
    return c;
}

SetMap fractional_embedding(const Graph& g, const SetMap& f, int m, int n, int s) {
    if (m < 1 || n < 1 || n > m) throw GraphError("kneser parameters out of range");
    if (s < 0) throw GraphError("expansion parameter must be >= 0");
    if (static_cast<int>(f.size()) != g.order())
        throw GraphError("set map size does not match graph order");
    std::vector<unsigned long long> masks(f.size(), 0);
    for (std::size_t v = 0; v < f.size(); ++v) {
        if (static_cast<int>(f[v].size()) != n)
            throw GraphError("set map image is not an n-subset");
        for (int x : f[v]) {
            if (x < 1 || x > m) throw GraphError("set map element outside [m]");
            if (masks[v] >> x & 1) throw GraphError("set map image has repeats");
            masks[v] |= 1ull << x;
        }
    }
    for (auto [u, v] : g.edges())
        if (masks[u] & masks[v])
            throw GraphError("set map is not a homomorphism into kneser(m,n,0)");

    SetMap out(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) {
        for (int i = 1; i <= m; ++i) {
            int block = (i - 1) * (2 * s + 1);
            if (masks[v] >> i & 1)
                for (int x = block + s + 1; x <= block + 2 * s + 1; ++x) out[v].push_back(x);
            else
                for (int x = block + 1; x <= block + s; ++x) out[v].push_back(x);
        }
    }
    return out;
}

bool kneser_walk_condition(int m, int n, int k, int l) {
    if (m <= 2 * n) throw GraphError("walk criterion requires m > 2n");
    if (k < 0 || k > n || l < 0) throw GraphError("walk criterion parameters out of range");
    if (l % 2 == 0) return k >= n - (l / 2) * (m - 2 * n);
    return k <= ((l - 1) / 2) * (m - 2 * n);
}

} // namespace circpow
