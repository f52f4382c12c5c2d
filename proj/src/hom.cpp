#include "circpow/hom.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace circpow {

double SearchOptions::default_budget_seconds() {
    static const double value = [] {
        if (const char* env = std::getenv("CIRCPOW_BUDGET")) {
            char* end = nullptr;
            double v = std::strtod(env, &end);
            if (end != env && v > 0) return v;
        }
        return 600.0;
    }();
    return value;
}

namespace {

using Clock = std::chrono::steady_clock;

Clock::time_point deadline_from(double seconds) {
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(seconds));
}

std::vector<std::vector<int>> components_of(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{start};
        comp[start] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (int w = g.row(u).first(); w >= 0; w = g.row(u).next(w + 1))
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
    }
    return out;
}

// Binary constraint between two source vertices over target values. Source
// edges start as plain target adjacency; variable elimination composes them
// into explicit walk-compatibility relations.
struct RelEntry {
    std::vector<Bitset> fwd; // fwd[a] = allowed partner values; empty => adjacency
    std::vector<Bitset> bwd;
    bool plain() const { return fwd.empty(); }
};

// One component of the source, solved as a CSP: arc-consistency propagation,
// exact elimination of vertices with at most two constraint neighbors, then
// smallest-domain-first backtracking on the remaining core.
struct ComponentCSP {
    const Graph& g;
    const Graph& h;
    std::vector<int> vertices;
    Clock::time_point deadline;
    std::atomic<bool>* cancel = nullptr;
    bool reverse_order = false;
    unsigned long long nodes = 0;
    bool timed_out = false;

    std::vector<Bitset> dom;
    std::vector<int> assignment;
    std::map<std::pair<int, int>, RelEntry> rels;
    std::vector<std::set<int>> nbr;
    std::vector<char> present;
    std::vector<int> core;

    struct ElimRecord {
        int vertex;
        Bitset domain;
        // For each constraint neighbor at elimination time: rows indexed by
        // this vertex's value, bits = allowed neighbor values.
        std::vector<std::pair<int, std::vector<Bitset>>> from_self;
    };
    std::vector<ElimRecord> elim_stack;

    ComponentCSP(const Graph& g, const Graph& h, std::vector<int> members,
                 Clock::time_point deadline)
        : g(g), h(h), vertices(std::move(members)), deadline(deadline),
          dom(g.order()), assignment(g.order(), -1), nbr(g.order()),
          present(g.order(), 0) {
        for (int v : vertices) {
            dom[v] = Bitset(h.order());
            dom[v].fill();
            present[v] = 1;
        }
        for (int v : vertices)
            for (int w = g.row(v).first(); w >= 0; w = g.row(v).next(w + 1))
                if (v < w) {
                    rels.emplace(std::make_pair(v, w), RelEntry{});
                    nbr[v].insert(w);
                    nbr[w].insert(v);
                }
    }

    bool expired() {
        ++nodes;
        if (cancel && cancel->load(std::memory_order_relaxed)) {
            timed_out = true;
            return true;
        }
        if (Clock::now() > deadline) {
            timed_out = true;
            return true;
        }
        return false;
    }

    // Allowed partner values at `to` when `from` takes value a.
    const Bitset& rel_row(int from, int to, int a) const {
        auto it = rels.find(std::minmax(from, to));
        if (it->second.plain()) return h.row(a);
        return from < to ? it->second.fwd[a] : it->second.bwd[a];
    }

    bool revise(int x, int y) {
        bool changed = false;
        for (int a = dom[x].first(); a >= 0; a = dom[x].next(a + 1))
            if (!rel_row(x, y, a).intersects(dom[y])) {
                dom[x].reset(a);
                changed = true;
            }
        return !changed || dom[x].any();
    }

    bool propagate(const std::vector<int>& seeds) {
        std::deque<std::pair<int, int>> queue;
        auto push_arcs_into = [&](int y) {
            for (int x : nbr[y]) queue.emplace_back(x, y);
        };
        if (seeds.empty())
            for (int u : vertices) {
                if (present[u]) push_arcs_into(u);
            }
        else
            for (int u : seeds) push_arcs_into(u);
        while (!queue.empty()) {
            auto [x, y] = queue.front();
            queue.pop_front();
            int before = dom[x].count();
            if (!revise(x, y)) return false;
            if (dom[x].count() != before) push_arcs_into(x);
        }
        return true;
    }

    // Materialized copy of the relation rows seen from x.
    std::vector<Bitset> rows_from(int x, int u) const {
        std::vector<Bitset> rows(h.order());
        for (int c = 0; c < h.order(); ++c) rows[c] = rel_row(x, u, c);
        return rows;
    }

    void drop_constraint(int a, int b) {
        rels.erase(std::minmax(a, b));
        nbr[a].erase(b);
        nbr[b].erase(a);
    }

    // Exact elimination of a vertex with <= 2 constraint neighbors; the
    // composed relation keeps satisfiability unchanged and the elimination
    // stack lets any core solution extend back.
    bool eliminate(int x) {
        ElimRecord rec;
        rec.vertex = x;
        rec.domain = dom[x];
        if (dom[x].none()) return false;
        std::vector<int> ns(nbr[x].begin(), nbr[x].end());
        for (int u : ns) rec.from_self.emplace_back(u, rows_from(x, u));

        if (ns.size() == 1) {
            int u = ns[0];
            Bitset mask(h.order());
            for (int c = dom[x].first(); c >= 0; c = dom[x].next(c + 1))
                mask |= rec.from_self[0].second[c];
            dom[u] &= mask;
            drop_constraint(x, u);
            if (dom[u].none()) return false;
        } else if (ns.size() == 2) {
            int u = ns[0], v = ns[1];
            const auto& to_u = rec.from_self[0].second;
            const auto& to_v = rec.from_self[1].second;
            // composed(a, b) = exists c in dom[x]: to_u[c] has a and to_v[c] has b
            std::vector<Bitset> fwd(h.order(), Bitset(h.order()));
            for (int c = dom[x].first(); c >= 0; c = dom[x].next(c + 1))
                for (int a = to_u[c].first(); a >= 0; a = to_u[c].next(a + 1))
                    fwd[a] |= to_v[c];
            std::vector<Bitset> bwd(h.order(), Bitset(h.order()));
            for (int a = 0; a < h.order(); ++a)
                for (int b = fwd[a].first(); b >= 0; b = fwd[a].next(b + 1))
                    bwd[b].set(a);

            drop_constraint(x, u);
            drop_constraint(x, v);
            auto key = std::minmax(u, v);
            auto [it, fresh] = rels.emplace(key, RelEntry{});
            if (fresh) {
                it->second.fwd = u < v ? std::move(fwd) : std::move(bwd);
                it->second.bwd = u < v ? std::move(bwd) : std::move(fwd);
            } else {
                RelEntry& old = it->second;
                if (old.plain()) {
                    old.fwd.assign(h.order(), Bitset(h.order()));
                    old.bwd.assign(h.order(), Bitset(h.order()));
                    for (int a = 0; a < h.order(); ++a) {
                        old.fwd[a] = h.row(a);
                        old.bwd[a] = h.row(a);
                    }
                }
                const auto& add_fwd = u < v ? fwd : bwd;
                const auto& add_bwd = u < v ? bwd : fwd;
                for (int a = 0; a < h.order(); ++a) {
                    old.fwd[a] &= add_fwd[a];
                    old.bwd[a] &= add_bwd[a];
                }
            }
            nbr[u].insert(v);
            nbr[v].insert(u);
            // Eager pruning: values with empty composed rows cannot extend.
            for (int a = dom[u].first(); a >= 0; a = dom[u].next(a + 1))
                if (!rel_row(u, v, a).intersects(dom[v])) dom[u].reset(a);
            for (int b = dom[v].first(); b >= 0; b = dom[v].next(b + 1))
                if (!rel_row(v, u, b).intersects(dom[u])) dom[v].reset(b);
            if (dom[u].none() || dom[v].none()) return false;
        }
        present[x] = 0;
        elim_stack.push_back(std::move(rec));
        return true;
    }

    // Collapses paths, trees and cycles exactly. Only worthwhile when the
    // relation matrices stay small.
    bool run_elimination() {
        if (h.order() > 512) return true;
        bool progress = true;
        while (progress) {
            progress = false;
            for (int v : vertices) {
                if (!present[v] || nbr[v].size() > 2) continue;
                if (expired()) return false; // timed_out distinguishes from None
                if (!eliminate(v)) return false;
                progress = true;
            }
        }
        return true;
    }

    int pick_unassigned() const {
        int best = -1, best_size = -1;
        for (int u : core) {
            if (assignment[u] >= 0) continue;
            int size = dom[u].count();
            if (best < 0 || size < best_size ||
                (size == best_size && (reverse_order ? u > best : u < best))) {
                best = u;
                best_size = size;
            }
        }
        return best;
    }

    bool dfs() {
        if (expired()) return false;
        int u = pick_unassigned();
        if (u < 0) return true;
        std::vector<int> candidates = dom[u].to_vector();
        if (reverse_order) std::reverse(candidates.begin(), candidates.end());
        for (int a : candidates) {
            std::vector<Bitset> saved;
            saved.reserve(core.size());
            for (int v : core) saved.push_back(dom[v]);
            dom[u].clear();
            dom[u].set(a);
            assignment[u] = a;
            if (propagate({u}) && dfs()) return true;
            if (timed_out) {
                assignment[u] = -1;
                return false;
            }
            assignment[u] = -1;
            std::size_t i = 0;
            for (int v : core) dom[v] = saved[i++];
        }
        return false;
    }

    // Assigns eliminated vertices in reverse elimination order; a value
    // always exists by construction of the composed relations.
    void extend() {
        for (auto it = elim_stack.rbegin(); it != elim_stack.rend(); ++it) {
            Bitset allowed = it->domain;
            for (const auto& [u, rows] : it->from_self) {
                int b = assignment[u];
                for (int c = allowed.first(); c >= 0; c = allowed.next(c + 1))
                    if (!rows[c].test(b)) allowed.reset(c);
            }
            if (allowed.none())
                throw std::logic_error("elimination extension lost all supports");
            assignment[it->vertex] = allowed.first();
        }
    }

    HomStatus run() {
        if (!propagate({})) return HomStatus::None;
        if (!run_elimination()) return timed_out ? HomStatus::Timeout : HomStatus::None;
        core.clear();
        for (int v : vertices)
            if (present[v]) core.push_back(v);
        if (!propagate({})) return HomStatus::None;
        if (!dfs()) return timed_out ? HomStatus::Timeout : HomStatus::None;
        extend();
        return HomStatus::Found;
    }
};

// Sound odd-girth obstruction: G -> H forces og(G) >= og(H).
bool odd_girth_obstruction(const Graph& g, const Graph& h) {
    auto og_g = odd_girth(g);
    if (!og_g) return false; // bipartite source
    auto og_h = odd_girth(h);
    if (!og_h) return true;
    return *og_h > *og_g;
}

HomStatus solve_component(const Graph& g, const Graph& h, const std::vector<int>& comp,
                          int pinned, Clock::time_point deadline, const SearchOptions& opts,
                          std::vector<int>& out_map, unsigned long long& nodes) {
    auto run_one = [&](bool reverse, std::atomic<bool>* cancel, std::vector<int>& map_out) {
        ComponentCSP csp(g, h, comp, deadline);
        csp.reverse_order = reverse;
        csp.cancel = cancel;
        if (pinned >= 0) {
            csp.dom[pinned].clear();
            csp.dom[pinned].set(0);
        }
        HomStatus st = csp.run();
        nodes += csp.nodes;
        if (st == HomStatus::Found)
            for (int v : comp) map_out[v] = csp.assignment[v];
        return st;
    };

    if (opts.parallel && pinned < 0 && comp.size() > 1 && h.order() > 1) {
        // Split one vertex's candidate list across threads.
        int root = comp.front();
        for (int v : comp)
            if (g.degree(v) > g.degree(root) || (g.degree(v) == g.degree(root) && v < root))
                root = v;
        unsigned workers =
            std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                               static_cast<unsigned>(h.order()));
        std::atomic<bool> found{false};
        std::atomic<bool> timeout{false};
        std::mutex result_mutex;
        std::vector<int> winner;
        std::vector<std::thread> threads;
        std::atomic<int> next{0};
        for (unsigned t = 0; t < workers; ++t) {
            threads.emplace_back([&] {
                while (!found.load()) {
                    int a = next.fetch_add(1);
                    if (a >= h.order()) break;
                    ComponentCSP csp(g, h, comp, deadline);
                    csp.cancel = &found;
                    csp.dom[root].clear();
                    csp.dom[root].set(a);
                    HomStatus st = csp.run();
                    if (st == HomStatus::Found) {
                        std::scoped_lock lock(result_mutex);
                        if (!found.exchange(true)) {
                            winner.assign(g.order(), -1);
                            for (int v : comp) winner[v] = csp.assignment[v];
                        }
                        break;
                    }
                    if (st == HomStatus::Timeout && !found.load()) {
                        timeout.store(true);
                        break;
                    }
                }
            });
        }
        for (auto& th : threads) th.join();
        if (found.load()) {
            for (int v : comp) out_map[v] = winner[v];
            return HomStatus::Found;
        }
        return timeout.load() ? HomStatus::Timeout : HomStatus::None;
    }

    HomStatus st = run_one(false, nullptr, out_map);
    if (st == HomStatus::None && opts.paranoia) {
        std::vector<int> scratch(g.order(), -1);
        if (run_one(true, nullptr, scratch) == HomStatus::Found)
            throw std::logic_error("homomorphism search disagreed with its restart");
    }
    return st;
}

} // namespace

HomResult find_homomorphism(const Graph& g, const Graph& h, const SearchOptions& opts) {
    HomResult result;
    result.certificate.map.assign(g.order(), -1);
    if (g.order() == 0) {
        result.status = HomStatus::Found;
        return result;
    }
    if (h.order() == 0 || (g.size() > 0 && h.size() == 0) || odd_girth_obstruction(g, h)) {
        result.status = HomStatus::None;
        result.certificate.map.clear();
        return result;
    }

    auto deadline = deadline_from(opts.budget_seconds);
    auto comps = components_of(g);

    // Symmetry cut: the image of one vertex may be pinned to 0 when the
    // target is known vertex-transitive. Pin the highest-degree source
    // vertex and solve its component first.
    int pinned = -1;
    if (opts.symmetry && h.vertex_transitive()) {
        pinned = 0;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) > g.degree(pinned)) pinned = v;
        std::size_t home = 0;
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (int v : comps[c])
                if (v == pinned) home = c;
        if (home != 0) std::swap(comps[0], comps[home]);
    }

    for (const auto& comp : comps) {
        bool has_pin = false;
        for (int v : comp) has_pin |= (v == pinned);
        HomStatus st = solve_component(g, h, comp, has_pin ? pinned : -1, deadline, opts,
                                       result.certificate.map, result.nodes);
        if (st != HomStatus::Found) {
            result.status = st;
            result.certificate.map.clear();
            return result;
        }
    }
    result.status = HomStatus::Found;
    return result;
}

bool check_homomorphism(const HomCertificate& cert, const Graph& g, const Graph& h) {
    if (static_cast<int>(cert.map.size()) != g.order())
        throw GraphError("certificate is not total on the source");
    for (int v = 0; v < g.order(); ++v)
        if (cert.map[v] < 0 || cert.map[v] >= h.order())
            throw GraphError("certificate maps outside the target");
    for (auto [u, v] : g.edges())
        if (!h.adjacent(cert.map[u], cert.map[v])) return false;
    return true;
}

Decision homomorphically_equivalent(const Graph& g, const Graph& h,
                                    const SearchOptions& opts) {
    HomResult forward = find_homomorphism(g, h, opts);
    if (forward.status == HomStatus::None) return Decision::No;
    HomResult backward = find_homomorphism(h, g, opts);
    if (backward.status == HomStatus::None) return Decision::No;
    if (forward.status == HomStatus::Timeout || backward.status == HomStatus::Timeout)
        return Decision::Inconclusive;
    return Decision::Yes;
}

HomCertificate certificate_from_coloring(const std::vector<int>& colors) {
    HomCertificate cert;
    cert.map.reserve(colors.size());
    for (int c : colors) {
        if (c < 1) throw GraphError("colors are 1-based");
        cert.map.push_back(c - 1);
    }
    return cert;
}

} // namespace circpow
