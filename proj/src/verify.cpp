#include "circpow/verify.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "circpow/constructions.hpp"
#include "circpow/invariants.hpp"

namespace circpow {

namespace {

using Clock = std::chrono::steady_clock;

struct Suite {
    VerificationReport report;
    SuiteOptions opts;

    explicit Suite(const SuiteOptions& o) : opts(o) {}

    SearchOptions search() const {
        SearchOptions s;
        s.budget_seconds = opts.budget_seconds;
        return s;
    }

    void add(std::string claim, std::string anchor, std::string instance,
             std::string expected, const std::function<std::string()>& compute) {
        VerifyRecord rec;
        rec.claim = std::move(claim);
        rec.anchor = std::move(anchor);
        rec.instance = std::move(instance);
        rec.expected = std::move(expected);
        auto t0 = Clock::now();
        try {
            rec.computed = compute();
            rec.pass = (rec.computed == rec.expected);
        } catch (const TimeoutError&) {
            rec.inconclusive = true;
            rec.computed = "timeout";
        } catch (const std::exception& e) {
            rec.computed = std::string("error: ") + e.what();
        }
        rec.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        report.records.push_back(std::move(rec));
    }
};

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string decide(Decision d) {
    if (d == Decision::Inconclusive) throw TimeoutError("equivalence check timed out");
    return d == Decision::Yes ? "equivalent" : "not equivalent";
}

std::string found(const HomResult& r) {
    if (r.status == HomStatus::Timeout) throw TimeoutError("search timed out");
    return r.status == HomStatus::Found ? "homomorphism" : "none";
}

} // namespace

VerificationReport suite_circular_power(int max_n, const SuiteOptions& opts) {
    Suite suite(opts);
    for (int n = 3; n <= max_n; ++n)
        for (int d = 1; 2 * d < n; ++d) {
            if (std::gcd(n, d) != 1) continue;
            for (int r = 1; r <= 2; ++r) {
                // Requires n/d < (2r+1)/r.
                if (!(Rational(n, d) < Rational(2 * r + 1, r))) continue;
                int k = 2 * r + 1;
                int d2 = k * d - r * n;
                std::string inst = "n=" + std::to_string(n) + ",d=" + std::to_string(d) +
                                   ",r=" + std::to_string(r);
                suite.add("circular-power/iso[" + inst + "]",
                          "walk_power(K(n/d), 2r+1) iso K(n/((2r+1)d-rn))", inst,
                          "isomorphic", [=] {
                              Graph lhs = walk_power(circular_complete(n, d), k);
                              Graph rhs = circular_complete(n, d2);
                              return are_isomorphic(lhs, rhs, opts.budget_seconds)
                                         ? "isomorphic"
                                         : "not isomorphic";
                          });
            }
        }
    // Power/equivalence direction: K(n/d) <-> walk_power(K((2s+1)n/(sn+d)), 2s+1).
    for (auto [n, d, s] : {std::tuple{5, 2, 1}, std::tuple{7, 3, 1}}) {
        std::string inst =
            "n=" + std::to_string(n) + ",d=" + std::to_string(d) + ",s=" + std::to_string(s);
        suite.add("circular-power/equiv[" + inst + "]",
                  "K(n/d) <-> walk_power(K((2s+1)n/(sn+d)), 2s+1)", inst, "equivalent",
                  [=, o = suite.search()] {
                      Graph big = circular_complete((2 * s + 1) * n, s * n + d);
                      Graph lhs = walk_power(big, 2 * s + 1);
                      return decide(homomorphically_equivalent(lhs, circular_complete(n, d), o));
                  });
    }
    return suite.report;
}

VerificationReport suite_dual_circular(const SuiteOptions& opts) {
    Suite suite(opts);
    for (auto [n, d, r] : {std::tuple{3, 1, 1}, std::tuple{5, 2, 1}, std::tuple{7, 3, 1},
                           std::tuple{5, 2, 2}}) {
        std::string inst =
            "n=" + std::to_string(n) + ",d=" + std::to_string(d) + ",r=" + std::to_string(r);
        suite.add("dual-circular/equiv[" + inst + "]",
                  "dual_power_base(K(n/d), r) <-> K((2r+1)n/(rn+d))", inst, "equivalent",
                  [=, o = suite.search()] {
                      Graph base = dual_power_base(circular_complete(n, d), r);
                      Graph target = circular_complete((2 * r + 1) * n, r * n + d);
                      return decide(homomorphically_equivalent(base, target, o));
                  });
    }
    return suite.report;
}

namespace {

std::pair<std::string, Graph> named_small_graph(const std::string& key) {
    if (key == "K3") return {key, complete_graph(3)};
    if (key == "K4") return {key, complete_graph(4)};
    if (key == "C5") return {key, cycle_graph(5)};
    return {key, hajos_chain(2, 4)};
}

} // namespace

VerificationReport suite_subdivision_chic(const SuiteOptions& opts) {
    Suite suite(opts);
    for (const std::string key : {"K3", "K4", "C5", "H2(K4)"})
        for (int s = 1; s <= 2; ++s) {
            auto [name, g] = named_small_graph(key);
            std::string inst = "G=" + name + ",s=" + std::to_string(s);
            suite.add("subdivision/chic[" + inst + "]",
                      "chi_c(G^(1/(2s+1))) == (2s+1)chi_c(G)/(s chi_c(G)+1)", inst,
                      "solver == formula", [=, o = suite.search()] {
                          Graph base = g;
                          Rational chic = circular_chromatic_number(base, o).value;
                          Rational formula = (Rational(2 * s + 1) * chic) /
                                             (Rational(s) * chic + Rational(1));
                          Rational solved =
                              circular_chromatic_number(subdivide(base, 2 * s + 1), o).value;
                          if (solved == formula) return std::string("solver == formula");
                          return "solver=" + solved.str() + " formula=" + formula.str();
                      });
        }

    // General clause instances with r > 0 (value < 4, so equality applies).
    struct PowerCase {
        const char* key;
        int r, s;
    };
    for (auto pc : {PowerCase{"K4", 3, 5}, PowerCase{"C5", 3, 5}}) {
        std::string inst = std::string("G=") + pc.key + ",power=" + std::to_string(pc.r) + "/" +
                           std::to_string(pc.s);
        suite.add("subdivision/chic-general[" + inst + "]",
                  "chi_c(G^((2r+1)/(2s+1))) == (2s+1)chi_c(G)/((s-r)chi_c(G)+2r+1) when < 4",
                  inst, "solver == formula", [=, o = suite.search()] {
                      auto [name, g] = named_small_graph(pc.key);
                      (void)name;
                      int rr = (pc.r - 1) / 2, ss = (pc.s - 1) / 2;
                      Rational chic = circular_chromatic_number(g, o).value;
                      Rational formula =
                          (Rational(pc.s) * chic) /
                          (Rational(ss - rr) * chic + Rational(pc.r));
                      Rational solved =
                          circular_chromatic_number(frac_power(g, pc.r, pc.s), o).value;
                      if (!(solved < Rational(4)))
                          return std::string("value not below 4: ") + solved.str();
                      if (solved == formula) return std::string("solver == formula");
                      return "solver=" + solved.str() + " formula=" + formula.str();
                  });
    }

    suite.add("subdivision/chi-small-power[G=K4,power=3/5]",
              "chi(G^((2r+1)/(2s+1))) == 3 when (2r+1)/(2s+1) <= chi/(3(chi-2))",
              "G=K4,power=3/5", "3", [&, o = suite.search()] {
                  return std::to_string(chromatic_number(frac_power(complete_graph(4), 3, 5), o));
              });

    suite.add("subdivision/mu-scaling[G=K4,power=3/5]",
              "mu(G^((2r+1)/(2s+1))) == (2s+1)/(2r+1) * mu(G) when the power value < 4",
              "G=K4,power=3/5", "equal", [&, o = suite.search()] {
                  Rational lhs = mu(frac_power(complete_graph(4), 3, 5), o);
                  Rational rhs = Rational(5, 3) * mu(complete_graph(4), o);
                  if (lhs == rhs) return std::string("equal");
                  return "lhs=" + lhs.str() + " rhs=" + rhs.str();
              });

    // Spot member of the infimum characterization: chi(K4^(5/9)) = 3 and the
    // family value (2n+1)/(n-t) at n=2, t=1 is 5 >= chi_c(K4) = 4.
    suite.add("subdivision/chi-inf-member[G=K4,power=5/9]",
              "chi(G^((2n+1)/(3(2t+1)))) == 3 at a member with (2n+1)/(n-t) >= chi_c(G)",
              "G=K4,n=2,t=1", "3", [&, o = suite.search()] {
                  return std::to_string(chromatic_number(frac_power(complete_graph(4), 5, 9), o));
              });
    return suite.report;
}

VerificationReport suite_unavoidable_counterexample(int k, const SuiteOptions& opts) {
    Suite suite(opts);
    const std::string ks = "k=" + std::to_string(k);
    Rational chic_expect(9 * k + 3, 3 * k + 2);
    Rational parent_expect(6 * k + 1, 2 * k + 1);

    suite.add("counterexample/chic[" + ks + "]",
              "chi_c(K_{3k+1}^(1/3)) == (9k+3)/(3k+2)", ks, chic_expect.str(),
              [=, o = suite.search()] {
                  Graph g = frac_power(complete_graph(3 * k + 1), 1, 3);
                  return circular_chromatic_number(g, o).value.str();
              });

    suite.add("counterexample/lower-parent[" + ks + "]",
              "lower parent of (9k+3)/(3k+2) is (6k+1)/(2k+1)", ks, parent_expect.str(),
              [=] { return lower_parent(9 * k + 3, 3 * k + 2).str(); });

    suite.add("counterexample/edge-deletions[" + ks + "]",
              "every single-edge deletion of K_{3k+1}^(1/3) maps into K_{3k}^(1/3)", ks,
              "all map", [=, o = suite.search()] {
                  Graph g = frac_power(complete_graph(3 * k + 1), 1, 3);
                  Graph target = frac_power(complete_graph(3 * k), 1, 3);
                  int ok = 0, total = 0;
                  for (auto [u, v] : g.edges()) {
                      ++total;
                      HomResult r = find_homomorphism(remove_edge(g, u, v), target, o);
                      if (r.status == HomStatus::Timeout)
                          throw TimeoutError("edge-deletion search timed out");
                      if (r.status == HomStatus::Found) ++ok;
                  }
                  if (ok == total) return std::string("all map");
                  return std::to_string(ok) + "/" + std::to_string(total) + " map";
              });

    suite.add("counterexample/monotone[" + ks + "]",
              "9k/(3k+1) < (6k+1)/(2k+1), so the lower parent value is avoided", ks, "yes",
              [=] { return yn(Rational(9 * k, 3 * k + 1) < parent_expect); });
    return suite.report;
}

VerificationReport suite_hajos(int d, int n, const SuiteOptions& opts) {
    Suite suite(opts);
    const std::string inst = "d=" + std::to_string(d) + ",n=" + std::to_string(n);
    const Graph g = hajos_chain(d, n);

    suite.add("hajos/chi[" + inst + "]", "chi(H_d(K_n)) == n", inst, std::to_string(n),
              [&, o = suite.search()] { return std::to_string(chromatic_number(g, o)); });

    suite.add("hajos/critical[" + inst + "]", "chi(H_d(K_n) - e) == n-1 for every edge", inst,
              "critical", [&, o = suite.search()] {
                  Graph smaller = complete_graph(n - 1);
                  int drops = 0, total = 0;
                  for (auto [u, v] : g.edges()) {
                      ++total;
                      HomResult r = find_homomorphism(remove_edge(g, u, v), smaller, o);
                      if (r.status == HomStatus::Timeout)
                          throw TimeoutError("criticality search timed out");
                      if (r.status == HomStatus::Found) ++drops;
                  }
                  if (drops == total) return std::string("critical");
                  return std::to_string(drops) + "/" + std::to_string(total) + " edges drop chi";
              });

    suite.add("hajos/alpha[" + inst + "]", "independence number of H_d(K_n) == d", inst,
              std::to_string(d), [&] { return std::to_string(independence_number(g)); });

    suite.add("hajos/coloring[" + inst + "]",
              "c(u_ij) = (j-1)d+i, c(w_i) = i, c(v_1) = d(n-1)+1 is a (d(n-1)+1, d)-coloring",
              inst, "valid", [&] {
                  HomCertificate cert = certificate_from_coloring(hajos_circular_coloring(d, n));
                  Graph target = circular_complete(d * (n - 1) + 1, d);
                  return check_homomorphism(cert, g, target) ? "valid" : "invalid";
              });

    suite.add("hajos/chic[" + inst + "]", "chi_c(H_d(K_n)) == (d(n-1)+1)/d", inst,
              Rational(d * (n - 1) + 1, d).str(), [&, o = suite.search()] {
                  return circular_chromatic_number(g, o).value.str();
              });

    suite.add("hajos/zeta[" + inst + "]", "zeta == 1 for a critical graph", inst, "1",
              [&, o = suite.search()] { return std::to_string(zeta(g, o)); });

    if (opts.include_long && d == 2 && n == 5) {
        suite.add("hajos/chic-subdivided[" + inst + "]",
                  "chi_c(H_2(K_5)^(1/3)) == 27/11 (long-running)", inst, "27/11",
                  [&, o = suite.search()] {
                      return circular_chromatic_number(subdivide(g, 3), o).value.str();
                  });
    }
    return suite.report;
}

VerificationReport suite_kneser_walk(int m, int n, int l_max, const SuiteOptions& opts) {
    Suite suite(opts);
    const std::string base_inst = "m=" + std::to_string(m) + ",n=" + std::to_string(n);
    Graph kg = kneser(m, n, 0);
    if (kg.order() > 256) throw GraphError("kneser walk suite limited to 256 vertices");
    SetMap sets = kneser_vertex_sets(m, n);
    std::vector<unsigned long long> masks(sets.size(), 0);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (int x : sets[i]) masks[i] |= 1ull << x;

    const int order = kg.order();
    // reach[u] after l steps = endpoints of length-l walks from u.
    std::vector<Bitset> reach(order, Bitset(order));
    for (int u = 0; u < order; ++u) reach[u].set(u);
    for (int l = 0; l <= l_max; ++l) {
        std::string inst = base_inst + ",l=" + std::to_string(l);
        // Snapshot since records run immediately.
        suite.add("kneser-walk/agree[" + inst + "]",
                  "walk of length l joins A,B with |A^B|=k iff (l even, k >= n-(l/2)(m-2n)) "
                  "or (l odd, k <= ((l-1)/2)(m-2n))",
                  inst, "agree", [&, l] {
                      long long mismatches = 0;
                      for (int a = 0; a < order; ++a)
                          for (int b = 0; b < order; ++b) {
                              int k = __builtin_popcountll(masks[a] & masks[b]);
                              bool brute = reach[a].test(b);
                              if (brute != kneser_walk_condition(m, n, k, l)) ++mismatches;
                          }
                      if (mismatches == 0) return std::string("agree");
                      return std::to_string(mismatches) + " mismatches";
                  });
        // Advance one walk step.
        std::vector<Bitset> next(order, Bitset(order));
        for (int u = 0; u < order; ++u)
            for (int w = reach[u].first(); w >= 0; w = reach[u].next(w + 1))
                next[u] |= kg.row(w);
        reach = std::move(next);
    }

    if (m == 5 && n == 2) {
        suite.add("kneser-walk/petersen-cube", "walk_power(KG(5,2), 3) iso K_10", base_inst,
                  "isomorphic", [&] {
                      return are_isomorphic(walk_power(kneser(5, 2, 0), 3), complete_graph(10),
                                            opts.budget_seconds)
                                 ? "isomorphic"
                                 : "not isomorphic";
                  });
        suite.add("kneser-walk/generalized-complete", "KG(5,2,1) iso K_10", base_inst,
                  "isomorphic", [&] {
                      return are_isomorphic(kneser(5, 2, 1), complete_graph(10),
                                            opts.budget_seconds)
                                 ? "isomorphic"
                                 : "not isomorphic";
                  });
    }
    return suite.report;
}

VerificationReport suite_fractional(const SuiteOptions& opts) {
    Suite suite(opts);
    const int s = 1;
    for (const std::string key : {"K3", "C5", "K4"}) {
        auto [name, g] = named_small_graph(key);
        std::string inst = "G=" + name + ",s=1";

        suite.add("fractional/embedding[" + inst + "]",
                  "|g(v)| == sm+n and adjacent overlaps == (m-2n)s for the expanded map", inst,
                  "valid", [=, o = suite.search()] {
                      Graph base = g;
                      Rational chif = fractional_chromatic_number(base).value;
                      int m = static_cast<int>(chif.num());
                      int n = static_cast<int>(chif.den());
                      HomResult f = find_homomorphism(base, kneser(m, n, 0), o);
                      if (f.status == HomStatus::Timeout)
                          throw TimeoutError("kneser homomorphism search timed out");
                      if (f.status != HomStatus::Found)
                          return std::string("no optimal kneser homomorphism found");
                      SetMap fsets(base.order());
                      SetMap all = kneser_vertex_sets(m, n);
                      for (int v = 0; v < base.order(); ++v)
                          fsets[v] = all[f.certificate.map[v]];
                      SetMap gsets = fractional_embedding(base, fsets, m, n, s);
                      for (const auto& set : gsets)
                          if (static_cast<int>(set.size()) != s * m + n)
                              return std::string("wrong image size");
                      for (auto [u, v] : base.edges()) {
                          std::vector<int> common;
                          std::set_intersection(gsets[u].begin(), gsets[u].end(),
                                                gsets[v].begin(), gsets[v].end(),
                                                std::back_inserter(common));
                          if (static_cast<int>(common.size()) != (m - 2 * n) * s)
                              return std::string("wrong adjacent overlap");
                      }
                      return std::string("valid");
                  });

        suite.add("fractional/subdivision-bound[" + inst + "]",
                  "chi_f(G^(1/(2s+1))) <= (2s+1)chi_f(G)/(s chi_f(G)+1), exact LP both sides",
                  inst, "within bound", [=] {
                      Graph base = g;
                      Rational chif = fractional_chromatic_number(base).value;
                      Rational bound = (Rational(2 * s + 1) * chif) /
                                       (Rational(s) * chif + Rational(1));
                      Rational sub = fractional_chromatic_number(subdivide(base, 2 * s + 1)).value;
                      if (sub <= bound) return std::string("within bound");
                      return "chi_f=" + sub.str() + " bound=" + bound.str();
                  });
    }

    suite.add("fractional/tight[G=K3,s=1]",
              "chi_f(C_9) == 9/4, meeting the subdivision bound with equality", "G=K3,s=1",
              "9/4", [&] {
                  return fractional_chromatic_number(subdivide(complete_graph(3), 3)).value.str();
              });

    suite.add("fractional/embedding-target[G=K3,s=1]",
              "the expanded map is a homomorphism into KG((2s+1)m, sm+n, (m-2n)s)",
              "G=K3,m=3,n=1,s=1", "valid", [&] {
                  Graph base = complete_graph(3);
                  SetMap f = {{1}, {2}, {3}};
                  SetMap gsets = fractional_embedding(base, f, 3, 1, 1);
                  Graph target = kneser(9, 4, 1);
                  SetMap all = kneser_vertex_sets(9, 4);
                  std::map<std::vector<int>, int> index;
                  for (std::size_t i = 0; i < all.size(); ++i)
                      index[all[i]] = static_cast<int>(i);
                  HomCertificate cert;
                  for (const auto& set : gsets) cert.map.push_back(index.at(set));
                  return check_homomorphism(cert, base, target) ? "valid" : "invalid";
              });

    suite.add("fractional/strict-petersen",
              "K_10^(1/3) maps into the Petersen graph, giving chi_f <= 5/2 < the bound",
              "G=K10,s=1", "strict", [&, o = suite.search()] {
                  Graph g = frac_power(complete_graph(10), 1, 3);
                  HomResult r = find_homomorphism(g, petersen(), o);
                  if (r.status == HomStatus::Timeout)
                      throw TimeoutError("petersen search timed out");
                  if (r.status != HomStatus::Found) return std::string("no homomorphism");
                  if (!check_homomorphism(r.certificate, g, petersen()))
                      return std::string("invalid certificate");
                  Rational chif_k10 = fractional_chromatic_number(complete_graph(10)).value;
                  Rational bound =
                      (Rational(3) * chif_k10) / (Rational(1) * chif_k10 + Rational(1));
                  bool strict = Rational(5, 2) < bound && Rational(5, 2) < Rational(31, 11);
                  return strict ? std::string("strict") : std::string("not strict");
              });
    return suite.report;
}

VerificationReport suite_multichromatic(const SuiteOptions& opts) {
    Suite suite(opts);
    suite.add("multichromatic/petersen-cube", "walk_power(KG(5,2), 3) iso K_10", "m=5,n=2",
              "isomorphic", [&] {
                  return are_isomorphic(walk_power(kneser(5, 2, 0), 3), complete_graph(10),
                                        opts.budget_seconds)
                             ? "isomorphic"
                             : "not isomorphic";
              });
    suite.add("multichromatic/generalized-complete", "KG(5,2,1) iso K_10", "m=5,n=2",
              "isomorphic", [&] {
                  return are_isomorphic(kneser(5, 2, 1), complete_graph(10), opts.budget_seconds)
                             ? "isomorphic"
                             : "not isomorphic";
              });
    suite.add("multichromatic/direct[G=K4^(1/3),n=2]", "chi_2(K_4^(1/3)) == 5",
              "G=K4^(1/3),n=2", "5", [&, o = suite.search()] {
                  return std::to_string(
                      multichromatic_number(subdivide(complete_graph(4), 3), 2, o));
              });
    suite.add("multichromatic/direct[G=C9,n=2]", "chi_2(C_9) == 5", "G=C9,n=2", "5",
              [&, o = suite.search()] {
                  return std::to_string(multichromatic_number(cycle_graph(9), 2, o));
              });
    suite.add("multichromatic/deep-subdivision[G=K4,s=2,n=2]",
              "chi_n(G^(1/(2s+1))) == 2n+1 when s >= n", "G=K4,s=2,n=2", "5",
              [&, o = suite.search()] {
                  return std::to_string(
                      multichromatic_number(subdivide(complete_graph(4), 5), 2, o));
              });
    // Boundary of the binomial equivalence: chi_2(G^(1/3)) <= 5 iff
    // chi(G) <= C(5,2) = 10; at G = K_11 the right side fails, so the dual
    // route pins chi_2(K_11^(1/3)) = 6 without a 121-vertex search.
    suite.add("multichromatic/boundary[G=K11,n=2]",
              "chi_n(G^(1/(2s+1))) <= 2n+i iff chi(G) <= C(2n+i, n); fails at K_11", "G=K11",
              "11 > 10", [&, o = suite.search()] {
                  int chi = chromatic_number(complete_graph(11), o);
                  return std::to_string(chi) + (chi > 10 ? " > 10" : " <= 10");
              });
    return suite.report;
}

VerificationReport suite_scaling_equivalence(const SuiteOptions& opts) {
    Suite suite(opts);
    for (const std::string key : {"K3", "C5", "K4"}) {
        auto [name, g] = named_small_graph(key);
        std::string inst = "G=" + name;
        suite.add("scaling/odd-factor[" + inst + "]",
                  "G^((2r+1)(2p+1)/((2r+1)(2q+1))) <-> G^((2p+1)/(2q+1)) at 3/9 vs 1/3", inst,
                  "equivalent", [=, o = suite.search()] {
                      return decide(homomorphically_equivalent(frac_power(g, 3, 9),
                                                               subdivide(g, 3), o));
                  });
    }

    suite.add("scaling/composition[G=C9]",
              "(G^(a/b))^(c/d) -> G^(ac/bd) at (C_9^3)^(1/3) -> C_9^(3/3)", "G=C9",
              "homomorphism", [&, o = suite.search()] {
                  Graph lhs = subdivide(walk_power(cycle_graph(9), 3), 3);
                  Graph rhs = frac_power(cycle_graph(9), 3, 3);
                  return found(find_homomorphism(lhs, rhs, o));
              });
    suite.add("scaling/composition[G=K4]",
              "(G^(1/3))^(1/3) -> G^(1/9)", "G=K4", "homomorphism",
              [&, o = suite.search()] {
                  Graph lhs = subdivide(subdivide(complete_graph(4), 3), 3);
                  Graph rhs = subdivide(complete_graph(4), 9);
                  return found(find_homomorphism(lhs, rhs, o));
              });

    suite.add("scaling/functor[G=C9,H=K3]",
              "G -> H implies G^(r/s) -> H^(r/s), at r/s = 1/3", "G=C9,H=K3", "homomorphism",
              [&, o = suite.search()] {
                  HomResult base = find_homomorphism(cycle_graph(9), complete_graph(3), o);
                  if (base.status != HomStatus::Found) return std::string("no base certificate");
                  return found(find_homomorphism(subdivide(cycle_graph(9), 3),
                                                 subdivide(complete_graph(3), 3), o));
              });
    suite.add("scaling/functor[G=C5,H=K5]",
              "G -> H implies G^(r/s) -> H^(r/s), at r/s = 3/5", "G=C5,H=K5", "homomorphism",
              [&, o = suite.search()] {
                  HomResult base = find_homomorphism(cycle_graph(5), complete_graph(5), o);
                  if (base.status != HomStatus::Found) return std::string("no base certificate");
                  return found(find_homomorphism(frac_power(cycle_graph(5), 3, 5),
                                                 frac_power(complete_graph(5), 3, 5), o));
              });

    // Power/dual-power adjunction, decided independently on both sides.
    struct DualCase {
        const char* gkey;
        const char* hkey;
        int r, s; // power (2r+1)/(2s+1) applied to G
        const char* expect;
    };
    for (auto dc : {DualCase{"C9", "C9", 0, 1, "agree(homomorphism)"},
                    DualCase{"K3", "C11", 0, 1, "agree(none)"},
                    DualCase{"C5", "C5", 1, 2, "agree(homomorphism)"}}) {
        std::string inst = std::string("G=") + dc.gkey + ",H=" + dc.hkey + ",power=" +
                           std::to_string(2 * dc.r + 1) + "/" + std::to_string(2 * dc.s + 1);
        suite.add("scaling/duality[" + inst + "]",
                  "G^((2r+1)/(2s+1)) -> H iff G -> H~((2s+1)/(2r+1))", inst, dc.expect,
                  [=, o = suite.search()] {
                      auto build = [&](const std::string& key) {
                          if (key == "C9") return cycle_graph(9);
                          if (key == "C11") return cycle_graph(11);
                          if (key == "K3") return complete_graph(3);
                          return cycle_graph(5);
                      };
                      Graph g = build(dc.gkey), h = build(dc.hkey);
                      Graph lhs_graph = frac_power(g, 2 * dc.r + 1, 2 * dc.s + 1);
                      std::string lhs = found(find_homomorphism(lhs_graph, h, o));
                      // H~((2s+1)/(2r+1)) = walk_power(dual_power_base(H, r), 2s+1).
                      Graph dual = dc.s == 0 ? dual_power_base(h, dc.r)
                                             : walk_power(dual_power_base(h, dc.r), 2 * dc.s + 1);
                      std::string rhs = found(find_homomorphism(g, dual, o));
                      if (lhs != rhs) return "lhs=" + lhs + " rhs=" + rhs;
                      return "agree(" + lhs + ")";
                  });
    }
    return suite.report;
}

VerificationReport run_all(const SuiteOptions& opts) {
    VerificationReport report;
    report.append(suite_circular_power(10, opts));
    report.append(suite_kneser_walk(5, 2, 8, opts));
    report.append(suite_kneser_walk(7, 3, 6, opts));
    report.append(suite_dual_circular(opts));
    report.append(suite_subdivision_chic(opts));
    report.append(suite_unavoidable_counterexample(1, opts));
    if (opts.include_long) report.append(suite_unavoidable_counterexample(2, opts));
    report.append(suite_hajos(2, 4, opts));
    report.append(suite_hajos(3, 4, opts));
    report.append(suite_hajos(2, 5, opts));
    report.append(suite_fractional(opts));
    report.append(suite_multichromatic(opts));
    report.append(suite_scaling_equivalence(opts));
    return report;
}

} // namespace circpow
