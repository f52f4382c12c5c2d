#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "circpow/constructions.hpp"
#include "circpow/invariants.hpp"
#include "circpow/io.hpp"
#include "circpow/verify.hpp"

namespace {

using namespace circpow;

// Exit codes are a stable scripting contract:
//   0 success / pass, 1 fail / false, 2 usage error, 3 timeout / inconclusive.
constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;

void emit_graph(const Graph& g, const std::string& output) {
    if (output.empty()) {
        std::cout << graph_to_string(g);
        std::cerr << g.name() << ": order=" << g.order() << " size=" << g.size() << "\n";
    } else {
        save_graph(g, output);
        std::cout << "wrote " << output << ": " << g.name() << " order=" << g.order()
                  << " size=" << g.size() << "\n";
    }
}

struct ConstructArgs {
    std::string family;
    int n = 0, d = 0, m = 0, k = 0, s = 0;
    std::string output;
};

int run_construct(const ConstructArgs& a) {
    Graph g;
    if (a.family == "circular") g = circular_complete(a.n, a.d);
    else if (a.family == "kneser") g = kneser(a.m, a.n, a.s);
    else if (a.family == "cycle") g = cycle_graph(a.n);
    else if (a.family == "complete") g = complete_graph(a.n);
    else if (a.family == "hajos") g = hajos_chain(a.d, a.k);
    else if (a.family == "petersen") g = petersen();
    else throw CLI::ValidationError("unknown family " + a.family);
    emit_graph(g, a.output);
    return kExitOk;
}

struct PowerArgs {
    std::string kind;
    std::string input, output;
    int k = 0, s = 0, r = 0, num = 0, den = 0;
    long long cap = 20000;
};

int run_power(const PowerArgs& a) {
    Graph g = load_graph(a.input);
    Graph out;
    if (a.kind == "subdivide") out = subdivide(g, a.s);
    else if (a.kind == "walk") out = walk_power(g, a.k);
    else if (a.kind == "frac") out = frac_power(g, a.num, a.den);
    else if (a.kind == "dual") out = dual_power(g, a.r, a.s, a.cap);
    else throw CLI::ValidationError("unknown power kind " + a.kind);
    if (out.name().empty())
        out = out.renamed("power(" + a.kind + ")");
    emit_graph(out, a.output);
    return kExitOk;
}

struct InvariantArgs {
    std::string which;
    std::string input, output;
    int n = 1;
    std::optional<double> budget;
};

int run_invariant(const InvariantArgs& a) {
    Graph g = load_graph(a.input);
    SearchOptions opts;
    if (a.budget) opts.budget_seconds = *a.budget;
    nlohmann::json cert;
    cert["format"] = kCertificateFormat;
    cert["graph"] = g.name();
    std::string value;

    if (a.which == "chi") {
        int chi = chromatic_number(g, opts);
        value = std::to_string(chi);
        HomResult r = find_homomorphism(g, complete_graph(chi), opts);
        cert["kind"] = "coloring";
        nlohmann::json colors = nlohmann::json::array();
        for (int image : r.certificate.map) colors.push_back(image + 1); // 1-based colors
        cert["colors"] = std::move(colors);
    } else if (a.which == "chic") {
        CircularValue cv = circular_chromatic_number(g, opts);
        value = cv.value.str();
        cert["kind"] = "circular-coloring";
        cert["target"] = "K(" + cv.value.str() + ")";
        cert["map"] = cv.witness.map; // 0-based target vertices
    } else if (a.which == "chif") {
        FractionalValue fv = fractional_chromatic_number(g);
        value = fv.value.str();
        cert["kind"] = "fractional";
        nlohmann::json cover = nlohmann::json::array();
        for (const auto& [set, w] : fv.cover)
            cover.push_back({{"set", set}, {"weight", w.str()}});
        cert["cover"] = std::move(cover);
        nlohmann::json clique = nlohmann::json::array();
        for (const auto& w : fv.clique) clique.push_back(w.str());
        cert["clique"] = std::move(clique);
    } else if (a.which == "chin") {
        int m = multichromatic_number(g, a.n, opts);
        value = std::to_string(m);
        cert["kind"] = "tuple-coloring";
        HomResult r = find_homomorphism(g, kneser(m, a.n, 0), opts);
        if (r.status == HomStatus::Found) {
            SetMap sets = kneser_vertex_sets(m, a.n);
            nlohmann::json assignment = nlohmann::json::array();
            for (int image : r.certificate.map) assignment.push_back(sets[image]); // 1-based sets
            cert["sets"] = std::move(assignment);
        }
    } else if (a.which == "alpha") {
        value = std::to_string(independence_number(g));
        cert["kind"] = "independence";
    } else if (a.which == "mu") {
        value = mu(g, opts).str();
        cert["kind"] = "mu";
    } else if (a.which == "zeta") {
        value = std::to_string(zeta(g, opts));
        cert["kind"] = "zeta";
    } else {
        throw CLI::ValidationError("unknown invariant " + a.which);
    }

    cert["value"] = value;
    std::cout << value << "\n";
    if (!a.output.empty()) {
        std::ofstream out(a.output);
        if (!out) throw GraphError("cannot write " + a.output);
        out << cert.dump(2) << "\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string suite = "all";
    bool include_long = false;
    std::optional<double> budget;
    // --k is suite-dependent: counterexample parameter or hajos clique size.
    int max_n = 10, k = 0, d = 2, m = 5, kn = 2, l = 8;
    std::string output;
};

int run_verify(const VerifyArgs& a) {
    SuiteOptions opts;
    opts.include_long = a.include_long;
    if (a.budget) opts.budget_seconds = *a.budget;
    else if (std::getenv("CIRCPOW_BUDGET"))
        opts.budget_seconds = SearchOptions::default_budget_seconds();

    VerificationReport report;
    if (a.suite == "all") report = run_all(opts);
    else if (a.suite == "circular-power") report = suite_circular_power(a.max_n, opts);
    else if (a.suite == "dual-circular") report = suite_dual_circular(opts);
    else if (a.suite == "subdivision") report = suite_subdivision_chic(opts);
    else if (a.suite == "counterexample")
        report = suite_unavoidable_counterexample(a.k > 0 ? a.k : 1, opts);
    else if (a.suite == "hajos") report = suite_hajos(a.d, a.k > 0 ? a.k : 4, opts);
    else if (a.suite == "kneser-walk") report = suite_kneser_walk(a.m, a.kn, a.l, opts);
    else if (a.suite == "fractional") report = suite_fractional(opts);
    else if (a.suite == "multichromatic") report = suite_multichromatic(opts);
    else if (a.suite == "scaling") report = suite_scaling_equivalence(opts);
    else throw CLI::ValidationError("unknown suite " + a.suite);

    for (const auto& r : report.records) {
        const char* tag = r.inconclusive ? "????" : (r.pass ? "pass" : "FAIL");
        std::printf("[%s] %-55s %s", tag, r.claim.c_str(), r.instance.c_str());
        if (!r.pass && !r.inconclusive)
            std::printf("  expected=%s computed=%s", r.expected.c_str(), r.computed.c_str());
        std::printf("  (%.2fs)\n", r.seconds);
    }
    std::printf("%zu records: %d failed, %d inconclusive\n", report.records.size(),
                report.failed(), report.inconclusive());

    if (!a.output.empty()) {
        std::ofstream out(a.output);
        if (!out) throw GraphError("cannot write " + a.output);
        out << report_to_json(report, opts, a.suite).dump(2) << "\n";
    }
    if (report.failed() > 0) return kExitFail;
    if (report.inconclusive() > 0) return kExitTimeout;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graph powers, homomorphisms and circular/fractional invariants"};
    app.require_subcommand(1);

    ConstructArgs cons;
    auto* c = app.add_subcommand("construct", "build a graph family member");
    c->add_option("family", cons.family, "circular|kneser|cycle|complete|hajos|petersen")
        ->required();
    c->add_option("--n", cons.n, "order / numerator / kneser subset size");
    c->add_option("--d", cons.d, "denominator / hajos block count");
    c->add_option("--m", cons.m, "kneser ground set size");
    c->add_option("--k", cons.k, "hajos clique size");
    c->add_option("--s", cons.s, "kneser intersection bound");
    c->add_option("-o,--output", cons.output, "write the graph document here");

    PowerArgs pow;
    auto* p = app.add_subcommand("power", "apply a graph power");
    p->add_option("--kind", pow.kind, "subdivide|walk|frac|dual")->required();
    p->add_option("-i,--input", pow.input, "input graph document")->required();
    p->add_option("--k", pow.k, "walk length");
    p->add_option("--s", pow.s, "subdivision length / dual depth");
    p->add_option("--r", pow.r, "dual numerator parameter");
    p->add_option("--num", pow.num, "fractional power numerator");
    p->add_option("--den", pow.den, "fractional power denominator");
    p->add_option("--cap", pow.cap, "dual power vertex cap");
    p->add_option("-o,--output", pow.output, "write the graph document here");

    InvariantArgs inv;
    auto* i = app.add_subcommand("invariant", "compute an exact invariant");
    i->add_option("--which", inv.which, "chi|chic|chif|chin|alpha|mu|zeta")->required();
    i->add_option("-i,--input", inv.input, "input graph document")->required();
    i->add_option("--n", inv.n, "tuple size for chin");
    i->add_option("--budget", inv.budget, "time budget in seconds");
    i->add_option("-o,--output", inv.output, "write the certificate document here");

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "run verification suites");
    v->add_option("suite", ver.suite,
                  "all|circular-power|dual-circular|subdivision|counterexample|hajos|"
                  "kneser-walk|fractional|multichromatic|scaling");
    v->add_flag("--include-long", ver.include_long, "enable long-running records");
    v->add_option("--budget", ver.budget, "per-record time budget in seconds");
    v->add_option("--max-n", ver.max_n, "circular-power sweep bound");
    v->add_option("--k", ver.k, "counterexample parameter / hajos clique size");
    v->add_option("--d", ver.d, "hajos block count");
    v->add_option("--m", ver.m, "kneser ground set size");
    v->add_option("--kn", ver.kn, "kneser subset size");
    v->add_option("--l", ver.l, "kneser walk length bound");
    v->add_option("-o,--output", ver.output, "write the report document here");

    std::string export_input;
    auto* e = app.add_subcommand("export-dot", "emit DOT text for a graph document");
    e->add_option("-i,--input", export_input, "input graph document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c->parsed()) return run_construct(cons);
        if (p->parsed()) return run_power(pow);
        if (i->parsed()) return run_invariant(inv);
        if (v->parsed()) return run_verify(ver);
        if (e->parsed()) {
            std::cout << to_dot(load_graph(export_input));
            return kExitOk;
        }
    } catch (const CLI::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const TimeoutError& err) {
        std::cerr << "timeout: " << err.what() << "\n";
        return kExitTimeout;
    } catch (const LoopCreatedError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitFail;
    } catch (const CapExceededError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitFail;
    } catch (const GraphError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
