#pragma once

#include <string>
#include <vector>

#include "circpow/graph.hpp"

namespace circpow {

// One executed claim instance. `pass` requires expected == computed exactly;
// a timed-out record is inconclusive, which never counts as a pass and is
// kept machine-distinguishable from a failure.
struct VerifyRecord {
    std::string claim;    // stable id, e.g. "circular-power/iso[n=5,d=2,r=1]"
    std::string anchor;   // the claim being checked, as a formula
    std::string instance; // instance parameters
    std::string expected;
    std::string computed;
    bool pass = false;
    bool inconclusive = false;
    double seconds = 0.0;
};

struct VerificationReport {
    std::vector<VerifyRecord> records;

    int failed() const {
        int n = 0;
        for (const auto& r : records) n += (!r.pass && !r.inconclusive) ? 1 : 0;
        return n;
    }
    int inconclusive() const {
        int n = 0;
        for (const auto& r : records) n += r.inconclusive ? 1 : 0;
        return n;
    }
    bool all_pass() const { return failed() == 0 && inconclusive() == 0; }
    void append(const VerificationReport& other) {
        records.insert(records.end(), other.records.begin(), other.records.end());
    }
};

struct SuiteOptions {
    double budget_seconds = 300.0; // per record
    bool include_long = false;     // opt-in long-running records
};

// Walk powers of circular complete graphs: isomorphism sweep plus
// power/equivalence instances.
VerificationReport suite_circular_power(int max_n = 10, const SuiteOptions& opts = {});

// Dual powers of circular complete graphs are homomorphically equivalent to
// circular complete graphs.
VerificationReport suite_dual_circular(const SuiteOptions& opts = {});

// Circular chromatic number of subdivisions and fractional powers matches
// the closed formulas, by full solver runs.
VerificationReport suite_subdivision_chic(const SuiteOptions& opts = {});

// The lower-parent unavoidability counterexample at K_{3k+1}^{1/3}.
VerificationReport suite_unavoidable_counterexample(int k = 1, const SuiteOptions& opts = {});

// Hajos chains: chromatic number, criticality, independence number, the
// explicit circular coloring, solver chi_c, zeta.
VerificationReport suite_hajos(int d = 2, int n = 4, const SuiteOptions& opts = {});

// Exhaustive walk criterion on Kneser graphs against boolean matrix powers.
VerificationReport suite_kneser_walk(int m = 5, int n = 2, int l_max = 8,
                                     const SuiteOptions& opts = {});

// Fractional chromatic bound for subdivisions, the expansion map, and the
// strictness example through the Petersen graph.
VerificationReport suite_fractional(const SuiteOptions& opts = {});

// Multichromatic numbers of subdivisions and the binomial equivalence.
VerificationReport suite_multichromatic(const SuiteOptions& opts = {});

// Odd scaling equivalence, power composition, functoriality, and the
// power/dual-power adjunction decided on both sides.
VerificationReport suite_scaling_equivalence(const SuiteOptions& opts = {});

// Every suite at default parameters.
VerificationReport run_all(const SuiteOptions& opts = {});

} // namespace circpow
