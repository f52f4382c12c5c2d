#pragma once

#include <vector>

#include "circpow/graph.hpp"

namespace circpow {

// Vertex map witnessing a homomorphism; valid iff every source edge lands on
// a target edge. Checkable in O(|E(source)|) via check_homomorphism.
struct HomCertificate {
    std::vector<int> map;
};

struct SearchOptions {
    double budget_seconds = default_budget_seconds();
    bool parallel = false;
    // Fix the image of one root vertex to 0 when the target was constructed
    // vertex-transitive. Untagged targets never get the cut.
    bool symmetry = true;
    // Re-run exhausted searches with a different vertex order and require
    // agreement before reporting non-existence.
    bool paranoia = false;

    static double default_budget_seconds();
};

enum class HomStatus { Found, None, Timeout };

struct HomResult {
    HomStatus status = HomStatus::None;
    HomCertificate certificate;
    unsigned long long nodes = 0;
};

// Complete backtracking search with arc-consistency propagation and
// smallest-domain-first ordering; connected components of the source are
// solved independently. Found results always carry a valid certificate;
// None means the search space was exhausted; Timeout is inconclusive and
// must never be treated as non-existence.
HomResult find_homomorphism(const Graph& g, const Graph& h, const SearchOptions& opts = {});

// True iff every source edge maps to a target edge. Throws GraphError when
// the assignment is not total on V(g) or maps outside V(h).
bool check_homomorphism(const HomCertificate& cert, const Graph& g, const Graph& h);

enum class Decision { Yes, No, Inconclusive };

// Homomorphisms in both directions; Inconclusive when a timeout prevents
// either verdict.
Decision homomorphically_equivalent(const Graph& g, const Graph& h,
                                    const SearchOptions& opts = {});

// Converts a 1-based color map into a vertex map (color c -> vertex c-1).
HomCertificate certificate_from_coloring(const std::vector<int>& colors);

} // namespace circpow
