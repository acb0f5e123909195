#pragma once

// Exact labeled-copy counting for small patterns: degeneracy orderings, a
// DFS embedder over materialized adjacency, a complete-bipartite fast path
// (the K_{4,7} freeness check needs it), quasirandomness ratio reports, and
// common-degree extrema over generic d-sets.

#include <cstdint>
#include <string>
#include <vector>

#include "ng/normgraph.hpp"

namespace ng {

struct PatternGraph {
    uint32_t v = 0;
    std::vector<std::pair<uint32_t, uint32_t>> edges;   // unordered, simple
};

// text format: first line "v e", then e lines "i j" with 0-indexed endpoints
PatternGraph parse_pattern(const std::string& text);

PatternGraph pattern_complete(uint32_t n);
PatternGraph pattern_complete_bipartite(uint32_t a, uint32_t b);
PatternGraph pattern_path(uint32_t n);    // n vertices, n-1 edges
PatternGraph pattern_cycle(uint32_t n);

struct DegeneracyOrder {
    std::vector<uint32_t> order;      // pattern vertices, embedding order
    std::vector<uint32_t> back_deg;   // neighbors preceding each position
    uint32_t degeneracy = 0;          // max back degree
};

// repeated minimum-degree removal (smallest index breaks ties), reversed
DegeneracyOrder degeneracy_order(const PatternGraph& H);

// default work budget: NGLAB_BUDGET env var, else 10^9 units (one unit per
// examined candidate extension)
uint64_t default_budget();

// exact count of injective edge-preserving maps V(H) -> V(NG); simple
// adjacency only (loops never serve as pattern edges).  budget 0 means
// default_budget().  Throws BudgetExceeded past the cap.
uint64_t count_labeled(const GraphTable& gt, const PatternGraph& H, uint64_t budget = 0);

struct QuasiReport {
    uint64_t count;
    double expected;        // q^{t v(H) - e(H)}
    double ratio;
    uint32_t degeneracy;
    // band annotation: 2-degenerate at t >= 3 (or 3-degenerate at t >= 5)
    // gets a deviation constant; 3-degenerate at t = 4 gets only the Theta
    // window [1, 2^{c}] up to (1 +- o(1)) slack
    bool deviation_band;
    double dev_constant;    // |ratio - 1| sqrt(q) when deviation_band
    double window_low = 1.0, window_high = 1.0;
};

QuasiReport quasirandom_ratio(const GraphTable& gt, const PatternGraph& H,
                              uint64_t budget = 0);

struct DegreeExtrema {
    uint64_t dmax = 0, dmin = 0;
    bool exact = false;         // exhaustive / closed-form vs sampled bounds
    uint64_t upper_bound = 0;   // proven ceiling on dmax
    // d = 3 only: the (c1, c2) base-field classes attaining dmax
    std::vector<std::pair<uint64_t, uint64_t>> argmax_classes;
};

// extrema of the common degree over generic d-sets (loop-inclusive common
// neighborhoods, matching the degree formulas)
DegreeExtrema degree_extrema(const GraphCtx& gc, uint32_t d,
                             uint64_t max_exhaustive = 10000000,
                             uint64_t samples = 2000, uint64_t seed = 0);

} // namespace ng
