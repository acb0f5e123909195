#pragma once

// Elimination pipeline for quadruple common neighborhoods: rewrite the norm
// equations of a generic 4-set as the trivariate-or-more system
// f_i = prod_j (Y_j - C_{i,j}) - b_i, eliminate Y_{t-1} and Y_{t-2} with
// Sylvester resultants, factor out h_3, and substitute Y_j = Y^{q^{j-1}} to
// reach a univariate polynomial g~ whose roots contain H(T).  Works
// symbolically for t in {4,5}; larger t falls back to the brute-force oracle.

#include <vector>

#include "ng/mpoly.hpp"
#include "ng/neighborhoods.hpp"

namespace ng {

struct QuadSystem {
    // C[i][j-1] = -B_{i+1}^{q^{j-1}} for i in {0,1,2}, j in [t-1]
    std::vector<std::vector<Fe>> C;
    std::vector<Fe> b;              // nonzero norm targets
    std::vector<Vertex> source;     // the quadruple, pivot last
    ReducedSystem rs;
};

QuadSystem build_quad_system(const GraphCtx& gc, const std::vector<Vertex>& T);

// Intermediate objects of the elimination, exposed for cross-checking.
// All MPolys live in the variables Y_1..Y_{t-2} (t-2 of them); g and gstar
// have degree 0 in the last one.
struct Elimination {
    MPoly g1, g2;   // Res_{Y_{t-1}}(f_i, f_3), quadratic in Y_{t-2}
    MPoly g;        // Res_{Y_{t-2}}(g1, g2)
    MPoly gstar;    // g / h_3, degree <= 6 per variable
    Poly gtilde;    // gstar with Y_j = Y^{q^{j-1}}
};

// t in {4,5}; asserts the structural facts along the way (the Y_a^8
// coefficient of g vanishes, h_3 divides g exactly, the degree ceilings).
Elimination eliminate(const GraphCtx& gc, const QuadSystem& qs);

Poly build_gtilde(const GraphCtx& gc, const std::vector<Vertex>& T);

struct QuadrupleDegree {
    uint64_t bound;                 // 6(q^{t-4} + ... + 1)
    uint64_t exact;
    std::vector<Vertex> witnesses;  // the common neighbors themselves
    bool closed_form;               // false = oracle fallback (t >= 6)
};

QuadrupleDegree quadruple_degree(const GraphCtx& gc, const std::vector<Vertex>& T);

} // namespace ng
