#pragma once

// Quadratic-character sums: the Weil bound with its c*g^2 exceptional
// branch, the quartic L(b) from the |S_4| identity, and the perfect-square
// criterion for L.

#include <cstdint>
#include <optional>

#include "ng/ff.hpp"
#include "ng/normgraph.hpp"

namespace ng {

// sum over a in F of eta(f(a)); odd characteristic, f nonzero
int64_t char_sum(const FieldCtx& F, const Poly& f);

struct WeilReport {
    int64_t sum;
    double bound;          // (d-1) sqrt(q)
    bool square_branch;    // f = c * g^2
    int64_t exact;         // (q - r) eta(c), meaningful in the square branch
    bool ok;               // matching bound/exact statement holds
};

WeilReport weil_check(const FieldCtx& F, const Poly& f);

// L(b) = ((b+c1)(1+b) - b c2)^2 - 4 b (b+c1)^2, returned via its expanded
// coefficients; monic quartic with constant term c1^2.
Poly L_poly(const FieldCtx& F, const Fe& c1, const Fe& c2);

// Does L_{c1,c2} equal (b^2 + a1 b + a0)^2?  Solves the coefficient system;
// by Claim 9 this happens exactly at (c1,c2) = (1,-1) with (a1,a0) = (1,1).
std::optional<std::pair<Fe, Fe>> claim9_check(const FieldCtx& F, const Fe& c1, const Fe& c2);

// |S_4(c1,c2)| = q + 2 + sum_b eta(L(b)); base-field form and a graph
// context wrapper (c1, c2 embedded in gc.big(), t = 4).
uint64_t s4_identity_base(const FieldCtx& Fq, const Fe& c1, const Fe& c2);
uint64_t s4_identity(const GraphCtx& gc, const Fe& c1, const Fe& c2);

} // namespace ng
