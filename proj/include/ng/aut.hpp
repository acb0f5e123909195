#pragma once

// Automorphisms of NG(q,t): the generator maps (X,x) -> (C^2 X^{p^i},
// +- N(C) x^{p^i}) (odd q) and (C^2 X^{p^i} + A, N(C) x^{p^i}) (even q),
// with composition, inversion, canonical enumeration, group orders, a
// brute-force cross-check at tiny sizes, and the poor-set structure that
// underlies coordinate independence.

#include <cstdint>
#include <string>
#include <vector>

#include "ng/normgraph.hpp"

namespace ng {

struct AutMap {
    int eps = +1;    // +-1 sign on the second coordinate (odd q; +1 when even)
    Fe C;            // nonzero big-field scale parameter
    uint32_t i = 0;  // Frobenius index in [1 .. k(t-1)]; k(t-1) is trivial
    Fe A;            // big-field additive shift, even q only (zero otherwise)
};

// Validates parameters against the characteristic and stores the canonical
// form (sign folded into C when t-1 is odd; C fixed to the smaller encoding
// of {C, -C} when t-1 is even).
AutMap make_aut(const GraphCtx& gc, int eps, const Fe& C, uint32_t i, const Fe& A);

AutMap aut_identity(const GraphCtx& gc);
bool aut_eq(const GraphCtx& gc, const AutMap& m1, const AutMap& m2);

Vertex apply(const GraphCtx& gc, const AutMap& m, const Vertex& v);

// m1 after m2 (apply m2 first), renormalized
AutMap compose(const GraphCtx& gc, const AutMap& m1, const AutMap& m2);
AutMap inverse(const GraphCtx& gc, const AutMap& m);

// (q^{t-1}-1) k(t-1) for odd q, q^{t-1}(q^{t-1}-1) k(t-1) for even q > 2;
// q = 2 throws DegenerateGraph (complete graph, symmetric group)
uint64_t aut_order(const GraphCtx& gc);
std::string aut_structure(const GraphCtx& gc);

// every automorphism exactly once, in canonical parameter order; the length
// always equals aut_order(gc)
std::vector<AutMap> enumerate_aut(const GraphCtx& gc);

// count of all adjacency-preserving bijections by backtracking; respect_loops
// additionally demands that v ~ v is preserved.  n_vertices <= 30.
uint64_t brute_force_aut(const GraphCtx& gc, bool respect_loops = true);

// The sets S_x = {(X,x) : X} of size q^{t-1} are poor (all internal pairs
// have common degree below (q^{t-1}-1)/(q-1)) and every poor set of that
// size is some S_x; verified from exhaustive pair degrees.
bool poor_set_check(const GraphCtx& gc);

} // namespace ng
