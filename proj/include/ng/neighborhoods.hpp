#pragma once

// Common-neighborhood machinery: the reduction deg(U) = |H(U)\{0}| with
// B_i = 1/(A_i - A_l), b_i = (a_i/a_l) N(B_i); triple invariants (c1,c2);
// the root system S_t(c1,c2) with its defining polynomial f_{t,c1,c2}; and
// closed forms for pair and triple degrees.  Brute-force oracles live here
// too -- every closed form is tested against them.

#include <cstdint>
#include <vector>

#include "ng/normgraph.hpp"

namespace ng {

struct ReducedSystem {
    std::vector<Fe> B;   // B_i, i = 1..l-1, pivot is the last vertex
    std::vector<Fe> b;   // matching norm targets, all nonzero
    Vertex pivot;
    bool aligned;
};

// Exact common neighborhood by intersecting neighbor streams.
// Non-generic sets come back empty without special-casing.
std::vector<Vertex> common_neighborhood_bruteforce(const GraphCtx& gc,
                                                   const std::vector<Vertex>& vs);

ReducedSystem reduce(const GraphCtx& gc, const std::vector<Vertex>& vs);

// All solutions Y of N(Y + B_i) = b_i (0 may be among them when aligned).
std::vector<Fe> h_set(const GraphCtx& gc, const ReducedSystem& rs);

// The Lemma 1 bijection H(U)\{0} -> common neighborhood.
Vertex h_to_vertex(const GraphCtx& gc, const ReducedSystem& rs, const Fe& Y);

uint64_t pair_degree(const GraphCtx& gc, const std::vector<Vertex>& T);

struct TripleInvariants {
    Fe c1, c2;        // embedded F_q^*, elements of gc.big()
    bool xi;          // all three second coordinates equal
};

TripleInvariants triple_invariants(const GraphCtx& gc, const std::vector<Vertex>& T);

// S_t(c1,c2) = {X in F_{q^{t-1}} : N(X) = c1, N(X+1) = c2}, exhaustively.
// c1, c2 are embedded F_q elements of gc.big(); t must equal gc.t().
std::vector<Fe> st_enumerate(const GraphCtx& gc, uint32_t t, const Fe& c1, const Fe& c2);

// f_{t,c1,c2}(Y) = n_{t-2}(Y+1) n_{t-2}(Y) + c1 n_{t-2}(Y+1) - c2 n_{t-2}(Y)
// with n_s(Y) = Y^{q^{s-1}+...+1}.  Generic version over an arbitrary field
// containing the given (embedded) c1, c2.
Poly f_poly_over(const FieldCtx& F, uint64_t q, uint32_t t, const Fe& c1, const Fe& c2);
Poly f_poly(const GraphCtx& gc, uint32_t t, const Fe& c1, const Fe& c2);

// Exact |S_t| with no big-field enumeration: t=3 closed form, t>=4 the
// Lemma 3(iv) recursion.  c1,c2 embedded in gc.big(); odd q only.
uint64_t st_size(const GraphCtx& gc, uint32_t t, const Fe& c1, const Fe& c2);

// Base-field version used internally and by charsum cross-checks.
uint64_t st_size_base(const FieldCtx& Fq, uint32_t t, const Fe& c1, const Fe& c2);

struct TripleDegree {
    uint64_t value;
    bool closed_form;   // false = even-q brute force (experimental path)
};

TripleDegree triple_degree(const GraphCtx& gc, const std::vector<Vertex>& T);

// Lemma 3(iii): |S_t(c1,c2)| + |roots of f in F_{q^{t-2}}| = 2(q^{t-3}+...+1).
bool lemma3iii_check(const GraphCtx& gc, uint32_t t, const Fe& c1, const Fe& c2);

} // namespace ng
