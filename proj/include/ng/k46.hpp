#pragma once

// The K_{4,6} constructor: the special set S_4(1,-1) in factored form, the
// Moebius bijection onto G \ G^3, the square-character transfer, the explicit
// six-solution solver, and the end-to-end certificate builder with its
// translation family.  Everything runs inside one F_{q^6} overfield so that
// both signs of e_q are covered uniformly.

#include <optional>
#include <string>
#include <vector>

#include "ng/neighborhoods.hpp"

namespace ng {

struct CubicEnv {
    GraphCtx gc;              // NG(q,4); big field is F_{q^3}
    FieldCtx big6;            // F_{q^6}
    SubfieldEmbedding emb3;   // F_{q^3} -> F_{q^6}
    int e_q;                  // q mod 3, as -1 / +1 (0 excluded with p=3)
    Fe a;                     // nontrivial third root of unity, in big6
    uint64_t g_order;         // |G| = 3(q - e_q)
    Fe g;                     // generator of G, in big6

    Fe lift3(const Fe& x) const;      // F_{q^3} -> F_{q^6}
};

// p not in {2,3}
CubicEnv make_env(uint64_t p, uint32_t k);

// h(Y,Z) = Y^{q+1} + Y^q Z + Z^{q+1} over F_{q^3}
Fe h_form(const CubicEnv& env, const Fe& Y, const Fe& Z);

// all roots in F_{q^3} of h(X,1) h(1,X), ascending canonical encoding
std::vector<Fe> s4_special(const CubicEnv& env);

// membership in S_4(1,-1) by the norm-pair definition
bool in_special_set(const CubicEnv& env, const Fe& X);

// C(z) = (z - a^{-1}) / (z - a) on F_{q^6}, and its inverse
Fe mobius_C(const CubicEnv& env, const Fe& z);       // PoleInput at z = a
Fe mobius_C_inv(const CubicEnv& env, const Fe& w);   // PoleInput at w = 1

// for every A in S_4(1,-1) \ F_q: aA and a^{-1}A are outside S_4(1,-1)
bool lemma6_check(const CubicEnv& env);

// returns whether C(D) is a square in G (computed as C(D)^{|G|/2} = +1),
// asserting the transfer identity eta_G(C(D)) = eta_{F_{q^3}}(D^2+D+1)
bool lemma8_transfer(const CubicEnv& env, const Fe& D);

// constructive solution of N(Y)=1, N(Y+A)=-1, N(Y+B)=-1 over F_{q^3};
// requires N(A)=N(B)=1 and A/B in S_4(1,-1) \ F_q.  Result is sorted by
// encoding and has 5 + eta(A^2+AB+B^2) elements.
std::vector<Fe> special_solve(const CubicEnv& env, const Fe& A, const Fe& B);

struct K46Certificate {
    std::vector<Vertex> left;    // 4 vertices
    std::vector<Vertex> right;   // 6 common neighbors
    Fe alpha, beta;              // translation, beta nonzero
    Fe c;                        // embedded F_q^* scale
};

enum class K46Mode { fast, certified };

// Theorem 2 end to end: pick A (scan in fast mode, A = C^{-1}(g^2) in
// certified mode), B = 1, form the quadruple U, solve for its 6 neighbors,
// then sweep translations (beta, c, alpha) from (1,1,0) until the 10
// vertices are distinct.
K46Certificate build_k46(const CubicEnv& env, K46Mode mode = K46Mode::fast);

// the transformed quadruple {(beta A_i + alpha, N(beta) c a_i)}
std::vector<Vertex> translate(const CubicEnv& env, const std::vector<Vertex>& U,
                              const Fe& alpha, const Fe& beta, const Fe& c);

// independent re-check of every certificate invariant; fills *why on failure
bool verify_certificate(const GraphCtx& gc, const K46Certificate& cert,
                        std::string* why = nullptr);

} // namespace ng
