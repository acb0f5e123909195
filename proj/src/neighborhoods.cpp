#include "ng/neighborhoods.hpp"

#include <algorithm>

namespace ng {

std::vector<Vertex> common_neighborhood_bruteforce(const GraphCtx& gc,
                                                   const std::vector<Vertex>& vs) {
    if (vs.empty()) throw invalid_input("empty vertex set");
    std::vector<Vertex> cur = gc.neighbors(vs[0]);
    for (size_t i = 1; i < vs.size() && !cur.empty(); ++i) {
        std::vector<Vertex> next;
        next.reserve(cur.size());
        for (const Vertex& w : cur)
            if (gc.is_adjacent(vs[i], w)) next.push_back(w);
        cur = std::move(next);
    }
    return cur;
}

ReducedSystem reduce(const GraphCtx& gc, const std::vector<Vertex>& vs) {
    if (vs.size() < 2) throw invalid_input("need at least two vertices");
    if (!is_generic(gc, vs)) throw non_generic_set("reduction needs a generic set");
    const auto& F = gc.big();
    ReducedSystem rs;
    rs.pivot = vs.back();
    rs.aligned = classify_set(gc, vs) == SetClass::aligned_generic;
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
        Fe Bi = F.inv(F.sub(vs[i].A, rs.pivot.A));
        Fe bi = F.mul(F.div(vs[i].a, rs.pivot.a), gc.norm(Bi));
        rs.B.push_back(Bi);
        rs.b.push_back(bi);
    }
    return rs;
}

std::vector<Fe> h_set(const GraphCtx& gc, const ReducedSystem& rs) {
    const auto& F = gc.big();
    std::vector<Fe> out;
    for (uint64_t v = 0; v < F.size(); ++v) {
        Fe Y = F.from_int(v);
        bool ok = true;
        for (size_t i = 0; i < rs.B.size(); ++i) {
            if (!F.eq(gc.norm(F.add(Y, rs.B[i])), rs.b[i])) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(Y);
    }
    return out;
}

Vertex h_to_vertex(const GraphCtx& gc, const ReducedSystem& rs, const Fe& Y) {
    const auto& F = gc.big();
    if (F.is_zero(Y)) throw invalid_input("Y = 0 does not correspond to a vertex");
    Fe W = F.sub(F.inv(Y), rs.pivot.A);
    Fe w = F.inv(F.mul(rs.pivot.a, gc.norm(Y)));
    return Vertex{W, w};
}

uint64_t pair_degree(const GraphCtx& gc, const std::vector<Vertex>& T) {
    if (T.size() != 2) throw invalid_input("pair_degree expects two vertices");
    SetClass cls = classify_set(gc, T);
    if (cls == SetClass::non_generic) throw non_generic_set("pair is not generic");
    uint64_t full = (gc.big().size() - 1) / (gc.q() - 1);
    return full - (cls == SetClass::aligned_generic ? 1 : 0);
}

TripleInvariants triple_invariants(const GraphCtx& gc, const std::vector<Vertex>& T) {
    if (T.size() != 3) throw invalid_input("triple_invariants expects three vertices");
    if (!is_generic(gc, T)) throw non_generic_set("triple is not generic");
    const auto& F = gc.big();
    const Fe &A1 = T[0].A, &A2 = T[1].A, &A3 = T[2].A;
    Fe d12 = F.sub(A1, A2);
    TripleInvariants inv;
    inv.c1 = F.mul(F.div(T[0].a, T[2].a), gc.norm(F.div(F.sub(A2, A3), d12)));
    inv.c2 = F.mul(F.div(T[1].a, T[2].a), gc.norm(F.div(F.sub(A1, A3), d12)));
    inv.xi = F.eq(T[0].a, T[1].a) && F.eq(T[1].a, T[2].a);
    return inv;
}

std::vector<Fe> st_enumerate(const GraphCtx& gc, uint32_t t, const Fe& c1, const Fe& c2) {
    if (t != gc.t()) throw bad_parameters("t does not match the graph context");
    const auto& F = gc.big();
    if (F.is_zero(c1) || F.is_zero(c2)) throw invalid_input("c1, c2 must be nonzero");
    std::vector<Fe> out;
    for (uint64_t v = 0; v < F.size(); ++v) {
        Fe X = F.from_int(v);
        if (F.eq(gc.norm(X), c1) && F.eq(gc.norm(F.add(X, F.one())), c2))
            out.push_back(X);
    }
    return out;
}

Poly f_poly_over(const FieldCtx& F, uint64_t q, uint32_t t, const Fe& c1, const Fe& c2) {
    if (t < 3) throw bad_parameters("f_poly needs t >= 3");
    // n_{t-2}(Y) = Y^e with e = q^{t-3} + ... + 1
    uint64_t e = 0, pw = 1;
    for (uint32_t i = 0; i + 2 < t; ++i) {
        e += pw;
        pw *= q;
    }
    Poly Y = poly_x(F);
    Poly Y1 = poly_add(F, Y, poly_const(F, F.one()));
    Poly nY = poly_pow(F, Y, e);
    Poly nY1 = poly_pow(F, Y1, e);
    Poly f = poly_mul(F, nY1, nY);
    f = poly_add(F, f, poly_scale(F, c1, nY1));
    f = poly_sub(F, f, poly_scale(F, c2, nY));
    return f;
}

Poly f_poly(const GraphCtx& gc, uint32_t t, const Fe& c1, const Fe& c2) {
    return f_poly_over(gc.big(), gc.q(), t, c1, c2);
}

uint64_t st_size_base(const FieldCtx& Fq, uint32_t t, const Fe& c1, const Fe& c2) {
    if (Fq.p() == 2) throw even_characteristic("closed-form |S_t| needs odd q");
    if (Fq.is_zero(c1) || Fq.is_zero(c2)) throw invalid_input("c1, c2 must be nonzero");
    if (t < 3) throw bad_parameters("st_size needs t >= 3");
    uint64_t q = Fq.size();
    if (t == 3) {
        // 1 - eta((1 + c1 - c2)^2 - 4 c1)
        Fe s = Fq.add(Fq.one(), Fq.sub(c1, c2));
        Fe disc = Fq.sub(Fq.mul(s, s),
                         Fq.mul(Fq.from_int(4 % Fq.p()), c1));
        int chi = Fq.quad_char(disc);
        return static_cast<uint64_t>(1 - chi);
    }
    // 2(q^{t-3} + ... + 1) - sum over b != 0, -c1
    uint64_t geo = 0, pw = 1;
    for (uint32_t i = 0; i + 2 < t; ++i) {
        geo += pw;
        pw *= q;
    }
    uint64_t total = 2 * geo;
    Fe neg_c1 = Fq.neg(c1);
    uint64_t subtract = 0;
    for (uint64_t v = 1; v < q; ++v) {
        Fe b = Fq.from_int(v);
        if (Fq.eq(b, neg_c1)) continue;
        Fe c2p = Fq.div(Fq.mul(b, c2), Fq.add(b, c1));
        subtract += st_size_base(Fq, t - 1, b, c2p);
    }
    return total - subtract;
}

uint64_t st_size(const GraphCtx& gc, uint32_t t, const Fe& c1, const Fe& c2) {
    Fe c1b = gc.to_base(c1);
    Fe c2b = gc.to_base(c2);
    return st_size_base(gc.base(), t, c1b, c2b);
}

TripleDegree triple_degree(const GraphCtx& gc, const std::vector<Vertex>& T) {
    if (T.size() != 3) throw invalid_input("triple_degree expects three vertices");
    SetClass cls = classify_set(gc, T);
    if (cls == SetClass::non_generic) throw non_generic_set("triple is not generic");
    if (gc.p() == 2) {
        // even characteristic is unproven territory; fall back to the oracle
        return TripleDegree{common_neighborhood_bruteforce(gc, T).size(), false};
    }
    TripleInvariants inv = triple_invariants(gc, T);
    uint64_t s = st_size(gc, gc.t(), inv.c1, inv.c2);
    return TripleDegree{s - (inv.xi ? 1 : 0), true};
}

bool lemma3iii_check(const GraphCtx& gc, uint32_t t, const Fe& c1, const Fe& c2) {
    if (t != gc.t()) throw bad_parameters("t does not match the graph context");
    uint64_t st = st_enumerate(gc, t, c1, c2).size();
    // side field F_{q^{t-2}} with its own lex-smallest modulus
    uint64_t side_roots;
    if (t == 3) {
        Fe c1b = gc.to_base(c1), c2b = gc.to_base(c2);
        Poly f = f_poly_over(gc.base(), gc.q(), t, c1b, c2b);
        side_roots = poly_roots(gc.base(), f).size();
    } else {
        FieldCtx side = FieldCtx::make(gc.p(), gc.k() * (t - 2));
        auto e = SubfieldEmbedding::make(gc.base(), side);
        Fe c1s = e.embed(gc.base(), side, gc.to_base(c1));
        Fe c2s = e.embed(gc.base(), side, gc.to_base(c2));
        Poly f = f_poly_over(side, gc.q(), t, c1s, c2s);
        side_roots = poly_roots(side, f).size();
    }
    uint64_t geo = 0, pw = 1;
    for (uint32_t i = 0; i + 2 < t; ++i) {
        geo += pw;
        pw *= gc.q();
    }
    return st + side_roots == 2 * geo;
}

} // namespace ng
