#include "ng/aut.hpp"

#include <algorithm>

#include "ng/errors.hpp"
#include "ng/neighborhoods.hpp"

namespace ng {

namespace {

uint32_t frob_period(const GraphCtx& gc) { return gc.k() * (gc.t() - 1); }

uint32_t normalize_index(uint32_t i, uint32_t K) {
    uint32_t r = i % K;
    return r == 0 ? K : r;
}

} // namespace

AutMap make_aut(const GraphCtx& gc, int eps, const Fe& C, uint32_t i, const Fe& A) {
    const FieldCtx& F = gc.big();
    if (eps != 1 && eps != -1) throw bad_parameters("sign parameter must be +-1");
    if (F.is_zero(C)) throw bad_parameters("scale parameter C must be nonzero");
    const bool even = gc.p() == 2;
    if (even && eps == -1) throw bad_parameters("sign -1 is unavailable in even characteristic");
    if (!even && !F.is_zero(A)) throw bad_parameters("additive shift requires even characteristic");

    AutMap m;
    m.eps = eps;
    m.C = C;
    m.i = normalize_index(i, frob_period(gc));
    m.A = A;
    if (!even) {
        const bool odd_ext = (gc.t() - 1) % 2 == 1;
        if (odd_ext) {
            // omega_{-1} = sigma_{-1}: fold the sign into C (N(-C) = -N(C))
            if (m.eps == -1) {
                m.eps = 1;
                m.C = F.neg(m.C);
            }
        } else {
            // sigma_C = sigma_{-C}: keep the smaller encoding
            Fe negC = F.neg(m.C);
            if (F.to_int(negC) < F.to_int(m.C)) m.C = negC;
        }
    }
    return m;
}

AutMap aut_identity(const GraphCtx& gc) {
    const FieldCtx& F = gc.big();
    return make_aut(gc, 1, F.one(), frob_period(gc), F.zero());
}

bool aut_eq(const GraphCtx& gc, const AutMap& m1, const AutMap& m2) {
    const FieldCtx& F = gc.big();
    return m1.eps == m2.eps && m1.i == m2.i && F.eq(m1.C, m2.C) && F.eq(m1.A, m2.A);
}

Vertex apply(const GraphCtx& gc, const AutMap& m, const Vertex& v) {
    const FieldCtx& F = gc.big();
    Fe X = F.mul(F.mul(m.C, m.C), F.frobenius(v.A, m.i));
    if (gc.p() == 2) X = F.add(X, m.A);
    Fe x = F.mul(gc.norm(m.C), F.frobenius(v.a, m.i));
    if (m.eps == -1) x = F.neg(x);
    return gc.vertex(X, x);
}

AutMap compose(const GraphCtx& gc, const AutMap& m1, const AutMap& m2) {
    const FieldCtx& F = gc.big();
    Fe C = F.mul(m1.C, F.frobenius(m2.C, m1.i));
    Fe A = F.zero();
    if (gc.p() == 2)
        A = F.add(F.mul(F.mul(m1.C, m1.C), F.frobenius(m2.A, m1.i)), m1.A);
    return make_aut(gc, m1.eps * m2.eps, C, m1.i + m2.i, A);
}

AutMap inverse(const GraphCtx& gc, const AutMap& m) {
    const FieldCtx& F = gc.big();
    const uint32_t K = frob_period(gc);
    uint32_t inv_i = m.i % K == 0 ? K : K - m.i % K;
    Fe Cinv = F.inv(F.frobenius(m.C, inv_i));
    Fe A = F.zero();
    if (gc.p() == 2)
        A = F.neg(F.mul(F.mul(Cinv, Cinv), F.frobenius(m.A, inv_i)));
    return make_aut(gc, m.eps, Cinv, inv_i, A);
}

uint64_t aut_order(const GraphCtx& gc) {
    if (gc.q() == 2)
        throw degenerate_graph("NG(2,t) is complete; its automorphism group is symmetric");
    const uint64_t Q = gc.big().size();
    const uint64_t K = frob_period(gc);
    return gc.p() == 2 ? Q * (Q - 1) * K : (Q - 1) * K;
}

std::string aut_structure(const GraphCtx& gc) {
    if (gc.q() == 2)
        throw degenerate_graph("NG(2,t) is complete; its automorphism group is symmetric");
    const uint64_t Q = gc.big().size();
    const uint64_t K = frob_period(gc);
    if (gc.p() == 2)
        return "((Z_" + std::to_string(gc.p()) + ")^" + std::to_string(K) + "⋊Z_" +
               std::to_string(Q - 1) + ")⋊Z_" + std::to_string(K);
    if ((gc.t() - 1) % 2 == 1)
        return "Z_" + std::to_string(Q - 1) + "⋊Z_" + std::to_string(K);
    return "(Z_2×Z_" + std::to_string((Q - 1) / 2) + ")⋊Z_" + std::to_string(K);
}

std::vector<AutMap> enumerate_aut(const GraphCtx& gc) {
    if (gc.q() == 2)
        throw degenerate_graph("NG(2,t) is complete; enumeration by parameters is undefined");
    const FieldCtx& F = gc.big();
    const uint64_t Q = F.size();
    const uint32_t K = frob_period(gc);
    std::vector<AutMap> out;
    out.reserve(aut_order(gc));
    if (gc.p() == 2) {
        for (uint64_t Aenc = 0; Aenc < Q; ++Aenc)
            for (uint64_t Cenc = 1; Cenc < Q; ++Cenc)
                for (uint32_t i = 1; i <= K; ++i)
                    out.push_back(make_aut(gc, 1, F.from_int(Cenc), i, F.from_int(Aenc)));
        return out;
    }
    const bool odd_ext = (gc.t() - 1) % 2 == 1;
    for (uint64_t Cenc = 1; Cenc < Q; ++Cenc) {
        Fe C = F.from_int(Cenc);
        if (!odd_ext && F.to_int(F.neg(C)) < Cenc) continue;   // sigma kernel rep
        for (int eps : odd_ext ? std::vector<int>{1} : std::vector<int>{1, -1})
            for (uint32_t i = 1; i <= K; ++i)
                out.push_back(make_aut(gc, eps, C, i, F.zero()));
    }
    return out;
}

uint64_t brute_force_aut(const GraphCtx& gc, bool respect_loops) {
    const uint64_t n64 = gc.n_vertices();
    if (n64 > 30) throw too_large("brute-force automorphism search capped at 30 vertices");
    const uint32_t n = static_cast<uint32_t>(n64);
    GraphTable gt = GraphTable::build(gc);

    std::vector<std::vector<uint8_t>> M(n, std::vector<uint8_t>(n, 0));
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = 0; j < n; ++j)
            if (i != j) M[i][j] = gt.adj(i, j);
        if (respect_loops && gt.loop(i)) M[i][i] = 1;
    }

    // invariant signature: (loop flag, sorted common-degree multiset)
    std::vector<std::vector<uint32_t>> sig(n);
    for (uint32_t i = 0; i < n; ++i) {
        sig[i].push_back(respect_loops ? M[i][i] : 0);
        std::vector<uint32_t> cds;
        for (uint32_t j = 0; j < n; ++j) {
            if (j == i) continue;
            uint32_t cd = 0;
            for (uint32_t w = 0; w < n; ++w) cd += M[i][w] & M[j][w];
            cds.push_back(cd);
        }
        std::sort(cds.begin(), cds.end());
        sig[i].insert(sig[i].end(), cds.begin(), cds.end());
    }

    std::vector<uint32_t> perm(n);
    std::vector<bool> used(n, false);
    uint64_t count = 0;
    auto rec = [&](auto&& self, uint32_t v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (uint32_t w = 0; w < n; ++w) {
            if (used[w] || sig[v] != sig[w]) continue;
            if (respect_loops && M[v][v] != M[w][w]) continue;
            bool ok = true;
            for (uint32_t u = 0; u < v && ok; ++u)
                ok = M[v][u] == M[w][perm[u]];
            if (!ok) continue;
            perm[v] = w;
            used[w] = true;
            self(self, v + 1);
            used[w] = false;
        }
    };
    rec(rec, 0);
    return count;
}

bool poor_set_check(const GraphCtx& gc) {
    if (gc.q() == 2)
        throw degenerate_graph("poor sets are vacuous on the complete graph NG(2,t)");
    if (gc.n_vertices() > 2000)
        throw too_large("poor-set verification needs exhaustive pair degrees");
    const FieldCtx& F = gc.big();
    const uint64_t full = (F.size() - 1) / (gc.q() - 1);
    auto verts = gc.all_vertices();

    // (a) aligned pairs fall below the generic degree, so each S_x is poor;
    // (b) pairs differing in both coordinates meet the full generic degree,
    //     so a poor set of size q^{t-1} cannot mix second coordinates: it
    //     would force equal first coordinates throughout, leaving at most
    //     q-1 < q^{t-1} vertices.
    for (size_t i = 0; i < verts.size(); ++i) {
        for (size_t j = i + 1; j < verts.size(); ++j) {
            const Vertex &u = verts[i], &v = verts[j];
            if (F.eq(u.A, v.A)) continue;   // non-generic pairs are unconstrained
            uint64_t deg = pair_degree(gc, {u, v});
            bool aligned = F.eq(u.a, v.a);
            if (aligned && deg >= full) return false;
            if (!aligned && deg != full) return false;
        }
    }
    return true;
}

} // namespace ng
