#include "ng/k46.hpp"

#include <algorithm>

namespace ng {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw error(what);
}

} // namespace

Fe CubicEnv::lift3(const Fe& x) const {
    return emb3.embed(gc.big(), big6, x);
}

CubicEnv make_env(uint64_t p, uint32_t k) {
    if (p == 2 || p == 3) throw bad_characteristic("the construction needs p != 2, 3");
    GraphCtx gc = GraphCtx::make(p, k, 4);
    FieldCtx big6 = FieldCtx::make(p, 6 * k);
    SubfieldEmbedding emb3 = SubfieldEmbedding::make(gc.big(), big6);
    uint64_t q = gc.q();
    int e_q = (q % 3 == 1) ? 1 : -1;

    // a = (-1 + sqrt(-3)) / 2, a root of Y^2 + Y + 1 in the embedded F_{q^2}
    Fe m3 = big6.neg(big6.from_int(3));
    auto s = big6.sqrt(m3);
    require(s.has_value(), "-3 must be a square in F_{q^6}");
    Fe half = big6.inv(big6.from_int(2));
    Fe a = big6.mul(half, big6.sub(*s, big6.one()));
    require(big6.is_zero(big6.add(big6.add(big6.mul(a, a), a), big6.one())),
            "a is not a third root of unity");

    uint64_t g_order = 3 * (e_q == 1 ? q - 1 : q + 1);
    require((big6.size() - 1) % g_order == 0, "|G| does not divide q^6 - 1");
    Fe g = big6.pow(big6.generator(), (big6.size() - 1) / g_order);

    return CubicEnv{std::move(gc), std::move(big6), std::move(emb3), e_q, a, g_order, g};
}

Fe h_form(const CubicEnv& env, const Fe& Y, const Fe& Z) {
    const auto& F = env.gc.big();
    Fe Yq = F.frobenius(Y, env.gc.k());
    Fe Zq = F.frobenius(Z, env.gc.k());
    return F.add(F.add(F.mul(Yq, Y), F.mul(Yq, Z)), F.mul(Zq, Z));
}

std::vector<Fe> s4_special(const CubicEnv& env) {
    const auto& F = env.gc.big();
    Fe one = F.one();
    std::vector<Fe> out;
    for (uint64_t v = 0; v < F.size(); ++v) {
        Fe X = F.from_int(v);
        if (F.is_zero(F.mul(h_form(env, X, one), h_form(env, one, X))))
            out.push_back(X);
    }
    return out;
}

bool in_special_set(const CubicEnv& env, const Fe& X) {
    const auto& F = env.gc.big();
    return F.eq(env.gc.norm(X), F.one()) &&
           F.eq(env.gc.norm(F.add(X, F.one())), F.neg(F.one()));
}

Fe mobius_C(const CubicEnv& env, const Fe& z) {
    const auto& F = env.big6;
    if (F.eq(z, env.a)) throw pole_input("C has a pole at a");
    return F.div(F.sub(z, F.inv(env.a)), F.sub(z, env.a));
}

Fe mobius_C_inv(const CubicEnv& env, const Fe& w) {
    const auto& F = env.big6;
    if (F.eq(w, F.one())) throw pole_input("C^{-1} has a pole at 1");
    return F.div(F.sub(F.mul(env.a, w), F.inv(env.a)), F.sub(w, F.one()));
}

bool lemma6_check(const CubicEnv& env) {
    const auto& F6 = env.big6;
    Fe ainv = F6.inv(env.a);
    for (const Fe& A : s4_special(env)) {
        if (env.gc.in_subfield(A)) continue;
        Fe z = env.lift3(A);
        for (const Fe& d : {env.a, ainv}) {
            Fe w = F6.mul(d, z);
            if (!env.emb3.in_image(F6, w)) continue;   // not even in F_{q^3}
            if (in_special_set(env, env.emb3.pullback(env.gc.big(), F6, w)))
                return false;
        }
    }
    return true;
}

bool lemma8_transfer(const CubicEnv& env, const Fe& D) {
    const auto& F3 = env.gc.big();
    const auto& F6 = env.big6;
    if (!in_special_set(env, D) || env.gc.in_subfield(D))
        throw not_in_special_set("D must lie in S_4(1,-1) outside F_q");
    Fe CD = mobius_C(env, env.lift3(D));
    Fe s = F6.pow(CD, env.g_order / 2);
    int eta_G;
    if (F6.eq(s, F6.one())) eta_G = 1;
    else if (F6.eq(s, F6.neg(F6.one()))) eta_G = -1;
    else throw error("C(D)^{|G|/2} is not a sign: C(D) is outside G");
    Fe w = F3.add(F3.add(F3.mul(D, D), D), F3.one());
    require(eta_G == F3.quad_char(w), "square-character transfer identity failed");
    return eta_G == 1;
}

std::vector<Fe> special_solve(const CubicEnv& env, const Fe& A, const Fe& B) {
    const auto& F = env.gc.big();
    Fe one = F.one();
    if (F.is_zero(A) || F.is_zero(B) ||
        !F.eq(env.gc.norm(A), one) || !F.eq(env.gc.norm(B), one))
        throw precondition_violated("A and B must have norm 1");
    Fe D = F.div(A, B);
    if (env.gc.in_subfield(D) || !in_special_set(env, D))
        throw precondition_violated("A/B must lie in S_4(1,-1) outside F_q");

    uint32_t k = env.gc.k();
    Fe Aq = F.frobenius(A, k), Bq = F.frobenius(B, k);
    Fe Aq1 = F.mul(Aq, A), Bq1 = F.mul(Bq, B);   // A^{q+1}, B^{q+1}

    std::vector<Fe> sols;
    // linear subsystems
    sols.push_back(F.div(F.sub(F.mul(A, Bq1), F.mul(Aq1, B)), F.sub(Aq1, Bq1)));
    sols.push_back(F.div(F.sub(Aq1, Bq1), F.sub(Bq, Aq)));

    // the two quadratics
    auto quad_roots = [&](const Fe& qa, const Fe& qb, const Fe& qc) {
        std::vector<Fe> r;
        Fe disc = F.sub(F.mul(qb, qb), F.mul(F.from_int(4), F.mul(qa, qc)));
        int chi = F.quad_char(disc);
        if (chi < 0) return r;
        Fe den = F.inv(F.add(qa, qa));
        if (chi == 0) {
            r.push_back(F.mul(F.neg(qb), den));
            return r;
        }
        Fe root = *F.sqrt(disc);
        r.push_back(F.mul(F.sub(root, qb), den));
        r.push_back(F.mul(F.sub(F.neg(root), qb), den));
        return r;
    };
    for (const Fe& Y : quad_roots(Bq, F.sub(F.add(F.mul(A, Bq), Bq1), Aq1), F.mul(A, Bq1)))
        sols.push_back(Y);
    for (const Fe& Y : quad_roots(Aq, F.sub(F.add(Aq1, F.mul(Aq, B)), Bq1), F.mul(Aq1, B)))
        sols.push_back(Y);

    // structural assertions: disjoint, genuine solutions, predicted count
    for (size_t i = 0; i < sols.size(); ++i)
        for (size_t j = i + 1; j < sols.size(); ++j)
            require(!F.eq(sols[i], sols[j]), "subsystem solution sets intersect");
    Fe neg_one = F.neg(one);
    for (const Fe& Y : sols) {
        require(F.eq(env.gc.norm(Y), one), "N(Y) != 1");
        require(F.eq(env.gc.norm(F.add(Y, A)), neg_one), "N(Y+A) != -1");
        require(F.eq(env.gc.norm(F.add(Y, B)), neg_one), "N(Y+B) != -1");
    }
    Fe w = F.add(F.add(F.mul(A, A), F.mul(A, B)), F.mul(B, B));
    require(static_cast<int64_t>(sols.size()) == 5 + F.quad_char(w),
            "solution count disagrees with 5 + eta(A^2+AB+B^2)");

    std::sort(sols.begin(), sols.end(), [&](const Fe& x, const Fe& y) {
        return F.to_int(x) < F.to_int(y);
    });
    return sols;
}

std::vector<Vertex> translate(const CubicEnv& env, const std::vector<Vertex>& U,
                              const Fe& alpha, const Fe& beta, const Fe& c) {
    const auto& F = env.gc.big();
    if (F.is_zero(beta) || F.is_zero(c)) throw invalid_input("beta, c must be nonzero");
    Fe scale = F.mul(env.gc.norm(beta), c);
    std::vector<Vertex> out;
    out.reserve(U.size());
    for (const Vertex& v : U)
        out.push_back(env.gc.vertex(F.add(F.mul(beta, v.A), alpha), F.mul(scale, v.a)));
    return out;
}

K46Certificate build_k46(const CubicEnv& env, K46Mode mode) {
    const auto& F = env.gc.big();
    Fe one = F.one();

    Fe A;
    if (mode == K46Mode::certified) {
        Fe g2 = env.big6.mul(env.g, env.g);
        A = env.emb3.pullback(F, env.big6, mobius_C_inv(env, g2));
        require(in_special_set(env, A) && !env.gc.in_subfield(A),
                "C^{-1}(g^2) is not in the special set");
    } else {
        bool found = false;
        for (const Fe& cand : s4_special(env)) {
            if (env.gc.in_subfield(cand)) continue;
            Fe w = F.add(F.add(F.mul(cand, cand), cand), one);
            if (F.quad_char(w) == 1) {
                A = cand;
                found = true;
                break;
            }
        }
        require(found, "no special element with square A^2+A+1");
    }
    Fe B = one;

    // U = { (1,1), (1/(A+1), -N(1/(A+1))), (1/(B+1), -N(1/(B+1))), (0,1) }
    auto u_vertex = [&](const Fe& X) {
        Fe inv = F.inv(F.add(X, one));
        return env.gc.vertex(inv, F.neg(env.gc.norm(inv)));
    };
    std::vector<Vertex> U{env.gc.vertex(one, one), u_vertex(A), u_vertex(B),
                          env.gc.vertex(F.zero(), one)};
    ReducedSystem rs = reduce(env.gc, U);

    std::vector<Fe> Ys = special_solve(env, A, B);
    require(Ys.size() == 6, "the chosen quadruple does not have six neighbors");
    std::vector<Vertex> N;
    for (const Fe& Y : Ys) {
        Fe X = F.sub(Y, one);
        require(!F.is_zero(X), "Y = 1 appeared among the solutions");
        N.push_back(h_to_vertex(env.gc, rs, X));
    }

    // deterministic (beta, c, alpha) sweep from (1,1,0) for a collision-free copy
    const auto& sub = env.gc.subfield_elements();
    for (uint64_t be = 1; be < F.size(); ++be) {
        Fe beta = F.from_int(be);
        for (size_t ci = 1; ci < sub.size(); ++ci) {
            Fe c = sub[ci];
            Fe cinv = F.inv(c);
            for (uint64_t ae = 0; ae < F.size(); ++ae) {
                Fe alpha = F.from_int(ae);
                std::vector<Vertex> left = translate(env, U, alpha, beta, c);
                std::vector<Vertex> right;
                right.reserve(6);
                for (const Vertex& w : N)
                    right.push_back(env.gc.vertex(F.sub(F.mul(beta, w.A), alpha),
                                                  F.mul(cinv, w.a)));
                bool clean = true;
                for (const Vertex& l : left)
                    for (const Vertex& r : right)
                        clean &= !(l == r);
                if (clean)
                    return K46Certificate{std::move(left), std::move(right), alpha, beta, c};
            }
        }
    }
    throw error("no collision-free translation exists");   // unreachable for q >= 5
}

bool verify_certificate(const GraphCtx& gc, const K46Certificate& cert, std::string* why) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (cert.left.size() != 4 || cert.right.size() != 6)
        return fail("certificate has wrong shape");
    std::vector<Vertex> all = cert.left;
    all.insert(all.end(), cert.right.begin(), cert.right.end());
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if (all[i] == all[j]) return fail("vertices are not pairwise distinct");
    if (!is_generic(gc, cert.left)) return fail("left side is not generic");
    for (const Vertex& v : all)
        if (!gc.in_subfield(v.a) || gc.big().is_zero(v.a))
            return fail("second coordinate outside F_q^*");
    for (const Vertex& l : cert.left)
        for (const Vertex& r : cert.right)
            if (!gc.is_adjacent(l, r)) return fail("missing adjacency");
    if (why) why->clear();
    return true;
}

} // namespace ng
