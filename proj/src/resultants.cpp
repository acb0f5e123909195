#include "ng/resultants.hpp"

namespace ng {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw error(what);
}

uint64_t geo_sum(uint64_t q, uint32_t terms) {
    uint64_t s = 0, pw = 1;
    for (uint32_t i = 0; i < terms; ++i) {
        s += pw;
        pw *= q;
    }
    return s;
}

} // namespace

QuadSystem build_quad_system(const GraphCtx& gc, const std::vector<Vertex>& T) {
    if (T.size() != 4) throw invalid_input("quadruple expected");
    const auto& F = gc.big();
    QuadSystem qs{{}, {}, T, reduce(gc, T)};
    uint32_t tm1 = gc.t() - 1;
    for (size_t i = 0; i < 3; ++i) {
        std::vector<Fe> row;
        row.reserve(tm1);
        for (uint32_t j = 1; j <= tm1; ++j)
            row.push_back(F.neg(F.frobenius(qs.rs.B[i], gc.k() * (j - 1))));
        qs.C.push_back(std::move(row));
        qs.b.push_back(qs.rs.b[i]);
    }
    return qs;
}

Elimination eliminate(const GraphCtx& gc, const QuadSystem& qs) {
    uint32_t t = gc.t();
    if (t < 4) throw bad_parameters("elimination needs t >= 4");
    if (t > 5) throw unsupported_arity("symbolic elimination supports t in {4,5}");
    const auto& F = gc.big();
    uint32_t nv = t - 2;              // variables Y_1 .. Y_{t-2}
    uint32_t last = nv - 1;           // index of Y_{t-2}

    // h_i = prod_{j <= t-3} (Y_j - C_{i,j}) and the linear coefficients of
    // f_i in Y_{t-1}: f_i = lead_i * Y_{t-1} + tail_i
    MPoly lead[3], tail[3];
    for (int i = 0; i < 3; ++i) {
        MPoly h = mp_const(F, nv, F.one());
        for (uint32_t j = 0; j + 1 < nv; ++j)
            h = mp_mul(F, h, mp_sub(F, mp_var(F, nv, j), mp_const(F, nv, qs.C[i][j])));
        MPoly lin = mp_sub(F, mp_var(F, nv, last), mp_const(F, nv, qs.C[i][last]));
        lead[i] = mp_mul(F, h, lin);
        tail[i] = mp_neg(F, mp_add(F, mp_scale(F, qs.C[i][t - 2], lead[i]),
                                   mp_const(F, nv, qs.b[i])));
    }

    Elimination e;
    // g_i = Res_{Y_{t-1}}(f_i, f_3): 2x2 determinant of the linear coefficients
    e.g1 = mp_determinant(F, {{lead[0], tail[0]}, {lead[2], tail[2]}});
    e.g2 = mp_determinant(F, {{lead[1], tail[1]}, {lead[2], tail[2]}});
    require(mp_degree_in(F, e.g1, last) == 2 && mp_degree_in(F, e.g2, last) == 2,
            "g_i is not quadratic in Y_{t-2}");

    // g = Res_{Y_{t-2}}(g1, g2): the 4x4 Sylvester determinant
    e.g = sylvester_resultant(F, e.g1, e.g2, last);
    require(mp_degree_in(F, e.g, last) <= 0, "Y_{t-2} survived elimination");
    for (uint32_t a = 0; a + 1 < nv; ++a) {
        require(mp_is_zero(F, mp_coeff(F, e.g, a, 8)), "Y_a^8 coefficient of g is nonzero");
        require(mp_degree_in(F, e.g, a) <= 7, "degree of g exceeds 7");
    }

    // g = h_3 * g*: divide out the linear factors of h_3, remainder-free
    e.gstar = e.g;
    for (uint32_t j = 0; j + 1 < nv; ++j) {
        auto [quot, rem] = mp_divide_linear(F, e.gstar, j, qs.C[2][j]);
        require(mp_is_zero(F, rem), "h_3 does not divide g");
        e.gstar = quot;
    }
    for (uint32_t a = 0; a + 1 < nv; ++a)
        require(mp_degree_in(F, e.gstar, a) <= 6, "degree of g* exceeds 6");

    e.gtilde = mp_substitute_powers(F, e.gstar, gc.q(), nv - 1);
    require(!e.gtilde.is_zero(), "g~ vanished identically");
    require(e.gtilde.degree() <= static_cast<int>(6 * geo_sum(gc.q(), t - 3)),
            "degree of g~ exceeds the bound");
    return e;
}

Poly build_gtilde(const GraphCtx& gc, const std::vector<Vertex>& T) {
    return eliminate(gc, build_quad_system(gc, T)).gtilde;
}

QuadrupleDegree quadruple_degree(const GraphCtx& gc, const std::vector<Vertex>& T) {
    if (T.size() != 4) throw invalid_input("quadruple expected");
    if (gc.t() < 4) throw bad_parameters("quadruple_degree needs t >= 4");
    if (!is_generic(gc, T)) throw non_generic_set("quadruple is not generic");
    QuadrupleDegree out;
    out.bound = 6 * geo_sum(gc.q(), gc.t() - 3);
    if (gc.t() > 5) {
        out.witnesses = common_neighborhood_bruteforce(gc, T);
        out.exact = out.witnesses.size();
        out.closed_form = false;
        return out;
    }
    const auto& F = gc.big();
    QuadSystem qs = build_quad_system(gc, T);
    Poly gt = eliminate(gc, qs).gtilde;
    for (const Fe& Y : poly_roots(F, gt)) {
        if (F.is_zero(Y)) continue;
        bool ok = true;
        for (size_t i = 0; i < 3 && ok; ++i)
            ok = F.eq(gc.norm(F.add(Y, qs.rs.B[i])), qs.rs.b[i]);
        if (ok) out.witnesses.push_back(h_to_vertex(gc, qs.rs, Y));
    }
    out.exact = out.witnesses.size();
    out.closed_form = true;
    if (out.exact > out.bound) throw error("quadruple degree exceeds its bound");
    return out;
}

} // namespace ng
