#include "ng/charsum.hpp"

#include <cmath>

namespace ng {

int64_t char_sum(const FieldCtx& F, const Poly& f) {
    if (F.p() == 2) throw even_characteristic("character sums need odd characteristic");
    if (f.is_zero()) throw zero_polynomial("character sum of the zero polynomial");
    int64_t s = 0;
    for (uint64_t v = 0; v < F.size(); ++v)
        s += F.quad_char(poly_eval(F, f, F.from_int(v)));
    return s;
}

WeilReport weil_check(const FieldCtx& F, const Poly& f) {
    if (F.p() == 2) throw even_characteristic("Weil check needs odd characteristic");
    if (f.is_zero()) throw zero_polynomial("Weil check of the zero polynomial");
    WeilReport rep{};
    rep.sum = char_sum(F, f);
    int d = f.degree();
    rep.bound = (d > 0 ? d - 1 : 0) * std::sqrt(static_cast<double>(F.size()));

    // decide the c*g^2 branch: strip the leading coefficient and test the
    // monic part for even root multiplicities via gcd with the derivative,
    // falling back to a direct polynomial square root for degenerate
    // derivatives / higher multiplicities
    Fe c = f.c.back();
    Poly u = poly_scale(F, F.inv(c), f);
    std::optional<Poly> g;
    if (d == 0) {
        g = poly_const(F, F.one());
    } else if (d % 2 == 0) {
        Poly du = poly_derivative(F, u);
        if (!du.is_zero()) {
            Poly w = poly_gcd(F, u, du);
            if (w.degree() * 2 == d && poly_eq(F, poly_mul(F, w, w), u)) g = w;
        }
        if (!g) g = poly_sqrt(F, u);
    }
    if (g) {
        rep.square_branch = true;
        int64_t r = static_cast<int64_t>(poly_roots(F, *g).size());
        int chi_c = F.quad_char(c);
        rep.exact = (static_cast<int64_t>(F.size()) - r) * chi_c;
        rep.ok = rep.sum == rep.exact;
    } else {
        rep.square_branch = false;
        rep.exact = 0;
        rep.ok = std::llabs(rep.sum) <= rep.bound + 1e-9;
    }
    return rep;
}

Poly L_poly(const FieldCtx& F, const Fe& c1, const Fe& c2) {
    if (F.is_zero(c1) || F.is_zero(c2)) throw invalid_input("c1, c2 must be nonzero");
    auto k = [&](uint64_t v) { return F.from_int(v % F.p()); };
    Fe two = k(2), six = k(6);
    Fe one = F.one();
    // b^4 + 2(c1-c2-1) b^3 + ((1+c1-c2)^2 - 6c1) b^2 + 2c1(1-c1-c2) b + c1^2
    Fe a3 = F.mul(two, F.sub(F.sub(c1, c2), one));
    Fe s = F.add(one, F.sub(c1, c2));
    Fe a2 = F.sub(F.mul(s, s), F.mul(six, c1));
    Fe a1 = F.mul(F.mul(two, c1), F.sub(one, F.add(c1, c2)));
    Fe a0 = F.mul(c1, c1);
    return poly_make(F, {a0, a1, a2, a3, one});
}

std::optional<std::pair<Fe, Fe>> claim9_check(const FieldCtx& F, const Fe& c1, const Fe& c2) {
    if (F.p() == 2) throw even_characteristic("Claim 9 analysis needs odd characteristic");
    Poly L = L_poly(F, c1, c2);
    // (b^2 + a1 b + a0)^2 = b^4 + 2a1 b^3 + (a1^2 + 2a0) b^2 + 2 a1 a0 b + a0^2
    Fe half = F.inv(F.add(F.one(), F.one()));
    Fe alpha1 = F.mul(half, L.c[3]);
    Fe alpha0 = F.mul(half, F.sub(L.c[2], F.mul(alpha1, alpha1)));
    bool ok = F.eq(F.mul(F.add(alpha1, alpha1), alpha0), L.c[1]) &&
              F.eq(F.mul(alpha0, alpha0), L.c[0]);
    if (!ok) return std::nullopt;
    return std::make_pair(alpha1, alpha0);
}

uint64_t s4_identity_base(const FieldCtx& Fq, const Fe& c1, const Fe& c2) {
    if (Fq.p() == 2) throw even_characteristic("the |S_4| identity needs odd q");
    Poly L = L_poly(Fq, c1, c2);
    int64_t s = char_sum(Fq, L);
    return static_cast<uint64_t>(static_cast<int64_t>(Fq.size()) + 2 + s);
}

uint64_t s4_identity(const GraphCtx& gc, const Fe& c1, const Fe& c2) {
    if (gc.t() != 4) throw bad_parameters("the |S_4| identity is a t=4 statement");
    return s4_identity_base(gc.base(), gc.to_base(c1), gc.to_base(c2));
}

} // namespace ng
