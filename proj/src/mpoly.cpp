#include "ng/mpoly.hpp"

namespace ng {

namespace {

uint64_t table_size(uint32_t nvars) {
    uint64_t s = 1;
    for (uint32_t v = 0; v < nvars; ++v) s *= kVarCap;
    return s;
}

uint64_t stride(uint32_t v) {
    uint64_t s = 1;
    for (uint32_t i = 0; i < v; ++i) s *= kVarCap;
    return s;
}

void decode(uint64_t idx, uint32_t nvars, uint32_t* d) {
    for (uint32_t v = 0; v < nvars; ++v) {
        d[v] = static_cast<uint32_t>(idx % kVarCap);
        idx /= kVarCap;
    }
}

void check_shape(const MPoly& p) {
    if (p.nvars > kMaxVars || p.a.size() != table_size(p.nvars))
        throw invalid_input("malformed multivariate polynomial");
}

void check_pair(const MPoly& p, const MPoly& r) {
    check_shape(p);
    check_shape(r);
    if (p.nvars != r.nvars) throw invalid_input("arity mismatch");
}

} // namespace

MPoly mp_zero(const FieldCtx& F, uint32_t nvars) {
    if (nvars > kMaxVars) throw unsupported_arity("too many variables");
    MPoly p;
    p.nvars = nvars;
    p.a.assign(table_size(nvars), F.zero());
    return p;
}

MPoly mp_const(const FieldCtx& F, uint32_t nvars, const Fe& c) {
    MPoly p = mp_zero(F, nvars);
    p.a[0] = c;
    return p;
}

MPoly mp_var(const FieldCtx& F, uint32_t nvars, uint32_t v) {
    if (v >= nvars) throw invalid_input("variable index out of range");
    MPoly p = mp_zero(F, nvars);
    p.a[stride(v)] = F.one();
    return p;
}

bool mp_is_zero(const FieldCtx& F, const MPoly& p) {
    check_shape(p);
    for (const Fe& c : p.a)
        if (!F.is_zero(c)) return false;
    return true;
}

bool mp_eq(const FieldCtx& F, const MPoly& p, const MPoly& r) {
    check_pair(p, r);
    for (size_t i = 0; i < p.a.size(); ++i)
        if (!F.eq(p.a[i], r.a[i])) return false;
    return true;
}

MPoly mp_add(const FieldCtx& F, const MPoly& p, const MPoly& r) {
    check_pair(p, r);
    MPoly out = p;
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] = F.add(out.a[i], r.a[i]);
    return out;
}

MPoly mp_sub(const FieldCtx& F, const MPoly& p, const MPoly& r) {
    check_pair(p, r);
    MPoly out = p;
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] = F.sub(out.a[i], r.a[i]);
    return out;
}

MPoly mp_neg(const FieldCtx& F, const MPoly& p) {
    check_shape(p);
    MPoly out = p;
    for (Fe& c : out.a) c = F.neg(c);
    return out;
}

MPoly mp_scale(const FieldCtx& F, const Fe& s, const MPoly& p) {
    check_shape(p);
    MPoly out = p;
    for (Fe& c : out.a) c = F.mul(s, c);
    return out;
}

MPoly mp_mul(const FieldCtx& F, const MPoly& p, const MPoly& r) {
    check_pair(p, r);
    MPoly out = mp_zero(F, p.nvars);
    uint32_t dp[kMaxVars], dr[kMaxVars];
    for (uint64_t i = 0; i < p.a.size(); ++i) {
        if (F.is_zero(p.a[i])) continue;
        decode(i, p.nvars, dp);
        for (uint64_t j = 0; j < r.a.size(); ++j) {
            if (F.is_zero(r.a[j])) continue;
            decode(j, r.nvars, dr);
            uint64_t idx = 0;
            for (uint32_t v = p.nvars; v-- > 0;) {
                uint32_t d = dp[v] + dr[v];
                if (d >= kVarCap) throw too_large("product degree exceeds the cap");
                idx = idx * kVarCap + d;
            }
            out.a[idx] = F.add(out.a[idx], F.mul(p.a[i], r.a[j]));
        }
    }
    return out;
}

int mp_degree_in(const FieldCtx& F, const MPoly& p, uint32_t v) {
    check_shape(p);
    if (v >= p.nvars) throw invalid_input("variable index out of range");
    int deg = -1;
    uint32_t d[kMaxVars];
    for (uint64_t i = 0; i < p.a.size(); ++i) {
        if (F.is_zero(p.a[i])) continue;
        decode(i, p.nvars, d);
        deg = std::max(deg, static_cast<int>(d[v]));
    }
    return deg;
}

MPoly mp_coeff(const FieldCtx& F, const MPoly& p, uint32_t v, uint32_t d) {
    check_shape(p);
    if (v >= p.nvars || d >= kVarCap) throw invalid_input("mp_coeff out of range");
    MPoly out = mp_zero(F, p.nvars);
    uint32_t dd[kMaxVars];
    for (uint64_t i = 0; i < p.a.size(); ++i) {
        if (F.is_zero(p.a[i])) continue;
        decode(i, p.nvars, dd);
        if (dd[v] != d) continue;
        out.a[i - static_cast<uint64_t>(d) * stride(v)] = p.a[i];
    }
    return out;
}

Fe mp_eval(const FieldCtx& F, const MPoly& p, const std::vector<Fe>& vals) {
    check_shape(p);
    if (vals.size() != p.nvars) throw invalid_input("wrong number of evaluation points");
    Fe acc = F.zero();
    uint32_t d[kMaxVars];
    for (uint64_t i = 0; i < p.a.size(); ++i) {
        if (F.is_zero(p.a[i])) continue;
        decode(i, p.nvars, d);
        Fe term = p.a[i];
        for (uint32_t v = 0; v < p.nvars; ++v)
            if (d[v] > 0) term = F.mul(term, F.pow(vals[v], d[v]));
        acc = F.add(acc, term);
    }
    return acc;
}

MPoly mp_determinant(const FieldCtx& F, const std::vector<std::vector<MPoly>>& m) {
    size_t n = m.size();
    if (n == 0) throw invalid_input("empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw invalid_input("matrix is not square");
    if (n == 1) return m[0][0];
    // Laplace expansion along the first column
    MPoly acc = mp_zero(F, m[0][0].nvars);
    for (size_t i = 0; i < n; ++i) {
        if (mp_is_zero(F, m[i][0])) continue;
        std::vector<std::vector<MPoly>> minor;
        minor.reserve(n - 1);
        for (size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.emplace_back(m[r].begin() + 1, m[r].end());
        }
        MPoly term = mp_mul(F, m[i][0], mp_determinant(F, minor));
        acc = (i % 2 == 0) ? mp_add(F, acc, term) : mp_sub(F, acc, term);
    }
    return acc;
}

MPoly sylvester_resultant(const FieldCtx& F, const MPoly& p, const MPoly& r,
                          uint32_t v, int n, int m) {
    check_pair(p, r);
    int dp = mp_degree_in(F, p, v);
    int dr = mp_degree_in(F, r, v);
    if (dp < 0 || dr < 0) throw zero_polynomial("resultant of a zero polynomial");
    if (n < 0) n = dp;
    if (m < 0) m = dr;
    if (n < dp || m < dr) throw invalid_input("declared degree below actual degree");
    if (n + m == 0) return mp_const(F, p.nvars, F.one());
    // s_{i,j} = p_{n+i-j} for rows 1..m, r_{i-j} for rows m+1..m+n (1-based)
    std::vector<std::vector<MPoly>> syl(n + m, std::vector<MPoly>(n + m, mp_zero(F, p.nvars)));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n + m; ++j) {
            int d = n + i - j;
            if (d >= 0 && d <= n) syl[i - 1][j - 1] = mp_coeff(F, p, v, d);
        }
    for (int i = m + 1; i <= m + n; ++i)
        for (int j = 1; j <= n + m; ++j) {
            int d = i - j;
            if (d >= 0 && d <= m) syl[i - 1][j - 1] = mp_coeff(F, r, v, d);
        }
    return mp_determinant(F, syl);
}

std::pair<MPoly, MPoly> mp_divide_linear(const FieldCtx& F, const MPoly& p,
                                         uint32_t v, const Fe& c) {
    check_shape(p);
    int d = mp_degree_in(F, p, v);
    MPoly quot = mp_zero(F, p.nvars);
    if (d <= 0) return {quot, p};   // constant in v: quotient 0, remainder p
    // synthetic division from the top coefficient down
    MPoly carry = mp_coeff(F, p, v, d);
    uint64_t st = stride(v);
    for (int j = d - 1; j >= 0; --j) {
        // quotient coefficient of Y_v^j is the current carry
        for (uint64_t i = 0; i < carry.a.size(); ++i)
            if (!F.is_zero(carry.a[i]))
                quot.a[i + static_cast<uint64_t>(j) * st] = carry.a[i];
        carry = mp_add(F, mp_coeff(F, p, v, j), mp_scale(F, c, carry));
    }
    return {quot, carry};
}

Poly mp_substitute_powers(const FieldCtx& F, const MPoly& p, uint64_t q, uint32_t nsub) {
    check_shape(p);
    if (nsub > p.nvars) throw invalid_input("nsub exceeds arity");
    uint64_t emax = 0, pw = 1;
    for (uint32_t v = 0; v < nsub; ++v) {
        emax += static_cast<uint64_t>(kVarCap - 1) * pw;
        pw *= q;
    }
    std::vector<Fe> out(emax + 1, F.zero());
    uint32_t d[kMaxVars];
    for (uint64_t i = 0; i < p.a.size(); ++i) {
        if (F.is_zero(p.a[i])) continue;
        decode(i, p.nvars, d);
        uint64_t e = 0;
        pw = 1;
        for (uint32_t v = 0; v < p.nvars; ++v) {
            if (v >= nsub) {
                if (d[v] != 0) throw invalid_input("unsubstituted variable occurs");
                continue;
            }
            e += static_cast<uint64_t>(d[v]) * pw;
            pw *= q;
        }
        out[e] = F.add(out[e], p.a[i]);
    }
    return poly_make(F, std::move(out));
}

} // namespace ng
