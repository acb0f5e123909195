#include "ng/ff.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>

namespace ng {

namespace {

std::atomic<uint32_t> g_next_field_id{1};

// small dense polynomials over Z_p used only during context construction
using ZP = std::vector<uint64_t>;

void zp_trim(ZP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZP zp_mulmod(const ZP& a, const ZP& b, const ZP& f, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ZP prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    // f is monic; classical remainder
    size_t n = f.size() - 1;
    for (size_t deg = prod.size(); deg-- > n;) {
        uint64_t c = prod[deg];
        if (!c) continue;
        prod[deg] = 0;
        for (size_t j = 0; j < n; ++j) {
            uint64_t sub = (c * f[j]) % p;
            prod[deg - n + j] = (prod[deg - n + j] + p - sub) % p;
        }
    }
    prod.resize(n);
    zp_trim(prod);
    return prod;
}

ZP zp_powmod_x(uint64_t e, const ZP& f, uint64_t p) {
    // X^e mod f by square and multiply
    ZP result{1};
    ZP base{0, 1};
    while (e) {
        if (e & 1) result = zp_mulmod(result, base, f, p);
        base = zp_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

ZP zp_gcd(ZP a, ZP b, uint64_t p) {
    auto inv_mod = [&](uint64_t x) {
        uint64_t r = 1, e = p - 2, base = x % p;
        while (e) {
            if (e & 1) r = (r * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        return r;
    };
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        // a <- a mod b
        uint64_t lead_inv = inv_mod(b.back());
        while (a.size() >= b.size()) {
            uint64_t c = (a.back() * lead_inv) % p;
            size_t shift = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t sub = (c * b[j]) % p;
                a[shift + j] = (a[shift + j] + p - sub) % p;
            }
            a.pop_back();   // leading term cancelled exactly
            zp_trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

bool zp_irreducible(const ZP& f, uint64_t p) {
    // Rabin's test: X^{p^m} == X mod f, and gcd(X^{p^{m/l}} - X, f) == 1
    // for every prime l dividing m.
    uint32_t m = static_cast<uint32_t>(f.size() - 1);
    if (m == 0) return false;
    if (m == 1) return true;
    uint32_t rest = m;
    std::vector<uint32_t> prime_divs;
    for (uint32_t l = 2; l * l <= rest; ++l) {
        if (rest % l == 0) {
            prime_divs.push_back(l);
            while (rest % l == 0) rest /= l;
        }
    }
    if (rest > 1) prime_divs.push_back(rest);
    for (uint32_t l : prime_divs) {
        uint64_t e = 1;
        for (uint32_t i = 0; i < m / l; ++i) e *= p;
        ZP g = zp_powmod_x(e, f, p);
        // g - X
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        zp_trim(g);
        ZP d = zp_gcd(f, g, p);
        if (d.size() != 1) return false;
    }
    uint64_t e = 1;
    for (uint32_t i = 0; i < m; ++i) {
        if (e > UINT64_MAX / p) throw too_large("field too large");
        e *= p;
    }
    ZP g = zp_powmod_x(e, f, p);
    ZP x{0, 1};
    zp_trim(g);
    return g == x;
}

} // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint64_t ipow(uint64_t base, uint32_t e) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (r > UINT64_MAX / base) throw too_large("ipow overflow");
        r *= base;
    }
    return r;
}

void FieldCtx::check(const Fe& x) const {
    if (x.field != id_)
        throw field_mismatch("element belongs to a different field context");
}

FieldCtx FieldCtx::make(uint64_t p, uint32_t m, const std::vector<uint32_t>* modulus) {
    if (!is_prime(p)) throw composite_characteristic("p must be prime");
    if (m == 0 || m > kMaxFieldDegree) throw bad_parameters("extension degree out of range");
    FieldCtx F;
    F.p_ = p;
    F.m_ = m;
    F.size_ = ipow(p, m);
    F.id_ = g_next_field_id.fetch_add(1);

    if (modulus) {
        if (modulus->size() != m + 1 || (*modulus)[m] != 1)
            throw bad_parameters("modulus must be monic of degree m");
        ZP f(modulus->begin(), modulus->end());
        for (auto& c : f)
            if (c >= p) throw bad_parameters("modulus coefficient out of range");
        if (!zp_irreducible(f, p)) throw reducible_modulus("supplied modulus is reducible");
        F.modulus_.assign(modulus->begin(), modulus->end());
    } else if (m == 1) {
        F.modulus_ = {0, 1};   // X
    } else {
        // lex-smallest monic irreducible: iterate the coefficient tuple
        // (c_{m-1}, ..., c_0) in ascending lexicographic order
        uint64_t total = ipow(p, m);
        bool found = false;
        for (uint64_t v = 0; v < total && !found; ++v) {
            // low digit of v drives c_0, high digit drives c_{m-1}, so
            // incrementing v walks the tuple (c_{m-1},...,c_0) in ascending
            // lexicographic order
            ZP f(m + 1, 0);
            f[m] = 1;
            uint64_t rest = v;
            for (uint32_t i = 0; i < m; ++i) {
                f[i] = rest % p;
                rest /= p;
            }
            if (zp_irreducible(f, p)) {
                F.modulus_.assign(f.begin(), f.end());
                found = true;
            }
        }
        if (!found) throw error("no irreducible polynomial found");   // unreachable
    }
    F.build_tables();
    return F;
}

void FieldCtx::build_tables() {
    uint32_t m = m_;
    uint64_t p = p_;
    // reduction rows: X^{m+j} mod modulus for j = 0..m-2
    if (m > 1) {
        red_.assign(static_cast<size_t>(m - 1) * m, 0);
        std::vector<uint64_t> cur(m, 0);
        // X^m = -(c_0 + c_1 X + ... + c_{m-1} X^{m-1})
        for (uint32_t i = 0; i < m; ++i)
            cur[i] = (p - modulus_[i]) % p;
        for (uint32_t j = 0; j + 1 < m; ++j) {
            for (uint32_t i = 0; i < m; ++i)
                red_[static_cast<size_t>(j) * m + i] = static_cast<uint32_t>(cur[i]);
            if (j + 2 < m) {
                // multiply by X and reduce once
                std::vector<uint64_t> nxt(m, 0);
                uint64_t top = cur[m - 1];
                for (uint32_t i = m - 1; i >= 1; --i) nxt[i] = cur[i - 1];
                nxt[0] = 0;
                if (top) {
                    for (uint32_t i = 0; i < m; ++i) {
                        uint64_t sub = (top * modulus_[i]) % p;
                        nxt[i] = (nxt[i] + p - sub) % p;
                    }
                }
                cur = nxt;
            }
        }
    }
    // Frobenius matrix: columns are (X^i)^p mod modulus
    frob_.assign(static_cast<size_t>(m) * m, 0);
    for (uint32_t i = 0; i < m; ++i) {
        Fe xi = zero();
        xi.c[i] = 1;
        xi.field = id_;
        Fe col = pow(xi, p);
        for (uint32_t r = 0; r < m; ++r)
            frob_[static_cast<size_t>(i) * m + r] = col.c[r];
    }
}

Fe FieldCtx::zero() const {
    Fe x;
    x.field = id_;
    return x;
}

Fe FieldCtx::one() const {
    Fe x = zero();
    x.c[0] = 1 % p_;
    return x;
}

Fe FieldCtx::from_int(uint64_t v) const {
    if (v >= size_) throw invalid_input("encoding out of range");
    Fe x = zero();
    for (uint32_t i = 0; i < m_ && v; ++i) {
        x.c[i] = static_cast<uint32_t>(v % p_);
        v /= p_;
    }
    return x;
}

uint64_t FieldCtx::to_int(const Fe& x) const {
    check(x);
    uint64_t v = 0;
    for (uint32_t i = m_; i-- > 0;)
        v = v * p_ + x.c[i];
    return v;
}

Fe FieldCtx::from_coeffs(const std::vector<uint32_t>& cs) const {
    if (cs.size() > m_) throw invalid_input("too many coefficients");
    Fe x = zero();
    for (size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] >= p_) throw invalid_input("coefficient out of range");
        x.c[i] = cs[i];
    }
    return x;
}

bool FieldCtx::is_zero(const Fe& x) const {
    check(x);
    for (uint32_t i = 0; i < m_; ++i)
        if (x.c[i]) return false;
    return true;
}

bool FieldCtx::eq(const Fe& a, const Fe& b) const {
    check(a);
    check(b);
    return a.c == b.c;
}

Fe FieldCtx::add(const Fe& a, const Fe& b) const {
    check(a);
    check(b);
    Fe r = zero();
    for (uint32_t i = 0; i < m_; ++i) {
        uint64_t s = static_cast<uint64_t>(a.c[i]) + b.c[i];
        if (s >= p_) s -= p_;
        r.c[i] = static_cast<uint32_t>(s);
    }
    return r;
}

Fe FieldCtx::sub(const Fe& a, const Fe& b) const {
    check(a);
    check(b);
    Fe r = zero();
    for (uint32_t i = 0; i < m_; ++i) {
        uint64_t s = static_cast<uint64_t>(a.c[i]) + p_ - b.c[i];
        if (s >= p_) s -= p_;
        r.c[i] = static_cast<uint32_t>(s);
    }
    return r;
}

Fe FieldCtx::neg(const Fe& a) const {
    return sub(zero(), a);
}

Fe FieldCtx::mul(const Fe& a, const Fe& b) const {
    check(a);
    check(b);
    uint32_t m = m_;
    if (m == 1) {
        Fe r = zero();
        r.c[0] = static_cast<uint32_t>((static_cast<uint64_t>(a.c[0]) * b.c[0]) % p_);
        return r;
    }
    uint64_t prod[2 * kMaxFieldDegree - 1] = {0};
    for (uint32_t i = 0; i < m; ++i) {
        if (!a.c[i]) continue;
        uint64_t ai = a.c[i];
        for (uint32_t j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + ai * b.c[j]) % p_;
    }
    Fe r = zero();
    uint64_t acc[kMaxFieldDegree];
    for (uint32_t i = 0; i < m; ++i) acc[i] = prod[i];
    for (uint32_t j = 0; j + 1 < m; ++j) {
        uint64_t c = prod[m + j];
        if (!c) continue;
        const uint32_t* row = &red_[static_cast<size_t>(j) * m];
        for (uint32_t i = 0; i < m; ++i)
            acc[i] = (acc[i] + c * row[i]) % p_;
    }
    for (uint32_t i = 0; i < m; ++i) r.c[i] = static_cast<uint32_t>(acc[i] % p_);
    return r;
}

Fe FieldCtx::pow(const Fe& a, uint64_t e) const {
    check(a);
    Fe result = one();
    Fe base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Fe FieldCtx::inv(const Fe& a) const {
    check(a);
    if (is_zero(a)) throw division_by_zero("inverse of zero");
    if (!inv_table_.empty()) {
        uint64_t v = to_int(a);
        return from_int(inv_table_[v]);
    }
    if (size_ <= 65536) {
        // build the table once; cheap at this scale
        inv_table_.assign(size_, 0);
        for (uint64_t v = 1; v < size_; ++v)
            inv_table_[v] = static_cast<uint32_t>(to_int(pow(from_int(v), size_ - 2)));
        return from_int(inv_table_[to_int(a)]);
    }
    return pow(a, size_ - 2);
}

Fe FieldCtx::div(const Fe& a, const Fe& b) const {
    return mul(a, inv(b));
}

Fe FieldCtx::frobenius(const Fe& x, uint32_t iters) const {
    check(x);
    Fe cur = x;
    for (uint32_t it = 0; it < iters; ++it) {
        Fe nxt = zero();
        uint64_t acc[kMaxFieldDegree] = {0};
        for (uint32_t i = 0; i < m_; ++i) {
            if (!cur.c[i]) continue;
            uint64_t ci = cur.c[i];
            const uint32_t* col = &frob_[static_cast<size_t>(i) * m_];
            for (uint32_t r = 0; r < m_; ++r)
                acc[r] = (acc[r] + ci * col[r]) % p_;
        }
        for (uint32_t r = 0; r < m_; ++r) nxt.c[r] = static_cast<uint32_t>(acc[r]);
        cur = nxt;
    }
    return cur;
}

const std::vector<uint64_t>& FieldCtx::order_factors() const {
    if (factors_.empty() && size_ > 1) {
        uint64_t n = size_ - 1;
        for (uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                factors_.push_back(d);
                while (n % d == 0) n /= d;
            }
        }
        if (n > 1) factors_.push_back(n);
    }
    return factors_;
}

Fe FieldCtx::generator() const {
    if (gen_ready_) return gen_;
    const auto& fac = order_factors();
    uint64_t n = size_ - 1;
    for (uint64_t v = 1; v < size_; ++v) {
        Fe g = from_int(v);
        bool ok = true;
        for (uint64_t r : fac) {
            if (eq(pow(g, n / r), one())) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen_ = g;
            gen_ready_ = true;
            return gen_;
        }
    }
    throw error("no generator found");   // unreachable for a field
}

int FieldCtx::quad_char(const Fe& x) const {
    if (p_ == 2) throw even_characteristic("quadratic character needs odd characteristic");
    check(x);
    if (is_zero(x)) return 0;
    Fe r = pow(x, (size_ - 1) / 2);
    if (eq(r, one())) return 1;
    return -1;
}

std::optional<Fe> FieldCtx::sqrt(const Fe& x) const {
    if (p_ == 2) throw even_characteristic("square root needs odd characteristic");
    check(x);
    if (is_zero(x)) return zero();
    if (quad_char(x) != 1) return std::nullopt;
    // Tonelli-Shanks with the cached generator as non-residue
    uint64_t q = size_ - 1;
    uint32_t s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    Fe z = generator();            // generator is a non-residue
    Fe cc = pow(z, q);
    Fe t = pow(x, q);
    Fe r = pow(x, (q + 1) / 2);
    uint32_t mexp = s;
    while (!eq(t, one())) {
        Fe tt = t;
        uint32_t i = 0;
        while (!eq(tt, one())) {
            tt = mul(tt, tt);
            ++i;
        }
        Fe b = cc;
        for (uint32_t j = 0; j + i + 1 < mexp; ++j) b = mul(b, b);
        mexp = i;
        cc = mul(b, b);
        t = mul(t, cc);
        r = mul(r, b);
    }
    Fe other = neg(r);
    if (to_int(other) < to_int(r)) r = other;
    return r;
}

// ---------------------------------------------------------------------------
// polynomials

static void poly_trim(const FieldCtx& F, Poly& a) {
    while (!a.c.empty() && F.is_zero(a.c.back())) a.c.pop_back();
}

Poly poly_make(const FieldCtx& F, std::vector<Fe> coeffs) {
    Poly r;
    r.c = std::move(coeffs);
    poly_trim(F, r);
    return r;
}

Poly poly_zero(const FieldCtx&) { return {}; }

Poly poly_x(const FieldCtx& F) { return poly_make(F, {F.zero(), F.one()}); }

Poly poly_const(const FieldCtx& F, const Fe& a) { return poly_make(F, {a}); }

Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b) {
    Poly r;
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        Fe x = i < a.c.size() ? a.c[i] : F.zero();
        Fe y = i < b.c.size() ? b.c[i] : F.zero();
        r.c.push_back(F.add(x, y));
    }
    poly_trim(F, r);
    return r;
}

Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b) {
    Poly r;
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        Fe x = i < a.c.size() ? a.c[i] : F.zero();
        Fe y = i < b.c.size() ? b.c[i] : F.zero();
        r.c.push_back(F.sub(x, y));
    }
    poly_trim(F, r);
    return r;
}

Poly poly_scale(const FieldCtx& F, const Fe& s, const Poly& a) {
    Poly r;
    r.c.reserve(a.c.size());
    for (const Fe& x : a.c) r.c.push_back(F.mul(s, x));
    poly_trim(F, r);
    return r;
}

Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, F.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (F.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    poly_trim(F, r);
    return r;
}

Poly poly_pow(const FieldCtx& F, const Poly& a, uint64_t e) {
    Poly result = poly_const(F, F.one());
    Poly base = a;
    while (e) {
        if (e & 1) result = poly_mul(F, result, base);
        base = poly_mul(F, base, base);
        e >>= 1;
    }
    return result;
}

std::pair<Poly, Poly> poly_divmod(const FieldCtx& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    Poly rem = a;
    Poly quot;
    int db = b.degree();
    Fe lead_inv = F.inv(b.c.back());
    if (rem.degree() >= db)
        quot.c.assign(rem.degree() - db + 1, F.zero());
    while (rem.degree() >= db) {
        int shift = rem.degree() - db;
        Fe c = F.mul(rem.c.back(), lead_inv);
        quot.c[shift] = c;
        for (int j = 0; j <= db; ++j)
            rem.c[shift + j] = F.sub(rem.c[shift + j], F.mul(c, b.c[j]));
        poly_trim(F, rem);
    }
    poly_trim(F, quot);
    return {quot, rem};
}

Poly poly_gcd(const FieldCtx& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && !F.eq(a.c.back(), F.one()))
        a = poly_scale(F, F.inv(a.c.back()), a);
    return a;
}

Poly poly_derivative(const FieldCtx& F, const Poly& a) {
    Poly r;
    for (size_t i = 1; i < a.c.size(); ++i) {
        Fe k = F.from_int(i % F.p());
        r.c.push_back(F.mul(k, a.c[i]));
    }
    poly_trim(F, r);
    return r;
}

Fe poly_eval(const FieldCtx& F, const Poly& a, const Fe& x) {
    Fe r = F.zero();
    for (size_t i = a.c.size(); i-- > 0;)
        r = F.add(F.mul(r, x), a.c[i]);
    return r;
}

bool poly_eq(const FieldCtx& F, const Poly& a, const Poly& b) {
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!F.eq(a.c[i], b.c[i])) return false;
    return true;
}

std::vector<Fe> poly_roots(const FieldCtx& F, const Poly& a) {
    if (a.is_zero()) throw zero_polynomial("root finding on the zero polynomial");
    std::vector<Fe> roots;
    for (uint64_t v = 0; v < F.size(); ++v) {
        Fe x = F.from_int(v);
        if (F.is_zero(poly_eval(F, a, x))) roots.push_back(x);
    }
    return roots;
}

std::optional<Poly> poly_sqrt(const FieldCtx& F, const Poly& a) {
    if (F.p() == 2) throw even_characteristic("poly_sqrt needs odd characteristic");
    if (a.is_zero()) return poly_zero(F);
    int d = a.degree();
    if (d % 2) return std::nullopt;
    if (!F.eq(a.c.back(), F.one())) throw precondition_violated("poly_sqrt expects a monic input");
    int s = d / 2;
    // solve v^2 = a coefficient by coefficient from the top; v monic
    std::vector<Fe> v(static_cast<size_t>(s) + 1, F.zero());
    v[s] = F.one();
    Fe half = F.inv(F.add(F.one(), F.one()));
    for (int i = s - 1; i >= 0; --i) {
        // coefficient of X^{s+i} in v^2 is 2*v_i*v_s plus cross terms in
        // already-known coefficients v_{i+1}..v_{s-1}
        Fe acc = F.zero();
        for (int j = i + 1; j < s; ++j) {
            int k = s + i - j;
            if (k <= j || k >= s) continue;
            acc = F.add(acc, F.add(F.mul(v[j], v[k]), F.mul(v[j], v[k])));
        }
        if ((s + i) % 2 == 0 && (s + i) / 2 > i && (s + i) / 2 < s) {
            Fe w = v[(s + i) / 2];
            acc = F.add(acc, F.mul(w, w));
        }
        Fe target = static_cast<size_t>(s + i) < a.c.size() ? a.c[s + i] : F.zero();
        v[i] = F.mul(half, F.sub(target, acc));
    }
    Poly cand = poly_make(F, v);
    if (poly_eq(F, poly_mul(F, cand, cand), a)) return cand;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// subfield embeddings

SubfieldEmbedding SubfieldEmbedding::make(const FieldCtx& small, const FieldCtx& big) {
    if (small.p() != big.p()) throw bad_parameters("characteristic mismatch");
    if (big.m() % small.m() != 0) throw bad_parameters("degree of subfield must divide");
    SubfieldEmbedding e;
    e.small_id_ = small.id();
    e.big_id_ = big.id();
    if (small.m() == 1) {
        e.rho_ = big.zero();
    } else {
        // root of the small modulus inside the (|small|-1)-torsion of big*
        Poly f;
        for (uint32_t c : small.modulus()) f.c.push_back(big.from_int(c % big.p()));
        poly_trim(big, f);
        uint64_t sub_order = small.size() - 1;
        Fe h = big.pow(big.generator(), (big.size() - 1) / sub_order);
        Fe cur = big.one();
        bool found = false;
        for (uint64_t j = 0; j < sub_order; ++j) {
            if (big.is_zero(poly_eval(big, f, cur))) {
                e.rho_ = cur;
                found = true;
                break;
            }
            cur = big.mul(cur, h);
        }
        if (!found) throw error("embedding root not found");   // unreachable
    }
    e.inverse_.reserve(small.size());
    for (uint64_t v = 0; v < small.size(); ++v) {
        Fe y = e.embed(small, big, small.from_int(v));
        e.inverse_.emplace_back(big.to_int(y), v);
    }
    std::sort(e.inverse_.begin(), e.inverse_.end());
    return e;
}

Fe SubfieldEmbedding::embed(const FieldCtx& small, const FieldCtx& big, const Fe& x) const {
    if (small.id() != small_id_ || big.id() != big_id_)
        throw field_mismatch("embedding used with wrong contexts");
    if (x.field != small.id()) throw field_mismatch("element not from the subfield context");
    Fe r = big.zero();
    for (uint32_t i = small.m(); i-- > 0;) {
        r = big.mul(r, rho_);
        r = big.add(r, big.from_int(x.c[i]));
    }
    return r;
}

bool SubfieldEmbedding::in_image(const FieldCtx& big, const Fe& y) const {
    uint64_t key = big.to_int(y);
    auto it = std::lower_bound(inverse_.begin(), inverse_.end(),
                               std::make_pair(key, static_cast<uint64_t>(0)));
    return it != inverse_.end() && it->first == key;
}

Fe SubfieldEmbedding::pullback(const FieldCtx& small, const FieldCtx& big, const Fe& y) const {
    if (small.id() != small_id_ || big.id() != big_id_)
        throw field_mismatch("embedding used with wrong contexts");
    uint64_t key = big.to_int(y);
    auto it = std::lower_bound(inverse_.begin(), inverse_.end(),
                               std::make_pair(key, static_cast<uint64_t>(0)));
    if (it == inverse_.end() || it->first != key)
        throw invalid_input("element is not in the embedded subfield");
    return small.from_int(it->second);
}

} // namespace ng
