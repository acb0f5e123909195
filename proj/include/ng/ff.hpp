#pragma once

// Finite field tower arithmetic: prime fields Z_p and extensions
// F_{p^m} = Z_p[X]/(f) with a deterministic choice of modulus f.
//
// Elements are fixed-capacity coefficient vectors tagged with the id of
// the context that created them; mixing elements across contexts is an
// error, even when the contexts describe isomorphic fields.  Movement
// between a field and an overfield goes through SubfieldEmbedding.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ng/errors.hpp"

namespace ng {

constexpr unsigned kMaxFieldDegree = 16;

struct Fe {
    std::array<uint32_t, kMaxFieldDegree> c{};
    uint32_t field = 0;

    bool operator==(const Fe&) const = default;
};

class FieldCtx {
public:
    // Builds F_{p^m}.  When no modulus is supplied the lex-smallest monic
    // irreducible of degree m is selected (coefficient tuple
    // (c_{m-1},...,c_0) ascending).  A supplied modulus must be monic of
    // degree m and irreducible, coefficients little-endian, length m+1.
    static FieldCtx make(uint64_t p, uint32_t m,
                         const std::vector<uint32_t>* modulus = nullptr);

    uint64_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint64_t size() const { return size_; }
    uint32_t id() const { return id_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    Fe zero() const;
    Fe one() const;
    Fe from_int(uint64_t v) const;        // canonical encoding sum c_i p^i
    uint64_t to_int(const Fe& x) const;
    Fe from_coeffs(const std::vector<uint32_t>& cs) const;

    bool is_zero(const Fe& x) const;
    bool eq(const Fe& a, const Fe& b) const;

    Fe add(const Fe& a, const Fe& b) const;
    Fe sub(const Fe& a, const Fe& b) const;
    Fe neg(const Fe& a) const;
    Fe mul(const Fe& a, const Fe& b) const;
    Fe inv(const Fe& a) const;            // throws division_by_zero on 0
    Fe div(const Fe& a, const Fe& b) const;
    Fe pow(const Fe& a, uint64_t e) const;

    // x -> x^{p^iters}
    Fe frobenius(const Fe& x, uint32_t iters) const;

    // Multiplicative generator: smallest element in canonical integer
    // encoding with order exactly size-1.  Cached after first use.
    Fe generator() const;

    // Quadratic character: 0 on zero, +1 on nonzero squares, -1 otherwise.
    // Refuses characteristic 2.
    int quad_char(const Fe& x) const;

    // Deterministic square root (Tonelli-Shanks); of the two roots the one
    // with smaller canonical encoding is returned.  Refuses char 2.
    std::optional<Fe> sqrt(const Fe& x) const;

    // Prime factors of size-1, ascending, no multiplicity.
    const std::vector<uint64_t>& order_factors() const;

private:
    uint64_t p_ = 0;
    uint32_t m_ = 0;
    uint64_t size_ = 0;
    uint32_t id_ = 0;
    std::vector<uint32_t> modulus_;
    // reduction rows: X^{m+j} mod modulus, j = 0..m-2, each m wide
    std::vector<uint32_t> red_;
    // Frobenius matrix columns: (X^i)^p mod modulus
    std::vector<uint32_t> frob_;
    mutable Fe gen_;
    mutable bool gen_ready_ = false;
    mutable std::vector<uint64_t> factors_;
    mutable std::vector<uint32_t> inv_table_;   // built for small fields

    void check(const Fe& x) const;
    void build_tables();
};

bool is_prime(uint64_t n);
uint64_t ipow(uint64_t base, uint32_t e);   // throws too_large on overflow

// ---------------------------------------------------------------------------
// Dense univariate polynomials over a FieldCtx.  Coefficients little-endian,
// normalized (no trailing zero = leading coefficient nonzero); the zero
// polynomial has an empty coefficient vector and degree() == -1.

struct Poly {
    std::vector<Fe> c;
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

Poly poly_make(const FieldCtx& F, std::vector<Fe> coeffs);
Poly poly_zero(const FieldCtx& F);
Poly poly_x(const FieldCtx& F);
Poly poly_const(const FieldCtx& F, const Fe& a);
Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_scale(const FieldCtx& F, const Fe& s, const Poly& a);
Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_pow(const FieldCtx& F, const Poly& a, uint64_t e);
// quotient/remainder; divisor must have invertible leading coefficient
std::pair<Poly, Poly> poly_divmod(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_gcd(const FieldCtx& F, Poly a, Poly b);   // monic gcd
Poly poly_derivative(const FieldCtx& F, const Poly& a);
Fe poly_eval(const FieldCtx& F, const Poly& a, const Fe& x);
bool poly_eq(const FieldCtx& F, const Poly& a, const Poly& b);

// All roots in the coefficient field, ascending canonical encoding.
// Exhaustive scan; rejects the zero polynomial.
std::vector<Fe> poly_roots(const FieldCtx& F, const Poly& a);

// Exact polynomial square root of a monic even-degree polynomial, odd
// characteristic.  Returns nullopt when the input is not a perfect square.
std::optional<Poly> poly_sqrt(const FieldCtx& F, const Poly& a);

// ---------------------------------------------------------------------------
// Embedding of a small field into a big one (small.m must divide big.m and
// characteristics must agree).  rho is a fixed root of the small modulus in
// the big field, located deterministically inside the torsion subgroup of
// matching order.  pullback() inverts embed() and throws invalid_input when
// the element is outside the image.

class SubfieldEmbedding {
public:
    static SubfieldEmbedding make(const FieldCtx& small, const FieldCtx& big);

    Fe embed(const FieldCtx& small, const FieldCtx& big, const Fe& x) const;
    Fe pullback(const FieldCtx& small, const FieldCtx& big, const Fe& y) const;
    bool in_image(const FieldCtx& big, const Fe& y) const;
    const Fe& rho() const { return rho_; }

private:
    uint32_t small_id_ = 0, big_id_ = 0;
    Fe rho_;
    // sorted (big encoding, small encoding) pairs over the whole small field
    std::vector<std::pair<uint64_t, uint64_t>> inverse_;
};

} // namespace ng
