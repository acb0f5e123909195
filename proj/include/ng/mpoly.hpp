#pragma once

// Dense multivariate polynomials of small arity and bounded per-variable
// degree -- just enough machinery for the Sylvester elimination pipeline,
// where every intermediate object lives in at most three variables with
// per-variable degree at most eight.

#include <cstdint>
#include <vector>

#include "ng/ff.hpp"

namespace ng {

constexpr uint32_t kMaxVars = 3;
constexpr uint32_t kVarCap = 9;   // per-variable degrees 0..8

// Coefficient array indexed by sum_v d_v * kVarCap^v (variable 0 fastest).
struct MPoly {
    uint32_t nvars = 0;
    std::vector<Fe> a;
};

MPoly mp_zero(const FieldCtx& F, uint32_t nvars);
MPoly mp_const(const FieldCtx& F, uint32_t nvars, const Fe& c);
MPoly mp_var(const FieldCtx& F, uint32_t nvars, uint32_t v);

bool mp_is_zero(const FieldCtx& F, const MPoly& p);
bool mp_eq(const FieldCtx& F, const MPoly& p, const MPoly& r);

MPoly mp_add(const FieldCtx& F, const MPoly& p, const MPoly& r);
MPoly mp_sub(const FieldCtx& F, const MPoly& p, const MPoly& r);
MPoly mp_neg(const FieldCtx& F, const MPoly& p);
MPoly mp_scale(const FieldCtx& F, const Fe& s, const MPoly& p);
// throws too_large when a product degree would exceed kVarCap-1 in a variable
MPoly mp_mul(const FieldCtx& F, const MPoly& p, const MPoly& r);

// degree in one variable; -1 for the zero polynomial
int mp_degree_in(const FieldCtx& F, const MPoly& p, uint32_t v);

// coefficient of Y_v^d, as a polynomial of the same arity with degree 0 in v
MPoly mp_coeff(const FieldCtx& F, const MPoly& p, uint32_t v, uint32_t d);

Fe mp_eval(const FieldCtx& F, const MPoly& p, const std::vector<Fe>& vals);

// Laplace expansion; square matrix of polynomials of equal arity
MPoly mp_determinant(const FieldCtx& F, const std::vector<std::vector<MPoly>>& m);

// Determinant of the Sylvester matrix of p and r viewed as univariate
// polynomials in Y_v: with n = deg_v(p), m = deg_v(r), the (n+m)x(n+m)
// matrix whose first m rows carry the descending coefficients of p shifted
// right, and last n rows the descending coefficients of r.  n and m may be
// overridden upward (the vanishing behaviour is preserved for degree upper
// bounds).  Throws zero_polynomial on a zero operand.
MPoly sylvester_resultant(const FieldCtx& F, const MPoly& p, const MPoly& r,
                          uint32_t v, int n = -1, int m = -1);

// Exact synthetic division of p by (Y_v - c): returns {quotient, remainder},
// the remainder having degree 0 in v.
std::pair<MPoly, MPoly> mp_divide_linear(const FieldCtx& F, const MPoly& p,
                                         uint32_t v, const Fe& c);

// Substitute Y_v = Y^{q^v} for v < nsub; the remaining variables must not
// occur.  Returns the resulting univariate polynomial.
Poly mp_substitute_powers(const FieldCtx& F, const MPoly& p, uint64_t q, uint32_t nsub);

} // namespace ng
