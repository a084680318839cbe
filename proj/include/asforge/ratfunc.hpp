#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asforge/poly.hpp"

namespace asforge {

// f/q in lowest terms with monic denominator. The zero function is 0/1.
struct RatFunc {
    Poly num, den;

    RatFunc(Poly f, Poly q);
    static RatFunc zero(const FieldCtx* c) { return RatFunc(Poly::zero(c), Poly::one(c)); }
    static RatFunc from_poly(Poly f) {
        const FieldCtx* c = f.ctx();
        return RatFunc(std::move(f), Poly::one(c));
    }

    const FieldCtx* ctx() const { return num.ctx(); }
    bool is_zero() const { return num.is_zero(); }
    bool is_poly() const { return den.deg() == 0; }
    RatFunc lift(const FieldCtx* target) const;
};

RatFunc operator+(const RatFunc& a, const RatFunc& b);
RatFunc operator*(const RatFunc& a, const RatFunc& b);
bool operator==(const RatFunc& a, const RatFunc& b);
inline bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
RatFunc rf_wp(const RatFunc& w);  // w^2 + w

// nullopt at poles of u
std::optional<FieldElem> rf_eval(const RatFunc& u, FieldElem x0);

// Principal part plus constant term of u at a point, in the local parameter
// t = x - alpha (finite) or t = 1/x (infinity).
struct LocalTail {
    int m;                     // pole order, 0 when regular
    std::vector<FieldElem> c;  // size m+1, c[i] = coefficient of t^(i-m)
};
LocalTail local_tail(const RatFunc& u, FieldElem alpha);
LocalTail local_tail_infinity(const RatFunc& u);

// Additive reduction of a tail: every even-order pole coefficient is cleared
// by subtracting w^2+w terms, leaving only odd orders. The constant term is
// untouched by the reduction.
struct LocalForm {
    int brk;          // largest surviving pole order (odd), 0 when none
    int conductor;    // brk + 1 when ramified, else 0
    FieldElem value;  // the constant term
    std::vector<FieldElem> reduced;  // reduced[d] = coeff of t^(-d) after cleaning
    bool ramified() const { return brk > 0; }
};
LocalForm canonical_local(const LocalTail& t);

// Membership of u in the image of w -> w^2 + w.
//   over_closure: w may live over the algebraic closure
//   otherwise:    w must be rational over the context of u
// The witness satisfies u = witness^2 + witness (its field may be a quadratic
// extension in closure mode).
struct WpResult {
    bool member;
    std::optional<RatFunc> witness;
    std::string blocker;  // which place stopped the descent
};
WpResult wp_member(const RatFunc& u, bool over_closure);

// Membership of a polynomial s in { p^2 + p : deg p <= g }.
// Over the closure only the coefficients above degree g constrain s; over the
// base field the constant term must additionally have trace zero.
struct HResult {
    bool in_closure;
    bool in_base;
    std::optional<Poly> witness;  // present when in_closure
};
HResult h_membership(const Poly& s, int g);

}  // namespace asforge
