#pragma once

#include <array>

#include "asforge/ratfunc.hpp"

namespace asforge {

// Fractional linear map x -> (a x + b) / (c x + d) with ad + bc != 0.
// Entries are scaled so the first nonzero of (a, b, c, d) is 1, giving one
// canonical matrix per PGL2 class.
struct Moebius {
    FieldElem a, b, c, d;

    Moebius(FieldElem a_, FieldElem b_, FieldElem c_, FieldElem d_);
    static Moebius identity(const FieldCtx* c);

    const FieldCtx* ctx() const { return a.ctx; }
    bool is_identity() const;
};

bool operator==(const Moebius& m, const Moebius& n);
inline bool operator!=(const Moebius& m, const Moebius& n) { return !(m == n); }

Moebius compose(const Moebius& m, const Moebius& n);  // x -> m(n(x))
Moebius minverse(const Moebius& m);
Moebius m_frobenius(const Moebius& m, int n = 1);
Moebius m_lift(const Moebius& m, const FieldCtx* target);

// total order for maps over one context
bool mo_less(const Moebius& m, const Moebius& n);

struct ProjPoint {
    bool at_infinity;
    FieldElem alpha;

    static ProjPoint inf(const FieldCtx* c) { return {true, fe_zero(c)}; }
    static ProjPoint fin(FieldElem a) { return {false, a}; }
    const FieldCtx* ctx() const { return alpha.ctx; }
};

bool operator==(const ProjPoint& p, const ProjPoint& q);
inline bool operator!=(const ProjPoint& p, const ProjPoint& q) { return !(p == q); }
bool pp_less(const ProjPoint& p, const ProjPoint& q);  // infinity first, then fe_less
ProjPoint pp_lift(const ProjPoint& p, const FieldCtx* target);
ProjPoint pp_frobenius(const ProjPoint& p, int n = 1);

ProjPoint mapply(const Moebius& m, const ProjPoint& p);

// u(m(x)) as a rational function
RatFunc pullback(const Moebius& m, const RatFunc& u);

// the unique map with from[i] -> to[i]; the points in each triple must be
// pairwise distinct
Moebius map_triple(const std::array<ProjPoint, 3>& from, const std::array<ProjPoint, 3>& to);

}  // namespace asforge
