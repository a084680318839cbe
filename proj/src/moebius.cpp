#include "asforge/moebius.hpp"

#include <stdexcept>

namespace asforge {

namespace {

const FieldCtx* common4(FieldElem a, FieldElem b, FieldElem c, FieldElem d) {
    int k = lcm_degree(lcm_degree(a.ctx->k, b.ctx->k), lcm_degree(c.ctx->k, d.ctx->k));
    return ctx_create(k);
}

}  // namespace

Moebius::Moebius(FieldElem a_, FieldElem b_, FieldElem c_, FieldElem d_)
    : a(a_), b(b_), c(c_), d(d_) {
    const FieldCtx* cc = common4(a, b, c, d);
    a = embed(a, cc);
    b = embed(b, cc);
    c = embed(c, cc);
    d = embed(d, cc);
    if ((a * d + b * c).is_zero()) throw std::invalid_argument("Moebius: singular matrix");
    FieldElem lead = !a.is_zero() ? a : (!b.is_zero() ? b : (!c.is_zero() ? c : d));
    FieldElem il = fe_inv(lead);
    a = a * il;
    b = b * il;
    c = c * il;
    d = d * il;
}

Moebius Moebius::identity(const FieldCtx* c) {
    return Moebius(fe_one(c), fe_zero(c), fe_zero(c), fe_one(c));
}

bool Moebius::is_identity() const {
    return a.is_one() && b.is_zero() && c.is_zero() && d.is_one();
}

bool operator==(const Moebius& m, const Moebius& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
}

Moebius compose(const Moebius& m, const Moebius& n) {
    return Moebius(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                   m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
}

Moebius minverse(const Moebius& m) { return Moebius(m.d, m.b, m.c, m.a); }

Moebius m_frobenius(const Moebius& m, int n) {
    return Moebius(frobenius(m.a, n), frobenius(m.b, n), frobenius(m.c, n),
                   frobenius(m.d, n));
}

Moebius m_lift(const Moebius& m, const FieldCtx* target) {
    return Moebius(embed(m.a, target), embed(m.b, target), embed(m.c, target),
                   embed(m.d, target));
}

bool mo_less(const Moebius& m, const Moebius& n) {
    if (m.ctx() != n.ctx()) throw std::invalid_argument("mo_less: different contexts");
    if (m.a.v != n.a.v) return m.a.v < n.a.v;
    if (m.b.v != n.b.v) return m.b.v < n.b.v;
    if (m.c.v != n.c.v) return m.c.v < n.c.v;
    return m.d.v < n.d.v;
}

bool operator==(const ProjPoint& p, const ProjPoint& q) {
    if (p.at_infinity != q.at_infinity) return false;
    if (p.at_infinity) return true;
    return p.alpha == q.alpha;
}

bool pp_less(const ProjPoint& p, const ProjPoint& q) {
    if (p.at_infinity != q.at_infinity) return p.at_infinity;
    if (p.at_infinity) return false;
    return fe_less(p.alpha, q.alpha);
}

ProjPoint pp_lift(const ProjPoint& p, const FieldCtx* target) {
    return {p.at_infinity, embed(p.alpha, target)};
}

ProjPoint pp_frobenius(const ProjPoint& p, int n) {
    return {p.at_infinity, frobenius(p.alpha, n)};
}

ProjPoint mapply(const Moebius& m, const ProjPoint& p) {
    if (p.at_infinity) {
        if (m.c.is_zero()) return ProjPoint::inf(m.ctx());
        return ProjPoint::fin(m.a / m.c);
    }
    FieldElem den = m.c * p.alpha + m.d;
    if (den.is_zero()) return ProjPoint::inf(den.ctx);
    return ProjPoint::fin((m.a * p.alpha + m.b) / den);
}

RatFunc pullback(const Moebius& m, const RatFunc& u) {
    const FieldCtx* cc = ctx_create(lcm_degree(m.ctx()->k, u.ctx()->k));
    Poly f = u.num.lift(cc), q = u.den.lift(cc);
    Poly pn = Poly::from_coeffs({embed(m.b, cc), embed(m.a, cc)});  // a x + b
    Poly pd = Poly::from_coeffs({embed(m.d, cc), embed(m.c, cc)});  // c x + d
    int M = std::max(f.deg(), q.deg());
    auto homog = [&](const Poly& p) {
        Poly acc = Poly::zero(cc);
        for (int i = 0; i <= p.deg(); i++) {
            if (p.coeff(i).is_zero()) continue;
            Poly term = poly_pow(pn, i) * poly_pow(pd, M - i);
            acc = acc + term.scaled(p.coeff(i));
        }
        return acc;
    };
    return RatFunc(homog(f), homog(q));
}

Moebius map_triple(const std::array<ProjPoint, 3>& from, const std::array<ProjPoint, 3>& to) {
    auto distinct = [](const std::array<ProjPoint, 3>& t) {
        return t[0] != t[1] && t[0] != t[2] && t[1] != t[2];
    };
    if (!distinct(from) || !distinct(to))
        throw std::invalid_argument("map_triple: points not pairwise distinct");

    // the map sending (p1, p2, p3) to (0, 1, infinity)
    auto to_std = [](const std::array<ProjPoint, 3>& t) {
        int kk = 1;
        for (auto& p : t) kk = lcm_degree(kk, p.ctx()->k);
        const FieldCtx* c = ctx_create(kk);
        ProjPoint p1 = pp_lift(t[0], c), p2 = pp_lift(t[1], c), p3 = pp_lift(t[2], c);
        FieldElem one = fe_one(c), zero = fe_zero(c);
        if (p1.at_infinity) return Moebius(zero, p2.alpha + p3.alpha, one, p3.alpha);
        if (p2.at_infinity) return Moebius(one, p1.alpha, one, p3.alpha);
        if (p3.at_infinity) return Moebius(one, p1.alpha, zero, p2.alpha + p1.alpha);
        return Moebius(p2.alpha + p3.alpha, p1.alpha * (p2.alpha + p3.alpha),
                       p2.alpha + p1.alpha, p3.alpha * (p2.alpha + p1.alpha));
    };
    return compose(minverse(to_std(to)), to_std(from));
}

}  // namespace asforge
