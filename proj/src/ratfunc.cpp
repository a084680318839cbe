#include "asforge/ratfunc.hpp"

#include <stdexcept>

namespace asforge {

RatFunc::RatFunc(Poly f, Poly q) {
    if (q.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    const FieldCtx* c =
        (f.ctx() == q.ctx()) ? f.ctx() : ctx_create(lcm_degree(f.ctx()->k, q.ctx()->k));
    f = f.lift(c);
    q = q.lift(c);
    Poly g = poly_gcd(f, q);
    if (g.deg() > 0) {
        f = f / g;
        q = q / g;
    }
    FieldElem il = fe_inv(q.lc());
    num = f.scaled(il);
    den = q.scaled(il);
    if (num.is_zero()) den = Poly::one(c);
}

RatFunc RatFunc::lift(const FieldCtx* target) const {
    return RatFunc(num.lift(target), den.lift(target));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.num, a.den * b.den);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num == b.num && a.den == b.den;  // both are normal forms
}

RatFunc rf_wp(const RatFunc& w) { return w * w + w; }

std::optional<FieldElem> rf_eval(const RatFunc& u, FieldElem x0) {
    FieldElem qv = eval(u.den, x0);
    if (qv.is_zero()) return std::nullopt;
    return eval(u.num, x0) / qv;
}

LocalTail local_tail(const RatFunc& u, FieldElem alpha) {
    const FieldCtx* c = ctx_create(lcm_degree(u.ctx()->k, alpha.ctx->k));
    FieldElem al = embed(alpha, c);
    Poly F = compose_affine(u.num.lift(c), fe_one(c), al);  // f(t + alpha)
    Poly Q = compose_affine(u.den.lift(c), fe_one(c), al);
    int m = 0;
    while (m <= Q.deg() && Q.coeff(m).is_zero()) m++;
    LocalTail t;
    t.m = m;
    t.c.assign(m + 1, fe_zero(c));
    // u = F(t) / (t^m R(t)) with R_j = Q_{m+j}; the series F/R gives the tail
    FieldElem r0inv = fe_inv(Q.coeff(m));
    for (int i = 0; i <= m; i++) {
        FieldElem acc = F.coeff(i);
        for (int j = 1; j <= i; j++) acc = acc + Q.coeff(m + j) * t.c[i - j];
        t.c[i] = acc * r0inv;
    }
    return t;
}

LocalTail local_tail_infinity(const RatFunc& u) {
    const FieldCtx* c = u.ctx();
    int n = u.num.deg(), d = u.den.deg();
    int m = n - d;
    if (u.is_zero() || m < 0) return {0, {fe_zero(c)}};
    LocalTail t;
    t.m = m;
    t.c.assign(m + 1, fe_zero(c));
    // t = 1/x turns u into rev(num)/ (t^? ...) with reversed coefficients; the
    // denominator reversal is monic in t^0 because den is monic in x
    for (int i = 0; i <= m; i++) {
        FieldElem acc = u.num.coeff(n - i);
        for (int j = 1; j <= i; j++) {
            FieldElem rj = (j <= d) ? u.den.coeff(d - j) : fe_zero(c);
            acc = acc + rj * t.c[i - j];
        }
        t.c[i] = acc;
    }
    return t;
}

LocalForm canonical_local(const LocalTail& t) {
    const FieldCtx* c = t.c.at(0).ctx;
    std::vector<FieldElem> a(t.m + 1, fe_zero(c));  // a[d] = coeff of t^(-d)
    for (int d = 0; d <= t.m; d++) a[d] = t.c[t.m - d];
    for (int d = t.m; d >= 2; d--)
        if (d % 2 == 0 && !a[d].is_zero()) {
            a[d / 2] = a[d / 2] + fe_sqrt(a[d]);
            a[d] = fe_zero(c);
        }
    int brk = 0;
    for (int d = t.m; d >= 1; d--)
        if (!a[d].is_zero()) {
            brk = d;
            break;
        }
    if (brk != 0 && brk % 2 == 0) throw std::logic_error("canonical_local: even break");
    LocalForm fm;
    fm.brk = brk;
    fm.conductor = brk ? brk + 1 : 0;
    fm.value = a[0];
    fm.reduced = std::move(a);
    return fm;
}

WpResult wp_member(const RatFunc& u0, bool over_closure) {
    const FieldCtx* base = u0.ctx();
    RatFunc u = u0;
    RatFunc w = RatFunc::zero(base);
    int guard = 4 * (u.num.deg() + u.den.deg()) + 16;
    while (guard-- > 0) {
        int minf = u.num.deg() - u.den.deg();
        if (minf > 0) {
            if (minf % 2)
                return {false, std::nullopt,
                        "pole of odd order " + std::to_string(minf) + " at infinity"};
            FieldElem s = fe_sqrt(u.num.lc() * fe_inv(u.den.lc()));
            RatFunc step = RatFunc::from_poly(Poly::monomial(base, minf / 2, s.v));
            w = w + step;
            u = u + rf_wp(step);
            continue;
        }
        if (u.is_poly()) break;

        auto fac = factor(u.den);
        const Poly* pb = nullptr;
        int m = 0;
        for (auto& [p, mm] : fac.factors) {
            if (mm % 2)
                return {false, std::nullopt,
                        "pole of odd order " + std::to_string(mm) + " at a degree " +
                            std::to_string(p.deg()) + " place"};
            if (mm > m) {
                pb = &p;
                m = mm;
            } else if (mm == m && poly_less(p, *pb)) {
                pb = &p;
            }
        }

        int dp = pb->deg();
        const FieldCtx* split = ctx_create(base->k * dp);
        auto roots = roots_in(*pb, split);
        if ((int)roots.size() != dp) throw std::logic_error("wp_member: factor did not split");
        int e = m / 2;
        Poly pe = poly_pow(pb->lift(split), e);
        Poly numw = Poly::zero(split);
        for (auto& [al, mu] : roots) {
            LocalTail tl = local_tail(u, al);
            if (tl.m != m) throw std::logic_error("wp_member: local order mismatch");
            FieldElem s = fe_sqrt(tl.c[0]);
            Poly lin = Poly::from_coeffs({al, fe_one(split)});  // x - al
            Poly cof = pe;
            for (int i = 0; i < e; i++) cof = cof / lin;
            numw = numw + cof.scaled(s);
        }
        // the summand family is stable under frobenius, so the sum descends
        std::vector<FieldElem> down;
        for (int i = 0; i <= numw.deg(); i++) {
            auto pr = project(numw.coeff(i), base);
            if (!pr) throw std::logic_error("wp_member: orbit sum escaped the base field");
            down.push_back(*pr);
        }
        RatFunc step(Poly::from_coeffs(std::move(down)), poly_pow(*pb, e));
        w = w + step;
        u = u + rf_wp(step);
    }
    if (!u.is_poly() || u.num.deg() > 0) throw std::logic_error("wp_member: descent stalled");

    FieldElem cterm = u.num.coeff(0);
    if (!over_closure) {
        if (trace(cterm)) return {false, std::nullopt, "constant term has trace 1 over the base"};
        auto t0 = solve_as(cterm);
        w = w + RatFunc::from_poly(Poly::from_coeffs({*t0}));
        return {true, w, ""};
    }
    try {
        FieldElem c2 = cterm;
        if (trace(cterm)) c2 = embed(cterm, ctx_create(2 * base->k));
        auto t0 = solve_as(c2);
        if (!t0) throw std::logic_error("wp_member: no solution in the even extension");
        w = w + RatFunc::from_poly(Poly::from_coeffs({*t0}));
        return {true, w, ""};
    } catch (const FieldCapError&) {
        return {true, std::nullopt, ""};
    }
}

HResult h_membership(const Poly& s, int g) {
    if (g < 0) throw std::invalid_argument("h_membership: negative degree bound");
    const FieldCtx* c = s.ctx();
    int n = s.deg();
    std::vector<FieldElem> p(g + 1, fe_zero(c));
    for (int d = 1; d <= g; d++) {
        p[d] = s.coeff(d);
        if (d % 2 == 0) p[d] = p[d] + p[d / 2] * p[d / 2];
    }
    bool ok = true;
    int top = n > 2 * g ? n : 2 * g;  // squares of forced coefficients reach 2g
    for (int d = g + 1; d <= top && ok; d++) {
        FieldElem need = (d % 2 == 0 && d / 2 <= g) ? p[d / 2] * p[d / 2] : fe_zero(c);
        if (!(s.coeff(d) == need)) ok = false;
    }
    HResult r;
    r.in_closure = ok;
    r.in_base = ok && trace(s.coeff(0)) == 0;
    if (!ok) return r;
    try {
        FieldElem c0 = s.coeff(0);
        const FieldCtx* wc = c;
        if (trace(c0)) {
            wc = ctx_create(2 * c->k);
            c0 = embed(c0, wc);
        }
        auto p0 = solve_as(c0);
        if (!p0) throw std::logic_error("h_membership: no solution in the even extension");
        std::vector<FieldElem> wcoef{*p0};
        for (int d = 1; d <= g; d++) wcoef.push_back(embed(p[d], wc));
        r.witness = Poly::from_coeffs(std::move(wcoef));
    } catch (const FieldCapError&) {
        r.witness = std::nullopt;
    }
    return r;
}

}  // namespace asforge
