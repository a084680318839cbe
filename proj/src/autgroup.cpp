#include "asforge/autgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace asforge {

namespace {

int ord2_mod(int m) {
    int r = 1;
    i64 t = 2 % m;
    while (t != 1) {
        t = (t * 2) % m;
        r++;
    }
    return r;
}

// u(m(x)) + u(x) in the image of w^2 + w over the closure, with witness
std::optional<RatFunc> lift_witness(const RatFunc& u, const Moebius& m) {
    const FieldCtx* cc = ctx_create(lcm_degree(u.ctx()->k, m.ctx()->k));
    RatFunc v = u.lift(cc);
    RatFunc diff = pullback(m_lift(m, cc), v) + v;
    WpResult w = wp_member(diff, true);
    if (!w.member) return std::nullopt;
    return w.witness;
}

bool preserves_branch(const Moebius& m, const std::vector<ProjPoint>& pts,
                      const std::vector<int>& brks) {
    for (size_t l = 0; l < pts.size(); l++) {
        ProjPoint img = mapply(m, pts[l]);
        bool hit = false;
        for (size_t t = 0; t < pts.size(); t++)
            if (brks[t] == brks[l] && pts[t] == img) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

// maps sending the first three branch points to some break-matching ordered
// triple and permuting the whole branch set
std::vector<Moebius> candidates_triples(const GeomBranch& gb) {
    int n = (int)gb.pts.size();
    std::array<ProjPoint, 3> from = {gb.pts[0], gb.pts[1], gb.pts[2]};
    std::vector<Moebius> out;
    for (int i = 0; i < n; i++) {
        if (gb.brks[i] != gb.brks[0]) continue;
        for (int j = 0; j < n; j++) {
            if (j == i || gb.brks[j] != gb.brks[1]) continue;
            for (int k = 0; k < n; k++) {
                if (k == i || k == j || gb.brks[k] != gb.brks[2]) continue;
                Moebius m = map_triple(from, {gb.pts[i], gb.pts[j], gb.pts[k]});
                if (preserves_branch(m, gb.pts, gb.brks)) out.push_back(m);
            }
        }
    }
    return out;
}

// sends p -> 0 and q -> infinity
Moebius to_std_two(const ProjPoint& p, const ProjPoint& q) {
    const FieldCtx* c = q.ctx();
    if (p.at_infinity) return Moebius(fe_zero(c), fe_one(c), fe_one(c), q.alpha);
    if (q.at_infinity) return Moebius(fe_one(c), p.alpha, fe_zero(c), fe_one(c));
    return Moebius(fe_one(c), p.alpha, fe_one(c), q.alpha);
}

// sends p -> infinity
Moebius to_inf(const ProjPoint& p) {
    const FieldCtx* c = p.ctx();
    if (p.at_infinity) return Moebius::identity(c);
    return Moebius(fe_zero(c), fe_one(c), fe_one(c), p.alpha);
}

// Support {P, Q}, conjugated to {0, infinity}. Maps fixing both are x -> ax
// with a killing every active odd index of the two reduced tails; maps
// swapping them are x -> c/x with e_d c^d = c_d for every odd d, where e and
// c are the reduced tails at infinity and 0.
void candidates_two(const ASCurve& curve, const GeomBranch& gb, std::vector<Moebius>& out) {
    Moebius S = to_std_two(gb.pts[0], gb.pts[1]);
    Moebius Sinv = minverse(S);
    const FieldCtx* K = ctx_create(lcm_degree(curve.base()->k, S.ctx()->k));
    RatFunc w = pullback(Sinv, curve.u().lift(K));
    const FieldCtx* W = w.ctx();

    LocalForm l0 = canonical_local(local_tail(w, fe_zero(W)));
    LocalForm li = canonical_local(local_tail_infinity(w));
    if (!l0.ramified() || !li.ramified())
        throw std::logic_error("candidates_two: conjugated support is not {0, infinity}");

    int g = 0;
    for (int d = 1; d <= l0.brk; d += 2)
        if (!l0.reduced[d].is_zero()) g = std::gcd(g, d);
    for (int d = 1; d <= li.brk; d += 2)
        if (!li.reduced[d].is_zero()) g = std::gcd(g, d);

    for (FieldElem a : mu_roots(g)) {
        Moebius fix(a, fe_zero(a.ctx), fe_zero(a.ctx), fe_one(a.ctx));
        out.push_back(compose(Sinv, compose(fix, S)));
    }

    if (l0.brk != li.brk) return;
    Poly sys = Poly::zero(W);
    for (int d = 1; d <= l0.brk; d += 2) {
        FieldElem e = li.reduced[d], c0 = l0.reduced[d];
        if (e.is_zero() && c0.is_zero()) continue;
        sys = poly_gcd(sys, Poly::monomial(W, d).scaled(e) + Poly::from_coeffs({c0}));
    }
    if (sys.is_zero()) throw std::logic_error("candidates_two: empty swap system");
    for (FieldElem c : all_roots(sys)) {
        if (c.is_zero()) continue;
        Moebius swp(fe_zero(c.ctx), c, fe_one(c.ctx), fe_zero(c.ctx));
        out.push_back(compose(Sinv, compose(swp, S)));
    }
}

// Support {P}, conjugated to infinity. Over the closure u is then equivalent
// to its reduced tail P(x), an odd polynomial of degree 2g+1. Candidates
// x -> ax + b need a^(2g+1) = 1, and for each such a the membership
// conditions on P(ax+b) + P(x) are polynomials in b; b runs over the common
// roots.
void candidates_one(const ASCurve& curve, const GeomBranch& gb, std::vector<Moebius>& out) {
    Moebius S = to_inf(gb.pts[0]);
    Moebius Sinv = minverse(S);
    const FieldCtx* K = ctx_create(lcm_degree(curve.base()->k, S.ctx()->k));
    RatFunc w = pullback(Sinv, curve.u().lift(K));
    const FieldCtx* W = w.ctx();

    LocalForm li = canonical_local(local_tail_infinity(w));
    int m = li.brk;
    if (m < 3) throw std::logic_error("candidates_one: break too small for genus >= 1");
    std::vector<FieldElem> pc(m + 1, fe_zero(W));
    for (int d = 1; d <= m; d++) pc[d] = li.reduced[d];
    Poly P = Poly::from_coeffs(pc);
    int gp = m / 2;

    for (FieldElem a : mu_roots(m)) {
        const FieldCtx* L = ctx_create(lcm_degree(W->k, a.ctx->k));
        FieldElem al = embed(a, L);

        // s_d as a polynomial in b: coefficient of b^(i-d) is binom(i,d) P_i a^d,
        // plus P_d in degree 0
        auto s_poly = [&](int d) {
            std::vector<FieldElem> cs(m - d + 1, fe_zero(L));
            FieldElem ad = fe_pow(al, d);
            for (int i = d; i <= m; i++)
                if (binom_mod2(i, d)) cs[i - d] = embed(P.coeff(i), L) * ad;
            cs[0] = cs[0] + embed(P.coeff(d), L);
            return Poly::from_coeffs(cs);
        };

        std::vector<Poly> wit(gp + 1, Poly::zero(L));
        for (int d = 1; d <= gp; d++) {
            wit[d] = s_poly(d);
            if (d % 2 == 0) wit[d] = wit[d] + wit[d / 2] * wit[d / 2];
        }
        Poly sys = Poly::zero(L);
        bool forced_empty = false;
        for (int d = gp + 1; d <= m; d++) {
            Poly cond = s_poly(d);
            if (d % 2 == 0) cond = cond + wit[d / 2] * wit[d / 2];
            if (cond.is_zero()) continue;
            if (cond.deg() == 0) {
                forced_empty = true;
                break;
            }
            sys = poly_gcd(sys, cond);
        }
        if (forced_empty) continue;
        if (sys.is_zero()) throw std::logic_error("candidates_one: unconstrained translation family");
        for (FieldElem b : all_roots(sys)) {
            Moebius aff(embed(al, b.ctx), b, fe_zero(b.ctx), fe_one(b.ctx));
            out.push_back(compose(Sinv, compose(aff, S)));
        }
    }
}

}  // namespace

std::vector<FieldElem> mu_roots(int m) {
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("mu_roots: m must be odd and positive");
    const FieldCtx* f2 = ctx_create(1);
    if (m == 1) return {fe_one(f2)};
    Poly xm1 = Poly::monomial(f2, m) + Poly::one(f2);
    auto rs = roots_in(xm1, ctx_create(ord2_mod(m)));
    std::vector<FieldElem> out;
    out.reserve(rs.size());
    for (auto& [r, mult] : rs) out.push_back(r);
    return out;
}

std::vector<FieldElem> all_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("all_roots: zero polynomial");
    std::vector<FieldElem> out;
    if (p.deg() < 1) return out;
    Factorization fac = factor(p);
    for (auto& [f, mult] : fac.factors) {
        const FieldCtx* k = ctx_create(p.ctx()->k * f.deg());
        for (auto& [r, rmult] : roots_in(f, k)) out.push_back(r);
    }
    std::sort(out.begin(), out.end(), [](FieldElem a, FieldElem b) {
        if (a.ctx->k != b.ctx->k) return a.ctx->k < b.ctx->k;
        return a.v < b.v;
    });
    return out;
}

AutReport aut_group(const ASCurve& curve) {
    if (curve.genus() == 0)
        throw std::invalid_argument("aut_group: genus 0, the reduced group is infinite");

    GeomBranch gb = geometric_branch(curve);
    int n = (int)gb.pts.size();
    std::vector<Moebius> cand;
    if (n >= 3)
        cand = candidates_triples(gb);
    else if (n == 2)
        candidates_two(curve, gb, cand);
    else
        candidates_one(curve, gb, cand);

    std::vector<char> ok(cand.size(), 0);
    std::vector<std::optional<RatFunc>> wit(cand.size());
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (i64 i = 0; i < (i64)cand.size(); i++) {
        try {
            auto w = lift_witness(curve.u(), cand[i]);
            if (w) {
                ok[i] = 1;
                wit[i] = std::move(w);
            }
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);

    int nk = curve.base()->k;
    for (size_t i = 0; i < cand.size(); i++)
        if (ok[i]) nk = lcm_degree(nk, cand[i].ctx()->k);
    const FieldCtx* F = ctx_create(nk);

    std::vector<ReducedAut> red;
    for (size_t i = 0; i < cand.size(); i++)
        if (ok[i]) red.push_back({m_lift(cand[i], F), *wit[i]});
    std::sort(red.begin(), red.end(),
              [](const ReducedAut& a, const ReducedAut& b) { return mo_less(a.m, b.m); });
    red.erase(std::unique(red.begin(), red.end(),
                          [](const ReducedAut& a, const ReducedAut& b) { return a.m == b.m; }),
              red.end());

    auto pos = std::find_if(red.begin(), red.end(),
                            [](const ReducedAut& r) { return r.m.is_identity(); });
    if (pos == red.end()) throw std::logic_error("aut_group: identity not recovered");
    std::rotate(red.begin(), pos, pos + 1);

    auto member = [&](const Moebius& m) {
        for (auto& r : red)
            if (r.m == m) return true;
        return false;
    };
    for (auto& r : red) {
        if (!member(m_lift(minverse(r.m), F))) throw std::logic_error("aut_group: inverse escaped");
        if (!member(m_lift(m_frobenius(r.m, curve.base()->k), F)))
            throw std::logic_error("aut_group: set not Frobenius stable");
        for (auto& s : red)
            if (!member(m_lift(compose(r.m, s.m), F)))
                throw std::logic_error("aut_group: set not closed under composition");
    }

    return {F, std::move(red)};
}

namespace {

std::vector<Moebius> brute_core(const ASCurve& curve, int N, bool parallel) {
    if (N < 1 || N > 6) throw std::invalid_argument("brute_force_aut: N must be in 1..6");
    const FieldCtx* F = ctx_create(N);
    const FieldCtx* L = ctx_create(lcm_degree(curve.base()->k, N));
    RatFunc u = curve.u().lift(L);

    GeomBranch gb = geometric_branch(curve);
    const FieldCtx* M = ctx_create(lcm_degree(L->k, gb.field->k));
    std::vector<ProjPoint> pts;
    pts.reserve(gb.pts.size());
    for (auto& p : gb.pts) pts.push_back(pp_lift(p, M));

    u64 q = 1ull << N;
    i64 total = (i64)(q * q * q + q * q);  // (1,b,c,d) block then (0,1,c,d) block
    std::vector<char> keep((size_t)total, 0);
    std::exception_ptr err;

#pragma omp parallel for schedule(dynamic, 1024) if (parallel)
    for (i64 idx = 0; idx < total; idx++) {
        try {
            u64 b, c, d, a;
            if (idx < (i64)(q * q * q)) {
                a = 1;
                b = (u64)idx % q;
                c = ((u64)idx / q) % q;
                d = (u64)idx / (q * q);
                if (d == (fe(F, b) * fe(F, c)).v) continue;
            } else {
                u64 r = (u64)idx - q * q * q;
                a = 0;
                b = 1;
                c = r % q;
                d = r / q;
                if (c == 0) continue;
            }
            Moebius m(fe(F, a), fe(F, b), fe(F, c), fe(F, d));
            if (!preserves_branch(m_lift(m, M), pts, gb.brks)) continue;
            RatFunc diff = pullback(m, u) + u;
            if (wp_member(diff, true).member) keep[(size_t)idx] = 1;
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);

    std::vector<Moebius> out;
    for (i64 idx = 0; idx < total; idx++) {
        if (!keep[(size_t)idx]) continue;
        u64 b, c, d, a;
        if (idx < (i64)(q * q * q)) {
            a = 1, b = (u64)idx % q, c = ((u64)idx / q) % q, d = (u64)idx / (q * q);
        } else {
            u64 r = (u64)idx - q * q * q;
            a = 0, b = 1, c = r % q, d = r / q;
        }
        out.push_back(Moebius(fe(F, a), fe(F, b), fe(F, c), fe(F, d)));
    }
    return out;
}

}  // namespace

std::vector<Moebius> brute_force_aut(const ASCurve& curve, int N) {
    return brute_core(curve, N, true);
}

std::vector<Moebius> brute_force_aut_serial(const ASCurve& curve, int N) {
    return brute_core(curve, N, false);
}

bool binom_identity_sweep(int gmax) {
    for (int g = 2; g <= gmax; g++)
        for (u64 n = 0; 2 * n <= (u64)(2 * g - 3); n++)
            if (binom_mod2((u64)(2 * g - 3), 2 * n) != binom_mod2((u64)(g - 2), n)) return false;
    return true;
}

bool lemma4_predicate(int g, const Poly& p) {
    if (g != 4 && g < 7) throw std::invalid_argument("lemma4_predicate: g must be 4 or >= 7");
    if (p.ctx()->k != 1) throw std::invalid_argument("lemma4_predicate: p must be over F2");
    if (p.deg() > 2 * g - 6) throw std::invalid_argument("lemma4_predicate: deg p > 2g - 6");
    if (g % 4 == 0 || g % 4 == 1) return true;

    const FieldCtx* f2 = p.ctx();
    FieldElem one = fe_one(f2);
    if (g % 4 == 2) {
        // the sole candidate is x -> x + 1, which lifts iff the shift of f
        // falls in the witness space
        Poly shift = compose_affine(p, one, one) + p;
        Poly xg = Poly::monomial(f2, 2 * g - 3);
        Poly gamma = Poly::from_bits(f2, 0b10101) * (compose_affine(xg, one, one) + xg);
        // for every g >= 10 in range the pinned top coefficients of a witness
        // for gamma contradict its low part, so gamma is never in the space
        if (h_membership(gamma, g).in_closure)
            throw std::logic_error("lemma4_predicate: gamma fell into the witness space");
        return !h_membership(shift + gamma, g).in_closure;
    }

    // g = 3 mod 4: the surviving candidates are x -> w^2 x + w and its
    // inverse, w a primitive cube root of unity, subject to a^{2g+1} = 1
    if ((2 * g + 1) % 3 != 0) return true;
    const FieldCtx* f4 = ctx_create(2);
    FieldElem w = fe_gen(f4);
    Poly f = Poly::monomial(f2, 2 * g + 1) + Poly::monomial(f2, 2 * g - 1) +
             Poly::monomial(f2, 2 * g - 3) + p;
    Poly fl = f.lift(f4);
    Poly shift = compose_affine(fl, w * w, w) + fl;
    return !h_membership(shift, g).in_closure;
}

}  // namespace asforge
