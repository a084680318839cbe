#include "asforge/curve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace asforge {

ASCurve::ASCurve(RatFunc u) : u_(std::move(u)) {
    const FieldCtx* b = u_.ctx();
    LocalForm inf = canonical_local(local_tail_infinity(u_));
    if (inf.ramified()) branch_.push_back({true, Poly::zero(b), 1, inf.brk, inf.conductor});
    if (!u_.is_poly()) {
        auto fac = factor(u_.den);
        for (auto& [p, m] : fac.factors) {
            (void)m;
            const FieldCtx* split = ctx_create(b->k * p.deg());
            auto roots = roots_in(p, split);
            if (roots.empty()) throw std::logic_error("ASCurve: factor with no root");
            // breaks are galois-stable, one root decides the whole place
            LocalForm lf = canonical_local(local_tail(u_, roots.front().first));
            if (lf.ramified()) branch_.push_back({false, p, p.deg(), lf.brk, lf.conductor});
        }
    }
    std::sort(branch_.begin(), branch_.end(), [](const BranchEntry& x, const BranchEntry& y) {
        if (x.at_infinity != y.at_infinity) return x.at_infinity;
        if (x.place_degree != y.place_degree) return x.place_degree < y.place_degree;
        return poly_less(x.minpoly, y.minpoly);
    });
    if (branch_.empty()) throw DegenerateCurve();
}

int branch_divisor_degree(const std::vector<BranchEntry>& branch) {
    int d = 0;
    for (auto& b : branch) d += b.conductor * b.place_degree;
    return d;
}

int ASCurve::genus() const {
    int d = branch_divisor_degree(branch_);
    if (d % 2) throw std::logic_error("ASCurve: odd branch divisor degree");
    return (d - 2) / 2;
}

int ASCurve::two_rank_ds() const {
    int s = 0;
    for (auto& b : branch_) s += b.place_degree;
    return s - 1;
}

namespace {

u64 points_above(const RatFunc& ul, const FieldCtx* c, u64 v) {
    FieldElem x0 = fe(c, v);
    FieldElem dv = eval(ul.den, x0);
    if (!dv.is_zero()) {
        FieldElem val = eval(ul.num, x0) / dv;
        return trace(val) == 0 ? 2 : 0;
    }
    LocalForm lf = canonical_local(local_tail(ul, x0));
    if (lf.ramified()) return 1;
    return trace(lf.value) == 0 ? 2 : 0;
}

u64 points_above_infinity(const RatFunc& ul) {
    LocalForm lf = canonical_local(local_tail_infinity(ul));
    if (lf.ramified()) return 1;
    return trace(lf.value) == 0 ? 2 : 0;
}

}  // namespace

u64 ASCurve::count_points_serial(int n) const {
    if (base()->k != 1) throw std::invalid_argument("count_points: base field must be F2");
    if (n < 1 || n > 32) throw BudgetExhausted("count_points: extension degree out of range");
    const FieldCtx* c = ctx_create(n);
    RatFunc ul = u_.lift(c);
    u64 cnt = points_above_infinity(ul);
    for (u64 v = 0; v <= c->mask; v++) cnt += points_above(ul, c, v);
    return cnt;
}

u64 ASCurve::count_points(int n) const {
    if (base()->k != 1) throw std::invalid_argument("count_points: base field must be F2");
    if (n < 1 || n > 32) throw BudgetExhausted("count_points: extension degree out of range");
    const FieldCtx* c = ctx_create(n);
    RatFunc ul = u_.lift(c);
    u64 cnt = points_above_infinity(ul);
    i64 last = (i64)c->mask;
#pragma omp parallel for reduction(+ : cnt) schedule(static)
    for (i64 v = 0; v <= last; v++) cnt += points_above(ul, c, (u64)v);
    return cnt;
}

std::vector<i64> ASCurve::l_polynomial() const {
    int g = genus();
    std::vector<i128> P(g + 1, 0), a(2 * g + 1, 0);
    a[0] = 1;
    for (int k = 1; k <= g; k++) {
        u64 nk = count_points(k);
        P[k] = (((i128)1 << k) + 1) - (i128)nk;
        if (P[k] * P[k] > (i128)4 * g * g * ((i128)1 << k))
            throw std::logic_error("l_polynomial: count violates the weil bound");
    }
    for (int k = 1; k <= g; k++) {
        i128 s = 0;
        for (int j = 1; j <= k; j++) s += P[j] * a[k - j];
        s = -s;
        if (s % k != 0) throw std::logic_error("l_polynomial: non-integral newton step");
        a[k] = s / k;
    }
    for (int k = 0; k < g; k++) a[2 * g - k] = ((i128)1 << (g - k)) * a[k];

    // one more count than the coefficients need, as an independent check
    i128 pred = (g + 1 <= 2 * g) ? (i128)(g + 1) * a[g + 1] : 0;
    for (int j = 1; j <= g; j++) pred += P[j] * a[g + 1 - j];
    pred = -pred;
    u64 ng1 = count_points(g + 1);
    if (pred != (((i128)1 << (g + 1)) + 1) - (i128)ng1)
        throw std::logic_error("l_polynomial: prediction disagrees with the extra count");

    i128 h = 0;
    for (auto& v : a) h += v;
    if (h <= 0) throw std::logic_error("l_polynomial: nonpositive class number");

    std::vector<i64> out(2 * g + 1);
    for (int k = 0; k <= 2 * g; k++) {
        if (a[k] > (i128)INT64_MAX || a[k] < (i128)INT64_MIN)
            throw std::logic_error("l_polynomial: coefficient overflow");
        out[k] = (i64)a[k];
    }
    return out;
}

int ASCurve::two_rank_lpoly() const {
    auto L = l_polynomial();
    int r = 0;
    for (int k = 0; k < (int)L.size(); k++)
        if (L[k] % 2 != 0) r = k;
    return r;
}

GeomBranch geometric_branch(const ASCurve& curve) {
    const FieldCtx* b = curve.base();
    int kk = b->k;
    for (auto& e : curve.branch())
        if (!e.at_infinity) kk = lcm_degree(kk, b->k * e.place_degree);
    const FieldCtx* c = ctx_create(kk);
    GeomBranch gb;
    gb.field = c;
    for (auto& e : curve.branch()) {
        if (e.at_infinity) {
            gb.pts.push_back(ProjPoint::inf(c));
            gb.brks.push_back(e.brk);
            continue;
        }
        auto roots = roots_in(e.minpoly, c);
        if ((int)roots.size() != e.place_degree)
            throw std::logic_error("geometric_branch: place did not split");
        for (auto& [r, m] : roots) {
            (void)m;
            gb.pts.push_back(ProjPoint::fin(r));
            gb.brks.push_back(e.brk);
        }
    }
    std::vector<size_t> idx(gb.pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](size_t i, size_t j) { return pp_less(gb.pts[i], gb.pts[j]); });
    GeomBranch sorted;
    sorted.field = c;
    for (size_t i : idx) {
        sorted.pts.push_back(gb.pts[i]);
        sorted.brks.push_back(gb.brks[i]);
    }
    return sorted;
}

}  // namespace asforge
