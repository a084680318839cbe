#include "asforge/poly.hpp"

#include <algorithm>
#include <random>

#include "asforge/gf2x.hpp"

namespace asforge {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly::Poly(const FieldCtx* c, std::vector<u64> coeffs) : ctx_(c), c_(std::move(coeffs)) {
    if (!ctx_) throw std::invalid_argument("Poly: null context");
    trim();
}

Poly Poly::monomial(const FieldCtx* c, int d, u64 coeff) {
    std::vector<u64> v(d + 1, 0);
    v[d] = coeff;
    return Poly(c, std::move(v));
}

Poly Poly::from_coeffs(std::vector<FieldElem> cs) {
    if (cs.empty()) throw std::invalid_argument("from_coeffs: empty");
    const FieldCtx* c = cs[0].ctx;
    for (auto& e : cs) c = ctx_create(lcm_degree(c->k, e.ctx->k));
    std::vector<u64> v;
    v.reserve(cs.size());
    for (auto& e : cs) v.push_back(embed(e, c).v);
    return Poly(c, std::move(v));
}

Poly Poly::from_bits(const FieldCtx* c, u128 bits) {
    std::vector<u64> v;
    for (u128 b = bits; b; b >>= 1) v.push_back((u64)(b & 1));
    return Poly(c, std::move(v));
}

u128 Poly::bits() const {
    u128 r = 0;
    for (int i = 0; i <= deg(); i++) {
        if (c_[i] > 1) throw std::domain_error("Poly::bits: coefficients not in F2");
        if (c_[i]) r |= (u128)1 << i;
    }
    return r;
}

Poly Poly::lift(const FieldCtx* target) const {
    if (target == ctx_) return *this;
    std::vector<u64> v(c_.size());
    for (size_t i = 0; i < c_.size(); i++) v[i] = embed(fe(ctx_, c_[i]), target).v;
    return Poly(target, std::move(v));
}

namespace {
const FieldCtx* common_ctx(const Poly& a, const Poly& b) {
    if (a.ctx() == b.ctx()) return a.ctx();
    return ctx_create(lcm_degree(a.ctx()->k, b.ctx()->k));
}
}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
    const FieldCtx* c = common_ctx(a, b);
    Poly x = a.lift(c), y = b.lift(c);
    std::vector<u64> v(std::max(x.c_.size(), y.c_.size()), 0);
    for (size_t i = 0; i < x.c_.size(); i++) v[i] ^= x.c_[i];
    for (size_t i = 0; i < y.c_.size(); i++) v[i] ^= y.c_[i];
    return Poly(c, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(common_ctx(a, b));
    const FieldCtx* c = common_ctx(a, b);
    Poly x = a.lift(c), y = b.lift(c);
    std::vector<u64> v(x.c_.size() + y.c_.size() - 1, 0);
    for (size_t i = 0; i < x.c_.size(); i++) {
        if (!x.c_[i]) continue;
        FieldElem xi = fe(c, x.c_[i]);
        for (size_t j = 0; j < y.c_.size(); j++)
            if (y.c_[j]) v[i + j] ^= (xi * fe(c, y.c_[j])).v;
    }
    return Poly(c, std::move(v));
}

bool operator==(const Poly& a, const Poly& b) {
    const FieldCtx* c = common_ctx(a, b);
    return a.lift(c).c_ == b.lift(c).c_;
}

Poly Poly::scaled(FieldElem s) const {
    std::vector<FieldElem> cs;
    if (is_zero()) return Poly::zero(ctx_create(lcm_degree(ctx_->k, s.ctx->k)));
    for (int i = 0; i <= deg(); i++) cs.push_back(coeff(i) * s);
    return Poly::from_coeffs(std::move(cs));
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("divrem by zero polynomial");
    const FieldCtx* c = common_ctx(a, b);
    Poly r = a.lift(c), d = b.lift(c);
    if (r.deg() < d.deg()) return {Poly::zero(c), r};
    FieldElem inv_lc = fe_inv(d.lc());
    std::vector<u64> q(r.deg() - d.deg() + 1, 0);
    while (!r.is_zero() && r.deg() >= d.deg()) {
        int shift = r.deg() - d.deg();
        FieldElem coef = r.lc() * inv_lc;
        q[shift] = coef.v;
        r = r + Poly::monomial(c, shift, coef.v) * d;
    }
    return {Poly(c, std::move(q)), r};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly poly_gcd(Poly a, Poly b) {
    const FieldCtx* c = common_ctx(a, b);
    a = a.lift(c);
    b = b.lift(c);
    while (!b.is_zero()) {
        Poly r = a % b;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.scaled(fe_inv(a.lc()));
}

Poly derivative(const Poly& a) {
    if (a.deg() < 1) return Poly::zero(a.ctx());
    std::vector<u64> v(a.deg(), 0);
    for (int i = 1; i <= a.deg(); i += 2) v[i - 1] = a.coeff(i).v;  // even i drop in char 2
    return Poly(a.ctx(), std::move(v));
}

Poly poly_pow(Poly base, u64 e) {
    Poly r = Poly::one(base.ctx());
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Poly poly_powmod(Poly base, u128 e, const Poly& m) {
    Poly r = Poly::one(base.ctx());
    base = base % m;
    while (e) {
        if (e & 1) r = (r * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return r;
}

FieldElem eval(const Poly& f, FieldElem x0) {
    const FieldCtx* c = ctx_create(lcm_degree(f.ctx()->k, x0.ctx->k));
    FieldElem x = embed(x0, c);
    FieldElem r = fe_zero(c);
    for (int i = f.deg(); i >= 0; i--) r = r * x + embed(f.coeff(i), c);
    return r;
}

Poly compose_affine(const Poly& f, FieldElem a, FieldElem b) {
    const FieldCtx* c = ctx_create(
        lcm_degree(f.ctx()->k, lcm_degree(a.ctx->k, b.ctx->k)));
    Poly lin = Poly::from_coeffs({embed(b, c), embed(a, c)});
    Poly r = Poly::zero(c);
    for (int i = f.deg(); i >= 0; i--)
        r = r * lin + Poly(c, {embed(f.coeff(i), c).v});
    return r;
}

Poly poly_sqrt(const Poly& f) {
    if (f.is_zero()) return f;
    std::vector<u64> v(f.deg() / 2 + 1, 0);
    for (int i = 0; i <= f.deg(); i++) {
        if (i % 2 == 1) {
            if (f.coeff(i).v) throw std::domain_error("poly_sqrt: odd coefficient present");
            continue;
        }
        v[i / 2] = fe_sqrt(f.coeff(i)).v;
    }
    return Poly(f.ctx(), std::move(v));
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; i--)
        if (a.coeff(i).v != b.coeff(i).v) return a.coeff(i).v < b.coeff(i).v;
    return false;
}

// ---- factorization --------------------------------------------------------

namespace {

u64 poly_hash(const Poly& p) {
    u64 h = 0x9e3779b97f4a7c15ull ^ (u64)p.ctx()->k;
    for (int i = 0; i <= p.deg(); i++) h = splitmix64(h ^ p.coeff(i).v);
    return h;
}

// squarefree decomposition, char 2
void sff(const Poly& f, int outer_mult, std::vector<std::pair<Poly, int>>& out) {
    Poly d = derivative(f);
    if (d.is_zero()) {
        // f = h(x)^2
        if (f.deg() == 0) return;
        sff(poly_sqrt(f), 2 * outer_mult, out);
        return;
    }
    Poly c = poly_gcd(f, d);
    Poly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        Poly y = poly_gcd(w, c);
        Poly z = w / y;
        if (z.deg() > 0) out.push_back({z, i * outer_mult});
        i++;
        w = y;
        c = c / y;
    }
    if (c.deg() > 0) sff(poly_sqrt(c), 2 * outer_mult, out);
}

Poly random_poly(const FieldCtx* c, int max_deg, std::mt19937_64& rng) {
    std::vector<u64> v(max_deg + 1);
    for (auto& e : v) e = rng() & c->mask;
    return Poly(c, std::move(v));
}

// equal-degree splitting by the F2-trace map; f squarefree, all factors of degree d
void edf(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.deg() == d) {
        out.push_back(f);
        return;
    }
    const FieldCtx* c = f.ctx();
    int m = c->k * d;
    for (;;) {
        Poly u = random_poly(c, f.deg() - 1, rng);
        if (u.deg() < 1) continue;
        Poly t = u;
        Poly acc = u;
        for (int i = 1; i < m; i++) {
            t = (t * t) % f;
            acc = acc + t;
        }
        Poly g = poly_gcd(f, acc);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            edf(g, d, rng, out);
            edf(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace

Factorization factor(const Poly& p, u64 seed) {
    if (p.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    Factorization res;
    res.lead = p.lc();
    if (p.deg() == 0) return res;
    Poly f = p.scaled(fe_inv(p.lc()));
    std::mt19937_64 rng(splitmix64(seed ^ poly_hash(p)));

    std::vector<std::pair<Poly, int>> sq;
    sff(f, 1, sq);
    const FieldCtx* c = f.ctx();
    for (auto& [part, mult] : sq) {
        // distinct-degree, then equal-degree on each slice
        Poly g = part;
        Poly h = Poly::x(c) % g;
        int d = 0;
        while (g.deg() > 0 && 2 * (d + 1) <= g.deg()) {
            d++;
            for (int i = 0; i < c->k; i++) h = (h * h) % g;
            Poly split = poly_gcd(g, h + Poly::x(c));
            if (split.deg() > 0) {
                std::vector<Poly> irr;
                edf(split, d, rng, irr);
                for (auto& q : irr) res.factors.push_back({q, mult});
                g = g / split;
                h = h % g;
            }
        }
        if (g.deg() > 0) res.factors.push_back({g, mult});
    }
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return res;
}

std::vector<std::pair<FieldElem, int>> roots_in(const Poly& p, const FieldCtx* target,
                                                u64 seed) {
    if (p.is_zero()) throw std::invalid_argument("roots_in: zero polynomial");
    if (target->k % p.ctx()->k != 0)
        throw std::invalid_argument("roots_in: target degree not divisible by source degree");
    Poly f = p.lift(target);
    if (f.deg() < 1) return {};
    std::mt19937_64 rng(splitmix64(seed ^ poly_hash(p) ^ (u64)target->k));

    // product of the distinct linear factors over the target field
    Poly xq = Poly::x(target);  // becomes x^(2^k) mod f
    for (int i = 0; i < target->k; i++) xq = (xq * xq) % f;
    Poly lin = poly_gcd(f, xq + Poly::x(target));

    std::vector<Poly> linear_factors;
    if (lin.deg() >= 1) edf(lin, 1, rng, linear_factors);

    std::vector<std::pair<FieldElem, int>> out;
    for (auto& l : linear_factors) {
        FieldElem root = l.coeff(0);  // monic x + c has root c
        int mult = 0;
        Poly rem = f;
        for (;;) {
            auto [q, r] = divrem(rem, l);
            if (!r.is_zero()) break;
            mult++;
            rem = q;
        }
        out.push_back({root, mult});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return fe_less(a.first, b.first); });
    return out;
}

Poly irreducible_poly(int n) {
    return Poly::from_bits(ctx_create(1), gf2x::smallest_irreducible(n));
}

int binom_mod2(u64 n, u64 k) {
    if (k > n) return 0;
    return ((k & n) == k) ? 1 : 0;  // Lucas
}

}  // namespace asforge
