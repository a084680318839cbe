#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "asforge/gf2x.hpp"
#include "asforge/poly.hpp"

using namespace asforge;

namespace {

// generalized Rabin test over F_{2^k}, used as an independent check on the
// irreducibility of factors returned by factor()
bool irreducible_over(const Poly& f) {
    int n = f.deg();
    if (n <= 0) return false;
    if (n == 1) return true;
    int k = f.ctx()->k;
    auto xq_pow = [&](int e) {
        Poly r = Poly::x(f.ctx()) % f;
        for (int i = 0; i < k * e; i++) r = (r * r) % f;
        return r;
    };
    if (!(xq_pow(n) == Poly::x(f.ctx()) % f)) return false;
    int m = n;
    std::vector<int> primes;
    for (int p = 2; p * p <= m; p++)
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) primes.push_back(m);
    for (int p : primes)
        if (poly_gcd(xq_pow(n / p) + Poly::x(f.ctx()), f).deg() != 0) return false;
    return true;
}

Poly rand_poly(const FieldCtx* c, int deg, std::mt19937_64& rng) {
    std::vector<u64> v(deg + 1);
    for (auto& e : v) e = rng() & c->mask;
    if (v.back() == 0) v.back() = 1;
    return Poly(c, std::move(v));
}

}  // namespace

TEST_CASE("construction and encodings") {
    const FieldCtx* f2 = ctx_create(1);
    Poly p = Poly::from_bits(f2, 0b1011);  // x^3+x+1
    CHECK(p.deg() == 3);
    CHECK(p.bits() == 0b1011);
    CHECK(p.coeff(0).is_one());
    CHECK(p.coeff(2).is_zero());
    CHECK(p.monic());
    CHECK(Poly::zero(f2).deg() == -1);
    CHECK(Poly::monomial(f2, 5).deg() == 5);
    CHECK(irreducible_poly(3).bits() == 0b1011);
    CHECK(irreducible_poly(8).bits() == 0x11b);

    const FieldCtx* f4 = ctx_create(2);
    Poly q = Poly::from_coeffs({fe_gen(f4), fe_one(ctx_create(1))});  // x + w
    CHECK(q.ctx() == f4);
    CHECK(q.deg() == 1);
    CHECK_THROWS_AS(q.bits(), std::domain_error);
}

TEST_CASE("ring operations by hand") {
    const FieldCtx* f2 = ctx_create(1);
    Poly a = Poly::from_bits(f2, 0b110);  // x^2+x
    Poly b = Poly::from_bits(f2, 0b11);   // x+1
    CHECK((a * b).bits() == 0b1010);      // x^3+x
    CHECK((a + b).bits() == 0b101);
    CHECK((a + a).is_zero());
    Poly d = derivative(Poly::from_bits(f2, 0b110111));  // x^5+x^4+x^2+x+1
    CHECK(d.bits() == 0b10001);                          // x^4+1
}

TEST_CASE("division properties") {
    std::mt19937_64 rng(7);
    for (int k : {1, 2, 3, 4}) {
        const FieldCtx* c = ctx_create(k);
        for (int trial = 0; trial < 60; trial++) {
            Poly a = rand_poly(c, 1 + (int)(rng() % 12), rng);
            Poly b = rand_poly(c, 1 + (int)(rng() % 6), rng);
            auto [q, r] = divrem(a, b);
            CHECK(q * b + r == a);
            CHECK(r.deg() < b.deg());
        }
    }
    CHECK_THROWS_AS(divrem(Poly::one(ctx_create(1)), Poly::zero(ctx_create(1))),
                    std::invalid_argument);
}

TEST_CASE("gcd properties") {
    std::mt19937_64 rng(11);
    const FieldCtx* c = ctx_create(3);
    for (int trial = 0; trial < 40; trial++) {
        Poly a = rand_poly(c, 1 + (int)(rng() % 6), rng);
        Poly b = rand_poly(c, 1 + (int)(rng() % 6), rng);
        Poly g = rand_poly(c, 1 + (int)(rng() % 4), rng);
        Poly d = poly_gcd(a * g, b * g);
        CHECK(d.monic());
        CHECK((a * g % d).is_zero());
        CHECK((b * g % d).is_zero());
        CHECK((d % g.scaled(fe_inv(g.lc()))).is_zero());
    }
}

TEST_CASE("factor: frozen small cases") {
    const FieldCtx* f2 = ctx_create(1);
    // x^4+x = x (x+1) (x^2+x+1)
    auto fa = factor(Poly::from_bits(f2, 0b10010));
    REQUIRE(fa.factors.size() == 3);
    CHECK(fa.factors[0].first.bits() == 0b10);
    CHECK(fa.factors[1].first.bits() == 0b11);
    CHECK(fa.factors[2].first.bits() == 0b111);
    for (auto& [p, m] : fa.factors) CHECK(m == 1);

    // x^3 (x^2+x+1)^2
    Poly p = poly_pow(Poly::x(f2), 3) * poly_pow(Poly::from_bits(f2, 0b111), 2);
    auto fb = factor(p);
    REQUIRE(fb.factors.size() == 2);
    CHECK(fb.factors[0].first.bits() == 0b10);
    CHECK(fb.factors[0].second == 3);
    CHECK(fb.factors[1].first.bits() == 0b111);
    CHECK(fb.factors[1].second == 2);

    auto fc = factor(Poly::one(f2));
    CHECK(fc.factors.empty());
    CHECK(fc.lead.is_one());
    CHECK_THROWS_AS(factor(Poly::zero(f2)), std::invalid_argument);
}

TEST_CASE("factor: reconstruction and irreducibility, random inputs") {
    std::mt19937_64 rng(23);
    for (int k : {1, 2, 3}) {
        const FieldCtx* c = ctx_create(k);
        for (int trial = 0; trial < 30; trial++) {
            Poly p = rand_poly(c, 2 + (int)(rng() % 10), rng);
            auto fz = factor(p, trial);
            Poly rec = Poly::one(c).scaled(fz.lead);
            for (auto& [q, m] : fz.factors) {
                CHECK(irreducible_over(q));
                CHECK(q.monic());
                rec = rec * poly_pow(q, m);
            }
            CHECK(rec == p);
            // deterministic across seeds
            auto fz2 = factor(p, trial + 1000);
            REQUIRE(fz2.factors.size() == fz.factors.size());
            for (size_t i = 0; i < fz.factors.size(); i++) {
                CHECK(fz2.factors[i].first == fz.factors[i].first);
                CHECK(fz2.factors[i].second == fz.factors[i].second);
            }
        }
    }
}

TEST_CASE("roots: cubic over extension fields") {
    const FieldCtx* f2 = ctx_create(1);
    Poly f3 = Poly::from_bits(f2, 0b1011);  // x^3+x+1, irreducible
    CHECK(roots_in(f3, f2).empty());
    auto r8 = roots_in(f3, ctx_create(3));
    REQUIRE(r8.size() == 3);
    for (auto& [r, m] : r8) {
        CHECK(m == 1);
        CHECK(eval(f3, r).is_zero());
    }
    // the roots form one frobenius orbit
    bool orbit = frobenius(r8[0].first) == r8[1].first || frobenius(r8[0].first) == r8[2].first;
    CHECK(orbit);
    auto r64 = roots_in(f3, ctx_create(6));
    CHECK(r64.size() == 3);

    // multiplicities: x^2 (x+1)^3
    Poly p = poly_pow(Poly::x(f2), 2) * poly_pow(Poly::from_bits(f2, 0b11), 3);
    auto rm = roots_in(p, f2);
    REQUIRE(rm.size() == 2);
    CHECK(rm[0].first.is_zero());
    CHECK(rm[0].second == 2);
    CHECK(rm[1].first.is_one());
    CHECK(rm[1].second == 3);
}

TEST_CASE("eval and compose_affine agree pointwise") {
    std::mt19937_64 rng(31);
    const FieldCtx* f4 = ctx_create(2);
    const FieldCtx* f16 = ctx_create(4);
    Poly f = Poly::from_bits(ctx_create(1), 0b1011);
    FieldElem a = fe_gen(f4), b = fe_one(f4);
    Poly g = compose_affine(f, a, b);
    for (u64 v = 0; v <= f16->mask; v++) {
        FieldElem t = fe(f16, v);
        CHECK(eval(g, t) == eval(f, a * t + b));
    }
    // lift commutes with eval
    Poly ff = rand_poly(f4, 5, rng);
    Poly lifted = ff.lift(f16);
    for (u64 v = 0; v <= f4->mask; v++) {
        FieldElem t = fe(f4, v);
        CHECK(embed(eval(ff, t), f16) == eval(lifted, embed(t, f16)));
    }
}

TEST_CASE("poly_sqrt") {
    std::mt19937_64 rng(37);
    const FieldCtx* c = ctx_create(3);
    for (int trial = 0; trial < 20; trial++) {
        Poly p = rand_poly(c, 1 + (int)(rng() % 8), rng);
        CHECK(poly_sqrt(p * p) == p);
    }
    CHECK_THROWS_AS(poly_sqrt(Poly::x(c)), std::domain_error);
}

TEST_CASE("poly_less is a strict total order on small sets") {
    const FieldCtx* f2 = ctx_create(1);
    Poly x = Poly::x(f2);
    Poly x1 = Poly::from_bits(f2, 0b11);
    Poly xx = Poly::from_bits(f2, 0b100);
    CHECK(poly_less(x, x1));
    CHECK(poly_less(x1, xx));
    CHECK(poly_less(x, xx));
    CHECK(!poly_less(x, x));
}

TEST_CASE("binomials mod 2 against pascal") {
    std::vector<std::vector<u64>> pas(21, std::vector<u64>(21, 0));
    for (int n = 0; n <= 20; n++) {
        pas[n][0] = 1;
        for (int k = 1; k <= n; k++)
            pas[n][k] = pas[n - 1][k - 1] + (k <= n - 1 ? pas[n - 1][k] : 0);
    }
    for (int n = 0; n <= 20; n++)
        for (int k = 0; k <= 20; k++)
            CHECK((u64)binom_mod2(n, k) == (k <= n ? pas[n][k] % 2 : 0));
}

TEST_CASE("powmod") {
    const FieldCtx* f2 = ctx_create(1);
    Poly m = Poly::from_bits(f2, 0b1011);
    Poly r = poly_powmod(Poly::x(f2), 8, m);  // x^8 = x^(2^3) == x mod m
    CHECK(r == Poly::x(f2));
    CHECK(poly_powmod(Poly::x(f2), 7, m) == Poly::one(f2));
}
