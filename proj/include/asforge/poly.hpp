#pragma once

#include <utility>
#include <vector>

#include "asforge/gf2.hpp"

namespace asforge {

// Dense polynomial over one F_{2^k} context. Coefficients are stored as raw
// bits; no trailing zeros. The zero polynomial has an empty vector.
class Poly {
  public:
    Poly() : ctx_(nullptr) {}
    Poly(const FieldCtx* c, std::vector<u64> coeffs);

    static Poly zero(const FieldCtx* c) { return Poly(c, {}); }
    static Poly one(const FieldCtx* c) { return Poly(c, {1}); }
    static Poly x(const FieldCtx* c) { return Poly(c, {0, 1}); }
    static Poly monomial(const FieldCtx* c, int d, u64 coeff = 1);
    static Poly from_coeffs(std::vector<FieldElem> cs);
    // F2 bit encoding (bit i = coeff of x^i) read into any context
    static Poly from_bits(const FieldCtx* c, u128 bits);

    const FieldCtx* ctx() const { return ctx_; }
    int deg() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    FieldElem coeff(int i) const {
        return {ctx_, (i >= 0 && i < (int)c_.size()) ? c_[i] : 0};
    }
    FieldElem lc() const { return coeff(deg()); }
    bool monic() const { return !is_zero() && c_.back() == 1; }
    u128 bits() const;  // F2 encodings only (all coefficients 0/1)

    Poly lift(const FieldCtx* target) const;  // embed coefficients

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    Poly scaled(FieldElem s) const;

  private:
    const FieldCtx* ctx_;
    std::vector<u64> c_;
    void trim();
};

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic
Poly derivative(const Poly& a);
Poly poly_pow(Poly base, u64 e);
Poly poly_powmod(Poly base, u128 e, const Poly& m);
FieldElem eval(const Poly& f, FieldElem x0);
Poly compose_affine(const Poly& f, FieldElem a, FieldElem b);  // f(a x + b)
Poly poly_sqrt(const Poly& f);  // h with h^2 = f; f must be a square

// deterministic order: degree, then coefficients from the top
bool poly_less(const Poly& a, const Poly& b);

struct Factorization {
    FieldElem lead;
    std::vector<std::pair<Poly, int>> factors;  // monic irreducible, multiplicity
};

Factorization factor(const Poly& p, u64 seed = 0);
std::vector<std::pair<FieldElem, int>> roots_in(const Poly& p, const FieldCtx* target,
                                                u64 seed = 0);
Poly irreducible_poly(int n);  // canonical degree-n irreducible over F2
int binom_mod2(u64 n, u64 k);

}  // namespace asforge
