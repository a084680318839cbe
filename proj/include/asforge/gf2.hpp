#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "asforge/common.hpp"

namespace asforge {

class FieldCtx;
struct FieldElem;

// ctx_create(k) builds (or returns the cached) F_{2^k} context. The modulus is
// the monic irreducible of degree k with the smallest bit encoding
// (bit i = coefficient of x^i), so contexts are canonical per degree and
// interned: pointer equality is context identity.
const FieldCtx* ctx_create(int k);

class FieldCtx {
  public:
    int k;
    u64 mod_lo;      // modulus with the leading x^k term stripped
    u64 mask;        // low k bits
    u64 trace_mask;  // tr(e) = parity(e & trace_mask)

    std::string modulus_hex() const;  // full k+1 bit encoding

    FieldCtx(const FieldCtx&) = delete;

  private:
    explicit FieldCtx(int k_);
    friend const FieldCtx* ctx_create(int);

    mutable std::mutex embed_mu;
    mutable std::map<int, std::vector<u64>> embed_pows;  // src degree -> powers of chosen root
    friend struct FieldElem;
    friend FieldElem embed(FieldElem, const FieldCtx*);
};

struct FieldElem {
    const FieldCtx* ctx;
    u64 v;

    FieldElem() : ctx(nullptr), v(0) {}
    FieldElem(const FieldCtx* c, u64 val) : ctx(c), v(val) {}

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }
};

FieldElem fe(const FieldCtx* c, u64 v);
inline FieldElem fe_zero(const FieldCtx* c) { return {c, 0}; }
inline FieldElem fe_one(const FieldCtx* c) { return {c, 1}; }
inline FieldElem fe_gen(const FieldCtx* c) { return {c, 2}; }  // the class of x

// Mixed-field operands embed into F_{2^lcm} first.
FieldElem operator+(FieldElem a, FieldElem b);
FieldElem operator*(FieldElem a, FieldElem b);
FieldElem operator/(FieldElem a, FieldElem b);
bool operator==(FieldElem a, FieldElem b);
inline bool operator!=(FieldElem a, FieldElem b) { return !(a == b); }

FieldElem fe_inv(FieldElem a);
FieldElem fe_pow(FieldElem a, u64 e);
FieldElem frobenius(FieldElem a, int n = 1);  // a^(2^n)
FieldElem fe_sqrt(FieldElem a);
int trace(FieldElem a);  // absolute trace to F2, as 0/1
std::optional<FieldElem> solve_as(FieldElem c);  // t with t^2+t=c, if one exists in ctx

// Canonical embedding along the chosen-root convention; src degree must divide
// the target degree. Concurrent calls agree (the root choice is deterministic).
FieldElem embed(FieldElem e, const FieldCtx* target);
std::pair<FieldElem, FieldElem> unify(FieldElem a, FieldElem b);
bool in_subfield(FieldElem e, int m);  // fixed by Frobenius^m

// Inverse of embed on its image: the representation of e in the subfield
// context, or nullopt if e is not in the image. Needed because the absolute
// trace of a subfield element differs between the two contexts when the
// extension degree is even.
std::optional<FieldElem> project(FieldElem e, const FieldCtx* sub);

// Total order used for deterministic output: by field degree, then bits.
inline bool fe_less(FieldElem a, FieldElem b) {
    if (a.ctx->k != b.ctx->k) return a.ctx->k < b.ctx->k;
    return a.v < b.v;
}

std::string fe_hex(FieldElem e);

int lcm_degree(int a, int b);  // checked against the field cap

}  // namespace asforge
