#include "asforge/gf2.hpp"

#include <array>
#include <cstdlib>
#include <numeric>

#include "asforge/gf2x.hpp"

namespace asforge {

int max_field_degree() {
    static const int cap = [] {
        int c = 64;
        if (const char* s = std::getenv("ASFORGE_MAX_FIELD_DEGREE")) {
            int v = std::atoi(s);
            if (v >= 1 && v < 64) c = v;
        }
        return c;
    }();
    return cap;
}

int lcm_degree(int a, int b) {
    long long l = std::lcm((long long)a, (long long)b);
    if (l > max_field_degree()) throw FieldCapError((int)l);
    return (int)l;
}

namespace {

inline u64 fe_mul_raw(u64 a, u64 b, int k, u64 mod_lo, u64 mask) {
    u64 r = 0;
    u64 top = (k == 64) ? 0x8000000000000000ull : (1ull << (k - 1));
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        u64 carry = a & top;
        a = (a << 1) & mask;
        if (carry) a ^= mod_lo;
    }
    return r;
}

}  // namespace

FieldCtx::FieldCtx(int k_) : k(k_) {
    u128 m = gf2x::smallest_irreducible(k);
    mod_lo = (u64)(m ^ ((u128)1 << k));
    mask = (k == 64) ? ~0ull : ((1ull << k) - 1);
    trace_mask = 0;
    for (int i = 0; i < k; i++) {
        // tr(x^i) = sum of Frobenius powers of the basis monomial
        u64 e = (i == 0) ? 1 : (1ull << i);
        u64 acc = 0, p = e;
        for (int j = 0; j < k; j++) {
            acc ^= p;
            p = fe_mul_raw(p, p, k, mod_lo, mask);
        }
        if (acc & 1) trace_mask |= (i == 0) ? 1ull : (1ull << i);
        // the trace lands in F2, so only bit 0 of acc matters
    }
}

std::string FieldCtx::modulus_hex() const {
    u128 m = ((u128)1 << k) | mod_lo;
    static const char* digits = "0123456789abcdef";
    std::string s;
    while (m) {
        s.insert(s.begin(), digits[(int)(m & 0xf)]);
        m >>= 4;
    }
    return s;
}

const FieldCtx* ctx_create(int k) {
    if (k < 1) throw std::invalid_argument("ctx_create: degree must be positive");
    if (k > max_field_degree()) throw FieldCapError(k);
    static std::mutex mu;
    static std::array<const FieldCtx*, 65> table{};
    std::lock_guard<std::mutex> lock(mu);
    if (!table[k]) table[k] = new FieldCtx(k);
    return table[k];
}

FieldElem fe(const FieldCtx* c, u64 v) {
    if (c->k < 64 && (v & ~c->mask)) throw std::invalid_argument("fe: bits beyond field degree");
    return {c, v};
}

std::pair<FieldElem, FieldElem> unify(FieldElem a, FieldElem b) {
    if (a.ctx == b.ctx) return {a, b};
    const FieldCtx* t = ctx_create(lcm_degree(a.ctx->k, b.ctx->k));
    return {embed(a, t), embed(b, t)};
}

FieldElem operator+(FieldElem a, FieldElem b) {
    auto [x, y] = unify(a, b);
    return {x.ctx, x.v ^ y.v};
}

FieldElem operator*(FieldElem a, FieldElem b) {
    auto [x, y] = unify(a, b);
    return {x.ctx, fe_mul_raw(x.v, y.v, x.ctx->k, x.ctx->mod_lo, x.ctx->mask)};
}

bool operator==(FieldElem a, FieldElem b) {
    if (a.ctx == b.ctx) return a.v == b.v;
    auto [x, y] = unify(a, b);
    return x.v == y.v;
}

FieldElem fe_pow(FieldElem a, u64 e) {
    FieldElem r = fe_one(a.ctx);
    while (e) {
        if (e & 1) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

FieldElem fe_inv(FieldElem a) {
    if (a.is_zero()) throw std::domain_error("fe_inv of zero");
    // a^(2^k - 2)
    u64 e = (a.ctx->k == 64) ? ~1ull : ((1ull << a.ctx->k) - 2);
    return fe_pow(a, e);
}

FieldElem operator/(FieldElem a, FieldElem b) {
    auto [x, y] = unify(a, b);
    return x * fe_inv(y);
}

FieldElem frobenius(FieldElem a, int n) {
    for (int i = 0; i < n; i++) a = a * a;
    return a;
}

FieldElem fe_sqrt(FieldElem a) { return frobenius(a, a.ctx->k - 1); }

int trace(FieldElem a) { return __builtin_parityll(a.v & a.ctx->trace_mask); }

std::optional<FieldElem> solve_as(FieldElem c) {
    if (trace(c)) return std::nullopt;
    int k = c.ctx->k;
    // Solve M t = c over F2 where column j of M holds (x^j)^2 + x^j.
    std::vector<u64> col(k);
    for (int j = 0; j < k; j++) {
        FieldElem bj = fe(c.ctx, (j == 0) ? 1ull : (1ull << j));
        col[j] = (bj * bj + bj).v;
    }
    // rows: bit positions; row r as bitmask over columns, plus rhs bit
    std::vector<u64> row(k, 0);
    std::vector<int> rhs(k, 0);
    for (int r = 0; r < k; r++) {
        for (int j = 0; j < k; j++)
            if ((col[j] >> r) & 1) row[r] |= (j == 0) ? 1ull : (1ull << j);
        rhs[r] = (int)((c.v >> r) & 1);
    }
    std::vector<int> pivot_of_col(k, -1);
    int rr = 0;
    for (int j = 0; j < k && rr < k; j++) {
        int p = -1;
        for (int i = rr; i < k; i++)
            if ((row[i] >> j) & 1) { p = i; break; }
        if (p < 0) continue;
        std::swap(row[p], row[rr]);
        std::swap(rhs[p], rhs[rr]);
        for (int i = 0; i < k; i++)
            if (i != rr && ((row[i] >> j) & 1)) { row[i] ^= row[rr]; rhs[i] ^= rhs[rr]; }
        pivot_of_col[j] = rr;
        rr++;
    }
    u64 t = 0;
    for (int j = 0; j < k; j++)
        if (pivot_of_col[j] >= 0 && rhs[pivot_of_col[j]]) t |= (j == 0) ? 1ull : (1ull << j);
    // rows past rr must be consistent; trace(c)==0 guarantees it
    for (int i = rr; i < k; i++)
        if (rhs[i]) return std::nullopt;
    FieldElem res = fe(c.ctx, t);
    return res;
}

bool in_subfield(FieldElem e, int m) { return frobenius(e, m) == e; }

std::optional<FieldElem> project(FieldElem e, const FieldCtx* sub) {
    if (e.ctx == sub) return e;
    if (e.ctx->k % sub->k != 0)
        throw std::invalid_argument("project: not a subfield of the source context");
    int k = e.ctx->k, m = sub->k;
    std::vector<u64> col(m);
    for (int j = 0; j < m; j++) col[j] = embed(fe(sub, 1ull << j), e.ctx).v;
    // solve sum_j t_j col[j] = e.v over F2; the embedding is injective, so a
    // solution, when it exists, is unique
    std::vector<u64> row(k, 0);
    std::vector<int> rhs(k, 0);
    for (int r = 0; r < k; r++) {
        for (int j = 0; j < m; j++)
            if ((col[j] >> r) & 1) row[r] |= 1ull << j;
        rhs[r] = (int)((e.v >> r) & 1);
    }
    std::vector<int> pivot_of_col(m, -1);
    int rr = 0;
    for (int j = 0; j < m; j++) {
        int p = -1;
        for (int i = rr; i < k; i++)
            if ((row[i] >> j) & 1) { p = i; break; }
        if (p < 0) continue;
        std::swap(row[p], row[rr]);
        std::swap(rhs[p], rhs[rr]);
        for (int i = 0; i < k; i++)
            if (i != rr && ((row[i] >> j) & 1)) { row[i] ^= row[rr]; rhs[i] ^= rhs[rr]; }
        pivot_of_col[j] = rr;
        rr++;
    }
    for (int i = rr; i < k; i++)
        if (rhs[i]) return std::nullopt;
    u64 t = 0;
    for (int j = 0; j < m; j++)
        if (pivot_of_col[j] >= 0 && rhs[pivot_of_col[j]]) t |= 1ull << j;
    return fe(sub, t);
}

std::string fe_hex(FieldElem e) {
    static const char* digits = "0123456789abcdef";
    if (e.v == 0) return "0";
    std::string s;
    u64 v = e.v;
    while (v) {
        s.insert(s.begin(), digits[v & 0xf]);
        v >>= 4;
    }
    return s;
}

}  // namespace asforge
