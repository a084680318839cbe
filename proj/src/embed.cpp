#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "asforge/gf2.hpp"
#include "asforge/poly.hpp"

namespace asforge {

namespace {

u64 apply_pows(const std::vector<u64>& pows, u64 v) {
    u64 acc = 0;
    for (size_t i = 0; i < pows.size(); i++)
        if ((v >> i) & 1) acc ^= pows[i];
    return acc;
}

}  // namespace

FieldElem embed(FieldElem e, const FieldCtx* target) {
    const FieldCtx* src = e.ctx;
    if (src == target) return e;
    if (src->k == 1) return {target, e.v & 1};
    if (target->k % src->k != 0)
        throw std::invalid_argument("embed: F_{2^" + std::to_string(src->k) +
                                    "} is not a subfield of F_{2^" +
                                    std::to_string(target->k) + "}");

    {
        std::lock_guard<std::mutex> lk(target->embed_mu);
        auto it = target->embed_pows.find(src->k);
        if (it != target->embed_pows.end()) return {target, apply_pows(it->second, e.v)};
    }

    // image of x under the embedding: the smallest root of the source modulus
    // (an irreducible whose degree divides target->k splits completely there)
    Poly m = Poly::from_bits(target, (u128)src->mod_lo | ((u128)1 << src->k));
    auto rs = roots_in(m, target);
    if (rs.empty()) throw std::logic_error("embed: modulus has no root in target");
    FieldElem rho = rs.front().first;

    std::vector<u64> pows(src->k);
    FieldElem p = fe_one(target);
    for (int i = 0; i < src->k; i++) {
        pows[i] = p.v;
        p = p * rho;
    }

    std::lock_guard<std::mutex> lk(target->embed_mu);
    auto ins = target->embed_pows.emplace(src->k, std::move(pows));
    return {target, apply_pows(ins.first->second, e.v)};
}

}  // namespace asforge
