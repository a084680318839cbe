#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <map>
#include <vector>

#include "asforge/autgroup.hpp"

namespace asforge {

namespace {

using Perm = std::array<uint8_t, 6>;
constexpr int kOrder = 720;

struct S6Tables {
    std::vector<Perm> perms;        // lexicographic, identity first
    std::vector<uint16_t> mt;       // mt[a * 720 + b] = a after b
    std::vector<uint8_t> fixc;      // fixed points
    std::vector<uint8_t> elorder;   // element order
    uint16_t sigma, sigma_inv, forbidden;

    uint16_t mul(uint16_t a, uint16_t b) const { return mt[a * kOrder + b]; }
};

const S6Tables& s6() {
    static const S6Tables t = [] {
        S6Tables s;
        Perm p = {0, 1, 2, 3, 4, 5};
        std::map<Perm, uint16_t> id;
        do {
            id[p] = (uint16_t)s.perms.size();
            s.perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));

        s.mt.resize(kOrder * kOrder);
        for (int a = 0; a < kOrder; a++)
            for (int b = 0; b < kOrder; b++) {
                Perm r;
                for (int x = 0; x < 6; x++) r[x] = s.perms[a][s.perms[b][x]];
                s.mt[a * kOrder + b] = id[r];
            }

        s.fixc.resize(kOrder);
        s.elorder.resize(kOrder);
        for (int a = 0; a < kOrder; a++) {
            int f = 0;
            for (int x = 0; x < 6; x++) f += s.perms[a][x] == x;
            s.fixc[a] = (uint8_t)f;
            int o = 1;
            uint16_t e = (uint16_t)a;
            while (e != 0) {
                e = s.mul(e, (uint16_t)a);
                o++;
            }
            s.elorder[a] = (uint8_t)o;
        }

        s.sigma = id[Perm{1, 2, 0, 3, 5, 4}];      // (123)(56)
        s.forbidden = id[Perm{1, 0, 3, 2, 4, 5}];  // (12)(34)
        Perm si;
        for (int x = 0; x < 6; x++) si[s.perms[s.sigma][x]] = (uint8_t)x;
        s.sigma_inv = id[si];
        return s;
    }();
    return t;
}

struct Grp {
    std::vector<uint16_t> el;  // sorted
    std::bitset<kOrder> bits;
};

// Multiplicative closure of the generators. Anything larger than half the
// group must be the whole group, so growth past 360 exits early.
bool close(const std::vector<uint16_t>& gen, Grp& out) {
    const S6Tables& t = s6();
    out.bits.reset();
    out.el.clear();
    auto add = [&](uint16_t x) {
        if (!out.bits[x]) {
            out.bits[x] = true;
            out.el.push_back(x);
        }
    };
    add(0);
    for (uint16_t g : gen) add(g);
    for (size_t i = 0; i < out.el.size(); i++) {
        if (out.el.size() > 360) return false;
        for (size_t j = 0; j < out.el.size(); j++) {
            add(t.mul(out.el[i], out.el[j]));
            add(t.mul(out.el[j], out.el[i]));
        }
    }
    if (out.el.size() > 360) return false;
    std::sort(out.el.begin(), out.el.end());
    return true;
}

// The full subgroup lattice by join closure. Seeds are the cyclic subgroups
// of prime-power order, which generate every subgroup; joins with them are
// iterated to the fixpoint.
std::vector<Grp> subgroup_lattice(bool reversed) {
    const S6Tables& t = s6();

    std::vector<Grp> seeds;
    std::vector<std::vector<uint16_t>> seen;
    for (int e = 0; e < kOrder; e++) {
        int o = t.elorder[e];
        if (o != 2 && o != 3 && o != 4 && o != 5) continue;
        Grp c;
        close({(uint16_t)e}, c);
        if (std::find(seen.begin(), seen.end(), c.el) == seen.end()) {
            seen.push_back(c.el);
            seeds.push_back(std::move(c));
        }
    }
    if (reversed) std::reverse(seeds.begin(), seeds.end());

    std::map<std::vector<uint16_t>, bool> known;
    std::vector<Grp> work;

    Grp trivial;
    close({}, trivial);
    known[trivial.el] = true;
    work.push_back(trivial);

    Grp full;
    full.el.resize(kOrder);
    for (int e = 0; e < kOrder; e++) {
        full.el[e] = (uint16_t)e;
        full.bits[e] = true;
    }
    known[full.el] = true;
    work.push_back(full);

    for (size_t head = 0; head < work.size(); head++) {
        const Grp cur = work[head];
        std::vector<Grp> found;
#pragma omp parallel
        {
            std::vector<Grp> local;
#pragma omp for schedule(dynamic) nowait
            for (int s = 0; s < (int)seeds.size(); s++) {
                if ((seeds[s].bits & ~cur.bits).none()) continue;
                std::vector<uint16_t> gen = cur.el;
                gen.insert(gen.end(), seeds[s].el.begin(), seeds[s].el.end());
                Grp j;
                if (close(gen, j)) local.push_back(std::move(j));
            }
#pragma omp critical
            for (auto& g : local) found.push_back(std::move(g));
        }
        for (auto& g : found) {
            auto [it, fresh] = known.emplace(g.el, true);
            if (fresh) work.push_back(std::move(g));
        }
    }
    return work;
}

const std::vector<Grp>& lattice_cached() {
    static const std::vector<Grp> l = subgroup_lattice(false);
    return l;
}

}  // namespace

int s6_subgroup_count(bool reversed) {
    if (!reversed) return (int)lattice_cached().size();
    return (int)subgroup_lattice(true).size();
}

bool verify_poonen_lemma() {
    const S6Tables& t = s6();
    for (const Grp& h : lattice_cached()) {
        if (h.el.size() == 1) continue;
        bool few_fixed = true;
        for (uint16_t e : h.el)
            if (e != 0 && t.fixc[e] > 2) {
                few_fixed = false;
                break;
            }
        if (!few_fixed) continue;
        if (h.bits[t.forbidden]) continue;
        bool stable = true;
        for (uint16_t e : h.el)
            if (!h.bits[t.mul(t.mul(t.sigma, e), t.sigma_inv)]) {
                stable = false;
                break;
            }
        if (stable) return false;  // nontrivial subgroup meeting all hypotheses
    }
    return true;
}

}  // namespace asforge
