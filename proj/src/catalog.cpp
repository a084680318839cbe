#include "asforge/catalog.hpp"

#include <algorithm>
#include <optional>

#include "asforge/io.hpp"

namespace asforge {

const char* mode_name(Mode m) {
    return m == Mode::PaperLiteral ? "paper-literal" : "validated";
}

Mode mode_from_name(const std::string& s) {
    if (s == "paper-literal" || s == "literal") return Mode::PaperLiteral;
    if (s == "validated") return Mode::Validated;
    throw std::invalid_argument("unknown mode \"" + s + "\"");
}

bool admissible(int g, int r) {
    if (r < 0 || r > g || g < 1) return false;
    return r > 0 || g >= 3;
}

std::string dispatch_case(int g, int r) {
    if (!admissible(g, r))
        throw InadmissiblePair("no hyperelliptic curve of genus " + std::to_string(g) +
                               " with 2-rank " + std::to_string(r));
    if (r == 0) {
        if (g == 3 || g == 5) return "C11";
        if (g == 6) return "C10";
        return "C9";
    }
    if (g == 1) return "E1";
    if (g == r) return r <= 7 ? "C8" : "C1";
    if (g == 3 && r == 2) return "C8";
    switch (r) {
        case 1: return "C2a";
        case 2: return "C2b";
        case 3: return "C3";
        case 4: return "C4a";
        case 5: return "C5";
        case 6: return "C6";
        case 7: return "C7";
        default: return "C1";
    }
}

Poly r0_p_chooser(int g) {
    if (g != 4 && g < 7)
        throw InadmissiblePair("rank-0 tail needs g = 4 or g >= 7, got " + std::to_string(g));
    const FieldCtx* c = ctx_create(1);
    Poly p = Poly::zero(c);
    if (g % 4 == 2) {
        // x^n + x^(n-2) with n = 2g-9, the largest exponent 3 mod 4 that the
        // degree bound allows; the zero tail works just as well, both are
        // certified below
        if (((g - 2) & (g - 3)) == 0)
            p = Poly::monomial(c, 2 * g - 9) + Poly::monomial(c, 2 * g - 11);
    } else if (g % 4 == 3 && (2 * g + 1) % 3 == 0 && !lemma4_predicate(g, p)) {
        // extra cube-root candidates are alive at these g; exactly one of
        // the tails 0, x shuts them out
        p = Poly::x(c);
    }
    if (!lemma4_predicate(g, p))
        throw std::logic_error("rank-0 tail fails its certificate at g = " + std::to_string(g));
    return p;
}

i64 pointed_aut_order(const AutReport& rep) {
    i64 n = 0;
    for (const ReducedAut& e : rep.reduced)
        if (e.m.c.is_zero()) n++;
    return 2 * n;
}

std::vector<ClaimedEntry> claimed_divisor(const Poly& f, const Poly& q) {
    std::vector<ClaimedEntry> out;
    if (f.deg() > q.deg()) {
        int b = f.deg() - q.deg();
        out.push_back({true, Poly::zero(f.ctx()), 1, b, b + 1});
    }
    Factorization fac = factor(q);
    std::sort(fac.factors.begin(), fac.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    for (const auto& [p, e] : fac.factors) {
        if (p.deg() == 0) continue;
        out.push_back({false, p, p.deg(), e, e + 1});
    }
    return out;
}

int claimed_divisor_degree(const std::vector<ClaimedEntry>& claimed) {
    int d = 0;
    for (const ClaimedEntry& e : claimed) d += e.conductor * e.place_degree;
    return d;
}

std::vector<ASCurve> negative_controls() {
    const FieldCtx* c = ctx_create(1);
    std::vector<ASCurve> out;
    for (int a1 = 0; a1 <= 1; a1++)
        for (int a0 = 0; a0 <= 1; a0++) {
            Poly f = Poly::monomial(c, 5);
            if (a1) f = f + Poly::monomial(c, 3);
            if (a0) f = f + Poly::monomial(c, 2);
            out.emplace_back(f, Poly::one(c));
        }
    return out;
}

ASCurve elliptic_ordinary() {
    const FieldCtx* c = ctx_create(1);
    return ASCurve(irreducible_poly(2), Poly::x(c));
}

namespace {

bool coprime(const Poly& f, const Poly& q) { return poly_gcd(f, q).deg() == 0; }

std::vector<std::pair<Poly, int>> sorted_factors(const Poly& q) {
    Factorization fac = factor(q);
    std::sort(fac.factors.begin(), fac.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return fac.factors;
}

int distinct_root_count(const Poly& q) {
    int n = 0;
    for (const auto& pe : sorted_factors(q)) n += pe.first.deg();
    return n;
}

// the denominator of one dispatch case, with the numerator pinned when the
// recipe spells it out
struct CaseShape {
    Poly q;
    Poly fixed_f;
    bool eq_branch = false;  // deg q = 2g+1-r, numerator degree only bounded
};

[[noreturn]] void guard_fail(const std::string& id, int g, int r) {
    throw InadmissiblePair("case " + id + " does not cover (g, r) = (" + std::to_string(g) +
                           ", " + std::to_string(r) + ")");
}

CaseShape case_shape(int g, int r, const std::string& id) {
    const FieldCtx* c = ctx_create(1);
    Poly one = Poly::one(c);
    Poly x = Poly::x(c);
    CaseShape s;
    s.q = one;
    s.fixed_f = Poly::zero(c);
    if (id == "C11") {
        if (r != 0 || (g != 3 && g != 5)) guard_fail(id, g, r);
        s.fixed_f = Poly::monomial(c, 2 * g + 1) + Poly::monomial(c, 2 * g - 3) +
                    Poly::monomial(c, 2 * g - 5);
    } else if (id == "C10") {
        if (r != 0 || g != 6) guard_fail(id, g, r);
        s.fixed_f = Poly::monomial(c, 13) + Poly::monomial(c, 9) + Poly::monomial(c, 7);
    } else if (id == "C9") {
        if (r != 0 || (g != 4 && g < 7)) guard_fail(id, g, r);
        s.fixed_f = Poly::monomial(c, 2 * g + 1) + Poly::monomial(c, 2 * g - 1) +
                    Poly::monomial(c, 2 * g - 3) + r0_p_chooser(g);
    } else if (id == "E1") {
        if (g != 1 || r != 1) guard_fail(id, g, r);
        s.q = x;
        s.fixed_f = irreducible_poly(2);
    } else if (id == "C8") {
        if (!((g == r && r >= 2 && r <= 7) || (g == 3 && r == 2))) guard_fail(id, g, r);
        if (r == 2) {
            s.q = irreducible_poly(2);
            s.fixed_f = Poly::monomial(c, g == 2 ? 1 : 3) * s.q + one;
        } else if (r % 2 == 1) {
            s.q = Poly::monomial(c, r) + one;
            s.fixed_f = x * s.q + one;
        } else {
            s.q = x * (Poly::monomial(c, r - 1) + one);
            s.fixed_f = x * s.q + one;
        }
    } else if (id == "C2a") {
        if (r != 1 || g < 2) guard_fail(id, g, r);
        s.q = x;
    } else if (id == "C2b") {
        if (r != 2 || g < 4) guard_fail(id, g, r);
        s.q = Poly::monomial(c, 2) * (x + one);
    } else if (id == "C3") {
        if (r != 3 || g < 4) guard_fail(id, g, r);
        s.q = irreducible_poly(3);
    } else if (id == "C4a") {
        if (r != 4 || g < 5) guard_fail(id, g, r);
        s.q = Poly::monomial(c, 2) * irreducible_poly(3);
    } else if (id == "C4b") {
        if (r < 4 || g < r + 3) guard_fail(id, g, r);
        s.q = Poly::monomial(c, 3) * poly_pow(x + one, 2) * irreducible_poly(r - 2);
    } else if (id == "C5") {
        if (r != 5 || g < 5) guard_fail(id, g, r);
        s.q = irreducible_poly(3) * poly_pow(x + one, 2 * g - 9) * irreducible_poly(2);
        s.eq_branch = true;
    } else if (id == "C6") {
        if (r != 6 || g < 7) guard_fail(id, g, r);
        s.q = irreducible_poly(3) * (x + one) * irreducible_poly(2) *
              Poly::monomial(c, 2 * g - 11);
        s.eq_branch = true;
    } else if (id == "C7") {
        if (r != 7 || g < 8) guard_fail(id, g, r);
        s.q = irreducible_poly(3) * (x + one) * irreducible_poly(2) * Poly::monomial(c, 2);
    } else if (id == "C1") {
        if (r < 8 || g < r) guard_fail(id, g, r);
        s.q = r % 3 != 0 ? irreducible_poly(3) * irreducible_poly(r - 3)
                         : x * irreducible_poly(3) * irreducible_poly(r - 4);
    } else {
        throw InadmissiblePair("unknown case id \"" + id + "\"");
    }
    return s;
}

void assert_discipline(const Recipe& rec) {
    int cut = 2 * rec.g + 1 - rec.r;
    if (!coprime(rec.f, rec.q)) throw std::logic_error("recipe breaks coprimality");
    int roots = distinct_root_count(rec.q);
    bool ok;
    if (rec.q.deg() < cut)
        ok = roots == rec.r && rec.f.deg() == cut;
    else if (rec.q.deg() == cut)
        ok = roots == rec.r + 1 && rec.f.deg() <= cut;
    else
        ok = false;
    if (!ok) throw std::logic_error("recipe breaks the degree discipline");
}

// empty when the pole orders can support genus g; otherwise a description of
// every even order (an even-order pole always reduces, losing divisor degree)
std::string parity_defect(const Poly& q, int g, int r, bool eq_branch) {
    std::string out;
    auto add = [&](const std::string& s) {
        if (!out.empty()) out += ", ";
        out += s;
    };
    for (const auto& [p, e] : sorted_factors(q))
        if (e % 2 == 0) add("pole order " + std::to_string(e) + " at " + poly_str(p) + " is even");
    if (!eq_branch) {
        int b = 2 * g + 1 - r - q.deg();
        if (b % 2 == 0) add("pole order " + std::to_string(b) + " at infinity is even");
    }
    return out;
}

// denominators with the same set of roots but odd multiplicities only, odd
// pole order at infinity included, ordered by total degree then exponents
std::vector<Poly> repair_shapes(const Poly& q0, int g, int r) {
    auto fac = sorted_factors(q0);
    int m = (int)fac.size();
    int cap = 2 * g - r;
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur(m, 1);
    auto rec_fill = [&](auto&& self, int i, int degree) -> void {
        if (i == m) {
            int binf = 2 * g + 1 - r - degree;
            if (binf >= 1 && binf % 2 == 1) tuples.push_back(cur);
            return;
        }
        for (int e = 1;; e += 2) {
            int d = degree + e * fac[i].first.deg();
            if (d > cap) break;
            cur[i] = e;
            self(self, i + 1, d);
        }
        cur[i] = 1;
    };
    if (m > 0) rec_fill(rec_fill, 0, 0);
    auto total = [&](const std::vector<int>& t) {
        int d = 0;
        for (int i = 0; i < m; i++) d += t[i] * fac[i].first.deg();
        return d;
    };
    std::sort(tuples.begin(), tuples.end(), [&](const auto& a, const auto& b) {
        int da = total(a), db = total(b);
        if (da != db) return da < db;
        return a < b;
    });
    std::vector<Poly> out;
    for (const auto& t : tuples) {
        Poly q = Poly::one(q0.ctx());
        for (int i = 0; i < m; i++) q = q * poly_pow(fac[i].first, (u64)t[i]);
        if (!(q == q0)) out.push_back(q);
    }
    return out;
}

std::string certify_curve(const Recipe& rec) {
    try {
        ASCurve curve = rec.curve();
        if (curve.genus() != rec.g) return "genus " + std::to_string(curve.genus());
        if (curve.two_rank_ds() != rec.r)
            return "2-rank " + std::to_string(curve.two_rank_ds());
        if (curve.two_rank_lpoly() != rec.r)
            return "L-polynomial 2-rank " + std::to_string(curve.two_rank_lpoly());
        AutReport rep = aut_group(curve);
        i64 order = rec.g == 1 ? pointed_aut_order(rep) : rep.order();
        if (order != 2) return "automorphism order " + std::to_string(order);
        return "";
    } catch (const DegenerateCurve&) {
        return "degenerate cover";
    } catch (const FieldCapError& e) {
        return e.what();
    }
}

struct SearchOutcome {
    Poly f;
    u64 candidate;  // 1-based rank among the candidates this search tested
};

// monic numerators in lex order: fixed degree 2g+1-r, or every degree up to
// it when the denominator already has full degree
template <class Accept>
std::optional<SearchOutcome> search_f(const Poly& q, int g, int r, bool eq_branch, u64 budget,
                                      u64& used, Accept&& accept) {
    const FieldCtx* c = q.ctx();
    int cut = 2 * g + 1 - r;
    u64 local = 0;
    auto try_degree = [&](int d) -> std::optional<SearchOutcome> {
        u64 limit = d >= 63 ? ~u64(0) : u64(1) << d;
        for (u64 n = 0; n < limit && used < budget; n++) {
            used++;
            local++;
            Poly f = Poly::monomial(c, d) + Poly::from_bits(c, (u128)n);
            if (accept(f)) return SearchOutcome{f, local};
        }
        return std::nullopt;
    };
    if (!eq_branch) return try_degree(cut);
    for (int d = 0; d <= cut && used < budget; d++)
        if (auto got = try_degree(d)) return got;
    return std::nullopt;
}

}  // namespace

// distinct irreducible factors, sorted; used to tell the same-support repair
// shapes apart from genuinely new denominators
std::vector<Poly> support_set(const Poly& q) {
    std::vector<Poly> out;
    for (const auto& [p, e] : sorted_factors(q)) out.push_back(p);
    return out;
}

Recipe construct_case(int g, int r, const std::string& case_id, Mode mode, u64 budget) {
    if (!admissible(g, r))
        throw InadmissiblePair("no hyperelliptic curve of genus " + std::to_string(g) +
                               " with 2-rank " + std::to_string(r));
    CaseShape shape = case_shape(g, r, case_id);
    Recipe rec;
    rec.g = g;
    rec.r = r;
    rec.case_id = case_id;
    rec.mode = mode;
    rec.q = shape.q;

    u64 used = 0;
    auto validated = [&](const Poly& q) {
        return [&rec, q](const Poly& f) {
            if (!coprime(f, q)) return false;
            Recipe probe = rec;
            probe.f = f;
            probe.q = q;
            return certify_curve(probe).empty();
        };
    };

    auto repair = [&](const std::string& why) -> Recipe {
        auto finish = [&](const Poly& q2, const SearchOutcome& got) {
            rec.q = q2;
            rec.f = got.f;
            rec.notes = why + "; repaired q = " + poly_str(q2) + "; f = " + poly_str(rec.f) +
                        " (candidate " + std::to_string(got.candidate) + ")";
            assert_discipline(rec);
            return rec;
        };
        for (const Poly& q2 : repair_shapes(shape.q, g, r)) {
            if (used >= budget) break;
            if (auto got = search_f(q2, g, r, false, budget, used, validated(q2)))
                return finish(q2, *got);
        }
        // same-support shapes exhausted: swap in denominators built from other
        // irreducibles, smallest degree first (r = 0 pins q = 1, nothing to swap)
        auto supp0 = support_set(shape.q);
        const FieldCtx* c = shape.q.ctx();
        for (int d = std::max(1, r); r > 0 && d <= 2 * g - r && used < budget; d++) {
            if ((2 * g + 1 - r - d) % 2 == 0) continue;
            u64 limit = d >= 63 ? ~u64(0) : u64(1) << d;
            for (u64 bits = 0; bits < limit && used < budget; bits++) {
                used++;
                Poly q2 = Poly::monomial(c, d) + Poly::from_bits(c, (u128)bits);
                auto fac = factor(q2);
                bool odd_mults = true;
                int suppdeg = 0;
                for (const auto& [p, e] : fac.factors) {
                    if (e % 2 == 0) odd_mults = false;
                    suppdeg += p.deg();
                }
                if (!odd_mults || suppdeg != r || support_set(q2) == supp0) continue;
                if (auto got = search_f(q2, g, r, false, budget, used, validated(q2)))
                    return finish(q2, *got);
            }
        }
        throw BudgetExhausted("case " + case_id + ": " + why + "; no repair within " +
                              std::to_string(budget) + " candidates");
    };

    if (!shape.fixed_f.is_zero()) {
        rec.f = shape.fixed_f;
        rec.notes = "fixed numerator";
        if (mode == Mode::Validated) {
            std::string why = certify_curve(rec);
            if (!why.empty()) {
                std::string reason = "pinned numerator rejected (" + why + ")";
                auto got = search_f(shape.q, g, r, shape.eq_branch, budget, used,
                                    validated(shape.q));
                if (!got)
                    return repair(reason + "; no admissible numerator over q = " +
                                  poly_str(shape.q));
                rec.f = got->f;
                rec.notes = reason + "; substituted f = " + poly_str(rec.f) + " (candidate " +
                            std::to_string(got->candidate) + ")";
            } else {
                rec.notes += "; certified, no repair needed";
            }
            if (g == 1) rec.notes += "; pointed count, geometric order 4";
        }
        assert_discipline(rec);
        return rec;
    }

    if (mode == Mode::PaperLiteral) {
        auto got = search_f(shape.q, g, r, shape.eq_branch, budget, used,
                            [&](const Poly& f) { return coprime(f, shape.q); });
        if (!got)
            throw BudgetExhausted("case " + case_id + ": no coprime numerator among " +
                                  std::to_string(used) + " candidates");
        rec.f = got->f;
        rec.notes = "literal shape; f = " + poly_str(rec.f) + " (candidate " +
                    std::to_string(got->candidate) + ")";
        assert_discipline(rec);
        return rec;
    }

    std::string defect = parity_defect(shape.q, g, r, shape.eq_branch);
    if (defect.empty()) {
        auto got = search_f(shape.q, g, r, shape.eq_branch, budget, used, validated(shape.q));
        if (!got)
            throw BudgetExhausted("case " + case_id + ": no certified numerator among " +
                                  std::to_string(used) + " candidates");
        rec.f = got->f;
        rec.notes = "literal shape certified, no repair needed; f = " + poly_str(rec.f) +
                    " (candidate " + std::to_string(got->candidate) + ")";
        if (g == 1) rec.notes += "; pointed count, geometric order 4";
        assert_discipline(rec);
        return rec;
    }

    return repair("literal q = " + poly_str(shape.q) + " cannot reach genus " +
                  std::to_string(g) + " (" + defect + ")");
}

Recipe construct(int g, int r, Mode mode, u64 budget) {
    return construct_case(g, r, dispatch_case(g, r), mode, budget);
}

}  // namespace asforge
