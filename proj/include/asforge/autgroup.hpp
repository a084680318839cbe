#pragma once

#include "asforge/curve.hpp"

namespace asforge {

// One coset of the involution: x -> m(x), y -> y + shift(x), verified to
// satisfy u(m(x)) + u(x) = shift^2 + shift. The pair with shift + 1 is the
// same coset composed with y -> y + 1.
struct ReducedAut {
    Moebius m;
    RatFunc shift;
};

struct AutReport {
    const FieldCtx* field;            // common field of the map entries
    std::vector<ReducedAut> reduced;  // identity first, then mo_less

    i64 reduced_order() const { return (i64)reduced.size(); }
    i64 order() const { return 2 * reduced_order(); }
    bool is_trivial() const { return reduced.size() == 1; }
};

// The full reduced automorphism group over the algebraic closure, by exact
// solving: branch supports of size >= 3 bound the maps through ordered
// triples, supports of size 2 and 1 are conjugated to {0, infinity} and
// {infinity} and solved through the canonical local forms. Every returned
// map carries an exact lifting witness; the set is checked to be closed
// under composition, inverse and Frobenius before returning.
AutReport aut_group(const ASCurve& curve);

// Independent oracle: every reduced automorphism with entries in F_{2^N},
// by exhausting PGL2. N <= 6.
std::vector<Moebius> brute_force_aut(const ASCurve& curve, int N);
std::vector<Moebius> brute_force_aut_serial(const ASCurve& curve, int N);

// All m-th roots of unity (m odd) in their splitting field over F2.
std::vector<FieldElem> mu_roots(int m);

// All distinct roots of p over the algebraic closure, each in the splitting
// field of its minimal polynomial. Sorted by (field degree, value).
std::vector<FieldElem> all_roots(const Poly& p);

// Exhaustive check of the S6 triviality statement: every nontrivial subgroup
// H either has an element with >= 3 fixed points, fails (123)(56)-stability,
// or contains (12)(34).
bool verify_poonen_lemma();

// Size of the full subgroup lattice of S6 by join closure from cyclic
// subgroups; reversed changes only the seed order.
int s6_subgroup_count(bool reversed = false);

// binom(2g-3, 2n) = binom(g-2, n) mod 2 for all n, for every g up to gmax.
bool binom_identity_sweep(int gmax);

// Decides whether y^2 + y = x^(2g+1) + x^(2g-1) + x^(2g-3) + p(x) has no
// automorphisms beyond the involution, through polynomial coset membership
// alone. p over F2 with deg p <= 2g - 6; g = 4 or g >= 7.
bool lemma4_predicate(int g, const Poly& p);

}  // namespace asforge
