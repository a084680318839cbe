#pragma once

#include <vector>

#include "asforge/moebius.hpp"
#include "asforge/ratfunc.hpp"

namespace asforge {

// One closed place of the x-line in the branch locus of y^2 + y = u.
struct BranchEntry {
    bool at_infinity;
    Poly minpoly;      // monic irreducible over the base; zero for infinity
    int place_degree;  // 1 for infinity
    int brk;           // ramification break, odd
    int conductor;     // brk + 1
};

// All geometric branch points over one splitting field, sorted (infinity
// first, then by fe_less), with the break at each point.
struct GeomBranch {
    const FieldCtx* field;
    std::vector<ProjPoint> pts;
    std::vector<int> brks;
};

// The curve y^2 + y = u(x). Throws DegenerateCurve when u is in the image of
// w^2 + w over the closure, i.e. when nothing is ramified.
class ASCurve {
  public:
    explicit ASCurve(RatFunc u);
    ASCurve(Poly f, Poly q) : ASCurve(RatFunc(std::move(f), std::move(q))) {}

    const RatFunc& u() const { return u_; }
    const FieldCtx* base() const { return u_.ctx(); }
    const std::vector<BranchEntry>& branch() const { return branch_; }

    int genus() const;
    int two_rank_ds() const;  // geometric branch points minus one

    // rational points of the smooth projective model over F_{2^n}
    u64 count_points(int n) const;
    u64 count_points_serial(int n) const;

    // coefficients a_0 .. a_2g of the numerator of the zeta function,
    // cross-checked against an extra point count and the functional equation;
    // requires base F2
    std::vector<i64> l_polynomial() const;
    int two_rank_lpoly() const;

  private:
    RatFunc u_;
    std::vector<BranchEntry> branch_;
};

GeomBranch geometric_branch(const ASCurve& curve);

// divisor degree helper: sum of conductor times place degree
int branch_divisor_degree(const std::vector<BranchEntry>& branch);

}  // namespace asforge
