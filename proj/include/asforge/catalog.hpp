#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "asforge/autgroup.hpp"

namespace asforge {

enum class Mode { PaperLiteral, Validated };

const char* mode_name(Mode m);
Mode mode_from_name(const std::string& s);

struct InadmissiblePair : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr u64 kDefaultBudget = u64(1) << 16;

// A concrete model y^2 + y = f/q for the target pair (g, r).
struct Recipe {
    int g = 0;
    int r = 0;
    std::string case_id;
    Mode mode = Mode::PaperLiteral;
    Poly f, q;
    std::string notes;

    ASCurve curve() const { return ASCurve(f, q); }
};

// 0 <= r <= g with (1,0) and (2,0) excluded
bool admissible(int g, int r);

// first matching case of the fixed dispatch table; throws InadmissiblePair
std::string dispatch_case(int g, int r);

// tail p for the rank-0 family x^(2g+1) + x^(2g-1) + x^(2g-3) + p(x),
// certified by lemma4_predicate before returning; g = 4 or g >= 7
Poly r0_p_chooser(int g);

Recipe construct(int g, int r, Mode mode, u64 budget = kDefaultBudget);

// same, but forcing a case (guards still checked); lets callers reach the
// shapes the dispatch order shadows, e.g. C5 at (5,5) or C4b anywhere
Recipe construct_case(int g, int r, const std::string& case_id, Mode mode,
                      u64 budget = kDefaultBudget);

// y^2 + y = x(x^4 + a1 x^2 + a0 x) for the four (a1, a0); genus 2, 2-rank 0,
// every one with automorphisms beyond the involution
std::vector<ASCurve> negative_controls();

// y^2 + y = (x^2 + x + 1)/x: genus 1, 2-rank 1
ASCurve elliptic_ordinary();

// the order reported for genus-1 cells: twice the number of reduced maps
// fixing the infinite branch place (the geometric group is larger)
i64 pointed_aut_order(const AutReport& rep);

// The branch divisor read off pole orders alone: conductor b+1 at every pole
// of order b, infinity included when deg f > deg q. In characteristic 2 an
// even pole order reduces, so the true conductor there is smaller; reports
// show both sides.
struct ClaimedEntry {
    bool at_infinity;
    Poly minpoly;  // zero polynomial for infinity
    int place_degree;
    int brk;
    int conductor;
};
std::vector<ClaimedEntry> claimed_divisor(const Poly& f, const Poly& q);
int claimed_divisor_degree(const std::vector<ClaimedEntry>& claimed);

}  // namespace asforge
