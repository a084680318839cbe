#pragma once

#include <string>
#include <vector>

#include "asforge/catalog.hpp"

namespace asforge {

struct CellResult {
    int g = 0;
    int r = 0;
    std::string case_id;
    Mode mode = Mode::Validated;
    int genus = 0;
    int rank_ds = 0;
    int rank_lpoly = 0;
    i64 aut_order = 0;
    std::string status;  // PASS, FAIL, FLAGGED
    std::string notes;
    double seconds = 0;  // never serialized, reports stay byte-stable
};

struct SweepReport {
    std::string version;
    u64 seed = 0;
    int max_genus = 0;
    Mode mode = Mode::Validated;
    std::vector<CellResult> cells;

    bool all_pass() const;
};

// one cell per admissible (g, r) with g <= max_genus, in grid order; cells
// run on a worker pool but each cell is deterministic on its own, so the
// merged report is too
SweepReport run_sweep(int max_genus, Mode mode, int jobs, u64 seed, u64 budget = kDefaultBudget);

std::string sweep_csv(const SweepReport& rep);
std::string sweep_json(const SweepReport& rep);

// single-curve records (JSON text)
std::string curve_json(const Poly& f, const Poly& q);
std::string recipe_json(const Recipe& rec);
std::string aut_json(const Poly& f, const Poly& q, int oracle_degree);
std::string lpoly_json(const Poly& f, const Poly& q);
std::string negative_controls_json();
std::string lemma_checks_json();

// claimed vs computed branch divisor for the four printed denominators whose
// pole orders are even, one smallest instance each; *oracle_ok reports
// whether every computed divisor survived the zeta cross-checks
std::string diagnose_json(bool* oracle_ok = nullptr);

// true when the structured group, cut down to maps with entries in F_{2^N},
// equals the exhaustive PGL2 search over that field
bool aut_matches_brute(const ASCurve& curve, const AutReport& rep, int N);

}  // namespace asforge
