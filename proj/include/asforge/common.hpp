#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace asforge {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;
using i128 = __int128;

inline constexpr const char* kVersion = "0.1.0";

// Raised when a computation would need F_{2^k} beyond the configured cap.
struct FieldCapError : std::runtime_error {
    explicit FieldCapError(int k)
        : std::runtime_error("field degree " + std::to_string(k) +
                             " exceeds cap (see ASFORGE_MAX_FIELD_DEGREE, hard limit 64)") {}
};

// The cover y^2+y=u is split (u in the image of p^2+p): no curve to speak of.
struct DegenerateCurve : std::runtime_error {
    DegenerateCurve() : std::runtime_error("degenerate cover: u has empty branch locus") {}
};

struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Effective field-degree cap: min(64, ASFORGE_MAX_FIELD_DEGREE). Read once.
int max_field_degree();

inline u64 splitmix64(u64 x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace asforge
