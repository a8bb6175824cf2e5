#ifndef FWCODES_LRC_HPP
#define FWCODES_LRC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fwcodes/codes.hpp"
#include "fwcodes/common.hpp"

namespace fwcodes {

struct LocalityResult {
    bool hypothesis_ok = false; // the minimum-weight dual supports cover
                                // every coordinate equally often
    uint32_t r = 0;             // d_perp - 1 when the hypothesis holds
    uint64_t lambda1 = 0;
    uint32_t support_weight = 0;
};

/// Minimum locality of the code: checks the 1-design hypothesis on the
/// minimum-weight dual supports, then returns d_perp - 1. When the
/// hypothesis fails the result carries hypothesis_ok = false and no
/// locality.
LocalityResult min_locality(const LinearCode& code, const DualLowWeightReport& dual_report);

/// Same check from an explicit support list (used for the dual code, whose
/// "dual" is the primal code itself).
LocalityResult locality_from_min_supports(uint32_t n, const std::vector<std::vector<uint32_t>>& supports);

struct SingletonLikeCheck {
    int64_t bound = 0;  // n - k - ceil(k/r) + 2
    int64_t defect = 0; // bound - d; 0 = d-optimal, 1 = almost d-optimal
};
SingletonLikeCheck singleton_like_check(uint64_t n, uint64_t k, uint64_t d, uint64_t r);

struct CmBoundCheck {
    uint64_t bound = 0;
    bool k_optimal = false; // certified via the Singleton upper bound on k_opt
};
CmBoundCheck cm_bound_check(uint64_t n, uint64_t k, uint64_t d, uint64_t r);

struct LrcProfile {
    uint64_t n = 0, k = 0, d = 0;
    BigInt alphabet_size;
    uint32_t r = 0;
    bool one_design_ok = false;
    uint64_t lambda1 = 0;
    bool d_optimal = false, d_almost = false, k_optimal = false;
    int64_t singleton_bound = 0, singleton_defect = 0;
    uint64_t cm_bound = 0;
    std::string note;
};

struct LrcClaim {
    std::string id;       // reference label, e.g. "T27"
    std::string claim;
    std::string computed;
    bool match = false;
    bool fatal = true;    // false: known statement discrepancy, report-only
};

/// Profiles of a code and its dual, with comparisons against reference
/// locality/optimality claims matching the construction parameters.
struct LrcPair {
    LrcProfile primal, dual;
    std::vector<LrcClaim> claims;
};

LrcProfile make_lrc_profile(uint64_t n, uint64_t k, uint64_t d, const BigInt& alphabet,
                            const LocalityResult& loc);

/// Full profile of a constructed code: distance (enumerated or witnessed),
/// dual distance by subset search, localities via the 1-design hypothesis,
/// bound checks, and reference-claim comparisons.
LrcPair lrc_profile(const LinearCode& code, const BruteOptions& opts = {});

} // namespace fwcodes

#endif
