#ifndef FWCODES_DESIGNS_HPP
#define FWCODES_DESIGNS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "fwcodes/codes.hpp"
#include "fwcodes/common.hpp"

namespace fwcodes {

/// A block design on points {0..n_points-1}: deduplicated kappa-subsets,
/// claimed strength t and index lambda, and whether the claim was checked
/// exhaustively.
struct Design {
    uint32_t n_points = 0;
    uint32_t kappa = 0;
    std::vector<std::vector<uint32_t>> blocks; // sorted blocks, sorted list
    uint32_t t = 0;
    uint64_t lambda = 0;
    bool verified = false;

    uint64_t block_count() const { return blocks.size(); }
};

struct DesignCheck {
    bool ok = false;
    uint64_t lambda = 0;
    std::vector<uint32_t> witness; // a t-subset with deviating coverage
};

/// Counts, for every t-subset of points, the blocks containing it;
/// succeeds iff that count is constant and >= 1. t <= 3.
DesignCheck verify_t_design(const std::vector<std::vector<uint32_t>>& blocks, uint32_t n_points,
                            uint32_t t);

/// lambda * C(n, t) == C(kappa, t) * |B| (the block-count identity of a
/// t-design).
bool design_count_identity(uint64_t n, uint32_t t, uint32_t kappa, uint64_t lambda, uint64_t blocks);

/// Blocks {x1, x2, x3, x1+x2+x3} over GF(2^m) as column indices of the
/// extended-family coordinate labeling; the S(3, 4, q) Steiner system
/// carried by the weight-4 dual words (h >= 2).
Design steiner_blocks_binary(const FieldCtx& field);

/// Blocks {x1, x2, a x1 + (1-a) x2 : a in GF(p) \ {0,1}} over odd-
/// characteristic GF(q), as column indices; the 2-(q, 3, p-2) design of
/// the weight-3 dual words.
Design triple_blocks_odd(const FieldCtx& field);

/// Weight-4 dual supports of the circle code, verified as a
/// 3-(q+1, 4, p^l - 2) design.
Design circle_dual_design(uint32_t p, uint32_t m, uint32_t s);
Design circle_dual_design(const LinearCode& circle_code);

/// Position of a field element among the extended-family columns
/// (alpha^1..alpha^(q-1), 0).
uint32_t ext_column_of(const FieldCtx& field, uint32_t element);

struct AmReport {
    uint64_t w = 0;      // largest weight passing the floor condition for C
    uint64_t w_perp = 0; // same for the dual
    uint32_t t_max = 0;  // largest certified strength (0: none)
    // certified kappa ranges [d, w] for C and [d_perp, w_perp] for the dual
    std::array<uint64_t, 2> primal_range{0, 0};
    std::array<uint64_t, 2> dual_range{0, 0};
    std::vector<uint64_t> primal_design_weights; // weights in range with A_w != 0
};

/// The Assmus-Mattson test from exact primal counts and the dual's minimum
/// distance. For alphabet 2 the floor term is taken as 0 (the q-2
/// denominator degenerates; documented convention, unused by the bundled
/// reference data which is all over alphabets >= 4).
AmReport assmus_mattson(const WeightDistribution& primal, uint64_t d, uint64_t d_perp,
                        const BigInt& alphabet);

struct ConjectureProbe {
    uint32_t q = 0, m = 0, h = 0;
    uint64_t min_weight = 0;
    uint64_t support_count = 0;
    bool holds_3design = false;
    uint64_t lambda = 0;
    std::vector<uint32_t> witness; // deviating triple when the probe fails
};

/// Do the minimum-weight supports of the binary extended code form a
/// 3-design? Evidence only; nothing is asserted about unknown cases.
ConjectureProbe conjecture13_probe(uint32_t m, uint32_t h, const BruteOptions& opts = {});

} // namespace fwcodes

#endif
