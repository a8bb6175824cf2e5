#ifndef FWCODES_PLESS_HPP
#define FWCODES_PLESS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "fwcodes/codes.hpp"
#include "fwcodes/common.hpp"

namespace fwcodes {

/// Right-hand side of the nu-th power moment sum_i i^nu A_i for an [n, k]
/// code over an alphabet of size Q, expressed through the dual's
/// low-weight counts A'_1..A'_nu (absent entries mean zero, which the
/// caller must justify):
///
///   sum_{j=0}^{nu} (-1)^j A'_j sum_{t=j}^{nu} t! S(nu,t) Q^(k-t) (Q-1)^(t-j) C(n-j, n-t)
///
/// with S the Stirling numbers of the second kind.
BigRat power_moment_rhs(uint64_t n, uint64_t k, const BigInt& alphabet, uint32_t nu,
                        const std::map<uint32_t, BigInt>& dual_counts);

/// Solves the linear system of the first r power moments for the counts
/// of the r candidate nonzero weights. Exact rational arithmetic; a
/// singular system or a negative/non-integer solution throws
/// ConsistencyError (wrong weight set or wrong dual counts).
WeightDistribution solve_moments(uint64_t n, uint64_t k, const BigInt& alphabet,
                                 const std::vector<uint64_t>& weights,
                                 const std::map<uint32_t, BigInt>& dual_counts);

/// Moment-solver inputs for the families with known weight sets: candidate
/// weights plus the dual low-weight counts the proofs supply.
WeightDistribution weight_distribution_moments(const LinearCode& code);

} // namespace fwcodes

#endif
