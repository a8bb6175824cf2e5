#ifndef FWCODES_CODES_HPP
#define FWCODES_CODES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fwcodes/common.hpp"
#include "fwcodes/gf.hpp"
#include "fwcodes/linearized.hpp"

namespace fwcodes {

enum class Family { ExtendedPrimitive, UnitCircle, Generic };

std::string family_name(Family f);

/// A linear code given by a full-rank generator matrix over an explicit
/// field, with each coordinate tied to the field element defining it.
///
/// ExtendedPrimitive: rows 1, x, x^p, ..., x^(p^h) evaluated over
/// GF(q) in column order alpha^1, ..., alpha^(q-1), 0.
/// UnitCircle: rows 1, x, x^(p^s), x^(p^s + 1) evaluated over U_{q+1}
/// in the deterministic circle order; alphabet GF(q^2).
struct LinearCode {
    FieldPtr field; // alphabet
    uint32_t n = 0, k = 0;
    std::vector<uint32_t> gen; // k x n row-major, element indices
    Family family = Family::Generic;
    uint32_t p = 0, m = 0, h = 0, s = 0; // construction parameters
    std::vector<uint32_t> column_labels;  // n element indices
    TowerPtr tower;                       // UnitCircle only

    uint32_t gen_at(uint32_t r, uint32_t c) const { return gen[size_t(r) * n + c]; }
    BigInt alphabet_size() const { return BigInt(field->q()); }
    BigInt message_count() const;
};

LinearCode build_extended_code(uint32_t p, uint32_t m, uint32_t h);
LinearCode build_extended_code(FieldPtr field, uint32_t h);
LinearCode build_punctured_cyclic(uint32_t p, uint32_t m, uint32_t h);
LinearCode build_punctured_cyclic(FieldPtr field, uint32_t h);
LinearCode build_circle_code(uint32_t p, uint32_t m, uint32_t s);
LinearCode build_circle_code(TowerPtr tower, uint32_t s);

std::vector<uint32_t> encode(const LinearCode& code, const std::vector<uint32_t>& msg);
uint64_t hamming_weight(const std::vector<uint32_t>& word);

/// n minus the root count of the message's polynomial; families with a
/// root-counting fast path only, nonzero messages only.
uint64_t codeword_weight_fast(const LinearCode& code, const std::vector<uint32_t>& msg);

/// Weights any nonzero codeword of this family can take (ascending).
std::vector<uint64_t> allowed_nonzero_weights(const LinearCode& code);

struct WeightDistribution {
    enum class Source { BruteForce, ClosedForm, MomentSolve };
    uint64_t n = 0;
    std::map<uint64_t, BigInt> counts; // weight -> A_w, A_0 = 1 included
    Source source = Source::BruteForce;
    std::string detail;

    BigInt total() const;
    BigInt at(uint64_t w) const;
    uint64_t min_distance() const; // least w > 0 with A_w > 0
    bool same_counts(const WeightDistribution& other) const;
};

struct BruteOptions {
    unsigned workers = 1;
    uint64_t max_messages = uint64_t(1) << 34; // enumerated volume cap
};

/// Exact distribution by projective enumeration. Family fast paths count
/// roots instead of evaluating codewords; for ExtendedPrimitive the
/// constant coordinate is aggregated analytically per linearized class.
WeightDistribution weight_distribution_brute(const LinearCode& code, const BruteOptions& opts = {});

/// Supports (sorted coordinate sets) of all codewords of weight w,
/// deduplicated and sorted.
std::vector<std::vector<uint32_t>> supports_of_weight(const LinearCode& code, uint64_t w,
                                                      const BruteOptions& opts = {});

enum class ClosedFormCase { BinaryH2, OddH2, BinaryH3, Circle };

std::string closed_form_name(ClosedFormCase c);

/// The closed-form enumerators: BinaryH2 (p=2, h=2, m>2: [q,4,q-4] NMDS),
/// OddH2 (p>2, h=2, m>2: [q,4,q-p^2]), BinaryH3 (p=2, h=3, m>3: [q,5,q-8]),
/// Circle (p odd, m>=2: [q+1,4,q-p^l] over GF(q^2)). For Circle the last
/// argument is s, otherwise it is h and must match the case.
WeightDistribution weight_distribution_closed(ClosedFormCase c, uint32_t p, uint32_t m, uint32_t h_or_s);

/// The case applying to this code, or ParamError when none does.
ClosedFormCase closed_form_for(const LinearCode& code);

struct DualLowWeightReport {
    uint32_t n = 0;
    uint32_t w_max = 0;
    uint32_t d_perp = 0; // 0: no dual word of weight <= w_max
    std::map<uint32_t, BigInt> counts; // A^perp_w for w = 1..w_max
    std::map<uint32_t, std::vector<std::vector<uint32_t>>> supports;
    bool unique_word_per_support = true;

    BigInt count_at(uint32_t w) const;
};

/// Finds every weight-w dual codeword support for w <= w_max by scanning
/// column subsets: a support is a w-subset of generator columns whose
/// unique (projectively) dependency has no zero coefficient. w_max <= 5.
DualLowWeightReport dual_low_weight_search(const LinearCode& code, uint32_t w_max,
                                           uint64_t max_rank_checks = 100'000'000,
                                           bool stop_at_first_weight = false);

uint64_t min_distance(const LinearCode& code, const BruteOptions& opts = {});

struct DistanceCertificate {
    uint64_t d = 0;
    bool by_enumeration = false;
    bool by_witness = false; // allowed-weight membership + explicit word
    std::string note;
};

/// Full enumeration when it fits the bound; otherwise, for the h | m and
/// h = m-1 families, certifies d = q - p^h from the explicit witness word
/// plus sampled allowed-weight membership.
DistanceCertificate certify_min_distance(const LinearCode& code, const BruteOptions& opts = {},
                                         uint64_t samples = 10000, uint64_t seed = 0);

struct ParityCheck {
    FieldPtr field;
    uint32_t n = 0, k = 0;
    std::vector<uint32_t> rows; // (n-k) x n
    bool contains(const std::vector<uint32_t>& word) const;
};

ParityCheck parity_check(const LinearCode& code);
bool membership(const LinearCode& code, const std::vector<uint32_t>& word);

/// Samples (u, v) maps x -> ux+v and random codewords; true when every
/// permuted word stays in the code.
bool affine_invariance_check(const LinearCode& code, uint32_t trials, uint64_t seed = 0);

/// One representative message per projective class of codewords having
/// weight exactly w (family-aware; used for support extraction).
void for_each_class_of_weight(const LinearCode& code, uint64_t w, const BruteOptions& opts,
                              const std::function<void(const std::vector<uint32_t>&)>& fn);

} // namespace fwcodes

#endif
