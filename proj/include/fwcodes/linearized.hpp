#ifndef FWCODES_LINEARIZED_HPP
#define FWCODES_LINEARIZED_HPP

#include <cstdint>
#include <vector>

#include "fwcodes/gf.hpp"
#include "fwcodes/linalg.hpp"

namespace fwcodes {

/// f(x) = c + a_0 x + a_1 x^p + ... + a_h x^(p^h) over GF(p^m), h < m.
/// The linearized part (c = 0) is a GF(p)-linear map on GF(p^m); root
/// counting reduces to one m x m rank (and, with the constant, one solve)
/// over GF(p) instead of a scan of the field.
struct AffinePoly {
    FieldPtr field;
    uint32_t h = 1;
    uint32_t c = 0;              // constant term, element index
    std::vector<uint32_t> a;     // a_0..a_h, element indices

    AffinePoly(FieldPtr f, uint32_t h_, uint32_t c_, std::vector<uint32_t> a_);
    bool linear_part_zero() const;
    bool all_zero() const { return c == 0 && linear_part_zero(); }
};

uint32_t affine_eval(const AffinePoly& f, uint32_t x);

/// m x m matrix over GF(p) of x -> sum a_i x^(p^i) in the polynomial basis.
GfpMatrix linearized_matrix(const AffinePoly& f);

/// dim over GF(p) of the root space of the linearized part (requires
/// nonzero a); the number of roots is p^kernel_dim.
uint32_t linearized_kernel_dim(const AffinePoly& f);

/// Number of roots of f in GF(q); 0 or p^(kernel dim). Requires (c, a)
/// not all zero.
uint64_t affine_root_count(const AffinePoly& f);

/// Roots of f counted by a full scan of GF(q) (independent slow route,
/// kept for cross-checks).
uint64_t affine_root_count_scan(const AffinePoly& f);

/// f(x) = a x + b x^(p^s) + c x^(p^s + 1) + u over GF(q^2), restricted to
/// the unit circle U_{q+1}. Roots are counted by direct evaluation over
/// the q+1 circle elements; l = gcd(m, s) bounds the count by p^l + 1.
struct CirclePoly {
    TowerPtr tower;
    uint32_t s = 1;
    uint32_t a = 0, b = 0, c = 0, u = 0; // element indices in GF(q^2)

    CirclePoly(TowerPtr t, uint32_t s_, uint32_t a_, uint32_t b_, uint32_t c_, uint32_t u_);
    bool all_zero() const { return a == 0 && b == 0 && c == 0 && u == 0; }
    uint32_t l() const;
};

uint32_t circle_eval(const CirclePoly& f, uint32_t x);
uint64_t circle_root_count(const CirclePoly& f);

} // namespace fwcodes

#endif
