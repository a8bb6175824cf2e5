#ifndef FWCODES_LINALG_HPP
#define FWCODES_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fwcodes/gf.hpp"

namespace fwcodes {

// Exact Gaussian elimination, leftmost-nonzero pivoting throughout.

/// Dense matrix over the prime field GF(p), row-major.
struct GfpMatrix {
    uint32_t p = 2;
    size_t rows = 0, cols = 0;
    std::vector<uint32_t> a;

    GfpMatrix() = default;
    GfpMatrix(uint32_t p_, size_t r, size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}
    uint32_t& at(size_t r, size_t c) { return a[r * cols + c]; }
    uint32_t at(size_t r, size_t c) const { return a[r * cols + c]; }
};

size_t gfp_rank(GfpMatrix m);
/// Solve m x = rhs; nullopt when inconsistent.
std::optional<std::vector<uint32_t>> gfp_solve(GfpMatrix m, std::vector<uint32_t> rhs);

/// Rank of a row-major rows x cols matrix of element indices over ctx
/// (works on its own copy).
size_t field_rank(const FieldCtx& f, std::vector<uint32_t> mat, size_t rows, size_t cols);

/// In-place reduced row echelon form; returns pivot column per row.
std::vector<size_t> field_rref(const FieldCtx& f, std::vector<uint32_t>& mat, size_t rows, size_t cols);

/// Basis of {x : mat x = 0}, one vector per row of the result.
std::vector<std::vector<uint32_t>> field_nullspace(const FieldCtx& f, std::vector<uint32_t> mat,
                                                   size_t rows, size_t cols);

} // namespace fwcodes

#endif
