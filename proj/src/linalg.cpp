#include "fwcodes/linalg.hpp"

namespace fwcodes {

namespace {

uint32_t inv_mod_p(uint32_t c, uint32_t p) {
    if (p == 2) return c % p;
    uint32_t r = 1;
    uint64_t base = c % p, e = p - 2;
    while (e) {
        if (e & 1) r = uint32_t(uint64_t(r) * base % p);
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

} // namespace

size_t gfp_rank(GfpMatrix m) {
    const uint32_t p = m.p;
    size_t rank = 0;
    for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        size_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        for (size_t c = col; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(piv, c));
        uint32_t ip = inv_mod_p(m.at(rank, col), p);
        for (size_t r = rank + 1; r < m.rows; ++r) {
            uint32_t f = uint32_t(uint64_t(m.at(r, col)) * ip % p);
            if (f == 0) continue;
            for (size_t c = col; c < m.cols; ++c)
                m.at(r, c) = uint32_t((m.at(r, c) + uint64_t(p - f) * m.at(rank, c)) % p);
        }
        ++rank;
    }
    return rank;
}

std::optional<std::vector<uint32_t>> gfp_solve(GfpMatrix m, std::vector<uint32_t> rhs) {
    const uint32_t p = m.p;
    if (rhs.size() != m.rows) throw ParamError("rhs size mismatch");
    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        size_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        for (size_t c = col; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(piv, c));
        std::swap(rhs[rank], rhs[piv]);
        uint32_t ip = inv_mod_p(m.at(rank, col), p);
        for (size_t r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            uint32_t f = uint32_t(uint64_t(m.at(r, col)) * ip % p);
            if (f == 0) continue;
            for (size_t c = col; c < m.cols; ++c)
                m.at(r, c) = uint32_t((m.at(r, c) + uint64_t(p - f) * m.at(rank, c)) % p);
            rhs[r] = uint32_t((rhs[r] + uint64_t(p - f) * rhs[rank]) % p);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (size_t r = rank; r < m.rows; ++r)
        if (rhs[r] % p != 0) return std::nullopt;
    std::vector<uint32_t> x(m.cols, 0);
    for (size_t r = 0; r < rank; ++r) {
        uint32_t ip = inv_mod_p(m.at(r, pivot_col[r]), p);
        x[pivot_col[r]] = uint32_t(uint64_t(rhs[r]) * ip % p);
    }
    return x;
}

size_t field_rank(const FieldCtx& f, std::vector<uint32_t> mat, size_t rows, size_t cols) {
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && mat[piv * cols + col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (size_t c = col; c < cols; ++c) std::swap(mat[rank * cols + c], mat[piv * cols + c]);
        uint32_t ip = f.inv(mat[rank * cols + col]);
        for (size_t r = rank + 1; r < rows; ++r) {
            uint32_t fac = f.mul(mat[r * cols + col], ip);
            if (fac == 0) continue;
            for (size_t c = col; c < cols; ++c)
                mat[r * cols + c] = f.sub(mat[r * cols + c], f.mul(fac, mat[rank * cols + c]));
        }
        ++rank;
    }
    return rank;
}

std::vector<size_t> field_rref(const FieldCtx& f, std::vector<uint32_t>& mat, size_t rows, size_t cols) {
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && mat[piv * cols + col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (size_t c = 0; c < cols; ++c) std::swap(mat[rank * cols + c], mat[piv * cols + c]);
        uint32_t ip = f.inv(mat[rank * cols + col]);
        for (size_t c = 0; c < cols; ++c) mat[rank * cols + c] = f.mul(mat[rank * cols + c], ip);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            uint32_t fac = mat[r * cols + col];
            if (fac == 0) continue;
            for (size_t c = 0; c < cols; ++c)
                mat[r * cols + c] = f.sub(mat[r * cols + c], f.mul(fac, mat[rank * cols + c]));
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

std::vector<std::vector<uint32_t>> field_nullspace(const FieldCtx& f, std::vector<uint32_t> mat,
                                                   size_t rows, size_t cols) {
    std::vector<size_t> pivots = field_rref(f, mat, rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<uint32_t>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<uint32_t> x(cols, 0);
        x[fc] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.neg(mat[r * cols + fc]);
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace fwcodes
