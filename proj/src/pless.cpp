#include "fwcodes/pless.hpp"

#include <numeric>

namespace fwcodes {

namespace {

BigInt stirling2(uint32_t n, uint32_t k) {
    if (n == 0 && k == 0) return 1;
    if (n == 0 || k == 0 || k > n) return 0;
    std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1, 0));
    s[0][0] = 1;
    for (uint32_t i = 1; i <= n; ++i)
        for (uint32_t j = 1; j <= i; ++j) s[i][j] = BigInt(j) * s[i - 1][j] + s[i - 1][j - 1];
    return s[n][k];
}

BigInt factorial(uint32_t n) {
    BigInt r = 1;
    for (uint32_t i = 2; i <= n; ++i) r *= i;
    return r;
}

BigRat qpow(const BigInt& base, int64_t e) {
    BigInt r = 1;
    for (int64_t i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
    return e >= 0 ? BigRat(r) : BigRat(1, r);
}

} // namespace

BigRat power_moment_rhs(uint64_t n, uint64_t k, const BigInt& alphabet, uint32_t nu,
                        const std::map<uint32_t, BigInt>& dual_counts) {
    BigRat rhs = 0;
    for (uint32_t j = 0; j <= nu && j <= n; ++j) {
        BigInt aj = j == 0 ? BigInt(1) : BigInt(0);
        if (j > 0) {
            auto it = dual_counts.find(j);
            if (it != dual_counts.end()) aj = it->second;
        }
        if (aj == 0) continue;
        BigRat inner = 0;
        for (uint32_t t = j; t <= nu && t <= n; ++t) {
            BigRat term = BigRat(factorial(t) * stirling2(nu, t));
            term *= qpow(alphabet, int64_t(k) - int64_t(t));
            term *= qpow(alphabet - 1, int64_t(t) - int64_t(j));
            term *= BigRat(binomial(n - j, n - t));
            inner += term;
        }
        rhs += (j % 2 == 0 ? inner : -inner) * BigRat(aj);
    }
    return rhs;
}

WeightDistribution solve_moments(uint64_t n, uint64_t k, const BigInt& alphabet,
                                 const std::vector<uint64_t>& weights,
                                 const std::map<uint32_t, BigInt>& dual_counts) {
    const size_t r = weights.size();
    if (r == 0) throw ParamError("no candidate weights");
    for (size_t i = 0; i + 1 < r; ++i)
        for (size_t j = i + 1; j < r; ++j)
            if (weights[i] == weights[j]) throw ParamError("duplicate candidate weight");
    // equations nu = 0..r-1; nu = 0 counts A_0 = 1 on the left, so subtract it
    std::vector<std::vector<BigRat>> aug(r, std::vector<BigRat>(r + 1));
    for (size_t nu = 0; nu < r; ++nu) {
        for (size_t i = 0; i < r; ++i) {
            BigInt wp = 1;
            for (size_t t = 0; t < nu; ++t) wp *= BigInt(weights[i]);
            aug[nu][i] = BigRat(wp);
        }
        aug[nu][r] = power_moment_rhs(n, k, alphabet, uint32_t(nu), dual_counts);
        if (nu == 0) aug[nu][r] -= 1; // A_0
    }
    // rational Gauss
    for (size_t col = 0, row = 0; col < r && row < r; ++col) {
        size_t piv = row;
        while (piv < r && aug[piv][col] == 0) ++piv;
        if (piv == r) throw ConsistencyError("singular moment system");
        std::swap(aug[row], aug[piv]);
        BigRat ip = BigRat(1) / aug[row][col];
        for (size_t c = col; c <= r; ++c) aug[row][c] *= ip;
        for (size_t r2 = 0; r2 < r; ++r2) {
            if (r2 == row) continue;
            BigRat f = aug[r2][col];
            if (f == 0) continue;
            for (size_t c = col; c <= r; ++c) aug[r2][c] -= f * aug[row][c];
        }
        ++row;
    }
    WeightDistribution wd;
    wd.n = n;
    wd.source = WeightDistribution::Source::MomentSolve;
    wd.detail = "power moments";
    wd.counts[0] = 1;
    for (size_t i = 0; i < r; ++i) {
        const BigRat& v = aug[i][r];
        if (boost::multiprecision::denominator(v) != 1)
            throw ConsistencyError("moment solution is not an integer");
        BigInt c = boost::multiprecision::numerator(v);
        if (c < 0) throw ConsistencyError("moment solution is negative");
        if (c != 0) wd.counts[weights[i]] += c;
    }
    BigInt expect = 1;
    for (uint64_t i = 0; i < k; ++i) expect *= alphabet;
    if (wd.total() != expect) throw ConsistencyError("moment solution total != Q^k");
    return wd;
}

WeightDistribution weight_distribution_moments(const LinearCode& code) {
    if (code.family == Family::ExtendedPrimitive) {
        BigInt Q(code.field->q());
        uint64_t qq = code.field->q();
        std::map<uint32_t, BigInt> dual;
        std::vector<uint64_t> weights;
        if (code.h == 2 && code.m > 2) {
            if (code.p == 2) {
                weights = {qq - 4, qq - 2, qq - 1, qq};
                // d_perp = 4: the first three dual counts vanish
                dual = {{1, 0}, {2, 0}, {3, 0}};
            } else {
                weights = {qq - uint64_t(code.p) * code.p, qq - code.p, qq - 1, qq};
                BigInt A3 = exact_div(BigInt(qq) * (BigInt(qq) - 1) * (BigInt(qq) - 1) * (code.p - 2), 6,
                                      "A3_perp");
                dual = {{1, 0}, {2, 0}, {3, A3}};
            }
        } else if (code.p == 2 && code.h == 3 && code.m > 3) {
            weights = {qq - 8, qq - 4, qq - 2, qq - 1, qq};
            BigInt A4 = exact_div(BigInt(qq) * (BigInt(qq) - 1) * (BigInt(qq) - 1) * (BigInt(qq) - 2), 24,
                                  "A4_perp");
            dual = {{1, 0}, {2, 0}, {3, 0}, {4, A4}};
        } else {
            throw ParamError("no moment-solver weight set for these parameters");
        }
        auto wd = solve_moments(code.n, code.k, Q, weights, dual);
        return wd;
    }
    if (code.family == Family::UnitCircle) {
        uint64_t q0 = code.tower->base().q();
        uint32_t l = std::gcd(code.m, code.s);
        uint64_t pl = 1;
        for (uint32_t i = 0; i < l; ++i) pl *= code.p;
        std::vector<uint64_t> weights = {q0 - pl, q0 - 1, q0, q0 + 1};
        std::map<uint32_t, BigInt> dual = {{1, 0}, {2, 0}, {3, 0}}; // d_perp = 4
        return solve_moments(code.n, code.k, BigInt(code.field->q()), weights, dual);
    }
    throw ParamError("no moment-solver weight set for generic codes");
}

} // namespace fwcodes
