#include "fwcodes/designs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fwcodes {

namespace {

uint64_t c2(uint64_t n) { return n * (n - 1) / 2; }
uint64_t c3(uint64_t n) { return n * (n - 1) * (n - 2) / 6; }

uint64_t rank_subset(const uint32_t* s, uint32_t t) {
    switch (t) {
        case 1: return s[0];
        case 2: return c2(s[1]) + s[0];
        default: return c3(s[2]) + c2(s[1]) + s[0];
    }
}

std::vector<uint32_t> unrank_subset(uint64_t r, uint32_t t, uint32_t n) {
    // small n: walk the enumeration
    std::vector<uint32_t> s(t);
    if (t == 1) { s[0] = uint32_t(r); return s; }
    if (t == 2) {
        for (uint32_t j = 1; j < n; ++j)
            if (r < c2(j) + j) { s[1] = j; s[0] = uint32_t(r - c2(j)); return s; }
    } else {
        for (uint32_t k = 2; k < n; ++k) {
            if (r < c3(k) + c2(k)) {
                s[2] = k;
                auto rest = unrank_subset(r - c3(k), 2, k);
                s[0] = rest[0];
                s[1] = rest[1];
                return s;
            }
        }
    }
    throw ParamError("subset rank out of range");
}

} // namespace

DesignCheck verify_t_design(const std::vector<std::vector<uint32_t>>& blocks, uint32_t n_points,
                            uint32_t t) {
    if (t < 1 || t > 3) throw ParamError("t must be in [1, 3]");
    DesignCheck res;
    if (blocks.empty()) return res;
    const uint32_t kappa = uint32_t(blocks[0].size());
    if (t > kappa) throw ParamError("t exceeds the block size");
    uint64_t ntuples = t == 1 ? n_points : (t == 2 ? c2(n_points) : c3(n_points));
    std::vector<uint32_t> counter(ntuples, 0);
    for (const auto& b : blocks) {
        if (b.size() != kappa) throw ParamError("non-uniform block sizes");
        for (uint32_t x : b)
            if (x >= n_points) throw ParamError("block point out of range");
        if (t == 1) {
            for (uint32_t x : b) counter[x] += 1;
        } else if (t == 2) {
            for (size_t i = 0; i < b.size(); ++i)
                for (size_t j = i + 1; j < b.size(); ++j) {
                    uint32_t s[2] = {b[i], b[j]};
                    counter[rank_subset(s, 2)] += 1;
                }
        } else {
            for (size_t i = 0; i < b.size(); ++i)
                for (size_t j = i + 1; j < b.size(); ++j)
                    for (size_t k = j + 1; k < b.size(); ++k) {
                        uint32_t s[3] = {b[i], b[j], b[k]};
                        counter[rank_subset(s, 3)] += 1;
                    }
        }
    }
    uint32_t lambda = counter.empty() ? 0 : counter[0];
    for (uint64_t r = 0; r < ntuples; ++r) {
        if (counter[r] != lambda) {
            res.witness = unrank_subset(r, t, n_points);
            return res;
        }
    }
    if (lambda == 0) return res;
    res.ok = true;
    res.lambda = lambda;
    return res;
}

bool design_count_identity(uint64_t n, uint32_t t, uint32_t kappa, uint64_t lambda, uint64_t blocks) {
    return BigInt(lambda) * binomial(n, t) == binomial(kappa, t) * BigInt(blocks);
}

uint32_t ext_column_of(const FieldCtx& field, uint32_t element) {
    if (element == 0) return field.q() - 1;
    uint32_t l = field.log(element);
    return l == 0 ? field.q() - 2 : l - 1; // alpha^(q-1) = 1 sits at column q-2
}

Design steiner_blocks_binary(const FieldCtx& field) {
    if (field.p() != 2) throw ParamError("binary construction requires p = 2");
    const uint32_t q = field.q();
    std::set<std::vector<uint32_t>> blocks;
    for (uint32_t x1 = 0; x1 < q; ++x1)
        for (uint32_t x2 = x1 + 1; x2 < q; ++x2)
            for (uint32_t x3 = x2 + 1; x3 < q; ++x3) {
                uint32_t x4 = field.add(field.add(x1, x2), x3);
                if (x4 == x1 || x4 == x2 || x4 == x3) continue; // impossible over GF(2^m), kept as a guard
                std::vector<uint32_t> b = {ext_column_of(field, x1), ext_column_of(field, x2),
                                           ext_column_of(field, x3), ext_column_of(field, x4)};
                std::sort(b.begin(), b.end());
                blocks.insert(std::move(b));
            }
    Design d;
    d.n_points = q;
    d.kappa = 4;
    d.blocks.assign(blocks.begin(), blocks.end());
    d.t = 3;
    auto chk = verify_t_design(d.blocks, d.n_points, 3);
    d.verified = chk.ok;
    d.lambda = chk.lambda;
    return d;
}

Design triple_blocks_odd(const FieldCtx& field) {
    const uint32_t p = field.p(), q = field.q();
    if (p == 2) throw ParamError("odd-characteristic construction requires p > 2");
    std::set<std::vector<uint32_t>> blocks;
    for (uint32_t x1 = 0; x1 < q; ++x1)
        for (uint32_t x2 = x1 + 1; x2 < q; ++x2)
            for (uint32_t a = 2; a < p; ++a) {
                uint32_t one_minus_a = field.sub(1, a); // a, 1-a in the prime subfield
                uint32_t x3 = field.add(field.mul(a, x1), field.mul(one_minus_a, x2));
                if (x3 == x1 || x3 == x2) throw ConsistencyError("degenerate affine triple");
                std::vector<uint32_t> b = {ext_column_of(field, x1), ext_column_of(field, x2),
                                           ext_column_of(field, x3)};
                std::sort(b.begin(), b.end());
                blocks.insert(std::move(b));
            }
    Design d;
    d.n_points = q;
    d.kappa = 3;
    d.blocks.assign(blocks.begin(), blocks.end());
    d.t = 2;
    auto chk = verify_t_design(d.blocks, d.n_points, 2);
    d.verified = chk.ok;
    d.lambda = chk.lambda;
    return d;
}

Design circle_dual_design(uint32_t p, uint32_t m, uint32_t s) {
    return circle_dual_design(build_circle_code(p, m, s));
}

Design circle_dual_design(const LinearCode& circle_code) {
    if (circle_code.family != Family::UnitCircle) throw ParamError("needs a circle code");
    auto rep = dual_low_weight_search(circle_code, 4);
    if (rep.d_perp != 4) throw ConsistencyError("circle dual minimum distance is not 4");
    Design d;
    d.n_points = circle_code.n;
    d.kappa = 4;
    d.blocks = rep.supports.at(4);
    std::sort(d.blocks.begin(), d.blocks.end());
    d.t = 3;
    auto chk = verify_t_design(d.blocks, d.n_points, 3);
    d.verified = chk.ok;
    d.lambda = chk.lambda;
    return d;
}

AmReport assmus_mattson(const WeightDistribution& primal, uint64_t d, uint64_t d_perp,
                        const BigInt& alphabet) {
    const uint64_t n = primal.n;
    auto floor_term = [&](uint64_t w) -> uint64_t {
        if (alphabet == 2) return 0;
        BigInt num = BigInt(w) + alphabet - 1;
        BigInt den = alphabet - 2;
        return (num / den).convert_to<uint64_t>();
    };
    AmReport rep;
    for (uint64_t w = 0; w <= n; ++w)
        if (int64_t(w) - int64_t(floor_term(w)) < int64_t(d)) rep.w = w;
    for (uint64_t w = 0; w <= n; ++w)
        if (int64_t(w) - int64_t(floor_term(w)) < int64_t(d_perp)) rep.w_perp = w;
    // nonzero weights of C among A_1..A_{n-t} vs d_perp - t
    for (uint64_t t = 1; t < d; ++t) {
        uint64_t nz = 0;
        for (const auto& [w, c] : primal.counts)
            if (w >= 1 && w + t <= n && c != 0) ++nz;
        if (t <= d_perp && nz <= d_perp - t) rep.t_max = uint32_t(t);
    }
    rep.primal_range = {d, rep.w};
    rep.dual_range = {d_perp, rep.w_perp};
    for (const auto& [w, c] : primal.counts)
        if (w >= d && w <= rep.w && c != 0) rep.primal_design_weights.push_back(w);
    return rep;
}

ConjectureProbe conjecture13_probe(uint32_t m, uint32_t h, const BruteOptions& opts) {
    LinearCode code = build_extended_code(2, m, h);
    ConjectureProbe probe;
    probe.q = code.n;
    probe.m = m;
    probe.h = h;
    auto wd = weight_distribution_brute(code, opts);
    probe.min_weight = wd.min_distance();
    auto sups = supports_of_weight(code, probe.min_weight, opts);
    probe.support_count = sups.size();
    auto chk = verify_t_design(sups, code.n, 3);
    probe.holds_3design = chk.ok;
    probe.lambda = chk.lambda;
    probe.witness = chk.witness;
    return probe;
}

} // namespace fwcodes
