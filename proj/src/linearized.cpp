#include "fwcodes/linearized.hpp"

#include <algorithm>
#include <numeric>

namespace fwcodes {

AffinePoly::AffinePoly(FieldPtr f, uint32_t h_, uint32_t c_, std::vector<uint32_t> a_)
    : field(std::move(f)), h(h_), c(c_), a(std::move(a_)) {
    if (!field) throw ParamError("null field");
    if (h < 1 || h >= field->m()) throw ParamError("need 1 <= h < m");
    if (a.size() != size_t(h) + 1) throw ParamError("coefficient vector must have length h+1");
    for (uint32_t coef : a)
        if (coef >= field->q()) throw ParamError("coefficient index out of range");
    if (c >= field->q()) throw ParamError("constant index out of range");
}

bool AffinePoly::linear_part_zero() const {
    return std::all_of(a.begin(), a.end(), [](uint32_t v) { return v == 0; });
}

uint32_t affine_eval(const AffinePoly& f, uint32_t x) {
    const FieldCtx& F = *f.field;
    uint32_t acc = f.c;
    uint32_t xe = x; // x^(p^i)
    for (uint32_t i = 0; i <= f.h; ++i) {
        if (f.a[i] != 0) acc = F.add(acc, F.mul(f.a[i], xe));
        xe = F.pow(xe, F.p());
    }
    return acc;
}

GfpMatrix linearized_matrix(const AffinePoly& f) {
    const FieldCtx& F = *f.field;
    const uint32_t m = F.m(), p = F.p();
    GfpMatrix M(p, m, m);
    uint32_t basis = 1; // index of x^j is p^j
    for (uint32_t j = 0; j < m; ++j) {
        uint32_t img = 0, xe = basis;
        for (uint32_t i = 0; i <= f.h; ++i) {
            if (f.a[i] != 0) img = F.add(img, F.mul(f.a[i], xe));
            xe = F.pow(xe, p);
        }
        for (uint32_t r = 0; r < m; ++r) { M.at(r, j) = img % p; img /= p; }
        basis *= p;
    }
    return M;
}

uint32_t linearized_kernel_dim(const AffinePoly& f) {
    if (f.linear_part_zero()) throw ParamError("zero linearized polynomial");
    GfpMatrix M = linearized_matrix(f);
    return uint32_t(M.rows - gfp_rank(std::move(M)));
}

uint64_t affine_root_count(const AffinePoly& f) {
    if (f.all_zero()) throw ParamError("all-zero affine polynomial");
    const FieldCtx& F = *f.field;
    if (f.linear_part_zero()) return 0; // nonzero constant
    GfpMatrix M = linearized_matrix(f);
    const uint32_t m = F.m(), p = F.p();
    std::vector<uint32_t> rhs(m);
    uint32_t t = F.neg(f.c);
    for (uint32_t r = 0; r < m; ++r) { rhs[r] = t % p; t /= p; }
    GfpMatrix Mc = M;
    auto sol = gfp_solve(std::move(Mc), std::move(rhs));
    if (!sol) return 0;
    uint32_t kd = uint32_t(M.rows - gfp_rank(std::move(M)));
    uint64_t n = 1;
    for (uint32_t i = 0; i < kd; ++i) n *= p;
    return n;
}

uint64_t affine_root_count_scan(const AffinePoly& f) {
    if (f.all_zero()) throw ParamError("all-zero affine polynomial");
    uint64_t n = 0;
    for (uint32_t x = 0; x < f.field->q(); ++x)
        if (affine_eval(f, x) == 0) ++n;
    return n;
}

CirclePoly::CirclePoly(TowerPtr t, uint32_t s_, uint32_t a_, uint32_t b_, uint32_t c_, uint32_t u_)
    : tower(std::move(t)), s(s_), a(a_), b(b_), c(c_), u(u_) {
    if (!tower) throw ParamError("null tower");
    uint32_t m = tower->base().m();
    if (s < 1 || s > m - 1) throw ParamError("need 1 <= s <= m-1");
    for (uint32_t v : {a, b, c, u})
        if (v >= tower->ext().q()) throw ParamError("coefficient index out of range");
}

uint32_t CirclePoly::l() const { return std::gcd(tower->base().m(), s); }

uint32_t circle_eval(const CirclePoly& f, uint32_t x) {
    const FieldCtx& E = f.tower->ext();
    uint64_t ps = 1;
    for (uint32_t i = 0; i < f.s; ++i) ps *= f.tower->base().p();
    uint32_t xs = E.pow(x, ps);
    uint32_t acc = f.u;
    acc = E.add(acc, E.mul(f.a, x));
    acc = E.add(acc, E.mul(f.b, xs));
    acc = E.add(acc, E.mul(f.c, E.mul(xs, x)));
    return acc;
}

uint64_t circle_root_count(const CirclePoly& f) {
    if (f.all_zero()) throw ParamError("all-zero circle polynomial");
    const FieldCtx& E = f.tower->ext();
    uint64_t ps = 1;
    for (uint32_t i = 0; i < f.s; ++i) ps *= f.tower->base().p();
    uint64_t n = 0;
    for (uint32_t x : f.tower->circle()) {
        uint32_t xs = E.pow(x, ps);
        uint32_t acc = E.add(f.u, E.mul(f.a, x));
        acc = E.add(acc, E.mul(f.b, xs));
        acc = E.add(acc, E.mul(f.c, E.mul(xs, x)));
        if (acc == 0) ++n;
    }
    return n;
}

} // namespace fwcodes
