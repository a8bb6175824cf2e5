#include "fwcodes/codes.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "fwcodes/linalg.hpp"

namespace fwcodes {

namespace {

uint64_t upow(uint64_t base, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

BigInt bpow(const BigInt& base, uint32_t e) {
    BigInt r = 1;
    for (uint32_t i = 0; i < e; ++i) r *= base;
    return r;
}

/// Projective classes of F_q^k: one representative per class, first
/// nonzero coordinate fixed to 1. Enumerated by the position j of that
/// coordinate (ascending), then odometer on the trailing coordinates
/// (rightmost fastest).
struct ProjectiveClasses {
    uint64_t q;
    uint32_t k;

    uint64_t total() const {
        uint64_t t = 0, s = 1;
        for (uint32_t j = 0; j < k; ++j) { t += s; s *= q; }
        return t; // (q^k - 1) / (q - 1)
    }
    void decode(uint64_t idx, uint32_t* msg) const {
        uint32_t j = 0;
        uint64_t size = upow(q, k - 1);
        while (idx >= size) { idx -= size; ++j; size /= q; }
        for (uint32_t i = 0; i < k; ++i) msg[i] = 0;
        msg[j] = 1;
        for (uint32_t pos = k; pos-- > j + 1;) { msg[pos] = uint32_t(idx % q); idx /= q; }
    }
    bool next(uint32_t* msg) const {
        uint32_t j = 0;
        while (msg[j] == 0) ++j;
        for (uint32_t pos = k; pos-- > j + 1;) {
            if (++msg[pos] < q) return true;
            msg[pos] = 0;
        }
        if (j + 1 == k) return false;
        msg[j] = 0;
        msg[j + 1] = 1;
        return true;
    }
};

void run_partitioned(uint64_t total, unsigned workers, const std::function<void(unsigned, uint64_t, uint64_t)>& body) {
    if (workers <= 1 || total < 2 * workers) {
        body(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 1; w < workers; ++w) {
        uint64_t lo = std::min<uint64_t>(total, w * chunk), hi = std::min<uint64_t>(total, lo + chunk);
        if (lo < hi) pool.emplace_back(body, w, lo, hi);
    }
    body(0, 0, std::min<uint64_t>(total, chunk));
    for (auto& t : pool) t.join();
}

/// Per-worker engine: kernel dimension of x -> sum a_i x^(p^i) as an
/// m x m rank over GF(p), with reusable buffers. For p = 2 rows are bit
/// masks (digit vectors of indices are the index bits themselves).
class KernelCounter {
  public:
    KernelCounter(const FieldCtx& f, uint32_t h) : f_(f), m_(f.m()), p_(f.p()), h_(h) {
        fe_.assign(size_t(m_) * (h + 1), 0);
        for (uint32_t j = 0; j < m_; ++j) {
            uint32_t basis = 1;
            for (uint32_t t = 0; t < j; ++t) basis *= p_;
            for (uint32_t i = 0; i <= h; ++i) fe_[size_t(j) * (h + 1) + i] = f.frobenius(basis, i);
        }
        rows_.assign(size_t(m_) * m_, 0);
        inv_.assign(p_, 0);
        for (uint32_t c = 1; c < p_; ++c) {
            uint32_t r = 1;
            for (uint32_t e = 0; e < p_ - 2; ++e) r = r * c % p_;
            inv_[c] = p_ == 2 ? c : r;
        }
    }

    uint32_t image_of_basis(uint32_t j, const uint32_t* a) const {
        uint32_t v = 0;
        const uint32_t* fe = &fe_[size_t(j) * (h_ + 1)];
        for (uint32_t i = 0; i <= h_; ++i)
            if (a[i] != 0) v = f_.add(v, f_.mul(a[i], fe[i]));
        return v;
    }

    // kernel dim; a has h+1 entries, not all zero
    uint32_t kernel_dim(const uint32_t* a) {
        if (p_ == 2) {
            uint32_t rows[32] = {0};
            for (uint32_t j = 0; j < m_; ++j) {
                uint32_t v = image_of_basis(j, a);
                for (uint32_t r = 0; r < m_; ++r) rows[r] |= ((v >> r) & 1u) << j;
            }
            uint32_t rank = 0;
            for (uint32_t col = 0; col < m_ && rank < m_; ++col) {
                uint32_t bit = 1u << col, piv = rank;
                while (piv < m_ && !(rows[piv] & bit)) ++piv;
                if (piv == m_) continue;
                std::swap(rows[rank], rows[piv]);
                for (uint32_t r = rank + 1; r < m_; ++r)
                    if (rows[r] & bit) rows[r] ^= rows[rank];
                ++rank;
            }
            return m_ - rank;
        }
        uint32_t* M = rows_.data();
        for (uint32_t j = 0; j < m_; ++j) {
            uint32_t v = image_of_basis(j, a);
            for (uint32_t r = 0; r < m_; ++r) { M[r * m_ + j] = v % p_; v /= p_; }
        }
        uint32_t rank = 0;
        for (uint32_t col = 0; col < m_ && rank < m_; ++col) {
            uint32_t piv = rank;
            while (piv < m_ && M[piv * m_ + col] == 0) ++piv;
            if (piv == m_) continue;
            if (piv != rank)
                for (uint32_t c = col; c < m_; ++c) std::swap(M[rank * m_ + c], M[piv * m_ + c]);
            uint32_t ip = inv_[M[rank * m_ + col]];
            for (uint32_t r = rank + 1; r < m_; ++r) {
                uint32_t fac = M[r * m_ + col] * ip % p_;
                if (fac == 0) continue;
                for (uint32_t c = col; c < m_; ++c)
                    M[r * m_ + c] = (M[r * m_ + c] + (p_ - fac) * M[rank * m_ + c]) % p_;
            }
            ++rank;
        }
        return m_ - rank;
    }

  private:
    const FieldCtx& f_;
    uint32_t m_, p_, h_;
    std::vector<uint32_t> fe_;
    std::vector<uint32_t> rows_;
    std::vector<uint32_t> inv_;
};

struct CirclePoints {
    std::vector<uint32_t> x, xs, xs1;
    explicit CirclePoints(const LinearCode& code) {
        const FieldCtx& E = *code.field;
        uint64_t ps = upow(code.p, code.s);
        for (uint32_t pt : code.tower->circle()) {
            x.push_back(pt);
            uint32_t a = E.pow(pt, ps);
            xs.push_back(a);
            xs1.push_back(E.mul(a, pt));
        }
    }
    uint32_t eval(const FieldCtx& E, const uint32_t* msg, size_t j) const {
        uint32_t acc = E.add(msg[0], E.mul(msg[1], x[j]));
        acc = E.add(acc, E.mul(msg[2], xs[j]));
        return E.add(acc, E.mul(msg[3], xs1[j]));
    }
};

uint64_t enumeration_volume(const LinearCode& code) {
    uint64_t q = code.field->q();
    uint32_t coords = code.family == Family::ExtendedPrimitive ? code.k - 1 : code.k;
    BigInt v = bpow(BigInt(q), coords);
    if (v > BigInt(std::numeric_limits<uint64_t>::max())) return std::numeric_limits<uint64_t>::max();
    return v.convert_to<uint64_t>();
}

void check_volume(const LinearCode& code, const BruteOptions& opts) {
    if (enumeration_volume(code) > opts.max_messages)
        throw BoundError("enumeration bound exceeded for this code (raise the cap to opt in)");
}

std::vector<uint32_t> random_nonzero_message(std::mt19937_64& rng, uint32_t k, uint64_t q) {
    std::vector<uint32_t> msg(k);
    do {
        for (uint32_t i = 0; i < k; ++i) msg[i] = uint32_t(rng() % q);
    } while (std::all_of(msg.begin(), msg.end(), [](uint32_t v) { return v == 0; }));
    return msg;
}

} // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::ExtendedPrimitive: return "extended-primitive";
        case Family::UnitCircle: return "unit-circle";
        default: return "generic";
    }
}

BigInt LinearCode::message_count() const { return bpow(BigInt(field->q()), k); }

LinearCode build_extended_code(uint32_t p, uint32_t m, uint32_t h) {
    return build_extended_code(FieldCtx::make(p, m), h);
}

LinearCode build_extended_code(FieldPtr field, uint32_t h) {
    if (!field) throw ParamError("null field");
    const uint32_t m = field->m(), q = field->q();
    if (h < 1 || h >= m) throw ParamError("need 1 <= h < m");
    LinearCode code;
    code.field = field;
    code.family = Family::ExtendedPrimitive;
    code.p = field->p();
    code.m = m;
    code.h = h;
    code.n = q;
    code.k = h + 2;
    code.column_labels.resize(q);
    for (uint32_t j = 0; j + 1 < q; ++j) code.column_labels[j] = field->exp(j + 1); // alpha^1..alpha^(q-1)
    code.column_labels[q - 1] = 0;
    code.gen.assign(size_t(code.k) * q, 0);
    for (uint32_t j = 0; j < q; ++j) {
        uint32_t x = code.column_labels[j];
        code.gen[j] = 1;
        uint32_t xe = x;
        for (uint32_t i = 0; i <= h; ++i) {
            code.gen[size_t(i + 1) * q + j] = xe;
            xe = field->pow(xe, code.p);
        }
    }
    if (field_rank(*field, code.gen, code.k, code.n) != code.k)
        throw ConsistencyError("generator matrix is not full rank");
    return code;
}

LinearCode build_punctured_cyclic(uint32_t p, uint32_t m, uint32_t h) {
    return build_punctured_cyclic(FieldCtx::make(p, m), h);
}

LinearCode build_punctured_cyclic(FieldPtr field, uint32_t h) {
    LinearCode ext = build_extended_code(field, h);
    LinearCode code;
    code.field = ext.field;
    code.family = Family::Generic;
    code.p = ext.p;
    code.m = ext.m;
    code.h = h;
    code.n = ext.n - 1; // drop the final (0-labelled) column
    code.k = ext.k;
    code.column_labels.assign(ext.column_labels.begin(), ext.column_labels.end() - 1);
    code.gen.assign(size_t(code.k) * code.n, 0);
    for (uint32_t r = 0; r < code.k; ++r)
        for (uint32_t j = 0; j < code.n; ++j) code.gen[size_t(r) * code.n + j] = ext.gen_at(r, j);
    if (field_rank(*code.field, code.gen, code.k, code.n) != code.k)
        throw ConsistencyError("punctured generator matrix is not full rank");
    return code;
}

LinearCode build_circle_code(uint32_t p, uint32_t m, uint32_t s) {
    if (p == 2) throw ParamError("circle family requires odd p");
    if (m < 2) throw ParamError("circle family requires m >= 2");
    return build_circle_code(TowerCtx::make(FieldCtx::make(p, m)), s);
}

LinearCode build_circle_code(TowerPtr tower, uint32_t s) {
    if (!tower) throw ParamError("null tower");
    const uint32_t p = tower->base().p(), m = tower->base().m(), q = tower->base().q();
    if (p == 2) throw ParamError("circle family requires odd p");
    if (m < 2) throw ParamError("circle family requires m >= 2");
    if (s < 1 || s > m - 1) throw ParamError("need 1 <= s <= m-1");
    LinearCode code;
    code.field = tower->ext_ptr();
    code.tower = tower;
    code.family = Family::UnitCircle;
    code.p = p;
    code.m = m;
    code.s = s;
    code.n = q + 1;
    code.k = 4;
    code.column_labels = tower->circle();
    code.gen.assign(size_t(4) * code.n, 0);
    const FieldCtx& E = tower->ext();
    uint64_t ps = upow(p, s);
    for (uint32_t j = 0; j < code.n; ++j) {
        uint32_t x = code.column_labels[j];
        uint32_t xs = E.pow(x, ps);
        code.gen[j] = 1;
        code.gen[size_t(1) * code.n + j] = x;
        code.gen[size_t(2) * code.n + j] = xs;
        code.gen[size_t(3) * code.n + j] = E.mul(xs, x);
    }
    if (field_rank(E, code.gen, 4, code.n) != 4)
        throw ConsistencyError("circle generator matrix is not full rank");
    return code;
}

std::vector<uint32_t> encode(const LinearCode& code, const std::vector<uint32_t>& msg) {
    if (msg.size() != code.k) throw ParamError("message length must equal k");
    const FieldCtx& F = *code.field;
    std::vector<uint32_t> word(code.n, 0);
    for (uint32_t r = 0; r < code.k; ++r) {
        uint32_t c = msg[r];
        if (c == 0) continue;
        const uint32_t* row = &code.gen[size_t(r) * code.n];
        for (uint32_t j = 0; j < code.n; ++j)
            if (row[j] != 0) word[j] = F.add(word[j], F.mul(c, row[j]));
    }
    return word;
}

uint64_t hamming_weight(const std::vector<uint32_t>& word) {
    uint64_t w = 0;
    for (uint32_t v : word) w += v != 0;
    return w;
}

uint64_t codeword_weight_fast(const LinearCode& code, const std::vector<uint32_t>& msg) {
    if (msg.size() != code.k) throw ParamError("message length must equal k");
    if (std::all_of(msg.begin(), msg.end(), [](uint32_t v) { return v == 0; }))
        throw ParamError("zero message has no fast-path weight");
    if (code.family == Family::ExtendedPrimitive) {
        AffinePoly f(code.field, code.h, msg[0], std::vector<uint32_t>(msg.begin() + 1, msg.end()));
        return code.n - affine_root_count(f);
    }
    if (code.family == Family::UnitCircle) {
        CirclePoly f(code.tower, code.s, msg[1], msg[2], msg[3], msg[0]);
        return code.n - circle_root_count(f);
    }
    throw ParamError("no weight fast path for generic codes");
}

std::vector<uint64_t> allowed_nonzero_weights(const LinearCode& code) {
    std::vector<uint64_t> w;
    if (code.family == Family::ExtendedPrimitive) {
        for (uint32_t j = code.h + 1; j-- > 0;) w.push_back(code.n - upow(code.p, j));
        w.push_back(code.n);
    } else if (code.family == Family::UnitCircle) {
        uint32_t l = std::gcd(code.m, code.s);
        uint64_t q = code.n - 1;
        w = {q - upow(code.p, l), q - 1, q, q + 1};
    } else {
        throw ParamError("no allowed-weight set for generic codes");
    }
    return w;
}

BigInt WeightDistribution::total() const {
    BigInt t = 0;
    for (const auto& [w, c] : counts) t += c;
    return t;
}

BigInt WeightDistribution::at(uint64_t w) const {
    auto it = counts.find(w);
    return it == counts.end() ? BigInt(0) : it->second;
}

uint64_t WeightDistribution::min_distance() const {
    for (const auto& [w, c] : counts)
        if (w > 0 && c > 0) return w;
    throw ConsistencyError("distribution has no nonzero weight");
}

bool WeightDistribution::same_counts(const WeightDistribution& other) const {
    auto nonzero = [](const std::map<uint64_t, BigInt>& m) {
        std::map<uint64_t, BigInt> r;
        for (const auto& [w, c] : m)
            if (c != 0) r[w] = c;
        return r;
    };
    return n == other.n && nonzero(counts) == nonzero(other.counts);
}

WeightDistribution weight_distribution_brute(const LinearCode& code, const BruteOptions& opts) {
    check_volume(code, opts);
    const FieldCtx& F = *code.field;
    const uint64_t q = F.q();
    WeightDistribution wd;
    wd.n = code.n;
    wd.source = WeightDistribution::Source::BruteForce;
    wd.detail = "projective enumeration";
    wd.counts[0] = 1;

    if (code.family == Family::ExtendedPrimitive) {
        ProjectiveClasses cls{q, code.h + 1};
        const uint64_t total = cls.total();
        std::vector<std::vector<uint64_t>> kd_counts(opts.workers <= 1 ? 1 : opts.workers,
                                                     std::vector<uint64_t>(code.h + 1, 0));
        run_partitioned(total, opts.workers, [&](unsigned widx, uint64_t lo, uint64_t hi) {
            KernelCounter eng(F, code.h);
            std::vector<uint32_t> a(code.h + 1);
            cls.decode(lo, a.data());
            auto& mine = kd_counts[widx];
            for (uint64_t i = lo; i < hi; ++i) {
                mine[eng.kernel_dim(a.data())] += 1;
                if (i + 1 < hi) cls.next(a.data());
            }
        });
        std::vector<uint64_t> kd(code.h + 1, 0);
        for (const auto& v : kd_counts)
            for (size_t i = 0; i <= code.h; ++i) kd[i] += v[i];
        // per a-class with kernel dim t: p^(m-t) solvable constants of
        // weight q - p^t, the remaining q - p^(m-t) of weight q
        BigInt classes_at_q = 1; // the (c,0) class
        for (uint32_t t = 0; t <= code.h; ++t) {
            if (kd[t] == 0) continue;
            uint64_t image = upow(code.p, code.m - t);
            wd.counts[q - upow(code.p, t)] += BigInt(kd[t]) * image;
            classes_at_q += BigInt(kd[t]) * (q - image);
        }
        wd.counts[q] += classes_at_q;
        for (auto& [w, c] : wd.counts)
            if (w != 0) c *= BigInt(q - 1);
        return wd;
    }

    if (code.family == Family::UnitCircle) {
        CirclePoints pts(code);
        ProjectiveClasses cls{q, 4};
        const uint64_t total = cls.total();
        std::vector<std::map<uint64_t, uint64_t>> hists(opts.workers <= 1 ? 1 : opts.workers);
        run_partitioned(total, opts.workers, [&](unsigned widx, uint64_t lo, uint64_t hi) {
            std::vector<uint32_t> msg(4);
            cls.decode(lo, msg.data());
            auto& hist = hists[widx];
            const size_t npts = pts.x.size();
            for (uint64_t i = lo; i < hi; ++i) {
                uint64_t zeros = 0;
                for (size_t j = 0; j < npts; ++j) zeros += pts.eval(F, msg.data(), j) == 0;
                hist[code.n - zeros] += 1;
                if (i + 1 < hi) cls.next(msg.data());
            }
        });
        for (const auto& hist : hists)
            for (const auto& [w, c] : hist) wd.counts[w] += BigInt(c) * BigInt(q - 1);
        return wd;
    }

    // generic: literal evaluation of one representative per class
    ProjectiveClasses cls{q, code.k};
    const uint64_t total = cls.total();
    std::vector<std::map<uint64_t, uint64_t>> hists(opts.workers <= 1 ? 1 : opts.workers);
    run_partitioned(total, opts.workers, [&](unsigned widx, uint64_t lo, uint64_t hi) {
        std::vector<uint32_t> msg(code.k);
        cls.decode(lo, msg.data());
        auto& hist = hists[widx];
        for (uint64_t i = lo; i < hi; ++i) {
            hist[hamming_weight(encode(code, msg))] += 1;
            if (i + 1 < hi) cls.next(msg.data());
        }
    });
    for (const auto& hist : hists)
        for (const auto& [w, c] : hist) wd.counts[w] += BigInt(c) * BigInt(q - 1);
    return wd;
}

void for_each_class_of_weight(const LinearCode& code, uint64_t w, const BruteOptions& opts,
                              const std::function<void(const std::vector<uint32_t>&)>& fn) {
    check_volume(code, opts);
    const FieldCtx& F = *code.field;
    const uint64_t q = F.q();
    if (w == 0 || w > code.n) return;

    if (code.family == Family::ExtendedPrimitive) {
        // classes (c, a): the kernel dimension of a fixes the weight;
        // the solvable constants are exactly the image of the linearized map
        auto allowed = allowed_nonzero_weights(code);
        if (!std::binary_search(allowed.begin(), allowed.end(), w)) return;
        std::vector<uint32_t> msg(code.k, 0);
        if (w == code.n) { msg[0] = 1; fn(msg); } // the (c, 0) class
        ProjectiveClasses cls{q, code.h + 1};
        std::vector<uint32_t> a(code.h + 1);
        cls.decode(0, a.data());
        KernelCounter eng(F, code.h);
        GfpMatrix M(code.p, code.m, code.m);
        std::vector<bool> in_image(w == code.n ? q : 0, false);
        bool more = true;
        for (uint64_t i = 0, total = cls.total(); i < total && more; ++i, more = cls.next(a.data())) {
            for (uint32_t j = 0; j < code.m; ++j) {
                uint32_t v = eng.image_of_basis(j, a.data());
                for (uint32_t r = 0; r < code.m; ++r) { M.at(r, j) = v % code.p; v /= code.p; }
            }
            GfpMatrix ech = M;
            std::vector<uint32_t> pivots;
            {
                size_t rk = 0;
                for (size_t col = 0; col < ech.cols && rk < ech.rows; ++col) {
                    size_t piv = rk;
                    while (piv < ech.rows && ech.at(piv, col) == 0) ++piv;
                    if (piv == ech.rows) continue;
                    for (size_t c = col; c < ech.cols; ++c) std::swap(ech.at(rk, c), ech.at(piv, c));
                    uint32_t c0 = ech.at(rk, col), ipc = 1;
                    for (uint32_t e = 0; e + 2 < code.p; ++e) ipc = ipc * c0 % code.p;
                    if (code.p == 2) ipc = c0;
                    for (size_t r2 = rk + 1; r2 < ech.rows; ++r2) {
                        uint32_t fac = ech.at(r2, col) * ipc % code.p;
                        if (fac == 0) continue;
                        for (size_t c = col; c < ech.cols; ++c)
                            ech.at(r2, c) = (ech.at(r2, c) + (code.p - fac) * ech.at(rk, c)) % code.p;
                    }
                    pivots.push_back(uint32_t(col));
                    ++rk;
                }
            }
            uint32_t kd = code.m - uint32_t(pivots.size());
            bool want_image = code.n - upow(code.p, kd) == w;
            if (!want_image && w != code.n) continue;
            std::vector<uint32_t> basis_elems;
            for (uint32_t col : pivots) {
                uint32_t idx = 0;
                for (uint32_t r = code.m; r-- > 0;) idx = idx * code.p + M.at(r, col);
                basis_elems.push_back(idx);
            }
            uint64_t combos = upow(code.p, uint32_t(basis_elems.size()));
            for (uint32_t j = 0; j <= code.h; ++j) msg[j + 1] = a[j];
            if (want_image) {
                for (uint64_t t = 0; t < combos; ++t) {
                    uint64_t tt = t;
                    uint32_t c = 0;
                    for (uint32_t b : basis_elems) {
                        uint32_t lambda = uint32_t(tt % code.p);
                        tt /= code.p;
                        if (lambda) c = F.add(c, F.mul(lambda, b));
                    }
                    msg[0] = c;
                    fn(msg);
                }
            } else { // w == n: constants outside the image
                std::fill(in_image.begin(), in_image.end(), false);
                for (uint64_t t = 0; t < combos; ++t) {
                    uint64_t tt = t;
                    uint32_t c = 0;
                    for (uint32_t b : basis_elems) {
                        uint32_t lambda = uint32_t(tt % code.p);
                        tt /= code.p;
                        if (lambda) c = F.add(c, F.mul(lambda, b));
                    }
                    in_image[c] = true;
                }
                for (uint32_t c = 0; c < q; ++c) {
                    if (in_image[c]) continue;
                    msg[0] = c;
                    fn(msg);
                }
            }
        }
        return;
    }

    if (code.family == Family::UnitCircle) {
        CirclePoints pts(code);
        ProjectiveClasses cls{q, 4};
        std::vector<uint32_t> msg(4);
        cls.decode(0, msg.data());
        bool more = true;
        const size_t npts = pts.x.size();
        for (uint64_t i = 0, total = cls.total(); i < total && more; ++i, more = cls.next(msg.data())) {
            uint64_t zeros = 0;
            for (size_t j = 0; j < npts; ++j) zeros += pts.eval(F, msg.data(), j) == 0;
            if (code.n - zeros == w) fn(msg);
        }
        return;
    }

    ProjectiveClasses cls{q, code.k};
    std::vector<uint32_t> msg(code.k);
    cls.decode(0, msg.data());
    bool more = true;
    for (uint64_t i = 0, total = cls.total(); i < total && more; ++i, more = cls.next(msg.data())) {
        if (hamming_weight(encode(code, msg)) == w) fn(msg);
    }
}

std::vector<std::vector<uint32_t>> supports_of_weight(const LinearCode& code, uint64_t w,
                                                      const BruteOptions& opts) {
    std::vector<std::vector<uint32_t>> out;
    if (w == 0 || w > code.n) return out;
    if (w == code.n && code.family != Family::Generic) {
        // (1, 0, ..., 0) encodes the constant-one polynomial: weight n
        std::vector<uint32_t> full(code.n);
        for (uint32_t j = 0; j < code.n; ++j) full[j] = j;
        out.push_back(std::move(full));
        return out;
    }
    std::set<std::vector<uint32_t>> seen;
    for_each_class_of_weight(code, w, opts, [&](const std::vector<uint32_t>& msg) {
        std::vector<uint32_t> word = encode(code, msg);
        std::vector<uint32_t> sup;
        sup.reserve(w);
        for (uint32_t j = 0; j < code.n; ++j)
            if (word[j] != 0) sup.push_back(j);
        if (sup.size() != w) throw ConsistencyError("support extraction weight mismatch");
        seen.insert(std::move(sup));
    });
    out.assign(seen.begin(), seen.end());
    return out;
}

std::string closed_form_name(ClosedFormCase c) {
    switch (c) {
        case ClosedFormCase::BinaryH2: return "closed-form(p=2,h=2)";
        case ClosedFormCase::OddH2: return "closed-form(p>2,h=2)";
        case ClosedFormCase::BinaryH3: return "closed-form(p=2,h=3)";
        default: return "closed-form(circle)";
    }
}

WeightDistribution weight_distribution_closed(ClosedFormCase c, uint32_t p, uint32_t m, uint32_t h_or_s) {
    WeightDistribution wd;
    wd.source = WeightDistribution::Source::ClosedForm;
    wd.detail = closed_form_name(c);
    BigInt q = bpow(BigInt(p), m);
    auto put = [&](const BigInt& w, const BigInt& num, const BigInt& den, const char* tag) {
        BigInt v = exact_div(num, den, tag);
        if (v < 0) throw ConsistencyError(std::string(tag) + ": negative coefficient");
        wd.counts[w.convert_to<uint64_t>()] += v;
    };
    switch (c) {
        case ClosedFormCase::BinaryH2: {
            if (p != 2 || h_or_s != 2 || m <= 2) throw ParamError("case requires p=2, h=2, m>2");
            wd.n = q.convert_to<uint64_t>();
            wd.counts[0] = 1;
            put(q - 4, q * (q - 1) * (q - 1) * (q - 2), 24, "A[q-4]");
            put(q - 2, q * (q - 1) * (q - 1) * (q + 4), 4, "A[q-2]");
            put(q - 1, q * (q - 1) * (q * q + 8), 3, "A[q-1]");
            put(q, (q - 1) * (3 * q * q * q + 3 * q * q - 6 * q + 8), 8, "A[q]");
            if (wd.total() != bpow(q, 4)) throw ConsistencyError("closed form total != q^4");
            break;
        }
        case ClosedFormCase::OddH2: {
            if (p == 2 || h_or_s != 2 || m <= 2) throw ParamError("case requires p>2, h=2, m>2");
            wd.n = q.convert_to<uint64_t>();
            wd.counts[0] = 1;
            BigInt P = p;
            put(q - P * P, q * (q - P) * (q - 1) * (q - 1), P * P * P * (P - 1) * (P - 1) * (P + 1),
                "A[q-p^2]");
            put(q - P, q * (q - 1) * (q - 1) * (P * P * q + P * P - q - P * q), P * P * (P - 1) * (P - 1),
                "A[q-p]");
            put(q - 1,
                q * (q - 1) *
                    (P * P * P * q * q + P * P * P * q + P * P * P - 2 * P * P * q * q - P * P * q -
                     P * q * q - 2 * P * q + 3 * q * q),
                (P - 1) * (P - 1) * (P + 1), "A[q-1]");
            put(q,
                (q - 1) * (P * P * P + P * P * q * q * q - P * P * q + P * q * q - P * q - q * q * q + q * q),
                P * P * P, "A[q]");
            if (wd.total() != bpow(q, 4)) throw ConsistencyError("closed form total != q^4");
            break;
        }
        case ClosedFormCase::BinaryH3: {
            if (p != 2 || h_or_s != 3 || m <= 3) throw ParamError("case requires p=2, h=3, m>3");
            wd.n = q.convert_to<uint64_t>();
            wd.counts[0] = 1;
            put(q - 8, q * (q - 1) * (q - 1) * (q - 2) * (q - 4), 1344, "A[q-8]");
            put(q - 4, q * (q - 1) * (q - 1) * (q - 2) * (3 * q + 8), 96, "A[q-4]");
            put(q - 2, q * (q - 1) * (q - 1) * (7 * q * q + 12 * q + 32), 24, "A[q-2]");
            put(q - 1, 2 * q * (q - 1) * (3 * q * q * q + 7 * q * q + 32), 21, "A[q-1]");
            put(q, (q - 1) * (25 * bpow(q, 4) + 9 * q * q * q + 22 * q * q - 56 * q + 64), 64, "A[q]");
            if (wd.total() != bpow(q, 5)) throw ConsistencyError("closed form total != q^5");
            break;
        }
        case ClosedFormCase::Circle: {
            if (p == 2) throw ParamError("circle case requires odd p");
            if (m < 2 || h_or_s < 1 || h_or_s > m - 1) throw ParamError("circle case requires m>=2, 1<=s<=m-1");
            uint32_t l = std::gcd(m, h_or_s);
            BigInt P = bpow(BigInt(p), l);
            wd.n = (q + 1).convert_to<uint64_t>();
            wd.counts[0] = 1;
            BigInt q2 = q * q, q4 = bpow(q, 4);
            put(q + 1, (q + 1) * q * (q - 1) * (q - 1) * (P - q + P * q2 + 2 * P * q4 + q2 + 2 * q4),
                2 * (P + 1), "A[q+1]");
            put(q, (q + 1) * (q + 1) * (q - 1) * (P - P * q - q + P * q2 - P * q * q2 + P * q4 + q2), P,
                "A[q]");
            put(q - 1, (q + 1) * (q + 1) * q * (q - 1) * (P - q + P * q2 - q2), 2 * (P - 1), "A[q-1]");
            put(q - P, (q + 1) * (q + 1) * q * (q - 1) * (q - 1), P * (P * P - 1), "A[q-p^l]");
            if (wd.total() != bpow(q2, 4)) throw ConsistencyError("closed form total != (q^2)^4");
            break;
        }
    }
    for (const auto& [w, cnt] : wd.counts)
        if (cnt < 0) throw ConsistencyError("closed form produced a negative count");
    return wd;
}

ClosedFormCase closed_form_for(const LinearCode& code) {
    if (code.family == Family::ExtendedPrimitive) {
        if (code.p == 2 && code.h == 2 && code.m > 2) return ClosedFormCase::BinaryH2;
        if (code.p != 2 && code.h == 2 && code.m > 2) return ClosedFormCase::OddH2;
        if (code.p == 2 && code.h == 3 && code.m > 3) return ClosedFormCase::BinaryH3;
        throw ParamError("no closed-form enumerator for these parameters");
    }
    if (code.family == Family::UnitCircle) return ClosedFormCase::Circle;
    throw ParamError("no closed-form enumerator for generic codes");
}

BigInt DualLowWeightReport::count_at(uint32_t w) const {
    auto it = counts.find(w);
    return it == counts.end() ? BigInt(0) : it->second;
}

DualLowWeightReport dual_low_weight_search(const LinearCode& code, uint32_t w_max,
                                           uint64_t max_rank_checks, bool stop_at_first_weight) {
    if (w_max < 1 || w_max > 5) throw ParamError("w_max must be in [1, 5]");
    const FieldCtx& F = *code.field;
    DualLowWeightReport rep;
    rep.n = code.n;
    rep.w_max = w_max;
    uint64_t checks = 0;
    for (uint32_t w = 1; w <= w_max; ++w) {
        BigInt c = binomial(code.n, w);
        if (BigInt(checks) + c > BigInt(max_rank_checks))
            throw BoundError("dual low-weight search bound exceeded");
        checks += c.convert_to<uint64_t>();
        std::vector<uint32_t> cols(w);
        for (uint32_t i = 0; i < w; ++i) cols[i] = i;
        std::vector<uint32_t> mat(size_t(code.k) * w);
        BigInt classes = 0;
        auto& sups = rep.supports[w];
        bool more = code.n >= w;
        while (more) {
            for (uint32_t r = 0; r < code.k; ++r)
                for (uint32_t t = 0; t < w; ++t) mat[size_t(r) * w + t] = code.gen_at(r, cols[t]);
            auto basis = field_nullspace(F, mat, code.k, w);
            if (!basis.empty()) {
                if (basis.size() == 1) {
                    bool full = std::all_of(basis[0].begin(), basis[0].end(),
                                            [](uint32_t v) { return v != 0; });
                    if (full) {
                        classes += 1;
                        sups.push_back(cols);
                    }
                } else {
                    // several independent dependencies on these columns:
                    // count projective null vectors with no zero coordinate
                    ProjectiveClasses pc{F.q(), uint32_t(basis.size())};
                    if (pc.total() > 1'000'000) throw BoundError("nullspace enumeration too large");
                    std::vector<uint32_t> lam(basis.size());
                    pc.decode(0, lam.data());
                    uint64_t full_reps = 0;
                    bool m2 = true;
                    for (uint64_t i = 0, tot = pc.total(); i < tot && m2; ++i, m2 = pc.next(lam.data())) {
                        bool full = true;
                        for (uint32_t t = 0; t < w && full; ++t) {
                            uint32_t v = 0;
                            for (size_t b = 0; b < basis.size(); ++b)
                                v = F.add(v, F.mul(lam[b], basis[b][t]));
                            full = v != 0;
                        }
                        if (full) ++full_reps;
                    }
                    if (full_reps > 0) {
                        rep.unique_word_per_support = false;
                        classes += full_reps;
                        sups.push_back(cols);
                    }
                }
            }
            // next w-combination
            more = false;
            for (uint32_t i = w; i-- > 0;) {
                if (cols[i] + (w - i) < code.n) {
                    ++cols[i];
                    for (uint32_t j = i + 1; j < w; ++j) cols[j] = cols[j - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
        rep.counts[w] = classes * BigInt(F.q() - 1);
        if (sups.empty()) rep.supports.erase(w);
        if (rep.d_perp == 0 && classes > 0) {
            rep.d_perp = w;
            if (stop_at_first_weight) break;
        }
    }
    return rep;
}

uint64_t min_distance(const LinearCode& code, const BruteOptions& opts) {
    return weight_distribution_brute(code, opts).min_distance();
}

DistanceCertificate certify_min_distance(const LinearCode& code, const BruteOptions& opts,
                                         uint64_t samples, uint64_t seed) {
    DistanceCertificate cert;
    if (enumeration_volume(code) <= opts.max_messages) {
        cert.d = min_distance(code, opts);
        cert.by_enumeration = true;
        cert.note = "full projective enumeration";
        return cert;
    }
    if (code.family != Family::ExtendedPrimitive || (code.m % code.h != 0 && code.h != code.m - 1))
        throw BoundError("enumeration bound exceeded and no witness certificate applies");
    const FieldCtx& F = *code.field;
    uint64_t target = code.n - upow(code.p, code.h);
    std::vector<uint32_t> msg(code.k, 0);
    if (code.m % code.h == 0) {
        msg[0] = 0;
        msg[1] = F.neg(1); // a_0 = -1
        msg[code.k - 1] = 1; // a_h = 1: x^(p^h) - x
    } else {
        for (uint32_t i = 1; i < code.k; ++i) msg[i] = 1; // trace polynomial
    }
    uint64_t wf = codeword_weight_fast(code, msg);
    uint64_t wl = hamming_weight(encode(code, msg));
    if (wf != wl || wf != target) throw ConsistencyError("witness word weight mismatch");
    auto allowed = allowed_nonzero_weights(code);
    std::mt19937_64 rng(seed);
    for (uint64_t t = 0; t < samples; ++t) {
        auto m = random_nonzero_message(rng, code.k, F.q());
        uint64_t w = codeword_weight_fast(code, m);
        if (!std::binary_search(allowed.begin(), allowed.end(), w))
            throw ConsistencyError("sampled weight outside the allowed set");
    }
    cert.d = target;
    cert.by_witness = true;
    cert.note = "allowed-weight membership (sampled) + explicit minimum-weight word";
    return cert;
}

bool ParityCheck::contains(const std::vector<uint32_t>& word) const {
    if (word.size() != n) throw ParamError("word length must equal n");
    const FieldCtx& F = *field;
    for (uint32_t r = 0; r < n - k; ++r) {
        uint32_t acc = 0;
        const uint32_t* row = &rows[size_t(r) * n];
        for (uint32_t j = 0; j < n; ++j)
            if (row[j] != 0 && word[j] != 0) acc = F.add(acc, F.mul(row[j], word[j]));
        if (acc != 0) return false;
    }
    return true;
}

ParityCheck parity_check(const LinearCode& code) {
    const FieldCtx& F = *code.field;
    std::vector<uint32_t> rref = code.gen;
    std::vector<size_t> pivots = field_rref(F, rref, code.k, code.n);
    if (pivots.size() != code.k) throw ConsistencyError("generator not full rank");
    std::vector<bool> is_pivot(code.n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    ParityCheck H;
    H.field = code.field;
    H.n = code.n;
    H.k = code.k;
    H.rows.assign(size_t(code.n - code.k) * code.n, 0);
    uint32_t r = 0;
    for (uint32_t fc = 0; fc < code.n; ++fc) {
        if (is_pivot[fc]) continue;
        uint32_t* row = &H.rows[size_t(r) * code.n];
        row[fc] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr) row[pivots[pr]] = F.neg(rref[pr * code.n + fc]);
        ++r;
    }
    return H;
}

bool membership(const LinearCode& code, const std::vector<uint32_t>& word) {
    return parity_check(code).contains(word);
}

bool affine_invariance_check(const LinearCode& code, uint32_t trials, uint64_t seed) {
    if (code.family != Family::ExtendedPrimitive) throw ParamError("affine invariance applies to the extended family");
    const FieldCtx& F = *code.field;
    const uint32_t q = F.q();
    std::vector<uint32_t> pos_of_label(q, 0);
    for (uint32_t j = 0; j < code.n; ++j) pos_of_label[code.column_labels[j]] = j;
    ParityCheck H = parity_check(code);
    std::mt19937_64 rng(seed);
    std::vector<uint32_t> out(code.n);
    for (uint32_t t = 0; t < trials; ++t) {
        uint32_t u = 1 + uint32_t(rng() % (q - 1));
        uint32_t v = uint32_t(rng() % q);
        auto msg = random_nonzero_message(rng, code.k, q);
        auto word = encode(code, msg);
        for (uint32_t j = 0; j < code.n; ++j) {
            uint32_t image = F.add(F.mul(u, code.column_labels[j]), v);
            out[pos_of_label[image]] = word[j];
        }
        if (!H.contains(out)) return false;
    }
    return true;
}

} // namespace fwcodes
