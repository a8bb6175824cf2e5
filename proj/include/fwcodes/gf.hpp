#ifndef FWCODES_GF_HPP
#define FWCODES_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "fwcodes/common.hpp"

namespace fwcodes {

/// Largest field size that gets full exp/log tables. Larger fields are
/// rejected instead of silently falling back to slow arithmetic.
inline constexpr uint64_t kMaxFieldSize = uint64_t(1) << 20;

/// Largest base field size for which GF(q^2) towers are constructed.
inline constexpr uint64_t kMaxTowerBase = uint64_t(1) << 10;

bool is_prime(uint64_t n);
std::vector<uint64_t> prime_factors(uint64_t n); // distinct primes, ascending

/// Conway polynomial for GF(p^m), coefficients constant-first, monic.
/// Computed from the definition (lexicographically least primitive
/// polynomial, in the alternating-sign word order, compatible with the
/// Conway polynomials of all proper divisor degrees) and memoized.
/// Throws BoundError when the candidate search exceeds its cap.
std::vector<uint32_t> conway_polynomial(uint32_t p, uint32_t m);

/// Describes GF(p^m) as GF(p)[x]/(modulus). modulus is monic of degree m,
/// coefficients constant-first in [0, p).
struct FieldSpec {
    uint32_t p = 0;
    uint32_t m = 0;
    std::vector<uint32_t> modulus;

    uint64_t q() const {
        uint64_t r = 1;
        for (uint32_t i = 0; i < m; ++i) r *= p;
        return r;
    }
    bool operator==(const FieldSpec&) const = default;
};

class Fq;

/// An explicit finite field GF(p^m), q = p^m <= 2^20, with exp/log tables
/// and a verified primitive element alpha.
///
/// Elements are identified by their index in [0, q): the index's base-p
/// digits are the coordinates in the polynomial basis 1, x, x^2, ...
/// (constant digit first). In particular the prime subfield GF(p) occupies
/// indices 0..p-1 and, for p = 2, index addition is plain XOR.
///
/// Immutable after construction and safe to share across threads; every
/// operation is a pure function of its inputs.
class FieldCtx {
  public:
    /// Conway-polynomial default modulus.
    static std::shared_ptr<const FieldCtx> make(uint32_t p, uint32_t m);
    /// User-supplied monic irreducible modulus (constant-first, degree m).
    static std::shared_ptr<const FieldCtx> make(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);

    const FieldSpec& spec() const { return spec_; }
    uint32_t p() const { return spec_.p; }
    uint32_t m() const { return spec_.m; }
    uint32_t q() const { return q_; }
    uint32_t alpha() const { return alpha_; }
    /// True when the modulus equals the Conway polynomial for (p, m).
    bool conway_default() const { return conway_default_; }

    // arithmetic on element indices
    uint32_t add(uint32_t a, uint32_t b) const {
        if (spec_.p == 2) return a ^ b;
        if (a == 0) return b;
        if (b == 0) return a;
        uint32_t i = log_[a], j = log_[b];
        uint32_t d = j >= i ? j - i : j + qm1_ - i;
        uint32_t z = zech_[d];
        if (z == kNoLog) return 0;
        uint32_t e = i + z;
        if (e >= qm1_) e -= qm1_;
        return exp_[e];
    }
    uint32_t neg(uint32_t a) const {
        if (spec_.p == 2 || a == 0) return a;
        uint32_t e = log_[a] + half_;
        if (e >= qm1_) e -= qm1_;
        return exp_[e];
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        uint32_t e = log_[a] + log_[b];
        if (e >= qm1_) e -= qm1_;
        return exp_[e];
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw ParamError("field inverse of zero");
        uint32_t l = log_[a];
        return exp_[l == 0 ? 0 : qm1_ - l];
    }
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, uint64_t e) const {
        if (a == 0) return e == 0 ? 1u : 0u;
        return exp_[uint64_t(log_[a]) * (e % qm1_) % qm1_];
    }
    /// x^(p^i) for any i >= 0.
    uint32_t frobenius(uint32_t x, uint64_t i) const {
        if (x == 0) return 0;
        uint64_t f = 1;
        for (uint64_t k = 0; k < i % spec_.m; ++k) f = f * spec_.p % qm1_; // p^m == 1 action on exponents
        return exp_[uint64_t(log_[x]) * f % qm1_];
    }
    /// Tr(x) = x + x^p + ... + x^(p^(m-1)); result index < p.
    uint32_t trace_to_prime(uint32_t x) const {
        uint32_t t = 0, y = x;
        for (uint32_t i = 0; i < spec_.m; ++i) {
            t = add(t, y);
            y = pow(y, spec_.p);
        }
        return t;
    }
    /// alpha^k (k arbitrary).
    uint32_t exp(uint64_t k) const { return exp_[k % qm1_]; }
    /// discrete log of a nonzero element, in [0, q-1).
    uint32_t log(uint32_t a) const {
        if (a == 0) throw ParamError("discrete log of zero");
        return log_[a];
    }
    uint64_t mult_order(uint32_t a) const;

    std::vector<uint32_t> digits(uint32_t idx) const {
        std::vector<uint32_t> d(spec_.m);
        for (uint32_t i = 0; i < spec_.m; ++i) { d[i] = idx % spec_.p; idx /= spec_.p; }
        return d;
    }
    uint32_t from_digits(const std::vector<uint32_t>& d) const {
        uint32_t idx = 0;
        for (uint32_t i = spec_.m; i-- > 0;) idx = idx * spec_.p + d[i] % spec_.p;
        return idx;
    }

    Fq element(uint32_t idx) const;
    Fq zero() const;
    Fq one() const;
    Fq generator() const;

    bool same_field(const FieldCtx& other) const { return this == &other || spec_ == other.spec_; }

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

  private:
    FieldCtx() = default;
    static std::shared_ptr<const FieldCtx> build(uint32_t p, uint32_t m, std::vector<uint32_t> modulus,
                                                 bool modulus_was_given);

    static constexpr uint32_t kNoLog = 0xffffffffu;

    FieldSpec spec_;
    uint32_t q_ = 0;
    uint32_t qm1_ = 0;  // q - 1
    uint32_t half_ = 0; // (q-1)/2 for odd p: log of -1
    uint32_t alpha_ = 0;
    bool conway_default_ = false;
    std::vector<uint32_t> exp_;  // size q-1
    std::vector<uint32_t> log_;  // size q, log_[0] = kNoLog
    std::vector<uint32_t> zech_; // odd p only: zech_[k] = log(1 + alpha^k), kNoLog if zero
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Field element bound to its context; convenience wrapper over indices.
class Fq {
  public:
    Fq() = default;
    Fq(const FieldCtx& f, uint32_t idx) : f_(&f), v_(idx) {}

    uint32_t index() const { return v_; }
    const FieldCtx& field() const {
        if (!f_) throw ParamError("element has no field");
        return *f_;
    }
    bool is_zero() const { return v_ == 0; }

    friend Fq operator+(const Fq& a, const Fq& b) { return Fq(a.common(b), a.field().add(a.v_, b.v_)); }
    friend Fq operator-(const Fq& a, const Fq& b) { return Fq(a.common(b), a.field().sub(a.v_, b.v_)); }
    friend Fq operator*(const Fq& a, const Fq& b) { return Fq(a.common(b), a.field().mul(a.v_, b.v_)); }
    friend Fq operator/(const Fq& a, const Fq& b) { return Fq(a.common(b), a.field().div(a.v_, b.v_)); }
    Fq operator-() const { return Fq(field(), field().neg(v_)); }
    Fq inverse() const { return Fq(field(), field().inv(v_)); }
    Fq pow(uint64_t e) const { return Fq(field(), field().pow(v_, e)); }
    Fq frobenius(uint64_t i) const { return Fq(field(), field().frobenius(v_, i)); }

    friend bool operator==(const Fq& a, const Fq& b) {
        if (a.f_ && b.f_ && !a.f_->same_field(*b.f_)) throw ParamError("mixed-field comparison");
        return a.v_ == b.v_;
    }

  private:
    const FieldCtx& common(const Fq& b) const {
        if (!f_ || !b.f_ || !f_->same_field(*b.f_)) throw ParamError("mixed-field operands");
        return *f_;
    }
    const FieldCtx* f_ = nullptr;
    uint32_t v_ = 0;
};

inline Fq FieldCtx::element(uint32_t idx) const {
    if (idx >= q_) throw ParamError("element index out of range");
    return Fq(*this, idx);
}
inline Fq FieldCtx::zero() const { return Fq(*this, 0); }
inline Fq FieldCtx::one() const { return Fq(*this, 1); }
inline Fq FieldCtx::generator() const { return Fq(*this, alpha_); }

/// GF(q) sitting inside GF(q^2), with a verified embedding and the cyclic
/// group U_{q+1} = {x : x^(q+1) = 1} listed as consecutive powers of
/// gamma^(q-1) for the extension's primitive gamma.
class TowerCtx {
  public:
    static std::shared_ptr<const TowerCtx> make(FieldPtr base);

    const FieldCtx& base() const { return *base_; }
    const FieldCtx& ext() const { return *ext_; }
    FieldPtr base_ptr() const { return base_; }
    FieldPtr ext_ptr() const { return ext_; }

    /// base element index -> ext element index (field homomorphism).
    uint32_t embed(uint32_t base_idx) const { return embed_[base_idx]; }
    /// the q+1 elements of U_{q+1} in ext, ordered as powers of gamma^(q-1).
    const std::vector<uint32_t>& circle() const { return circle_; }

    TowerCtx(const TowerCtx&) = delete;
    TowerCtx& operator=(const TowerCtx&) = delete;

  private:
    TowerCtx() = default;
    FieldPtr base_, ext_;
    std::vector<uint32_t> embed_;
    std::vector<uint32_t> circle_;
};

using TowerPtr = std::shared_ptr<const TowerCtx>;

/// U_{q+1} as bound elements, in the deterministic circle order.
std::vector<Fq> unit_circle(const TowerCtx& tower);

} // namespace fwcodes

#endif
