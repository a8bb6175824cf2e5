#include "fwcodes/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace fwcodes {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

// Dense polynomials over GF(p), coefficients constant-first, not
// necessarily trimmed. Everything below is only used at construction
// time, so clarity beats speed.

using Poly = std::vector<uint32_t>;

size_t degree(const Poly& f) {
    size_t d = f.size();
    while (d > 0 && f[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1; // zero polynomial reports degree 0
}

bool is_zero_poly(const Poly& f) {
    return std::all_of(f.begin(), f.end(), [](uint32_t c) { return c == 0; });
}

// a mod f, f monic of degree m
Poly poly_mod(Poly a, const Poly& f, uint32_t p) {
    size_t m = f.size() - 1;
    for (size_t i = a.size(); i-- > m;) {
        uint32_t c = a[i];
        if (c == 0) continue;
        a[i] = 0;
        for (size_t j = 0; j < m; ++j) {
            uint64_t t = uint64_t(c) * f[j] % p;
            a[i - m + j] = uint32_t((a[i - m + j] + p - t) % p);
        }
    }
    a.resize(m);
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = uint32_t((prod[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
    return poly_mod(std::move(prod), f, p);
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint32_t p) {
    size_t m = f.size() - 1;
    Poly r(m, 0);
    r[0] = 1;
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
    auto inv_mod_p = [p](uint32_t c) {
        // p prime, c != 0
        uint32_t r = 1;
        uint64_t base = c, e = p - 2;
        while (e) {
            if (e & 1) r = uint32_t(uint64_t(r) * base % p);
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    while (!is_zero_poly(b)) {
        size_t db = degree(b);
        uint32_t lead_inv = inv_mod_p(b[db]);
        // a mod b via long division
        while (!is_zero_poly(a) && degree(a) >= db) {
            size_t da = degree(a);
            uint32_t c = uint32_t(uint64_t(a[da]) * lead_inv % p);
            if (c != 0)
                for (size_t j = 0; j <= db; ++j) {
                    uint64_t t = uint64_t(c) * b[j] % p;
                    a[da - db + j] = uint32_t((a[da - db + j] + p - t) % p);
                }
            if (a[da] != 0) break; // defensive; cannot happen
        }
        std::swap(a, b);
    }
    return a;
}

bool poly_is_one(const Poly& f) {
    return !f.empty() && f[0] == 1 &&
           std::all_of(f.begin() + 1, f.end(), [](uint32_t c) { return c == 0; });
}

Poly x_poly(size_t m) {
    Poly x(std::max<size_t>(m, 2), 0);
    x[1] = 1;
    return x;
}

bool poly_irreducible(const Poly& f, uint32_t p) {
    size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    // x^(p^m) == x mod f, and gcd(x^(p^(m/r)) - x, f) == 1 for prime r | m
    Poly xp = x_poly(m); // will hold x^(p^j) mod f
    std::vector<Poly> frob(m + 1);
    frob[0] = poly_mod(x_poly(m), f, p);
    for (size_t j = 1; j <= m; ++j) {
        xp = poly_powmod(xp, p, f, p);
        frob[j] = xp;
    }
    Poly xm = frob[m];
    Poly xr = poly_mod(x_poly(m), f, p);
    if (xm != xr) return false;
    for (uint64_t r : prime_factors(m)) {
        Poly dif = frob[m / r];
        for (size_t j = 0; j < dif.size() && j < xr.size(); ++j)
            dif[j] = uint32_t((dif[j] + p - xr[j]) % p);
        if (is_zero_poly(dif)) return false; // x^(p^(m/r)) == x: f splits over a subfield
        Poly g = poly_gcd(f, dif, p);
        if (is_zero_poly(g) || degree(g) > 0) return false;
    }
    return true;
}

// order of the class of `a` in GF(p)[x]/(f) equals q-1?
bool class_is_primitive(const Poly& a, const Poly& f, uint32_t p, uint64_t q) {
    if (is_zero_poly(a)) return false;
    for (uint64_t r : prime_factors(q - 1)) {
        Poly t = poly_powmod(a, (q - 1) / r, f, p);
        if (poly_is_one(t)) return false;
    }
    // a^(q-1) must be 1 (guaranteed for nonzero classes mod irreducible f)
    return true;
}

uint32_t smallest_primitive_root(uint32_t p) {
    if (p == 2) return 1;
    auto fac = prime_factors(p - 1);
    for (uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint64_t r : fac) {
            uint64_t e = (p - 1) / r, acc = 1, base = g;
            while (e) {
                if (e & 1) acc = acc * base % p;
                base = base * base % p;
                e >>= 1;
            }
            if (acc == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw ConsistencyError("no primitive root found (p not prime?)");
}

// evaluate a GF(p)-coefficient polynomial at a class g in GF(p)[x]/(f)
Poly eval_at_class(const std::vector<uint32_t>& coeffs, const Poly& g, const Poly& f, uint32_t p) {
    size_t m = f.size() - 1;
    Poly acc(m, 0);
    for (size_t i = coeffs.size(); i-- > 0;) {
        acc = poly_mulmod(acc, g, f, p);
        acc[0] = uint32_t((acc[0] + coeffs[i]) % p);
    }
    return acc;
}

std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>> g_conway_cache;
std::mutex g_conway_mutex;

constexpr uint64_t kConwaySearchCap = 4'000'000;

} // namespace

std::vector<uint32_t> conway_polynomial(uint32_t p, uint32_t m) {
    if (!is_prime(p)) throw ParamError("p must be prime");
    if (m == 0) throw ParamError("extension degree must be >= 1");
    {
        std::lock_guard<std::mutex> lk(g_conway_mutex);
        auto it = g_conway_cache.find({p, m});
        if (it != g_conway_cache.end()) return it->second;
    }
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldSize) throw BoundError("field size above 2^20: supply a modulus explicitly");
    }
    std::vector<uint32_t> result;
    if (m == 1) {
        uint32_t r = smallest_primitive_root(p);
        result = {(p - r) % p, 1}; // x - r
    } else {
        // Conway polynomials of all maximal proper divisor degrees
        std::vector<std::pair<uint64_t, std::vector<uint32_t>>> subs; // (d, C(p,d))
        for (uint64_t r : prime_factors(m)) {
            uint32_t d = m / uint32_t(r);
            subs.emplace_back(d, conway_polynomial(p, d));
        }
        // Candidates f = x^m + sum (-1)^(m-i) a_i x^i, words (a_{m-1},...,a_0)
        // enumerated in lexicographic order.
        std::vector<uint32_t> word(m, 0); // word[i] = a_i
        Poly f(m + 1, 0);
        f[m] = 1;
        for (uint64_t v = 0;; ++v) {
            if (v >= kConwaySearchCap)
                throw BoundError("Conway polynomial search cap exceeded: supply a modulus explicitly");
            // decode v: a_{m-1} most significant
            {
                uint64_t t = v;
                for (uint32_t i = 0; i < m; ++i) { word[i] = uint32_t(t % p); t /= p; }
                if (t != 0) throw BoundError("no Conway polynomial found in range");
            }
            for (uint32_t i = 0; i < m; ++i) {
                uint32_t a = word[i];
                f[i] = ((m - i) % 2 == 1) ? (p - a) % p : a; // (-1)^(m-i) a_i
            }
            if (f[0] == 0) continue;                   // x | f: reducible
            if (!poly_irreducible(f, p)) continue;
            Poly x = poly_mod(x_poly(m), f, p);
            if (!class_is_primitive(x, f, p, q)) continue;
            bool compatible = true;
            for (const auto& [d, cpd] : subs) {
                uint64_t pd = 1;
                for (uint64_t i = 0; i < d; ++i) pd *= p;
                Poly g = poly_powmod(x, (q - 1) / (pd - 1), f, p);
                if (!is_zero_poly(eval_at_class(cpd, g, f, p))) { compatible = false; break; }
            }
            if (!compatible) continue;
            result = f;
            break;
        }
    }
    std::lock_guard<std::mutex> lk(g_conway_mutex);
    g_conway_cache[{p, m}] = result;
    return result;
}

std::shared_ptr<const FieldCtx> FieldCtx::make(uint32_t p, uint32_t m) {
    return build(p, m, conway_polynomial(p, m), false);
}

std::shared_ptr<const FieldCtx> FieldCtx::make(uint32_t p, uint32_t m, std::vector<uint32_t> modulus) {
    return build(p, m, std::move(modulus), true);
}

std::shared_ptr<const FieldCtx> FieldCtx::build(uint32_t p, uint32_t m, std::vector<uint32_t> modulus,
                                                bool modulus_was_given) {
    if (!is_prime(p)) throw ParamError("p must be prime");
    if (m == 0) throw ParamError("extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldSize) throw BoundError("field size above 2^20 is rejected");
    }
    if (modulus.size() != size_t(m) + 1) throw ParamError("modulus must have degree m");
    for (uint32_t c : modulus)
        if (c >= p) throw ParamError("modulus coefficients must lie in [0, p)");
    if (modulus[m] != 1) throw ParamError("modulus must be monic");
    if (modulus_was_given && m > 1 && !poly_irreducible(modulus, p))
        throw ParamError("modulus is reducible over GF(p)");

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->spec_ = FieldSpec{p, m, modulus};
    ctx->q_ = uint32_t(q);
    ctx->qm1_ = uint32_t(q - 1);
    ctx->half_ = uint32_t((q - 1) / 2);
    if (!modulus_was_given) {
        ctx->conway_default_ = true;
    } else {
        try {
            ctx->conway_default_ = (modulus == conway_polynomial(p, m));
        } catch (const BoundError&) {
            ctx->conway_default_ = false;
        }
    }

    // digit-vector multiply, used only until the tables exist
    auto mul_raw = [&](uint32_t a, uint32_t b) {
        Poly pa(m, 0), pb(m, 0);
        for (uint32_t i = 0; i < m; ++i) { pa[i] = a % p; a /= p; }
        for (uint32_t i = 0; i < m; ++i) { pb[i] = b % p; b /= p; }
        Poly r = poly_mulmod(pa, pb, modulus, p);
        uint32_t idx = 0;
        for (uint32_t i = m; i-- > 0;) idx = idx * p + r[i];
        return idx;
    };
    auto order_ok = [&](uint32_t e) {
        Poly pe(m, 0);
        uint32_t t = e;
        for (uint32_t i = 0; i < m; ++i) { pe[i] = t % p; t /= p; }
        return class_is_primitive(pe, modulus, p, q);
    };

    // alpha: least index of multiplicative order q-1. For a Conway modulus
    // this is the class of x itself (index p) when m > 1, and the smallest
    // primitive root when m == 1.
    uint32_t alpha = 0;
    for (uint32_t e = 1; e < q; ++e) {
        if (q == 2) { alpha = 1; break; } // GF(2): the unit 1 has order 1 = q-1
        if (order_ok(e)) { alpha = e; break; }
        if (e + 1 == q) throw ConsistencyError("no primitive element found (modulus not irreducible?)");
    }
    ctx->alpha_ = alpha;

    ctx->exp_.assign(size_t(q - 1), 0);
    ctx->log_.assign(size_t(q), kNoLog);
    uint32_t cur = 1;
    for (uint64_t i = 0; i < q - 1; ++i) {
        ctx->exp_[i] = cur;
        if (ctx->log_[cur] != kNoLog) throw ConsistencyError("alpha is not primitive: exp table collision");
        ctx->log_[cur] = uint32_t(i);
        cur = mul_raw(cur, alpha);
    }
    if (cur != 1) throw ConsistencyError("alpha^(q-1) != 1");
    for (uint32_t e = 1; e < q; ++e)
        if (ctx->log_[e] == kNoLog) throw ConsistencyError("exp table does not cover all units");

    if (p != 2) {
        // zech_[k] = log(1 + alpha^k); addition of digit vectors is just
        // per-digit addition mod p
        ctx->zech_.assign(size_t(q - 1), kNoLog);
        for (uint64_t k = 0; k < q - 1; ++k) {
            uint32_t a = ctx->exp_[k];
            // 1 + a digitwise
            uint32_t idx = 0, mult = 1, sum = 0;
            uint32_t t = a;
            for (uint32_t i = 0; i < m; ++i) {
                uint32_t d = t % p;
                t /= p;
                if (i == 0) d = (d + 1) % p;
                idx += d * mult;
                mult *= p;
            }
            sum = idx;
            ctx->zech_[k] = sum == 0 ? kNoLog : ctx->log_[sum];
        }
    }
    return ctx;
}

uint64_t FieldCtx::mult_order(uint32_t a) const {
    if (a == 0) throw ParamError("multiplicative order of zero");
    uint64_t ord = qm1_;
    for (uint64_t r : prime_factors(qm1_))
        while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
    return ord == 0 ? 1 : ord;
}

std::shared_ptr<const TowerCtx> TowerCtx::make(FieldPtr base) {
    if (!base) throw ParamError("null base field");
    const uint32_t p = base->p(), m = base->m(), q = base->q();
    if (uint64_t(q) > kMaxTowerBase)
        throw BoundError("tower base above 2^10 is rejected (GF(q^2) would exceed 2^20)");
    auto ext = FieldCtx::make(p, 2 * m);
    auto t = std::shared_ptr<TowerCtx>(new TowerCtx());
    t->base_ = base;
    t->ext_ = ext;

    // embedding: send the base generator polynomial's root of smallest index
    // in ext; extend GF(p)-linearly over the polynomial basis of the base.
    const auto& f = base->spec().modulus;
    uint32_t root = 0;
    bool found = false;
    for (uint32_t x = 0; x < ext->q(); ++x) {
        // Horner over ext, coefficients from the prime subfield
        uint32_t acc = 0;
        for (size_t i = f.size(); i-- > 0;) acc = ext->add(ext->mul(acc, x), f[i]);
        if (acc == 0) { root = x; found = true; break; }
    }
    if (!found) throw ConsistencyError("base modulus has no root in the extension");

    t->embed_.assign(q, 0);
    std::vector<uint32_t> root_pow(m, 1); // root^j
    for (uint32_t j = 1; j < m; ++j) root_pow[j] = ext->mul(root_pow[j - 1], root);
    for (uint32_t e = 0; e < q; ++e) {
        uint32_t idx = e, acc = 0;
        for (uint32_t j = 0; j < m; ++j) {
            uint32_t d = idx % p;
            idx /= p;
            if (d != 0) acc = ext->add(acc, ext->mul(d, root_pow[j])); // d < p: prime subfield index
        }
        t->embed_[e] = acc;
    }
    // verify: ring homomorphism, injective, image fixed by x -> x^q
    if (t->embed_[1] != 1) throw ConsistencyError("embedding does not fix 1");
    for (uint32_t a = 0; a < q; ++a) {
        if (ext->pow(t->embed_[a], q) != t->embed_[a])
            throw ConsistencyError("embedded element not fixed by the Frobenius x -> x^q");
        for (uint32_t b = a; b < q; ++b) {
            if (t->embed_[base->add(a, b)] != ext->add(t->embed_[a], t->embed_[b]))
                throw ConsistencyError("embedding is not additive");
            if (t->embed_[base->mul(a, b)] != ext->mul(t->embed_[a], t->embed_[b]))
                throw ConsistencyError("embedding is not multiplicative");
        }
    }

    // U_{q+1} as powers of beta = gamma^(q-1)
    t->circle_.assign(size_t(q) + 1, 0);
    uint32_t beta = ext->exp(q - 1);
    uint32_t c = 1;
    for (uint32_t j = 0; j <= q; ++j) {
        t->circle_[j] = c;
        if (ext->pow(c, uint64_t(q) + 1) != 1) throw ConsistencyError("circle element fails x^(q+1) = 1");
        c = ext->mul(c, beta);
    }
    if (c != 1) throw ConsistencyError("circle is not cyclic of order q+1");
    return t;
}

std::vector<Fq> unit_circle(const TowerCtx& tower) {
    std::vector<Fq> out;
    out.reserve(tower.circle().size());
    for (uint32_t idx : tower.circle()) out.emplace_back(tower.ext(), idx);
    return out;
}

} // namespace fwcodes
