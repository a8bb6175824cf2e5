#include <doctest.h>

#include <map>
#include <set>

#include "fwcodes/gf.hpp"

using namespace fwcodes;

namespace {

// test-local polynomial arithmetic over GF(p), independent of FieldCtx's
// table path; used as the oracle for multiplicative structure
std::vector<uint32_t> polymul_mod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                                  const std::vector<uint32_t>& mod, uint32_t p) {
    std::vector<uint32_t> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    size_t m = mod.size() - 1;
    for (size_t i = prod.size(); i-- > m;) {
        uint32_t c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (size_t j = 0; j < m; ++j) prod[i - m + j] = (prod[i - m + j] + (p - c % p) * mod[j]) % p;
    }
    prod.resize(m);
    return prod;
}

uint32_t poly_to_index(const std::vector<uint32_t>& v, uint32_t p) {
    uint32_t idx = 0;
    for (size_t i = v.size(); i-- > 0;) idx = idx * p + v[i];
    return idx;
}

} // namespace

TEST_CASE("Conway polynomials match the published table") {
    using V = std::vector<uint32_t>;
    CHECK(conway_polynomial(2, 1) == V{1, 1});
    CHECK(conway_polynomial(2, 2) == V{1, 1, 1});
    CHECK(conway_polynomial(2, 3) == V{1, 1, 0, 1});
    CHECK(conway_polynomial(2, 4) == V{1, 1, 0, 0, 1});
    CHECK(conway_polynomial(2, 5) == V{1, 0, 1, 0, 0, 1});
    CHECK(conway_polynomial(2, 6) == V{1, 1, 0, 1, 1, 0, 1});
    CHECK(conway_polynomial(3, 1) == V{1, 1});
    CHECK(conway_polynomial(3, 2) == V{2, 2, 1});
    CHECK(conway_polynomial(3, 3) == V{1, 2, 0, 1});
    CHECK(conway_polynomial(3, 4) == V{2, 0, 0, 2, 1});
    CHECK(conway_polynomial(5, 1) == V{3, 1});
    CHECK(conway_polynomial(5, 2) == V{2, 4, 1});
    CHECK(conway_polynomial(7, 1) == V{4, 1});
}

TEST_CASE("Conway polynomials satisfy the defining properties") {
    // beyond the hard-coded table: primitivity of x and norm-compatibility
    for (auto [p, m] : {std::pair<uint32_t, uint32_t>{3, 5}, {5, 3}, {7, 2}, {3, 6}}) {
        auto F = FieldCtx::make(p, m);
        CHECK(F->conway_default());
        CHECK(F->alpha() == p); // the class of x generates
        CHECK(F->mult_order(F->alpha()) == F->q() - 1);
        // norm compatibility with every proper divisor degree
        for (uint32_t d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            uint64_t pd = 1;
            for (uint32_t i = 0; i < d; ++i) pd *= p;
            uint32_t g = F->exp((F->q() - 1) / (pd - 1)); // has order p^d - 1
            auto cpd = conway_polynomial(p, d);
            uint32_t acc = 0;
            for (size_t i = cpd.size(); i-- > 0;) acc = F->add(F->mul(acc, g), cpd[i]);
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("field construction basics") {
    auto F2 = FieldCtx::make(2, 1);
    CHECK(F2->q() == 2);
    CHECK(F2->alpha() == 1);

    auto F9 = FieldCtx::make(3, 2);
    CHECK(F9->q() == 9);
    CHECK(F9->mult_order(F9->alpha()) == 8);

    CHECK_THROWS_AS(FieldCtx::make(4, 2), ParamError);              // p not prime
    CHECK_THROWS_AS(FieldCtx::make(2, 2, {1, 0, 1}), ParamError);   // x^2+1 reducible
    CHECK_THROWS_AS(FieldCtx::make(2, 2, {1, 1, 2}), ParamError);   // coefficient out of range
    CHECK_THROWS_AS(FieldCtx::make(3, 2, {2, 2, 2}), ParamError);   // not monic
    CHECK_THROWS_AS(FieldCtx::make(2, 21), BoundError);             // above 2^20
    CHECK_THROWS_AS(FieldCtx::make(3, 13), BoundError);
}

TEST_CASE("GF(16) with explicit modulus x^4+x+1: alpha = class of x, order checked exhaustively") {
    std::vector<uint32_t> mod = {1, 1, 0, 0, 1};
    auto F = FieldCtx::make(2, 4, mod);
    CHECK(F->conway_default()); // happens to equal the Conway polynomial
    CHECK(F->alpha() == 2);     // the class of x

    // oracle: order of every unit via independent polynomial arithmetic
    std::map<uint32_t, uint32_t> order;
    for (uint32_t e = 1; e < 16; ++e) {
        std::vector<uint32_t> v = {e & 1u, (e >> 1) & 1u, (e >> 2) & 1u, (e >> 3) & 1u};
        std::vector<uint32_t> acc = {1, 0, 0, 0};
        uint32_t o = 0;
        do {
            acc = polymul_mod(acc, v, mod, 2);
            ++o;
        } while (poly_to_index(acc, 2) != 1);
        order[e] = o;
    }
    CHECK(order[2] == 15); // x is primitive
    for (uint32_t e = 1; e < 16; ++e) CHECK(order[e] == F->mult_order(e));
}

TEST_CASE("non-Conway modulus: least-index primitive element") {
    // x^4 + x^3 + 1 is irreducible and primitive but not the Conway choice
    auto F = FieldCtx::make(2, 4, {1, 0, 0, 1, 1});
    CHECK_FALSE(F->conway_default());
    CHECK(F->mult_order(F->alpha()) == 15);
    for (uint32_t e = 1; e < F->alpha(); ++e) CHECK(F->mult_order(e) < 15);
}

TEST_CASE("field arithmetic identities") {
    for (auto [p, m] : {std::pair<uint32_t, uint32_t>{3, 2}, {2, 4}, {5, 2}, {3, 3}}) {
        auto F = FieldCtx::make(p, m);
        const uint32_t q = F->q();
        for (uint32_t x = 0; x < q; ++x) {
            CHECK(F->add(x, F->neg(x)) == 0);
            CHECK(F->sub(x, x) == 0);
            if (x != 0) {
                CHECK(F->mul(F->inv(x), x) == 1);
                CHECK(F->div(x, x) == 1);
            }
        }
        CHECK(F->pow(F->alpha(), q - 1) == 1);
        CHECK_THROWS_AS(F->inv(0), ParamError);
        // exp/log round trip on every unit
        for (uint32_t x = 1; x < q; ++x) CHECK(F->exp(F->log(x)) == x);
    }
}

TEST_CASE("element wrapper catches mixed fields") {
    auto F1 = FieldCtx::make(2, 3);
    auto F2 = FieldCtx::make(3, 2);
    Fq a = F1->element(3), b = F2->element(3);
    CHECK_THROWS_AS((void)(a + b), ParamError);
    Fq c = F1->element(5);
    CHECK((a + c).index() == F1->add(3, 5));
}

TEST_CASE("Frobenius is a field automorphism") {
    for (auto [p, m] : {std::pair<uint32_t, uint32_t>{2, 4}, {3, 3}, {2, 8}}) {
        auto F = FieldCtx::make(p, m);
        const uint32_t q = F->q();
        for (uint32_t x = 0; x < q; ++x) {
            CHECK(F->frobenius(x, 0) == x);
            CHECK(F->frobenius(x, m) == x); // x^q = x
        }
        // additivity and multiplicativity, exhaustive for q <= 256
        for (uint32_t x = 0; x < q; ++x)
            for (uint32_t y = 0; y < q; ++y) {
                CHECK(F->frobenius(F->add(x, y), 1) == F->add(F->frobenius(x, 1), F->frobenius(y, 1)));
                CHECK(F->frobenius(F->mul(x, y), 1) == F->mul(F->frobenius(x, 1), F->frobenius(y, 1)));
            }
    }
}

TEST_CASE("trace lands in the prime field and is linear") {
    {
        // GF(4) with modulus x^2+x+1: Tr(alpha) = alpha + alpha^2 = 1
        auto F = FieldCtx::make(2, 2);
        CHECK(F->trace_to_prime(0) == 0);
        CHECK(F->trace_to_prime(F->alpha()) == 1);
    }
    for (auto [p, m] : {std::pair<uint32_t, uint32_t>{2, 4}, {3, 3}}) {
        auto F = FieldCtx::make(p, m);
        const uint32_t q = F->q();
        uint64_t zeros = 0;
        for (uint32_t x = 0; x < q; ++x) {
            uint32_t t = F->trace_to_prime(x);
            CHECK(t < p);
            if (t == 0) ++zeros;
            for (uint32_t c = 0; c < p; ++c)
                CHECK(F->trace_to_prime(F->mul(c, x)) == F->mul(c, F->trace_to_prime(x)));
        }
        for (uint32_t x = 0; x < q; x += 7)
            for (uint32_t y = 0; y < q; ++y)
                CHECK(F->trace_to_prime(F->add(x, y)) ==
                      F->add(F->trace_to_prime(x), F->trace_to_prime(y)));
        CHECK(zeros == q / p); // p^(m-1) trace zeros
    }
}

TEST_CASE("tower and unit circle") {
    auto base = FieldCtx::make(3, 2);
    auto T = TowerCtx::make(base);
    const FieldCtx& E = T->ext();
    CHECK(E.q() == 81);

    // embedding respects both operations (construction verifies this too)
    for (uint32_t a = 0; a < 9; ++a) {
        CHECK(E.pow(T->embed(a), 9) == T->embed(a));
        for (uint32_t b = 0; b < 9; ++b) {
            CHECK(T->embed(base->add(a, b)) == E.add(T->embed(a), T->embed(b)));
            CHECK(T->embed(base->mul(a, b)) == E.mul(T->embed(a), T->embed(b)));
        }
    }

    const auto& circle = T->circle();
    CHECK(circle.size() == 10);
    CHECK(circle[0] == 1);
    auto bound = unit_circle(*T);
    CHECK(bound.size() == 10);
    CHECK(bound[0] == E.one());
    CHECK(bound[3].index() == circle[3]);
    std::set<uint32_t> cset(circle.begin(), circle.end());
    CHECK(cset.size() == 10);
    for (uint32_t x : circle) CHECK(E.pow(x, 10) == 1);
    // product of all circle elements: the constant coefficient argument
    // gives (-1)^(q+1+1) = -1 for q = 9
    uint32_t prod = 1;
    for (uint32_t x : circle) prod = E.mul(prod, x);
    CHECK(prod == E.neg(1));
    // closure under multiplication (the circle is a group)
    for (uint32_t x : circle)
        for (uint32_t y : circle) CHECK(cset.count(E.mul(x, y)) == 1);

    CHECK_THROWS_AS(TowerCtx::make(FieldCtx::make(2, 11)), BoundError); // base above 2^10
}

TEST_CASE("unit circle closure for q in {25, 27}") {
    for (auto [p, m] : {std::pair<uint32_t, uint32_t>{5, 2}, {3, 3}}) {
        auto T = TowerCtx::make(FieldCtx::make(p, m));
        const FieldCtx& E = T->ext();
        std::set<uint32_t> cset(T->circle().begin(), T->circle().end());
        CHECK(cset.size() == T->base().q() + 1);
        for (uint32_t x : T->circle())
            for (uint32_t y : T->circle()) CHECK(cset.count(E.mul(x, y)) == 1);
    }
}
