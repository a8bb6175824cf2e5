#include <doctest.h>

#include <random>

#include "fwcodes/codes.hpp"
#include "fwcodes/pless.hpp"

using namespace fwcodes;

namespace {

// literal oracle: every message, weight by encoding; no root counting, no
// projective shortcut
WeightDistribution weight_distribution_literal(const LinearCode& code) {
    const uint64_t q = code.field->q();
    uint64_t total = 1;
    for (uint32_t i = 0; i < code.k; ++i) total *= q;
    WeightDistribution wd;
    wd.n = code.n;
    wd.detail = "literal";
    std::vector<uint32_t> msg(code.k, 0);
    for (uint64_t t = 0; t < total; ++t) {
        uint64_t v = t;
        for (uint32_t i = 0; i < code.k; ++i) { msg[i] = uint32_t(v % q); v /= q; }
        wd.counts[hamming_weight(encode(code, msg))] += 1;
    }
    return wd;
}

std::vector<uint32_t> random_msg(std::mt19937_64& rng, uint32_t k, uint64_t q, bool nonzero) {
    std::vector<uint32_t> m(k);
    do {
        for (auto& v : m) v = uint32_t(rng() % q);
    } while (nonzero && std::all_of(m.begin(), m.end(), [](uint32_t v) { return v == 0; }));
    return m;
}

} // namespace

TEST_CASE("extended code construction") {
    LinearCode c = build_extended_code(2, 3, 2);
    CHECK(c.n == 8);
    CHECK(c.k == 4);
    CHECK(c.column_labels.back() == 0);
    // columns alpha^1..alpha^(q-1), 0
    for (uint32_t j = 0; j + 1 < c.n; ++j) CHECK(c.column_labels[j] == c.field->exp(j + 1));
    // first row all ones, second row the labels
    for (uint32_t j = 0; j < c.n; ++j) {
        CHECK(c.gen_at(0, j) == 1);
        CHECK(c.gen_at(1, j) == c.column_labels[j]);
    }
    CHECK_THROWS_AS(build_extended_code(2, 2, 3), ParamError); // h >= m
    CHECK_THROWS_AS(build_extended_code(2, 2, 2), ParamError);
}

TEST_CASE("circle code construction") {
    LinearCode c = build_circle_code(3, 2, 1);
    CHECK(c.n == 10);
    CHECK(c.k == 4);
    CHECK(c.field->q() == 81);
    CHECK_THROWS_AS(build_circle_code(2, 3, 1), ParamError); // p = 2
    CHECK_THROWS_AS(build_circle_code(3, 2, 2), ParamError); // s out of range
}

TEST_CASE("encode basics") {
    LinearCode c = build_extended_code(2, 4, 2);
    std::vector<uint32_t> zero(c.k, 0);
    CHECK(hamming_weight(encode(c, zero)) == 0);
    std::vector<uint32_t> ones = {1, 0, 0, 0}; // constant polynomial 1
    CHECK(hamming_weight(encode(c, ones)) == c.n);
    // f = x^4 - x (h = 2 | m = 4): weight q - p^h = 12
    std::vector<uint32_t> witness = {0, c.field->neg(1), 0, 1};
    CHECK(hamming_weight(encode(c, witness)) == 12);
    CHECK(codeword_weight_fast(c, witness) == 12);
}

TEST_CASE("fast weight equals literal weight exhaustively at (2,3,2)") {
    LinearCode c = build_extended_code(2, 3, 2);
    std::vector<uint32_t> msg(4);
    for (uint32_t t = 1; t < 4096; ++t) {
        uint32_t v = t;
        for (int i = 0; i < 4; ++i) { msg[i] = v % 8; v /= 8; }
        CHECK(codeword_weight_fast(c, msg) == hamming_weight(encode(c, msg)));
    }
}

TEST_CASE("brute distribution equals the literal oracle") {
    for (auto [p, m, h] : {std::tuple<uint32_t, uint32_t, uint32_t>{2, 3, 2},
                           {2, 3, 1},
                           {3, 2, 1},
                           {2, 4, 2},
                           {3, 3, 2}}) {
        LinearCode c = build_extended_code(p, m, h);
        auto lit = weight_distribution_literal(c);
        auto fast = weight_distribution_brute(c);
        CHECK(fast.same_counts(lit));
        CHECK(fast.total() == c.message_count());
    }
}

TEST_CASE("brute distribution is worker-count independent") {
    LinearCode c = build_extended_code(3, 3, 2);
    BruteOptions one, four;
    four.workers = 4;
    CHECK(weight_distribution_brute(c, one).same_counts(weight_distribution_brute(c, four)));
    LinearCode cc = build_circle_code(3, 2, 1);
    CHECK(weight_distribution_brute(cc, one).same_counts(weight_distribution_brute(cc, four)));
}

TEST_CASE("circle code weights and fast path") {
    LinearCode c = build_circle_code(3, 2, 1);
    auto wd = weight_distribution_brute(c);
    for (const auto& [w, cnt] : wd.counts) {
        if (w == 0 || cnt == 0) continue;
        CHECK((w == 6 || w == 8 || w == 9 || w == 10));
    }
    std::mt19937_64 rng(3);
    for (int t = 0; t < 500; ++t) {
        auto msg = random_msg(rng, 4, 81, true);
        CHECK(codeword_weight_fast(c, msg) == hamming_weight(encode(c, msg)));
    }
}

TEST_CASE("punctured cyclic code") {
    LinearCode c = build_punctured_cyclic(2, 3, 2);
    CHECK(c.n == 7);
    CHECK(c.k == 4);
    LinearCode c2 = build_punctured_cyclic(3, 3, 1);
    CHECK(c2.n == 26);
    CHECK(c2.k == 3);
    LinearCode c3 = build_punctured_cyclic(2, 3, 1);
    // cyclic shift closure, checked by membership
    std::mt19937_64 rng(5);
    for (const LinearCode* code : {&c, &c2, &c3}) {
        ParityCheck H = parity_check(*code);
        for (int t = 0; t < 40; ++t) {
            auto w = encode(*code, random_msg(rng, code->k, code->field->q(), false));
            std::vector<uint32_t> shifted(w.size());
            for (size_t i = 0; i < w.size(); ++i) shifted[(i + 1) % w.size()] = w[i];
            CHECK(H.contains(shifted));
        }
    }
}

TEST_CASE("circle code is cyclic under the circle ordering") {
    std::mt19937_64 rng(13);
    for (auto [p, m, s] : {std::tuple<uint32_t, uint32_t, uint32_t>{3, 2, 1}, {5, 2, 1}, {3, 3, 2}}) {
        LinearCode c = build_circle_code(p, m, s);
        ParityCheck H = parity_check(c);
        for (int t = 0; t < 25; ++t) {
            auto w = encode(c, random_msg(rng, c.k, c.field->q(), false));
            std::vector<uint32_t> shifted(w.size());
            for (size_t i = 0; i < w.size(); ++i) shifted[(i + 1) % w.size()] = w[i];
            CHECK(H.contains(shifted));
        }
    }
}

TEST_CASE("Singleton sanity: d <= n - k + 1 for codes and duals") {
    for (auto [p, m, h] : {std::tuple<uint32_t, uint32_t, uint32_t>{2, 3, 1},
                           {2, 4, 2},
                           {3, 3, 2},
                           {2, 4, 3},
                           {5, 3, 1}}) {
        LinearCode c = build_extended_code(p, m, h);
        CHECK(min_distance(c) <= c.n - c.k + 1);
        auto rep = dual_low_weight_search(c, 4, 100'000'000, true);
        CHECK(rep.d_perp <= c.k + 1);
        CHECK(rep.d_perp >= 1);
    }
    LinearCode cc = build_circle_code(3, 2, 1);
    CHECK(min_distance(cc) <= cc.n - cc.k + 1);
}

TEST_CASE("h | m beyond the reference table: d = q - p^h at (2,6,3)") {
    CHECK(min_distance(build_extended_code(2, 6, 3)) == 56);
}

TEST_CASE("extended code is an extension: row sums vanish") {
    // each generator row of the punctured code plus the extension column
    // sums to zero, the defining property of the extended construction
    for (auto [p, m, h] : {std::tuple<uint32_t, uint32_t, uint32_t>{2, 4, 2}, {3, 3, 2}}) {
        LinearCode ext = build_extended_code(p, m, h);
        const FieldCtx& F = *ext.field;
        for (uint32_t r = 0; r < ext.k; ++r) {
            uint32_t sum = 0;
            for (uint32_t j = 0; j < ext.n; ++j) sum = F.add(sum, ext.gen_at(r, j));
            CHECK(sum == 0);
        }
    }
}

TEST_CASE("closed forms match frozen values") {
    SUBCASE("p=2 h=2 at q=16") {
        auto wd = weight_distribution_closed(ClosedFormCase::BinaryH2, 2, 4, 2);
        CHECK(wd.at(12) == 2100);
        CHECK(wd.at(14) == 18000);
        CHECK(wd.at(15) == 21120);
        CHECK(wd.at(16) == 24315);
        CHECK(wd.total() == BigInt(65536));
    }
    SUBCASE("p=3 h=2 at q=27") {
        auto wd = weight_distribution_closed(ClosedFormCase::OddH2, 3, 3, 2);
        CHECK(wd.at(18) == 1014);
        CHECK(wd.at(24) == 73008);
        CHECK(wd.at(26) == 303264);
        CHECK(wd.at(27) == 154154);
        CHECK(wd.total() == BigInt(531441));
    }
    SUBCASE("p=2 h=3 at q=16") {
        auto wd = weight_distribution_closed(ClosedFormCase::BinaryH3, 2, 4, 3);
        CHECK(wd.at(8) == 450);
        CHECK(wd.at(12) == 29400);
        CHECK(wd.at(14) == 302400);
        CHECK(wd.at(15) == 322560);
        CHECK(wd.at(16) == 393765);
        CHECK(wd.total() == BigInt(1048576));
    }
    SUBCASE("hypothesis violations are rejected") {
        CHECK_THROWS_AS(weight_distribution_closed(ClosedFormCase::BinaryH2, 2, 2, 2), ParamError);
        CHECK_THROWS_AS(weight_distribution_closed(ClosedFormCase::BinaryH2, 3, 4, 2), ParamError);
        CHECK_THROWS_AS(weight_distribution_closed(ClosedFormCase::BinaryH3, 2, 3, 3), ParamError);
        CHECK_THROWS_AS(weight_distribution_closed(ClosedFormCase::Circle, 2, 3, 1), ParamError);
    }
}

TEST_CASE("closed forms agree with brute force") {
    {
        LinearCode c = build_extended_code(2, 4, 3);
        auto closed = weight_distribution_closed(ClosedFormCase::BinaryH3, 2, 4, 3);
        CHECK(weight_distribution_brute(c).same_counts(closed));
        CHECK(closed.at(8) == 450); // A_{q-8} at q=16, cross-checked by enumeration
    }
    {
        LinearCode c = build_extended_code(3, 3, 2);
        auto closed = weight_distribution_closed(ClosedFormCase::OddH2, 3, 3, 2);
        CHECK(weight_distribution_brute(c).same_counts(closed));
        CHECK(closed.at(18) == 1014);
    }
    {
        LinearCode c = build_extended_code(2, 4, 2);
        auto closed = weight_distribution_closed(ClosedFormCase::BinaryH2, 2, 4, 2);
        CHECK(weight_distribution_brute(c).same_counts(closed));
    }
}

TEST_CASE("moment solver") {
    SUBCASE("reproduces the circle enumerator from dual-distance data alone") {
        std::map<uint32_t, BigInt> dual = {{1, 0}, {2, 0}, {3, 0}};
        auto wd = solve_moments(10, 4, BigInt(81), {6, 8, 9, 10}, dual);
        CHECK(wd.at(6) == 2400);
        CHECK(wd.at(8) == 280800);
        CHECK(wd.at(9) == 4743200);
        CHECK(wd.at(10) == 38020320);
    }
    SUBCASE("matches closed forms through the dual-count inputs") {
        LinearCode c17 = build_extended_code(2, 4, 3);
        CHECK(weight_distribution_moments(c17).same_counts(
            weight_distribution_closed(ClosedFormCase::BinaryH3, 2, 4, 3)));
        LinearCode c16 = build_extended_code(3, 3, 2);
        CHECK(weight_distribution_moments(c16).same_counts(
            weight_distribution_closed(ClosedFormCase::OddH2, 3, 3, 2)));
        LinearCode c15 = build_extended_code(2, 4, 2);
        CHECK(weight_distribution_moments(c15).same_counts(
            weight_distribution_closed(ClosedFormCase::BinaryH2, 2, 4, 2)));
    }
    SUBCASE("a wrong weight set is detected") {
        std::map<uint32_t, BigInt> dual = {{1, 0}, {2, 0}, {3, 0}};
        CHECK_THROWS_AS(solve_moments(10, 4, BigInt(81), {5, 7, 9, 10}, dual), ConsistencyError);
    }
}

TEST_CASE("dual low-weight search") {
    SUBCASE("extended binary: d_perp = 4") {
        LinearCode c = build_extended_code(2, 4, 2);
        auto rep = dual_low_weight_search(c, 4);
        CHECK(rep.d_perp == 4);
        CHECK(rep.count_at(1) == 0);
        CHECK(rep.count_at(2) == 0);
        CHECK(rep.count_at(3) == 0);
        CHECK(rep.count_at(4) == 2100);
        CHECK(rep.unique_word_per_support);
    }
    SUBCASE("extended odd: d_perp = 3 with the stated count") {
        LinearCode c = build_extended_code(3, 3, 2);
        auto rep = dual_low_weight_search(c, 3);
        CHECK(rep.d_perp == 3);
        CHECK(rep.count_at(3) == 3042); // q(q-1)^2(p-2)/6 at q=27
    }
    SUBCASE("circle: d_perp = 4") {
        auto rep = dual_low_weight_search(build_circle_code(3, 2, 1), 4);
        CHECK(rep.d_perp == 4);
    }
    SUBCASE("bounds and argument checks") {
        LinearCode c = build_extended_code(2, 4, 2);
        CHECK_THROWS_AS(dual_low_weight_search(c, 6), ParamError);
        CHECK_THROWS_AS(dual_low_weight_search(c, 4, 100), BoundError);
    }
}

TEST_CASE("minimum distance") {
    CHECK(min_distance(build_extended_code(2, 5, 4)) == 16);  // [32, 6, 16]
    CHECK(min_distance(build_extended_code(2, 4, 2)) == 12);
    SUBCASE("witness certification where enumeration is out of reach") {
        LinearCode c = build_extended_code(3, 5, 4); // [243, 6, 162]
        CHECK_THROWS_AS(weight_distribution_brute(c), BoundError);
        auto cert = certify_min_distance(c, {}, 2000, 1);
        CHECK(cert.by_witness);
        CHECK(cert.d == 162);
    }
    SUBCASE("small codes certify by enumeration") {
        auto cert = certify_min_distance(build_extended_code(5, 2, 1));
        CHECK(cert.by_enumeration);
        CHECK(cert.d == 20); // q - p with h = 1 | m = 2
    }
}

TEST_CASE("membership and parity check") {
    for (bool circle : {false, true}) {
        LinearCode c = circle ? build_circle_code(3, 2, 1) : build_extended_code(2, 3, 2);
        const FieldCtx& F = *c.field;
        ParityCheck H = parity_check(c);
        // gen * H^T = 0
        for (uint32_t r = 0; r < c.k; ++r)
            for (uint32_t hr = 0; hr < c.n - c.k; ++hr) {
                uint32_t acc = 0;
                for (uint32_t j = 0; j < c.n; ++j)
                    acc = F.add(acc, F.mul(c.gen_at(r, j), H.rows[size_t(hr) * c.n + j]));
                CHECK(acc == 0);
            }
        std::mt19937_64 rng(9);
        for (int t = 0; t < 30; ++t) {
            auto w = encode(c, random_msg(rng, c.k, F.q(), true));
            CHECK(membership(c, w));
            // one changed coordinate leaves the code (d >= 2)
            auto bad = w;
            uint32_t j = uint32_t(rng() % c.n);
            bad[j] = F.add(bad[j], 1);
            CHECK_FALSE(membership(c, bad));
        }
    }
}

TEST_CASE("affine invariance") {
    CHECK(affine_invariance_check(build_extended_code(2, 4, 2), 100, 0));
    CHECK(affine_invariance_check(build_extended_code(3, 3, 2), 100, 0));
    SUBCASE("the identity map fixes every word") {
        LinearCode c = build_extended_code(2, 3, 1);
        const FieldCtx& F = *c.field;
        std::vector<uint32_t> pos_of(c.field->q());
        for (uint32_t j = 0; j < c.n; ++j) pos_of[c.column_labels[j]] = j;
        std::mt19937_64 rng(1);
        auto w = encode(c, random_msg(rng, c.k, F.q(), true));
        std::vector<uint32_t> out(c.n);
        for (uint32_t j = 0; j < c.n; ++j) out[pos_of[c.column_labels[j]]] = w[j];
        CHECK(out == w);
    }
}

TEST_CASE("supports of a fixed weight") {
    LinearCode c = build_extended_code(2, 4, 2);
    CHECK(supports_of_weight(c, 0).empty());
    auto sups = supports_of_weight(c, 12);
    CHECK(sups.size() == 140); // A_{q-4}/(q-1) = 2100/15
    for (const auto& s : sups) CHECK(s.size() == 12);
    // weight n: the single full support
    auto full = supports_of_weight(c, 16);
    CHECK(full.size() == 1);
    CHECK(full[0].size() == 16);
}

TEST_CASE("allowed weight sets") {
    LinearCode c = build_extended_code(2, 4, 2);
    CHECK(allowed_nonzero_weights(c) == std::vector<uint64_t>{12, 14, 15, 16});
    LinearCode cc = build_circle_code(3, 2, 1);
    CHECK(allowed_nonzero_weights(cc) == std::vector<uint64_t>{6, 8, 9, 10});
    auto wd = weight_distribution_brute(c);
    auto allowed = allowed_nonzero_weights(c);
    for (const auto& [w, cnt] : wd.counts) {
        if (w == 0 || cnt == 0) continue;
        CHECK(std::binary_search(allowed.begin(), allowed.end(), w));
    }
}
