#include "fwcodes/report.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "fwcodes/linearized.hpp"
#include "fwcodes/pless.hpp"

namespace fwcodes {

namespace {

uint64_t upow(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

Claim claim(std::string id, std::string want, std::string got, bool match, bool fatal = true) {
    return Claim{std::move(id), std::move(want), std::move(got), match, fatal};
}

std::string dist_brief(const WeightDistribution& wd) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : wd.counts) {
        if (c == 0) continue;
        os << (first ? "" : " + ") << c;
        if (w != 0) os << "z^" << w;
        first = false;
    }
    return os.str();
}

std::string params3(uint64_t n, uint64_t k, uint64_t d) {
    std::ostringstream os;
    os << "[" << n << ", " << k << ", " << d << "]";
    return os.str();
}

struct Table1Row {
    uint32_t p, h, m, n, k, d, d_perp;
};

const std::vector<Table1Row>& table1_rows() {
    static const std::vector<Table1Row> rows = {
        {2, 1, 2, 4, 3, 2, 4},      {2, 1, 3, 8, 3, 6, 4},     {3, 1, 3, 27, 3, 24, 3},
        {5, 1, 3, 125, 3, 120, 3},  {2, 2, 3, 8, 4, 4, 4},     {2, 2, 4, 16, 4, 12, 4},
        {3, 2, 3, 27, 4, 18, 3},    {5, 2, 3, 125, 4, 100, 3}, {2, 3, 4, 16, 5, 8, 4},
        {2, 3, 5, 32, 5, 24, 4},    {3, 3, 4, 81, 5, 54, 3},   {2, 4, 5, 32, 6, 16, 4},
        {2, 4, 6, 64, 6, 48, 4},    {3, 4, 5, 243, 6, 162, 3},
    };
    return rows;
}

const std::map<uint64_t, BigInt>& ex21_counts() {
    static const std::map<uint64_t, BigInt> c = {
        {0, 1}, {6, 2400}, {8, 280800}, {9, 4743200}, {10, 38020320}};
    return c;
}

const std::map<uint64_t, BigInt>& ex22_counts() {
    static const std::map<uint64_t, BigInt> c = {{0, 1},
                                                 {20, 81120},
                                                 {24, 125736000},
                                                 {25, BigInt("6095697504")},
                                                 {26, BigInt("146366376000")}};
    return c;
}

bool counts_equal(const WeightDistribution& wd, const std::map<uint64_t, BigInt>& want) {
    std::map<uint64_t, BigInt> got;
    for (const auto& [w, c] : wd.counts)
        if (c != 0) got[w] = c;
    return got == want;
}

} // namespace

bool SuiteResult::ok() const {
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.match || !c.fatal; });
}

const std::vector<RootCountCase>& rootcount_cases() {
    static const std::vector<RootCountCase> cases = {
        {"g1", 2, 5, 2, {2, 1, 5}, 2},      {"g2", 2, 4, 3, {3, 5, 8, 7}, 4},
        {"g3", 3, 4, 3, {5, 9, 12, 11}, 9}, {"g4", 2, 4, 3, {13, 7, 10, 1}, 8},
        {"g5", 3, 3, 2, {14, 10, 24}, 9},
    };
    return cases;
}

SuiteResult suite_rootcount() {
    SuiteResult suite{"rootcount", {}};
    for (const auto& c : rootcount_cases()) {
        auto F = FieldCtx::make(c.p, c.m);
        std::vector<uint32_t> coeffs;
        for (uint64_t e : c.exponents) coeffs.push_back(F->exp(e));
        AffinePoly g(F, c.h, 0, coeffs);
        uint64_t n = affine_root_count(g);
        uint64_t n_scan = affine_root_count_scan(g);
        if (n != n_scan) {
            suite.claims.push_back(claim("rootcount[" + c.id + "]", "kernel count == scan count",
                                         std::to_string(n) + " != " + std::to_string(n_scan), false));
            continue;
        }
        if (n == c.expected) {
            suite.claims.push_back(claim("rootcount[" + c.id + "]",
                                         "N = " + std::to_string(c.expected) + " (Conway default)",
                                         "N = " + std::to_string(n), true));
        } else {
            // representation-sensitive: downgrade to the membership claim
            bool member = false;
            for (uint32_t j = 0; j <= c.h; ++j)
                if (n == upow(c.p, j)) member = true;
            suite.claims.push_back(claim(
                "rootcount[" + c.id + "]",
                "N = " + std::to_string(c.expected) + " (downgraded to membership: representation-sensitive)",
                "N = " + std::to_string(n) + (member ? " in {1,p,...,p^h}" : " OUTSIDE allowed set"), member));
        }
    }
    return suite;
}

SuiteResult suite_table1(const BruteOptions& opts) {
    SuiteResult suite{"table1", {}};
    for (const auto& row : table1_rows()) {
        std::ostringstream id;
        id << "table1[p=" << row.p << ",h=" << row.h << ",m=" << row.m << "]";
        LinearCode code = build_extended_code(row.p, row.m, row.h);
        auto cert = certify_min_distance(code, opts);
        bool primal_ok = code.n == row.n && code.k == row.k && cert.d == row.d;
        std::ostringstream got;
        got << params3(code.n, code.k, cert.d) << (cert.by_witness ? " (d by witness certificate)" : "");
        suite.claims.push_back(claim(id.str() + " code", params3(row.n, row.k, row.d), got.str(), primal_ok));
        auto rep = dual_low_weight_search(code, 4, 100'000'000, /*stop_at_first_weight=*/true);
        bool dual_ok = rep.d_perp == row.d_perp;
        suite.claims.push_back(claim(id.str() + " dual", params3(row.n, row.n - row.k, row.d_perp),
                                     params3(code.n, code.n - code.k, rep.d_perp), dual_ok));
    }
    return suite;
}

SuiteResult suite_examples(const BruteOptions& opts, uint64_t seed) {
    SuiteResult suite{"examples", {}};
    for (auto& c : suite_rootcount().claims) suite.claims.push_back(c);

    { // Ex21: p=3, m=2, s=1
        LinearCode code = build_circle_code(3, 2, 1);
        auto brute = weight_distribution_brute(code, opts);
        suite.claims.push_back(claim("Ex21 brute", "1 + 2400z^6 + 280800z^8 + 4743200z^9 + 38020320z^10",
                                     dist_brief(brute), counts_equal(brute, ex21_counts())));
        auto closed = weight_distribution_closed(ClosedFormCase::Circle, 3, 2, 1);
        suite.claims.push_back(
            claim("Ex21 closed form", "matches the stated enumerator", dist_brief(closed),
                  counts_equal(closed, ex21_counts())));
        auto mom = weight_distribution_moments(code);
        suite.claims.push_back(claim("Ex21 moment solver", "matches the stated enumerator",
                                     dist_brief(mom), counts_equal(mom, ex21_counts())));
        auto rep = dual_low_weight_search(code, 4);
        suite.claims.push_back(claim("Ex21 dual", params3(10, 6, 4),
                                     params3(code.n, code.n - code.k, rep.d_perp), rep.d_perp == 4));
    }
    { // Ex22: p=5, m=2, s=1; closed form + sampling, full enumeration is opt-in
        LinearCode code = build_circle_code(5, 2, 1);
        auto closed = weight_distribution_closed(ClosedFormCase::Circle, 5, 2, 1);
        suite.claims.push_back(
            claim("Ex22 closed form", "1 + 81120z^20 + 125736000z^24 + 6095697504z^25 + 146366376000z^26",
                  dist_brief(closed), counts_equal(closed, ex22_counts())));
        auto mom = weight_distribution_moments(code);
        suite.claims.push_back(claim("Ex22 moment solver", "matches the stated enumerator",
                                     dist_brief(mom), counts_equal(mom, ex22_counts())));
        std::mt19937_64 rng(seed);
        uint64_t bad = 0;
        std::vector<uint32_t> msg(4);
        for (uint32_t t = 0; t < 100'000; ++t) {
            do {
                for (auto& v : msg) v = uint32_t(rng() % code.field->q());
            } while (std::all_of(msg.begin(), msg.end(), [](uint32_t v) { return v == 0; }));
            uint64_t w = codeword_weight_fast(code, msg);
            if (w != 20 && w != 24 && w != 25 && w != 26) ++bad;
        }
        suite.claims.push_back(claim("Ex22 sampled weights", "10^5 random codewords in {20,24,25,26}",
                                     std::to_string(bad) + " outside", bad == 0));
        auto rep = dual_low_weight_search(code, 4);
        suite.claims.push_back(claim("Ex22 dual", params3(26, 22, 4),
                                     params3(code.n, code.n - code.k, rep.d_perp), rep.d_perp == 4));
    }
    return suite;
}

SuiteResult suite_designs(const BruteOptions& opts) {
    SuiteResult suite{"designs", {}};

    // S(3,4,q) for q in {8,16,32}: dependency construction vs dual search
    for (uint32_t m : {3u, 4u, 5u}) {
        auto F = FieldCtx::make(2, m);
        const uint64_t q = F->q();
        std::ostringstream id;
        id << "T12 S(3,4," << q << ")";
        Design des = steiner_blocks_binary(*F);
        uint64_t want_blocks = q * (q - 1) * (q - 2) / 24;
        suite.claims.push_back(claim(id.str() + " construction",
                                     "lambda = 1, " + std::to_string(want_blocks) + " blocks",
                                     "lambda = " + std::to_string(des.lambda) + ", " +
                                         std::to_string(des.block_count()) + " blocks",
                                     des.verified && des.lambda == 1 && des.block_count() == want_blocks));
        LinearCode code = build_extended_code(F, 2);
        auto rep = dual_low_weight_search(code, 4);
        bool same = rep.d_perp == 4 && rep.supports.count(4) && rep.supports.at(4) == des.blocks;
        suite.claims.push_back(claim(id.str() + " dual-search route", "same block set from weight-4 dual supports",
                                     same ? "identical" : "differs", same));
        BigInt a4 = BigInt(q) * (q - 1) * (q - 1) * (q - 2) / 24;
        suite.claims.push_back(claim(id.str() + " A4_perp", "A4_perp = q(q-1)^2(q-2)/24 = " + big_to_string(a4),
                                     big_to_string(rep.count_at(4)), rep.count_at(4) == a4));
    }

    // 2-(q, 3, p-2) for (p, q) in {(3,27), (5,125)}
    for (uint32_t p : {3u, 5u}) {
        auto F = FieldCtx::make(p, 3);
        const uint64_t q = F->q();
        std::ostringstream id;
        id << "T14 2-(" << q << ",3," << p - 2 << ")";
        Design des = triple_blocks_odd(*F);
        uint64_t want_blocks = q * (q - 1) * (p - 2) / 6;
        suite.claims.push_back(claim(
            id.str() + " construction", "lambda = " + std::to_string(p - 2) + ", " +
                                            std::to_string(want_blocks) + " blocks",
            "lambda = " + std::to_string(des.lambda) + ", " + std::to_string(des.block_count()) + " blocks",
            des.verified && des.lambda == p - 2 && des.block_count() == want_blocks));
        LinearCode code = build_extended_code(F, 2);
        auto rep = dual_low_weight_search(code, 3);
        bool same = rep.d_perp == 3 && rep.supports.count(3) && rep.supports.at(3) == des.blocks;
        suite.claims.push_back(claim(id.str() + " dual-search route", "same block set from weight-3 dual supports",
                                     same ? "identical" : "differs", same));
        BigInt a3 = BigInt(q) * (q - 1) * (q - 1) * (p - 2) / 6;
        suite.claims.push_back(claim(id.str() + " A3_perp", "A3_perp = q(q-1)^2(p-2)/6 = " + big_to_string(a3),
                                     big_to_string(rep.count_at(3)), rep.count_at(3) == a3));
    }

    // circle duals: S(3,4,10) at q=9 and 3-(26,4,3) at q=25
    for (uint32_t p : {3u, 5u}) {
        LinearCode code = build_circle_code(p, 2, 1);
        const uint64_t q = upow(p, 2);
        uint32_t lam_want = p - 2; // p^l - 2 with l = 1
        std::ostringstream id;
        id << "T20 3-(" << q + 1 << ",4," << lam_want << ")";
        Design des = circle_dual_design(code);
        BigInt a4 = BigInt(q + 1) * (q + 1) * q * (q - 1) * (q - 1) * lam_want / 24;
        auto rep = dual_low_weight_search(code, 4);
        bool ok = des.verified && des.lambda == lam_want;
        suite.claims.push_back(claim(id.str(), "lambda = " + std::to_string(lam_want),
                                     "lambda = " + std::to_string(des.lambda) + ", " +
                                         std::to_string(des.block_count()) + " blocks",
                                     ok));
        suite.claims.push_back(claim(id.str() + " A4_perp",
                                     "A4_perp = (q+1)^2 q(q-1)^2(p^l-2)/24 = " + big_to_string(a4),
                                     big_to_string(rep.count_at(4)), rep.count_at(4) == a4));
        bool eq1 = BigInt(des.block_count()) * (BigInt(code.field->q()) - 1) == rep.count_at(4);
        suite.claims.push_back(claim(id.str() + " block count", "|B| (q^2 - 1) == A4_perp",
                                     std::to_string(des.block_count()) + " blocks", eq1));
    }

    { // Ex21 weight-6 supports: 3-(10, 6, 5)
        LinearCode code = build_circle_code(3, 2, 1);
        auto sups = supports_of_weight(code, 6, opts);
        auto chk = verify_t_design(sups, code.n, 3);
        bool ok = chk.ok && chk.lambda == 5 && sups.size() == 30;
        suite.claims.push_back(claim("Ex21 3-(10,6,5)", "lambda = 5 from 30 weight-6 supports",
                                     "lambda = " + std::to_string(chk.lambda) + ", " +
                                         std::to_string(sups.size()) + " supports",
                                     ok));
        bool eq1 = design_count_identity(10, 3, 6, chk.lambda, sups.size());
        suite.claims.push_back(
            claim("Ex21 3-(10,6,5) identity", "lambda C(10,3) == C(6,3) |B|", "checked", eq1));
    }

    { // weight-5 dual supports at q=16: 3-(16, 5, 48)
        LinearCode code = build_extended_code(2, 4, 2);
        auto rep = dual_low_weight_search(code, 5);
        auto it = rep.supports.find(5);
        bool have = it != rep.supports.end();
        auto chk = have ? verify_t_design(it->second, code.n, 3) : DesignCheck{};
        bool ok = have && chk.ok && chk.lambda == 48 && it->second.size() == 2688;
        suite.claims.push_back(claim("T15 3-(16,5,48)", "lambda = (q-4)(q-8)/2 = 48 from 2688 supports",
                                     "lambda = " + std::to_string(chk.lambda) + ", " +
                                         std::to_string(have ? it->second.size() : 0) + " supports",
                                     ok));
    }

    // T11: every nonzero weight of an affine-invariant code yields a 2-design
    for (auto [p, m] : {std::pair<uint32_t, uint32_t>{2, 4}, {3, 3}}) {
        LinearCode code = build_extended_code(p, m, 2);
        auto wd = weight_distribution_brute(code, opts);
        bool all_ok = true;
        std::ostringstream got;
        for (const auto& [w, c] : wd.counts) {
            if (w == 0 || c == 0) continue;
            auto sups = supports_of_weight(code, w, opts);
            auto chk = verify_t_design(sups, code.n, 2);
            bool id_ok = chk.ok && design_count_identity(code.n, 2, uint32_t(w), chk.lambda, sups.size());
            if (!id_ok) all_ok = false;
            got << "w=" << w << ":lambda=" << chk.lambda << " ";
        }
        std::ostringstream id;
        id << "T11 2-designs (p=" << p << ",m=" << m << ",h=2)";
        suite.claims.push_back(claim(id.str(), "every nonzero weight forms a 2-design", got.str(), all_ok));
    }

    { // Assmus-Mattson certifications
        LinearCode c21 = build_circle_code(3, 2, 1);
        auto wd = weight_distribution_brute(c21, opts);
        auto am = assmus_mattson(wd, 6, 4, c21.alphabet_size());
        suite.claims.push_back(claim("T20 AM at q=9", "t = 3 certified",
                                     "t_max = " + std::to_string(am.t_max), am.t_max == 3));
        LinearCode c15 = build_extended_code(2, 4, 2);
        auto wd15 = weight_distribution_brute(c15, opts);
        auto am15 = assmus_mattson(wd15, 12, 4, c15.alphabet_size());
        suite.claims.push_back(claim("T15 AM at q=16", "t = 3 certified",
                                     "t_max = " + std::to_string(am15.t_max), am15.t_max == 3));
    }
    return suite;
}

SuiteResult suite_lrc(const BruteOptions& opts) {
    SuiteResult suite{"lrc", {}};
    struct Inst {
        uint32_t p, m, h_or_s;
        bool circle;
        const char* note;
    };
    const std::vector<Inst> insts = {
        {2, 4, 2, false, "T27 at q=16"},   {3, 3, 2, false, "T28 at q=27"},
        {2, 4, 3, false, "T29 at q=16"},   {2, 2, 1, false, "T30/T31 at q=4"},
        {3, 2, 1, false, "T30/T31 at q=9"}, {2, 3, 2, false, "T31 at q=8 (h=m-1=2)"},
        {2, 6, 3, false, "T30 at q=64 (h=3|m)"}, {3, 4, 2, false, "T30 at q=81 (h=2|m)"},
        {3, 2, 1, true, "T32 at q=9"},
    };
    for (const auto& inst : insts) {
        LinearCode code = inst.circle ? build_circle_code(inst.p, inst.m, inst.h_or_s)
                                      : build_extended_code(inst.p, inst.m, inst.h_or_s);
        LrcPair pair = lrc_profile(code, opts);
        std::string base = std::string(inst.note);
        suite.claims.push_back(claim(base + " hypothesis",
                                     "1-design hypothesis holds for code and dual localities",
                                     std::string(pair.primal.one_design_ok ? "code ok" : "code FAILED") +
                                         ", " + (pair.dual.one_design_ok ? "dual ok" : "dual FAILED"),
                                     pair.primal.one_design_ok && pair.dual.one_design_ok));
        for (const auto& c : pair.claims)
            suite.claims.push_back(claim(base + " " + c.id, c.claim, c.computed, c.match, c.fatal));
    }
    return suite;
}

SuiteResult suite_conjecture(const BruteOptions& opts) {
    SuiteResult suite{"conjecture", {}};
    struct Inst {
        uint32_t m, h;
        bool assert_lambda; // the (2,4,2) instance has a stated formula
    };
    const std::vector<Inst> insts = {{4, 2, true}, {4, 3, false}, {5, 3, false}, {5, 4, false}};
    for (const auto& inst : insts) {
        auto probe = conjecture13_probe(inst.m, inst.h, opts);
        std::ostringstream id;
        id << "C13[p=2,m=" << inst.m << ",h=" << inst.h << "]";
        std::ostringstream got;
        got << "min weight " << probe.min_weight << ", " << probe.support_count << " supports, ";
        if (probe.holds_3design)
            got << "3-design with lambda = " << probe.lambda;
        else {
            got << "NOT a 3-design (triple";
            for (uint32_t x : probe.witness) got << " " << x;
            got << ")";
        }
        if (inst.assert_lambda) {
            uint64_t q = probe.q;
            uint64_t lam = (q - 4) * (q - 5) * (q - 6) / 24;
            suite.claims.push_back(claim(id.str(), "3-design with lambda = (q-4)(q-5)(q-6)/24 = " +
                                                       std::to_string(lam),
                                         got.str(), probe.holds_3design && probe.lambda == lam));
        } else {
            suite.claims.push_back(claim(id.str(), "probe completes (evidence only)", got.str(), true));
        }
    }
    return suite;
}

nlohmann::ordered_json field_to_json(const FieldSpec& spec) {
    return nlohmann::ordered_json{{"p", spec.p}, {"m", spec.m}, {"modulus", spec.modulus}};
}

std::string big_to_string(const BigInt& v) { return v.str(); }

nlohmann::ordered_json distribution_to_json(const WeightDistribution& wd) {
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& [w, c] : wd.counts)
        if (c != 0) counts[std::to_string(w)] = big_to_string(c);
    const char* src = wd.source == WeightDistribution::Source::BruteForce   ? "brute-force"
                      : wd.source == WeightDistribution::Source::ClosedForm ? "closed-form"
                                                                            : "moment-solve";
    return nlohmann::ordered_json{
        {"n", wd.n}, {"source", src}, {"detail", wd.detail}, {"counts", counts}};
}

std::string distribution_to_csv(const WeightDistribution& wd) {
    std::ostringstream os;
    os << "weight,count\n";
    for (const auto& [w, c] : wd.counts)
        if (c != 0) os << w << "," << big_to_string(c) << "\n";
    return os.str();
}

nlohmann::ordered_json code_to_json(const LinearCode& code, bool include_matrix) {
    nlohmann::ordered_json j{{"family", family_name(code.family)},
                             {"n", code.n},
                             {"k", code.k},
                             {"field", field_to_json(code.field->spec())}};
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    params["p"] = code.p;
    params["m"] = code.m;
    if (code.family == Family::UnitCircle)
        params["s"] = code.s;
    else
        params["h"] = code.h;
    j["params"] = params;
    j["column_labels"] = code.column_labels;
    if (include_matrix) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (uint32_t r = 0; r < code.k; ++r) {
            std::vector<uint32_t> row(code.gen.begin() + size_t(r) * code.n,
                                      code.gen.begin() + size_t(r + 1) * code.n);
            rows.push_back(row);
        }
        j["generator"] = rows;
    }
    return j;
}

nlohmann::ordered_json design_to_json(const Design& d, const std::vector<uint32_t>* column_labels) {
    nlohmann::ordered_json j{{"t", d.t},         {"k", d.kappa},   {"n", d.n_points},
                             {"lambda", d.lambda}, {"verified", d.verified},
                             {"block_count", d.block_count()}};
    j["blocks"] = d.blocks;
    if (column_labels) j["column_labels"] = *column_labels;
    return j;
}

std::string design_to_text(const Design& d) {
    std::ostringstream os;
    os << d.t << " " << d.kappa << " " << d.n_points << " " << d.lambda << "\n";
    for (const auto& b : d.blocks) {
        for (size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << b[i];
        os << "\n";
    }
    return os.str();
}

nlohmann::ordered_json lrc_profile_to_json(const LrcProfile& pr) {
    return nlohmann::ordered_json{{"n", pr.n},
                                  {"k", pr.k},
                                  {"d", pr.d},
                                  {"alphabet", big_to_string(pr.alphabet_size)},
                                  {"r", pr.r},
                                  {"one_design_ok", pr.one_design_ok},
                                  {"lambda1", pr.lambda1},
                                  {"singleton_bound", pr.singleton_bound},
                                  {"singleton_defect", pr.singleton_defect},
                                  {"cm_bound", pr.cm_bound},
                                  {"d_optimal", pr.d_optimal},
                                  {"almost_d_optimal", pr.d_almost},
                                  {"k_optimal", pr.k_optimal},
                                  {"note", pr.note}};
}

nlohmann::ordered_json lrc_pair_to_json(const LrcPair& pair) {
    nlohmann::ordered_json claims = nlohmann::ordered_json::array();
    for (const auto& c : pair.claims)
        claims.push_back(nlohmann::ordered_json{{"id", c.id},
                                                {"claim", c.claim},
                                                {"computed", c.computed},
                                                {"match", c.match},
                                                {"fatal", c.fatal}});
    return nlohmann::ordered_json{{"code", lrc_profile_to_json(pair.primal)},
                                  {"dual", lrc_profile_to_json(pair.dual)},
                                  {"claims", claims}};
}

nlohmann::ordered_json claims_to_json(const std::vector<Claim>& claims) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : claims)
        arr.push_back(nlohmann::ordered_json{{"id", c.id},
                                             {"claim", c.claim},
                                             {"computed", c.computed},
                                             {"match", c.match},
                                             {"fatal", c.fatal}});
    return arr;
}

std::string claims_to_text(const std::vector<Claim>& claims) {
    std::ostringstream os;
    for (const auto& c : claims) {
        const char* tag = c.match ? "[PASS]" : (c.fatal ? "[FAIL]" : "[NOTE]");
        os << tag << " " << c.id << ": expected " << c.claim << "; got " << c.computed << "\n";
    }
    return os.str();
}

std::string claims_to_csv(const std::vector<Claim>& claims) {
    auto esc = [](const std::string& s) {
        std::string r = "\"";
        for (char ch : s) {
            if (ch == '"') r += "\"\"";
            else r += ch;
        }
        return r + "\"";
    };
    std::ostringstream os;
    os << "id,claim,computed,match\n";
    for (const auto& c : claims)
        os << esc(c.id) << "," << esc(c.claim) << "," << esc(c.computed) << ","
           << (c.match ? "true" : "false") << "\n";
    return os.str();
}

} // namespace fwcodes
