#include <doctest.h>

#include "fwcodes/lrc.hpp"

using namespace fwcodes;

TEST_CASE("Singleton-like bound") {
    CHECK(singleton_like_check(16, 4, 12, 3).bound == 12);
    CHECK(singleton_like_check(16, 4, 12, 3).defect == 0);
    CHECK(singleton_like_check(10, 4, 6, 3).bound == 6);
    CHECK(singleton_like_check(10, 6, 4, 5).bound == 4); // 10-6-ceil(6/5)+2
    CHECK(singleton_like_check(27, 23, 3, 17).defect == 1);
    CHECK_THROWS_AS(singleton_like_check(10, 0, 1, 1), ParamError);
}

TEST_CASE("Cadambe-Mazumdar bound via the Singleton upper bound") {
    {
        auto cm = cm_bound_check(16, 4, 12, 3); // 3 + k_opt(12, 12) = 4
        CHECK(cm.bound == 4);
        CHECK(cm.k_optimal);
    }
    {
        auto cm = cm_bound_check(10, 6, 4, 5); // 5 + k_opt(4, 4) = 6
        CHECK(cm.bound == 6);
        CHECK(cm.k_optimal);
    }
    {
        // degenerate residual length: the t term contributes rt only
        auto cm = cm_bound_check(4, 3, 2, 3); // t=1: 3 + k_opt(0, 2) = 3
        CHECK(cm.bound == 3);
        CHECK(cm.k_optimal);
    }
}

TEST_CASE("locality via the 1-design hypothesis") {
    SUBCASE("extended binary code at q=16: r = 3 and dual r = 11") {
        LinearCode c = build_extended_code(2, 4, 2);
        auto rep = dual_low_weight_search(c, 4);
        auto loc = min_locality(c, rep);
        CHECK(loc.hypothesis_ok);
        CHECK(loc.r == 3);
        auto dual_loc = locality_from_min_supports(c.n, supports_of_weight(c, 12));
        CHECK(dual_loc.hypothesis_ok);
        CHECK(dual_loc.r == 11); // q - 5
    }
    SUBCASE("circle code at q=9: r = 3 and dual r = 5") {
        LinearCode c = build_circle_code(3, 2, 1);
        auto loc = min_locality(c, dual_low_weight_search(c, 4));
        CHECK(loc.hypothesis_ok);
        CHECK(loc.r == 3);
        auto dual_loc = locality_from_min_supports(c.n, supports_of_weight(c, 6));
        CHECK(dual_loc.hypothesis_ok);
        CHECK(dual_loc.r == 5); // q - p^l - 1
    }
    SUBCASE("non-uniform coverage is rejected") {
        std::vector<std::vector<uint32_t>> sups = {{0, 1}, {0, 2}};
        auto loc = locality_from_min_supports(4, sups);
        CHECK_FALSE(loc.hypothesis_ok);
    }
}

TEST_CASE("full profiles against the reference claims") {
    SUBCASE("q=16, h=2: both codes d- and k-optimal") {
        auto pair = lrc_profile(build_extended_code(2, 4, 2));
        CHECK(pair.primal.d_optimal);
        CHECK(pair.primal.k_optimal);
        CHECK(pair.dual.d_optimal);
        CHECK(pair.dual.k_optimal);
        CHECK(pair.primal.r == 3);
        CHECK(pair.dual.r == 11);
        for (const auto& c : pair.claims) CHECK((c.match || !c.fatal));
    }
    SUBCASE("q=27, h=2: dual almost d-optimal") {
        auto pair = lrc_profile(build_extended_code(3, 3, 2));
        CHECK(pair.dual.d_almost);
        CHECK(pair.dual.singleton_defect == 1);
        for (const auto& c : pair.claims) CHECK((c.match || !c.fatal));
    }
    SUBCASE("q=16, h=3: dual almost d-optimal") {
        auto pair = lrc_profile(build_extended_code(2, 4, 3));
        CHECK(pair.dual.d_almost);
        for (const auto& c : pair.claims) CHECK((c.match || !c.fatal));
    }
    SUBCASE("defects are never negative on reference instances") {
        for (auto [p, m, h] : {std::tuple<uint32_t, uint32_t, uint32_t>{2, 3, 1},
                               {2, 4, 2},
                               {3, 3, 2},
                               {2, 4, 3},
                               {5, 2, 1}}) {
            auto pair = lrc_profile(build_extended_code(p, m, h));
            CHECK(pair.primal.singleton_defect >= 0);
            CHECK(pair.dual.singleton_defect >= 0);
            CHECK(pair.primal.k <= pair.primal.cm_bound);
            CHECK(pair.dual.k <= pair.dual.cm_bound);
        }
    }
}
