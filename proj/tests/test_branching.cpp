#include <doctest.h>

#include "critnum/branching.hpp"
#include "gen_weights.hpp"

using namespace critnum;

TEST_CASE("interlacing predicate") {
    CHECK(interlaces({0, -1}, {1, 0, -1}));
    CHECK(interlaces({2, 2}, {2, 2, 2}));
    CHECK(!interlaces({3}, {2, 0}));
    CHECK_THROWS_AS(interlaces({1, 0}, {1, 0}), ValidationError);
}

TEST_CASE("branch enumeration") {
    CHECK(branch_enumerate({1, 0}) == std::vector<Weight>{{1}, {0}});
    CHECK(branch_enumerate({2, 2, 2}) == std::vector<Weight>{{2, 2}});
    CHECK(branch_enumerate({1, 0, -1}) ==
          std::vector<Weight>{{1, 0}, {1, -1}, {0, 0}, {0, -1}});
    CHECK(branch_count({1, 0, -1}) == 4);
    CHECK_THROWS_AS(branch_enumerate({100, -100}, 100), EnumerationTooLarge);
}

TEST_CASE("exact dimension formula") {
    CHECK(weyl_dim({1, 0}) == 2);
    CHECK(weyl_dim({1, 0, -1}) == 8);
    CHECK(weyl_dim({4, 4, 4, 4}) == 1);
    CHECK(weyl_dim({}) == 1);
    // a deliberately non-small case stays exact: every hook factor is 21
    CHECK(weyl_dim({40, 20, 0, -20, -40}) == BigInt("16679880978201"));
}

TEST_CASE("dimension of a restriction is the sum over the branch") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const int rank = static_cast<int>(rng.range(2, 5));
        const Weight alpha = testgen::dominant(rng, rank, 3, 6);
        BigInt total = 0;
        for_each_branch(alpha, [&](const Weight& beta) { total += weyl_dim(beta); });
        CHECK(total == weyl_dim(alpha));
    }
}

TEST_CASE("det-power multiplicities via enumeration and via interlacing") {
    // theta' image (3) against mu_tilde (2,1) of the k = 6, l = 4 pair
    CHECK(tate_multiplicity({3}, {2, 1}, 4).value == 1);
    CHECK(tate_multiplicity({3}, {2, 1}, 5).value == 1);
    CHECK(tate_multiplicity({3}, {2, 1}, 3).value == 0);
    CHECK(tate_multiplicity({3}, {2, 1}, 6).value == 0);
    CHECK(tate_multiplicity({3}, {2, 1}, 4).via_enumeration);

    // trivial weights: only the zero twist embeds
    CHECK(tate_multiplicity({0}, {0, 0}, 0).value == 1);
    CHECK(tate_multiplicity({0}, {0, 0}, 1).value == 0);
    CHECK(tate_multiplicity({0}, {0, 0}, -1).value == 0);

    // symmetric-square fixture at k = 4: support is [2-k, k-1]
    for (Entry s = -4; s <= 5; ++s) {
        const int expected = (s >= -2 && s <= 3) ? 1 : 0;
        CHECK(tate_multiplicity({0}, {3, -2}, s).value == expected);
    }

    // cap exhaustion falls back to the interlacing route
    const auto wide = tate_multiplicity({0, 0}, {40, 0, -40}, 0, 10);
    CHECK(!wide.via_enumeration);
    CHECK(wide.value == 1);
}

TEST_CASE("det-power decomposition windows") {
    const auto plain = tate_decomposition({3}, {2, 1});
    CHECK(plain.multiplicities == std::map<Entry, int>{{4, 1}, {5, 1}});
    CHECK(plain.support_interval() == IntInterval{4, 5});

    const auto filtered =
        tate_decomposition({0}, {3, -2}, ParityContext{1, 3, 1, 0, 0});
    CHECK(filtered.multiplicities ==
          std::map<Entry, int>{{-2, 1}, {0, 1}, {1, 1}, {3, 1}});

    const auto empty = tate_decomposition({1, 0}, {0, 0, 0});
    CHECK(empty.multiplicities.empty());
}

TEST_CASE("multiplicity stays at most one across random inputs") {
    SplitMix64 rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        const int r = static_cast<int>(rng.range(1, 4));
        const Weight beta = testgen::dominant(rng, r + 1, 5, 8);
        const Weight alpha = testgen::dominant(rng, r, 5, 8);
        for (Entry s = -12; s <= 12; ++s) {
            const auto m = tate_multiplicity(alpha, beta, s);
            CHECK((m.value == 0 || m.value == 1));
        }
    }
}
