#include <doctest.h>

#include "critnum/branching.hpp"
#include "critnum/embedding.hpp"
#include "critnum/inequality.hpp"
#include "critnum/weil.hpp"
#include "gen_weights.hpp"

using namespace critnum;

namespace {

std::vector<HalfInt> halves(std::initializer_list<std::int64_t> times2) {
    std::vector<HalfInt> out;
    for (auto t : times2) out.push_back(HalfInt::from_times2(t));
    return out;
}

const LanglandsParam kShimuraPi = make_langlands(2, 4, {3, -3}, 0);
const LanglandsParam kTrivialGl1 = make_langlands(1, 0, {0}, 0);
const LanglandsParam kRankinPi = make_langlands(2, 6, {5, -5}, 0);
const LanglandsParam kRankinSigma = make_langlands(2, 4, {3, -3}, 0);
const LanglandsParam kGjPi = make_langlands(3, 0, {6, 0, -6}, 1);
const LanglandsParam kN4Pi = make_langlands(4, 0, {5, 1, -1, -5}, 0);
const LanglandsParam kM2Sigma = make_langlands(2, 1, {2, -2}, 0);

}  // namespace

TEST_CASE("pair normalization") {
    const auto big = make_langlands(4, 0, {5, 1, -1, -5}, 0);
    const auto swapped = normalize_pair(kShimuraPi, big);
    REQUIRE(std::holds_alternative<NormalizedPair>(swapped));
    CHECK(std::get<NormalizedPair>(swapped).swapped);
    CHECK(std::get<NormalizedPair>(swapped).pi.rank == 4);

    const auto kept = normalize_pair(kRankinPi, kRankinSigma);
    REQUIRE(std::holds_alternative<NormalizedPair>(kept));
    CHECK(!std::get<NormalizedPair>(kept).swapped);

    const auto both = make_langlands(2, 0, {5, -5}, 0);
    CHECK(std::holds_alternative<EmptyCertificate>(normalize_pair(both, both)));
    CHECK_THROWS_AS(normalize_pair(kTrivialGl1, kTrivialGl1), RankPairExcluded);
}

TEST_CASE("position tuple and jumps") {
    const auto p1 = position_tuple({5, -5}, {3, -3}, false);
    CHECK(p1.a == std::vector<int>{1, 1});
    CHECK(p1.jumps.empty());
    CHECK(p1.r == 1);

    const auto p2 = position_tuple({5, 1, -1, -5}, {2, -2}, false);
    CHECK(p2.a == std::vector<int>{1, 3});
    CHECK(p2.jumps == std::vector<int>{1});
    CHECK(p2.r == 2);

    const auto p3 = position_tuple({6, 0, -6}, {0}, true);
    CHECK(p3.a == std::vector<int>{1});
    CHECK(p3.r == 1);

    CHECK_THROWS_AS(position_tuple({5, 1, -1, -5}, {1, -1}, false), CoincidenceError);
}

TEST_CASE("lambda construction") {
    // nu = (3,1) along a = (1,1)
    const auto rankin = lambda_from(PureWeight{{3, 1}}, position_tuple({5, -5}, {3, -3}, false), 2);
    CHECK(rankin.lambda == Weight{3, 0});
    CHECK(!rankin.lambda_mod);

    const auto mid = lambda_from(PureWeight{{1, 0}}, position_tuple({5, 1, -1, -5}, {2, -2}, false), 4);
    CHECK(mid.lambda == Weight{1, 1});

    const auto gj = lambda_from(PureWeight{{0}}, position_tuple({6, 0, -6}, {0}, true), 3);
    CHECK(gj.lambda == Weight{0});
    CHECK(!gj.lambda_mod);  // no repaired variants for m = 1
}

TEST_CASE("u and v0") {
    const auto p_mid = position_tuple({5, 1, -1, -5}, {2, -2}, false);
    const auto uv_mid = build_uv({1, 0, 0, -1}, {1, 1}, p_mid);
    CHECK(uv_mid.u == Weight{1, 0, 0, -1});
    CHECK(uv_mid.v0 == Weight{1, 1, 1, 1});
    CHECK(uv_mid.tag == UVCase::NonExceptional);

    const auto p_gj = position_tuple({6, 0, -6}, {0}, true);
    const auto uv_gj = build_uv({2, 0, -2}, {0}, p_gj);
    CHECK(uv_gj.u == Weight{2, -3});
    CHECK(uv_gj.v0 == Weight{0, 0});
    CHECK(uv_gj.tag == UVCase::ExceptionalOddR);

    const auto p_rankin = position_tuple({5, -5}, {3, -3}, false);
    const auto uv_rankin = build_uv({-1, -5}, {3, 0}, p_rankin);
    CHECK(uv_rankin.u == Weight{-1, -5});
    CHECK(uv_rankin.v0 == Weight{3, 0});
}

TEST_CASE("defect and the hat modification") {
    CHECK(defect({3, 1, 1, -1}) == 0);
    CHECK(defect({-1, -5}) == 4);
    CHECK(defect({3, 0}) == 3);

    const auto h = hat_modify({-1, -5}, {3, 0});
    CHECK(h.d == 3);
    CHECK(h.u_hat == Weight{-1, -2});
    CHECK(h.v0_hat == Weight{3, 3});

    const auto id = hat_modify({1, 0, 0, -1}, {1, 1, 1, 1});
    CHECK(id.d == 0);
    CHECK(id.u_hat == Weight{1, 0, 0, -1});
    CHECK(id.v0_hat == Weight{1, 1, 1, 1});
}

TEST_CASE("mu_tilde and lambda_tilde") {
    {
        const auto [mu_t, lam_t] = mu_lambda_tilde({-1, -2}, {3, 3});
        CHECK(mu_t == Weight{2, 1});   // (k - l, 1) at k = 6, l = 4
        CHECK(lam_t == Weight{3, 3});  // (l - 1, l - 1)
    }
    {
        const auto [mu_t, lam_t] = mu_lambda_tilde({2, -3}, {0, 0});
        CHECK(mu_t == Weight{3, -2});  // (k - 1, 2 - k) at k = 4
        CHECK(lam_t == Weight{0, 0});
    }
    {
        const auto [mu_t, lam_t] = mu_lambda_tilde({1, 0, 0, -1}, {1, 1, 1, 1});
        CHECK(mu_t == Weight{1, 0, 0, -1});
        CHECK(lam_t == Weight{1, 1, 1, 1});
    }
}

TEST_CASE("splitting maps") {
    // r = 2: the two coordinate groups
    CHECK(split_theta({3, 1, 1, -1}, 1) == Weight{3, 1, -1});
    CHECK(split_theta({3, 1, 1, -1}, 2) == Weight{3, 1, -1});
    CHECK(split_theta_prime({4, 3, 2, 1}, 1) == Weight{3, 2});
    CHECK(split_theta_prime({4, 3, 2, 1}, 2) == Weight{4, 1});

    // r = 1 degenerates to the identity and the first coordinate
    CHECK(split_theta({2, -3}, 1) == Weight{2, -3});
    CHECK(split_theta({2, -3}, 2) == Weight{2, -3});
    CHECK(split_theta_prime({5, 5}, 1) == Weight{5});
    CHECK(split_theta_prime({5, 5}, 2) == Weight{5});

    CHECK(split_theta({1, 0, 0, -1}, 1) == split_theta({1, 0, 0, -1}, 2));

    CHECK_THROWS_AS(split_theta({3, 1, 0, -1}, 1), DefectNonzero);        // even r needs d = 0
    CHECK_THROWS_AS(split_theta_prime({2, 1}, 1), DefectNonzero);         // odd r needs d = 0
    CHECK_NOTHROW(split_theta_prime({3, 1, 0, -1}, 1));                   // unconstrained side
    CHECK_NOTHROW(split_theta({2, 1}, 1));
}

TEST_CASE("embedding intervals") {
    CHECK(emb_interval({0}, {-1, -3}) == IntInterval{1, 3});
    CHECK(emb_interval({3}, {-1, -2}) == IntInterval{4, 5});
    CHECK(emb_interval({1, 1}, {1, 0, -1}) == IntInterval{1, 1});
}

TEST_CASE("embedding intervals equal the brute-force interlacing scan") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int r = static_cast<int>(rng.range(1, 4));
        Weight alpha = testgen::dominant(rng, r + 1, 10, 20);
        Weight beta = testgen::dominant(rng, r, 10, 20);
        const IntInterval iv = emb_interval(beta, alpha);
        for (Entry s = -45; s <= 45; ++s) {
            CHECK(interlaces(testgen::shifted(beta, s), alpha) == iv.contains(s));
        }
    }
}

TEST_CASE("pipeline: Shimura weight k = 4 against the trivial character") {
    const auto [crit, tr] = crit_embedding_traced(kShimuraPi, kTrivialGl1);
    CHECK(crit.values == halves({3, 5, 7}));
    CHECK(tr.r == 1);
    CHECK(tr.d == 0);
    CHECK(tr.mu_tilde == Weight{3, 1});
    CHECK(tr.lambda_tilde == Weight{0, 0});
    CHECK(tr.emb_intervals[0] == IntInterval{1, 3});
    CHECK(tr.emb_intervals[1] == IntInterval{1, 3});
    CHECK(tr.t_offset == HalfInt::half_of(1));  // t = s + 1/2
    CHECK(!tr.parity_filter);
    CHECK(!tr.normalized);
}

TEST_CASE("pipeline: two modular weights k = 6, l = 4") {
    const auto [crit, tr] = crit_embedding_traced(kRankinPi, kRankinSigma);
    CHECK(crit.values == halves({10, 12}));
    CHECK(tr.d_u == 4);
    CHECK(tr.d_v == 3);
    CHECK(tr.d == 3);
    CHECK(tr.u == Weight{-1, -5});
    CHECK(tr.v0 == Weight{3, 0});
    CHECK(tr.mu_tilde == Weight{2, 1});
    CHECK(tr.lambda_tilde == Weight{3, 3});
    CHECK(tr.emb_intervals[0] == IntInterval{4, 5});
}

TEST_CASE("pipeline: symmetric-square lift at k = 4, with and without the twist") {
    const auto [crit, tr] = crit_embedding_traced(kGjPi, kTrivialGl1);
    CHECK(crit.values == halves({-4, 0, 2, 6}));  // {-2, 0, 1, 3}
    CHECK(tr.exceptional);
    CHECK(tr.parity_filter == 1);
    CHECK(tr.mu_tilde == Weight{3, -2});
    CHECK(tr.lambda_tilde == Weight{0, 0});
    CHECK(tr.emb_intervals[0] == IntInterval{-2, 3});
    CHECK(tr.u == Weight{2, -3});
    CHECK(tr.v0 == Weight{0, 0});

    // nu = -1 twist: w' = -2 and the sign bit flips the parity class
    const auto twisted = make_langlands(1, -2, {0}, 1);
    const auto [crit2, tr2] = crit_embedding_traced(kGjPi, twisted);
    CHECK(crit2.values == halves({-4, 2}));  // {-2, 1}
    CHECK(tr2.parity_filter == 0);
    CHECK(tr2.lambda_tilde == Weight{-1, -1});
    CHECK(tr2.emb_intervals[0] == IntInterval{-3, 2});
}

TEST_CASE("pipeline: ranks four against two") {
    const auto [crit, tr] = crit_embedding_traced(kN4Pi, kM2Sigma);
    CHECK(crit.values == halves({2}));  // {1}
    CHECK(tr.emb_intervals[0] == IntInterval{1, 1});
    CHECK(tr.emb_intervals[1] == IntInterval{1, 1});
    CHECK(tr.lambda == Weight{1, 1});
    CHECK(tr.u == Weight{1, 0, 0, -1});
    CHECK(tr.v0 == Weight{1, 1, 1, 1});
    CHECK(!tr.normalized);

    const auto [swapped_crit, swapped_tr] = crit_embedding_traced(kM2Sigma, kN4Pi);
    CHECK(swapped_crit.values == crit.values);
    CHECK(swapped_tr.normalized);
}

TEST_CASE("pipeline: exceptional even-r and odd-r branches") {
    // n = 5, m = 3 with one jump: r = 2
    const auto pi_a = make_langlands(5, 0, {6, 4, 0, -4, -6}, 0);
    const auto sigma_a = make_langlands(3, 0, {2, 0, -2}, 0);
    {
        const auto [crit, tr] = crit_embedding_traced(pi_a, sigma_a);
        CHECK(tr.r == 2);
        CHECK(tr.jumps == std::vector<int>{2});
        CHECK(tr.lambda == Weight{1, 0, 0});
        CHECK(tr.lambda_mod == Weight{1, 0, -1});
        CHECK(tr.lambda_tr == Weight{1, 0});
        CHECK(tr.u == Weight{1, 0, 0, -1});
        CHECK(tr.v0 == Weight{1, 1, 0, 0});
        CHECK(tr.d_u == 0);  // forced in the exceptional even-r branch
        CHECK(crit.values.empty());  // window {0, 1} misses Z_0
        CHECK(crit_inequality(pi_a, sigma_a).values.empty());
    }
    {
        const auto pi_flip = make_langlands(5, 0, {6, 4, 0, -4, -6}, 1);
        const auto [crit, tr] = crit_embedding_traced(pi_flip, sigma_a);
        CHECK(tr.parity_filter == 1);
        CHECK(crit.values == halves({0, 2}));  // {0, 1}
    }
    // n = 5, m = 3 with two jumps: r = 3
    const auto pi_b = make_langlands(5, 0, {6, 2, 0, -2, -6}, 1);
    const auto sigma_b = make_langlands(3, 0, {4, 0, -4}, 0);
    {
        const auto [crit, tr] = crit_embedding_traced(pi_b, sigma_b);
        CHECK(tr.r == 3);
        CHECK(tr.jumps == std::vector<int>{1, 2});
        CHECK(tr.u == Weight{1, 0, 0, -1, -1, -2});
        CHECK(tr.v0 == Weight{1, 1, 0, 0, -1, -1});
        CHECK(tr.d_v == 0);  // forced in the exceptional odd-r branch
        CHECK(crit.values == halves({0, 2}));
        CHECK(crit_inequality(pi_b, sigma_b).values == crit.values);
    }
}

TEST_CASE("pipeline: larger second rank without swapping") {
    // l_1 > l'_1 holds even though m > n, so the orientation is kept
    const auto pi = make_langlands(2, 0, {9, -9}, 0);
    const auto sigma = make_langlands(4, 0, {5, 1, -1, -5}, 0);
    const auto [crit, tr] = crit_embedding_traced(pi, sigma);
    CHECK(!tr.normalized);
    CHECK(tr.a == std::vector<int>{1, 1, 1, 1});
    CHECK(tr.r == 1);
    CHECK(tr.lambda == Weight{1, -1, -2, -4});
    CHECK(tr.u == Weight{4, -4});
    CHECK(tr.v0 == Weight{1, -4});
    CHECK(tr.d == 5);
    CHECK(tr.emb_intervals[0] == IntInterval{-3, 0});
    CHECK(crit.values == halves({-2, 0, 2, 4}));  // {-1, 0, 1, 2}
    CHECK(crit_inequality(pi, sigma).values == crit.values);
}

TEST_CASE("pipeline: adjacent ranks collapse the splitting maps onto mu and nu") {
    // fully interleaved spectra with m = n - 1: a_j = j, lambda = nu, d = 0,
    // and the theta images are the original pair of weights
    const auto pi = make_langlands(3, 0, {4, 0, -4}, 0);
    const auto sigma = make_langlands(2, 0, {3, -3}, 0);
    const auto [crit, tr] = crit_embedding_traced(pi, sigma);
    const Weight mu = langlands_to_weight(0, {4, 0, -4}).entries();
    const Weight nu = langlands_to_weight(0, {3, -3}).entries();
    CHECK(tr.a == std::vector<int>{1, 2});
    CHECK(tr.jumps == std::vector<int>{1});
    CHECK(tr.lambda == nu);
    CHECK(tr.d == 0);
    CHECK(tr.theta_lambda[0] == nu);
    CHECK(tr.theta_lambda[1] == nu);
    CHECK(tr.theta_mu[0] == dual_entries(mu));
    CHECK(tr.theta_mu[1] == dual_entries(mu));
    CHECK(crit.values == halves({1}));  // {1/2}
    CHECK(crit_gamma(pi, sigma).values == crit.values);
}

TEST_CASE("pipeline: coincident spectra produce the empty certificate") {
    const auto [crit, tr] = crit_embedding_traced(kRankinSigma, kRankinSigma);
    CHECK(crit.values.empty());
    CHECK(tr.empty_reason == PipelineTrace::EmptyReason::CoincidentSpectra);

    CHECK_THROWS_AS(crit_embedding(kTrivialGl1, kTrivialGl1), RankPairExcluded);
}

TEST_CASE("chain system equivalence under the splitting maps") {
    SplitMix64 rng(63);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int r = static_cast<int>(rng.range(1, 4));
        const Weight special = testgen::pure_even_rank(rng, r, 8, true);
        const Weight plain = testgen::pure_even_rank(rng, r, 8, false);
        for (Entry s = -40; s <= 40; ++s) {
            bool direct, via_theta;
            if (r % 2 == 0) {
                direct = testgen::satisfies_chain_system(special, testgen::shifted(plain, s));
                via_theta =
                    interlaces(testgen::shifted(split_theta_prime(plain, 1), s), split_theta(special, 1)) &&
                    interlaces(testgen::shifted(split_theta_prime(plain, 2), s), split_theta(special, 2));
            } else {
                direct = testgen::satisfies_chain_system(plain, testgen::shifted(special, s));
                via_theta =
                    interlaces(testgen::shifted(split_theta_prime(special, 1), s), split_theta(plain, 1)) &&
                    interlaces(testgen::shifted(split_theta_prime(special, 2), s), split_theta(plain, 2));
            }
            REQUIRE(direct == via_theta);
            if (direct) ++checked;
        }
    }
    CHECK(checked > 0);  // the window really hits satisfiable twists
}
