#include "doctest.h"
#include "support.hpp"

using namespace wav;
using namespace wav::testsupport;

TEST_SUITE_BEGIN("ballots");

TEST_CASE("validate_ranking") {
    CHECK_FALSE(validate_ranking({0, 1}, BallotMode::top_exactly(2), 4).has_value());
    CHECK(validate_ranking({0, 0}, BallotMode::top_exactly(2), 4).has_value());
    CHECK(validate_ranking({0, 1, 2}, BallotMode::up_to(2), 4).has_value());
    CHECK(validate_ranking({0}, BallotMode::top_exactly(2), 4).has_value());
    CHECK(validate_ranking({0, 4}, BallotMode::top_exactly(2), 4).has_value());
    CHECK_FALSE(validate_ranking({3}, BallotMode::up_to(2), 4).has_value());
    CHECK(validate_ranking({}, BallotMode::up_to(2), 4).has_value());
}

TEST_CASE("prefers") {
    // Ballot [3>1] with 2 unranked: 3 beats 2, which is tied with 4.
    Ranking r{2, 0};   // candidates 3 and 1, zero-indexed
    CHECK(prefers(r, 2, 1) == Pref::A);
    CHECK(prefers(r, 1, 3) == Pref::Tie);
    CHECK(prefers({1, 0}, 0, 1) == Pref::B);
    CHECK_THROWS_AS(prefers(r, 1, 1), std::invalid_argument);
}

TEST_CASE("wmg on the worked example") {
    auto g = wmg(example_p1());
    CHECK(g.at(2, 0) == 0);    // 3 vs 1
    CHECK(g.at(0, 3) == 4);    // 1 vs 4
    CHECK(g.at(0, 1) == 2);    // 1 vs 2
    CHECK(g.at(2, 1) == 1);    // 3 vs 2
    CHECK(g.at(2, 3) == 1);    // 3 vs 4
    CHECK(g.at(1, 3) == 0);    // 2 vs 4
}

TEST_CASE("wmg basics") {
    Profile empty(BallotMode::top_exactly(2), 3);
    auto g = wmg(empty);
    for (Cand a = 0; a < 3; ++a)
        for (Cand b = 0; b < 3; ++b) CHECK(g.at(a, b) == 0);

    auto single = make_profile(BallotMode::top_exactly(2), 2, {{{0, 1}, 1}});
    CHECK(wmg(single).at(0, 1) == 1);
}

TEST_CASE("merge") {
    Profile empty(BallotMode::top_exactly(2), 4);
    CHECK(merge(example_p1(), empty) == example_p1());

    auto a = make_profile(BallotMode::top_exactly(2), 2, {{{0, 1}, 1}});
    auto b = make_profile(BallotMode::top_exactly(2), 2, {{{1, 0}, 1}});
    auto g = wmg(merge(a, b));
    CHECK(g.at(0, 1) == 0);

    auto extra = make_profile(BallotMode::top_exactly(2), 4, {{{3, 0}, 1}});
    CHECK(wmg(merge(example_p1(), extra)).at(0, 3) == 3);

    auto p5 = make_profile(BallotMode::top_exactly(2), 5, {{{0, 1}, 1}});
    CHECK_THROWS_AS(merge(a, p5), std::invalid_argument);
    auto upto = make_profile(BallotMode::up_to(3), 2, {{{0}, 1}});
    CHECK_THROWS_AS(merge(a, upto), std::invalid_argument);
    CHECK(merge(upto, a).total_votes() == 2);
}

TEST_CASE("profile anonymity and value equality") {
    auto p = make_profile(BallotMode::top_exactly(2), 4,
                          {{{2, 0}, 2}, {{0, 3}, 1}, {{1, 0}, 1}});
    auto q = make_profile(BallotMode::top_exactly(2), 4,
                          {{{1, 0}, 1}, {{2, 0}, 1}, {{0, 3}, 1}, {{2, 0}, 1}});
    CHECK(p == q);
    CHECK(p.total_votes() == 4);
}

TEST_CASE("wmg properties on random profiles") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 200; ++iter) {
        int m = std::uniform_int_distribution<int>(2, 6)(rng);
        int len = std::uniform_int_distribution<int>(1, m)(rng);
        BallotMode mode = iter % 2 ? BallotMode::top_exactly(len) : BallotMode::up_to(len);
        Profile p = random_profile(rng, mode, m, 6, 4);
        Profile q = random_profile(rng, mode, m, 6, 4);
        auto gp = wmg(p);
        auto gq = wmg(q);
        auto gm = wmg(merge(p, q));
        Count n = p.total_votes();
        for (Cand a = 0; a < m; ++a) {
            for (Cand b = 0; b < m; ++b) {
                CHECK(gp.at(a, b) == -gp.at(b, a));
                CHECK(gm.at(a, b) == gp.at(a, b) + gq.at(a, b));
                CHECK(std::abs(gp.at(a, b)) <= n);
                if (a != b) CHECK(gp.at(a, b) == tally_margin(p, a, b));
            }
        }
    }
}

TEST_SUITE_END();
