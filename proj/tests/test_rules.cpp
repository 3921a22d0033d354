#include "doctest.h"
#include "support.hpp"

using namespace wav;
using namespace wav::testsupport;

TEST_SUITE_BEGIN("rules");

TEST_CASE("stv on the worked example") {
    // Candidate 4 goes first (no first preferences), then 2 and 3 by the
    // lexicographic tie-break; candidate 1 wins.
    auto res = stv_winner(example_p1(), TieBreakOrder::lexicographic(4));
    CHECK(res.winner == 0);
    REQUIRE(res.trace.rounds.size() == 3);
    CHECK(res.trace.rounds[0].eliminated == 3);
    CHECK(res.trace.rounds[1].eliminated == 1);
    CHECK(res.trace.rounds[2].eliminated == 2);
    CHECK(res.trace.rounds[0].scores == std::vector<long long>{1, 1, 2, 0});
    CHECK(res.trace.rounds[1].scores == std::vector<long long>{1, 1, 2, -1});
    CHECK(res.trace.rounds[2].scores == std::vector<long long>{2, -1, 2, -1});
}

TEST_CASE("stv with one candidate") {
    Profile p(BallotMode::top_exactly(1), 1);
    p.add({0}, 3);
    auto res = stv_winner(p, TieBreakOrder::lexicographic(1));
    CHECK(res.winner == 0);
    CHECK(res.trace.rounds.empty());
}

TEST_CASE("stv agrees with an independent simulation") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 500; ++iter) {
        int m = std::uniform_int_distribution<int>(1, 5)(rng);
        int len = std::uniform_int_distribution<int>(1, std::min(3, m))(rng);
        Profile p = random_profile(rng, BallotMode::top_exactly(len), m, 8, 3);
        TieBreakOrder tb = random_tiebreak(rng, m);
        auto res = stv_winner(p, tb);
        CHECK(res.winner == simulate_stv(p, tb));
        // Trace validity: each eliminated candidate held the round minimum.
        for (const auto& round : res.trace.rounds) {
            long long elim_score = round.scores[round.eliminated];
            for (Cand c = 0; c < m; ++c)
                if (round.scores[c] >= 0) CHECK(round.scores[c] >= elim_score);
        }
    }
}

TEST_CASE("copeland scores") {
    Profile empty(BallotMode::top_exactly(2), 3);
    auto cs = copeland_scores(empty);
    for (const auto& s : cs) {
        CHECK(s.wins == 0);
        CHECK(s.ties == 2);
        CHECK(copeland_value(s, Alpha::of(1, 2)) == 2);   // = 1 over denominator 2
    }

    // From the worked example's majority graph.
    auto p1 = copeland_scores(example_p1());
    CHECK(p1[0].wins == 2);
    CHECK(p1[0].ties == 1);
    CHECK(p1[2].wins == 2);
    CHECK(p1[2].ties == 1);
    CHECK(p1[1].wins == 0);
    CHECK(p1[3].wins == 0);

    auto single = copeland_scores(make_profile(BallotMode::top_exactly(2), 2, {{{0, 1}, 1}}));
    CHECK(copeland_value(single[0], Alpha::of(1, 1)) == 1);
    CHECK(copeland_value(single[1], Alpha::of(1, 1)) == 0);
}

TEST_CASE("copeland pair sum is exact") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        int m = std::uniform_int_distribution<int>(2, 6)(rng);
        Profile p = random_profile(rng, BallotMode::top_exactly(2), m, 6, 4);
        Alpha alpha = Alpha::of(std::uniform_int_distribution<int>(0, 4)(rng), 4);
        auto g = wmg(p);
        auto cs = copeland_scores_from_wmg(g);
        long long total = 0;
        for (const auto& s : cs) total += copeland_value(s, alpha);
        long long expected = 0;
        for (Cand a = 0; a < m; ++a)
            for (Cand b = a + 1; b < m; ++b)
                expected += g.at(a, b) == 0 ? 2 * alpha.num : alpha.den;
        CHECK(total == expected);
    }
}

TEST_CASE("maximin scores") {
    Profile empty(BallotMode::top_exactly(2), 3);
    CHECK(maximin_scores(empty) == std::vector<long long>{0, 0, 0});

    CHECK(maximin_scores(example_p1())[0] == 0);

    auto single = maximin_scores(make_profile(BallotMode::top_exactly(2), 2, {{{0, 1}, 1}}));
    CHECK(single == std::vector<long long>{1, -1});

    Profile one(BallotMode::top_exactly(1), 1);
    CHECK_THROWS_AS(maximin_scores(one), std::invalid_argument);
}

TEST_CASE("maximin monotone under a supporting vote") {
    std::mt19937 rng(123);
    for (int iter = 0; iter < 100; ++iter) {
        int m = std::uniform_int_distribution<int>(2, 5)(rng);
        int len = std::uniform_int_distribution<int>(1, m)(rng);
        Profile p = random_profile(rng, BallotMode::top_exactly(len), m, 5, 3);
        Cand a = std::uniform_int_distribution<int>(0, m - 1)(rng);
        Ranking extra{a};
        for (Cand c = 0; c < m && static_cast<int>(extra.size()) < len; ++c)
            if (c != a) extra.push_back(c);
        Profile q = p;
        q.add(extra, 1);
        auto before = maximin_scores(p);
        auto after = maximin_scores(q);
        CHECK(after[a] >= before[a]);
        // A maximin score never exceeds the row maximum.
        auto g = wmg(p);
        long long row_max = g.at(a, a == 0 ? 1 : 0);
        for (Cand b = 0; b < m; ++b)
            if (b != a) row_max = std::max(row_max, g.at(a, b));
        CHECK(before[a] <= row_max);
    }
}

TEST_CASE("positional scoring on the worked example") {
    // Score-vector arithmetic per the up/down definitions; the winner under
    // up-rounding is candidate 1, under down-rounding candidate 2 (score 8).
    ScoringVector v{8, 2, 1};
    auto up = scoring_scores(example_p2(), v, Rounding::Up);
    CHECK(up == std::vector<long long>{18, 8, 12, 1});
    auto down = scoring_scores(example_p2(), v, Rounding::Down);
    CHECK(down == std::vector<long long>{6, 8, 3, 1});

    Profile empty(BallotMode::up_to(3), 4);
    CHECK(scoring_scores(empty, v, Rounding::Up) == std::vector<long long>{0, 0, 0, 0});

    CHECK(winner(example_p2(), Rule::scoring(v, Rounding::Up), TieBreakOrder::lexicographic(4)) == 0);
    CHECK(winner(example_p2(), Rule::scoring(v, Rounding::Down), TieBreakOrder::lexicographic(4)) == 1);
}

TEST_CASE("scoring linearity") {
    std::mt19937 rng(5);
    ScoringVector v{5, 2, 2};
    for (int iter = 0; iter < 100; ++iter) {
        int m = std::uniform_int_distribution<int>(3, 6)(rng);
        Profile p = random_profile(rng, BallotMode::up_to(3), m, 5, 3);
        Profile q = random_profile(rng, BallotMode::up_to(3), m, 5, 3);
        auto sp = scoring_scores(p, v, Rounding::Down);
        auto sq = scoring_scores(q, v, Rounding::Down);
        auto sm = scoring_scores(merge(p, q), v, Rounding::Down);
        for (Cand c = 0; c < m; ++c) CHECK(sm[c] == sp[c] + sq[c]);
    }
}

TEST_CASE("winner dispatch") {
    Profile empty(BallotMode::top_exactly(2), 3);
    CHECK(winner(empty, Rule::copeland(Alpha::of(1, 1)), TieBreakOrder::lexicographic(3)) == 0);
    CHECK(winner(example_p1(), Rule::stv(), TieBreakOrder::lexicographic(4)) == 0);

    // Rule/mode mismatches are rejected.
    CHECK_THROWS_AS(winner(example_p2(), Rule::scoring({8, 2, 1}, Rounding::TopExact),
                           TieBreakOrder::lexicographic(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(winner(example_p1(), Rule::scoring({8, 2}, Rounding::Up),
                           TieBreakOrder::lexicographic(4)),
                    std::invalid_argument);
}

TEST_CASE("neutrality under candidate relabeling") {
    std::mt19937 rng(31);
    for (int iter = 0; iter < 60; ++iter) {
        int m = std::uniform_int_distribution<int>(2, 5)(rng);
        int len = std::uniform_int_distribution<int>(1, m)(rng);
        Profile p = random_profile(rng, BallotMode::top_exactly(len), m, 6, 3);
        TieBreakOrder tb = random_tiebreak(rng, m);
        std::vector<Cand> pi(m);
        for (int i = 0; i < m; ++i) pi[i] = i;
        std::shuffle(pi.begin(), pi.end(), rng);

        Profile pp(p.mode, m);
        for (const auto& e : p.entries) {
            Ranking r;
            for (Cand c : e.ranking) r.push_back(pi[c]);
            pp.add(r, e.count);
        }
        std::vector<Cand> tb_order;
        for (Cand c : tb.priority) tb_order.push_back(pi[c]);
        TieBreakOrder tbp = TieBreakOrder::from_priority(tb_order);

        ScoringVector v;
        for (int i = len; i >= 1; --i) v.push_back(i);
        for (const Rule& rule : {Rule::stv(), Rule::maximin(), Rule::copeland(Alpha::of(1, 3)),
                                 Rule::scoring(v, Rounding::TopExact)}) {
            if (rule.kind == Rule::Kind::Maximin && m < 2) continue;
            CHECK(winner(pp, rule, tbp) == pi[winner(p, rule, tb)]);
        }
    }
}

TEST_SUITE_END();
