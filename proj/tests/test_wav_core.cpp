#include "doctest.h"
#include "support.hpp"
#include "wav/wav_core.hpp"

using namespace wav;
using namespace wav::testsupport;

TEST_SUITE_BEGIN("wav-core");

TEST_CASE("enumerate_rankings counts and order") {
    auto top2 = enumerate_rankings(BallotMode::top_exactly(2), 4);
    CHECK(top2.size() == 12);
    CHECK(count_rankings(BallotMode::top_exactly(2), 4) == 12);

    auto top1 = enumerate_rankings(BallotMode::top_exactly(1), 3);
    CHECK(top1 == std::vector<Ranking>{{0}, {1}, {2}});

    auto upto2 = enumerate_rankings(BallotMode::up_to(2), 3);
    CHECK(upto2.size() == 9);
    CHECK(count_rankings(BallotMode::up_to(2), 3) == 9);

    CHECK_THROWS_AS(enumerate_rankings(BallotMode::top_exactly(4), 3), std::invalid_argument);

    // Each ranking appears exactly once.
    std::sort(upto2.begin(), upto2.end());
    CHECK(std::adjacent_find(upto2.begin(), upto2.end()) == upto2.end());
}

TEST_CASE("anonymous profile counts") {
    CHECK(count_anonymous_profiles(3, 2) == 6);
    CHECK(count_anonymous_profiles(7, 0) == 1);
    CHECK(count_anonymous_profiles(12, 2) == 78);

    long long seen = 0;
    for_each_anonymous_profile(3, 2, [&](const std::vector<Count>&) {
        ++seen;
        return true;
    });
    CHECK(seen == 6);

    seen = 0;
    for_each_anonymous_profile(12, 2, [&](const std::vector<Count>& counts) {
        long long total = 0;
        for (Count c : counts) total += c;
        CHECK(total == 2);
        ++seen;
        return true;
    });
    CHECK(seen == 78);

    // t = 0 yields exactly the empty profile.
    seen = 0;
    for_each_anonymous_profile(5, 0, [&](const std::vector<Count>& counts) {
        for (Count c : counts) CHECK(c == 0);
        ++seen;
        return true;
    });
    CHECK(seen == 1);
}

namespace {

WavInstance basic_instance(Profile known, long long t, Cand target, Rule rule) {
    WavInstance inst;
    inst.mode = known.mode;
    inst.m = known.m;
    inst.known = std::move(known);
    inst.t = t;
    inst.target = target;
    inst.rule = rule;
    inst.tb = TieBreakOrder::lexicographic(inst.m);
    return inst;
}

}  // namespace

TEST_CASE("bruteforce with t = 0 reduces to a winner check") {
    auto yes = wav_bruteforce(basic_instance(example_p1(), 0, 0, Rule::stv()));
    CHECK(yes.yes);
    CHECK(yes.witness.total_votes() == 0);

    auto no = wav_bruteforce(basic_instance(example_p1(), 0, 1, Rule::stv()));
    CHECK_FALSE(no.yes);
}

TEST_CASE("bruteforce scoring example") {
    // Known 2x[a>b]; one absent vote cannot lift c past a.
    auto known = make_profile(BallotMode::top_exactly(2), 3, {{{0, 1}, 2}});
    auto inst = basic_instance(known, 1, 2, Rule::scoring({2, 1}, Rounding::TopExact));
    auto ans = wav_bruteforce(inst);
    CHECK_FALSE(ans.yes);
}

TEST_CASE("bruteforce budget guard") {
    Profile empty(BallotMode::top_exactly(2), 5);
    auto inst = basic_instance(empty, 3, 0, Rule::stv());
    // 20 rankings, C(22, 3) = 1540 profiles.
    CHECK_THROWS_AS(wav_bruteforce(inst, 1000), BudgetExceeded);
    try {
        wav_bruteforce(inst, 1000);
    } catch (const BudgetExceeded& e) {
        CHECK(e.needed == 1540);
    }
    CHECK(wav_bruteforce(inst, 2000).yes);   // target 0 is lexicographically favored
}

TEST_CASE("bruteforce witness is deterministic and enumeration-first") {
    Profile empty(BallotMode::top_exactly(2), 3);
    auto inst = basic_instance(empty, 2, 0, Rule::scoring({2, 1}, Rounding::TopExact));
    auto ans = wav_bruteforce(inst);
    REQUIRE(ans.yes);
    // The very first anonymous profile (both votes on the lexicographically
    // first ranking [0, 1]) already elects candidate 0.
    REQUIRE(ans.witness.entries.size() == 1);
    CHECK(ans.witness.entries[0].ranking == Ranking{0, 1});
    CHECK(ans.witness.entries[0].count == 2);
}

TEST_CASE("sampled completions never beat the exhaustive answer") {
    std::mt19937 rng(424242);
    int yes_seen = 0;
    for (int iter = 0; iter < 150; ++iter) {
        int m = std::uniform_int_distribution<int>(2, 4)(rng);
        int len = std::uniform_int_distribution<int>(1, std::min(2, m))(rng);
        BallotMode mode = iter % 2 ? BallotMode::top_exactly(len) : BallotMode::up_to(len);
        Profile known = random_profile(rng, mode, m, 4, 2);
        long long t = std::uniform_int_distribution<int>(0, 2)(rng);
        Cand target = std::uniform_int_distribution<int>(0, m - 1)(rng);

        std::vector<Rule> rules{Rule::stv(), Rule::maximin(),
                                Rule::copeland(Alpha::of(1, 2))};
        if (mode.kind == BallotMode::Kind::TopExactly) {
            ScoringVector v;
            for (int i = len; i >= 1; --i) v.push_back(i);
            rules.push_back(Rule::scoring(v, Rounding::TopExact));
        }
        Rule rule = rules[std::uniform_int_distribution<size_t>(0, rules.size() - 1)(rng)];

        WavInstance inst = basic_instance(known, t, target, rule);
        inst.tb = random_tiebreak(rng, m);
        WavAnswer exhaustive = wav_bruteforce(inst);
        if (exhaustive.yes) ++yes_seen;

        // Random ordered completions: if any elects the target, the
        // anonymous search must have said yes (anonymity sufficiency).
        for (int trial = 0; trial < 20; ++trial) {
            Profile completion(inst.mode, m);
            for (long long v = 0; v < t; ++v) completion.add(random_ranking(rng, mode, m), 1);
            if (winner(merge(known, completion), rule, inst.tb) == target) CHECK(exhaustive.yes);
        }
    }
    CHECK(yes_seen > 10);
}

TEST_SUITE_END();
