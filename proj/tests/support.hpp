// Shared test helpers: the worked example profiles, random generators, and
// independent oracle implementations that deliberately avoid the library's
// own code paths.
#pragma once

#include <map>
#include <random>

#include "wav/rules.hpp"

namespace wav::testsupport {

// Example profile P1: four candidates (paper-style 1..4 map to indices
// 0..3), top-2 ballots 2x[3>1], 1x[1>4], 1x[2>1].
inline Profile example_p1() {
    return make_profile(BallotMode::top_exactly(2), 4,
                        {{{2, 0}, 2}, {{0, 3}, 1}, {{1, 0}, 1}});
}

// Example profile P2: up-to-3 ballots 2x[1>3], 1x[2>1>4], 1x[3].
inline Profile example_p2() {
    return make_profile(BallotMode::up_to(3), 4,
                        {{{0, 2}, 2}, {{1, 0, 3}, 1}, {{2}, 1}});
}

inline Ranking random_ranking(std::mt19937& rng, const BallotMode& mode, int m) {
    int len = mode.len;
    if (mode.kind == BallotMode::Kind::UpTo)
        len = std::uniform_int_distribution<int>(1, mode.len)(rng);
    std::vector<Cand> pool(m);
    for (int i = 0; i < m; ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), rng);
    return Ranking(pool.begin(), pool.begin() + len);
}

inline Profile random_profile(std::mt19937& rng, const BallotMode& mode, int m, int max_entries,
                              int max_count) {
    Profile p(mode, m);
    int entries = std::uniform_int_distribution<int>(0, max_entries)(rng);
    for (int i = 0; i < entries; ++i)
        p.add(random_ranking(rng, mode, m),
              std::uniform_int_distribution<int>(1, max_count)(rng));
    return p;
}

inline TieBreakOrder random_tiebreak(std::mt19937& rng, int m) {
    std::vector<Cand> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    return TieBreakOrder::from_priority(std::move(order));
}

// Pairwise margin computed vote by expanded vote straight from prefers(),
// independent of Wmg::accumulate.
inline long long tally_margin(const Profile& p, Cand a, Cand b) {
    long long margin = 0;
    for (const auto& e : p.entries) {
        Pref pref = prefers(e.ranking, a, b);
        if (pref == Pref::A) margin += e.count;
        if (pref == Pref::B) margin -= e.count;
    }
    return margin;
}

// A from-scratch STV simulation over individually expanded ballots, using
// different data structures than the library's round loop.
inline Cand simulate_stv(const Profile& p, const TieBreakOrder& tb) {
    std::vector<Ranking> ballots;
    for (const auto& e : p.entries)
        for (Count i = 0; i < e.count; ++i) ballots.push_back(e.ranking);
    std::vector<bool> out(p.m, false);
    for (int round = 0; round + 1 < p.m; ++round) {
        std::map<Cand, long long> tally;
        for (Cand c = 0; c < p.m; ++c)
            if (!out[c]) tally[c] = 0;
        for (const auto& b : ballots)
            for (Cand c : b)
                if (!out[c]) {
                    tally[c]++;
                    break;
                }
        Cand loser = -1;
        for (auto [c, score] : tally) {
            if (loser == -1 || score < tally[loser]) loser = c;
            else if (score == tally[loser] && tb.rank[c] > tb.rank[loser]) loser = c;
        }
        out[loser] = true;
    }
    for (Cand c = 0; c < p.m; ++c)
        if (!out[c]) return c;
    return -1;
}

}  // namespace wav::testsupport
