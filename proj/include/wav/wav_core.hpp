// The winner-with-absent-votes decision problem, admissible-ranking
// enumeration, and the exhaustive anonymous-profile solver. The brute-force
// solver doubles as the ground-truth oracle for every other solver in the
// project.
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "wav/ballots.hpp"
#include "wav/rules.hpp"

namespace wav {

// Can t additional ballots make `target` the winner of `known` under `rule`?
struct WavInstance {
    BallotMode mode;
    int m = 0;
    Profile known;
    long long t = 0;
    Cand target = 0;
    Rule rule;
    TieBreakOrder tb;
};

// Throws std::invalid_argument when the instance violates its invariants.
void validate_instance(const WavInstance& inst);

struct WavAnswer {
    bool yes = false;
    Profile witness;   // exactly t votes when yes, empty otherwise

    static WavAnswer no() { return {false, {}}; }
};

struct BudgetExceeded : std::runtime_error {
    unsigned long long needed;
    explicit BudgetExceeded(unsigned long long needed_)
        : std::runtime_error("enumeration budget exceeded: " + std::to_string(needed_) +
                             " candidate profiles required"),
          needed(needed_) {}
};

// All admissible rankings, each exactly once, in a deterministic order:
// TopExactly(l) lists the length-l permutations lexicographically; UpTo(L)
// lists lengths 1..L, lexicographic within each length.
std::vector<Ranking> enumerate_rankings(const BallotMode& mode, int m);

// Closed-form count of enumerate_rankings, saturating at UINT64_MAX.
unsigned long long count_rankings(const BallotMode& mode, int m);

// Multiset coefficient C(t + R - 1, R - 1), saturating at UINT64_MAX.
unsigned long long count_anonymous_profiles(unsigned long long num_rankings, long long t);

// Visits every multiset of size t over `rankings` exactly once as a vector of
// per-ranking counts. Enumeration order: counts are assigned left to right,
// highest count first, so the first profile puts all t votes on rankings[0].
// The visitor returns false to stop early; the function reports whether the
// walk ran to completion.
bool for_each_anonymous_profile(size_t num_rankings, long long t,
                                const std::function<bool(const std::vector<Count>&)>& visit);

constexpr unsigned long long kDefaultProfileBudget = 10'000'000ULL;

// Exhaustive search over anonymous completions, in enumeration order, with
// the first witness returned. Incremental evaluation: scoring rules keep a
// running score vector and Copeland/Maximin a running majority-graph delta,
// so only STV re-runs the full election per trial. Throws BudgetExceeded when
// the profile count is above `budget`.
WavAnswer wav_bruteforce(const WavInstance& inst,
                         unsigned long long budget = kDefaultProfileBudget);

}  // namespace wav
