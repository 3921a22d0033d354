// Winner computation for STV, Copeland^alpha, Maximin and positional scoring
// rules over top-truncated profiles, with explicit tie-breaking.
#pragma once

#include <string>
#include <vector>

#include "wav/ballots.hpp"

namespace wav {

// Exact rational in [0, 1]; keeps Copeland score comparisons free of floats.
struct Alpha {
    long long num = 0;
    long long den = 1;

    static Alpha of(long long num, long long den);
    bool operator==(const Alpha&) const = default;
};

// Non-increasing non-negative integer positional scores a_1 >= ... >= a_k >= 0.
using ScoringVector = std::vector<long long>;

std::optional<std::string> validate_scoring_vector(const ScoringVector& v);

// How a truncated ballot maps onto the scoring vector. TopExact pairs with
// BallotMode::TopExactly; Up/Down pair with BallotMode::UpTo. Up gives the
// j-th ranked candidate a_j; Down gives a_{L-len+j}, pushing a short ballot's
// scores to the bottom of the vector.
enum class Rounding { TopExact, Up, Down };

struct Rule {
    enum class Kind { Stv, Copeland, Maximin, Scoring };
    Kind kind = Kind::Stv;
    Alpha alpha;             // Copeland only
    ScoringVector vec;       // Scoring only
    Rounding rounding = Rounding::TopExact;

    static Rule stv() { return {Kind::Stv, {}, {}, Rounding::TopExact}; }
    static Rule copeland(Alpha a) { return {Kind::Copeland, a, {}, Rounding::TopExact}; }
    static Rule maximin() { return {Kind::Maximin, {}, {}, Rounding::TopExact}; }
    static Rule scoring(ScoringVector v, Rounding r);

    bool operator==(const Rule&) const = default;
};

// nullopt when the rule can score ballots of the given mode.
std::optional<std::string> rule_mode_error(const Rule& rule, const BallotMode& mode);

// One STV round: plurality scores of the surviving candidates (-1 for
// candidates eliminated in earlier rounds) and the candidate removed.
struct StvTrace {
    struct Round {
        std::vector<long long> scores;
        Cand eliminated = -1;
    };
    std::vector<Round> rounds;   // exactly m-1 of them
};

struct StvResult {
    Cand winner = -1;
    StvTrace trace;
};

// Iterative plurality-loser elimination. Each ballot counts for its highest
// ranked surviving candidate; exhausted ballots count for nobody. Among the
// minimum-score candidates the tb-least-favored is eliminated, so elimination
// proceeds by tie-break alone once every ballot is exhausted.
StvResult stv_winner(const Profile& p, const TieBreakOrder& tb);

// Copeland score = pairwise wins + alpha * pairwise ties, reported as the
// exact pair (wins, ties).
struct CopelandScore {
    int wins = 0;
    int ties = 0;
};

std::vector<CopelandScore> copeland_scores_from_wmg(const Wmg& g);
std::vector<CopelandScore> copeland_scores(const Profile& p);

// Exact value of wins + alpha * ties over the common denominator alpha.den.
long long copeland_value(const CopelandScore& s, const Alpha& alpha);

// Maximin score = the lowest outgoing margin. Requires m >= 2.
std::vector<long long> maximin_scores_from_wmg(const Wmg& g);
std::vector<long long> maximin_scores(const Profile& p);

// Positional score of the candidate at 1-based position `pos` of a ballot
// ranking `len` candidates.
long long positional_score(const ScoringVector& v, Rounding r, int len, int pos);

std::vector<long long> scoring_scores(const Profile& p, const ScoringVector& v, Rounding r);

// Index of the tb-most-favored candidate among those with maximal score.
template <typename Score>
Cand argmax_with_tiebreak(const std::vector<Score>& scores, const TieBreakOrder& tb) {
    Cand best = -1;
    for (Cand c = 0; c < static_cast<int>(scores.size()); ++c) {
        if (best < 0 || scores[c] > scores[best] ||
            (scores[c] == scores[best] && tb.favors(c, best)))
            best = c;
    }
    return best;
}

// Dispatcher over all four rule families.
Cand winner(const Profile& p, const Rule& rule, const TieBreakOrder& tb);

std::string to_string(const Rule& rule);

}  // namespace wav
