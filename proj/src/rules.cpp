#include "wav/rules.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wav {

Alpha Alpha::of(long long num, long long den) {
    if (den <= 0) throw std::invalid_argument("alpha denominator must be positive");
    if (num < 0 || num > den) throw std::invalid_argument("alpha must lie in [0, 1]");
    long long g = std::gcd(num, den);
    return {num / g, den / g};
}

std::optional<std::string> validate_scoring_vector(const ScoringVector& v) {
    if (v.empty()) return "scoring vector is empty";
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) return "scoring vector must be non-increasing";
    if (v.back() < 0) return "scoring vector entries must be non-negative";
    return std::nullopt;
}

Rule Rule::scoring(ScoringVector v, Rounding r) {
    if (auto err = validate_scoring_vector(v)) throw std::invalid_argument(*err);
    return {Kind::Scoring, {}, std::move(v), r};
}

std::optional<std::string> rule_mode_error(const Rule& rule, const BallotMode& mode) {
    if (rule.kind != Rule::Kind::Scoring) return std::nullopt;
    const bool top = mode.kind == BallotMode::Kind::TopExactly;
    if (rule.rounding == Rounding::TopExact && !top)
        return "scoring without a rounding indicator requires top-l ballots";
    if (rule.rounding != Rounding::TopExact && top)
        return "up/down rounding requires up-to-l ballots";
    if (static_cast<int>(rule.vec.size()) != mode.len)
        return "scoring vector length " + std::to_string(rule.vec.size()) +
               " does not match ballot length " + std::to_string(mode.len);
    return std::nullopt;
}

StvResult stv_winner(const Profile& p, const TieBreakOrder& tb) {
    const int m = p.m;
    if (m < 1) throw std::invalid_argument("stv: need at least one candidate");
    if (tb.m() != m) throw std::invalid_argument("stv: tie-break order size mismatch");

    std::vector<char> alive(m, 1);
    StvResult res;
    for (int round = 0; round < m - 1; ++round) {
        std::vector<long long> scores(m, 0);
        for (const auto& e : p.entries) {
            for (Cand c : e.ranking) {
                if (alive[c]) {
                    scores[c] += e.count;
                    break;
                }
            }
        }
        // Eliminate the tb-least-favored among the minimum-score survivors.
        Cand loser = -1;
        for (Cand c = 0; c < m; ++c) {
            if (!alive[c]) continue;
            if (loser < 0 || scores[c] < scores[loser] ||
                (scores[c] == scores[loser] && tb.favors(loser, c)))
                loser = c;
        }
        StvTrace::Round rec;
        rec.scores = scores;
        for (Cand c = 0; c < m; ++c)
            if (!alive[c]) rec.scores[c] = -1;
        rec.eliminated = loser;
        res.trace.rounds.push_back(std::move(rec));
        alive[loser] = 0;
    }
    for (Cand c = 0; c < m; ++c)
        if (alive[c]) res.winner = c;
    return res;
}

std::vector<CopelandScore> copeland_scores_from_wmg(const Wmg& g) {
    std::vector<CopelandScore> out(g.m);
    for (Cand a = 0; a < g.m; ++a) {
        for (Cand b = 0; b < g.m; ++b) {
            if (a == b) continue;
            long long w = g.at(a, b);
            if (w > 0)
                out[a].wins++;
            else if (w == 0)
                out[a].ties++;
        }
    }
    return out;
}

std::vector<CopelandScore> copeland_scores(const Profile& p) {
    return copeland_scores_from_wmg(wmg(p));
}

long long copeland_value(const CopelandScore& s, const Alpha& alpha) {
    return s.wins * alpha.den + s.ties * alpha.num;
}

std::vector<long long> maximin_scores_from_wmg(const Wmg& g) {
    if (g.m < 2) throw std::invalid_argument("maximin: need at least two candidates");
    std::vector<long long> out(g.m);
    for (Cand a = 0; a < g.m; ++a) {
        long long lo = 0;
        bool first = true;
        for (Cand b = 0; b < g.m; ++b) {
            if (a == b) continue;
            long long w = g.at(a, b);
            if (first || w < lo) lo = w;
            first = false;
        }
        out[a] = lo;
    }
    return out;
}

std::vector<long long> maximin_scores(const Profile& p) {
    return maximin_scores_from_wmg(wmg(p));
}

long long positional_score(const ScoringVector& v, Rounding r, int len, int pos) {
    const int L = static_cast<int>(v.size());
    if (pos < 1 || pos > len || len > L)
        throw std::invalid_argument("positional_score: position out of range");
    if (r == Rounding::Down) return v[L - len + pos - 1];
    return v[pos - 1];
}

std::vector<long long> scoring_scores(const Profile& p, const ScoringVector& v, Rounding r) {
    Rule rule = Rule::scoring(v, r);
    if (auto err = rule_mode_error(rule, p.mode))
        throw std::invalid_argument("scoring_scores: " + *err);
    std::vector<long long> out(p.m, 0);
    for (const auto& e : p.entries) {
        const int len = static_cast<int>(e.ranking.size());
        for (int pos = 1; pos <= len; ++pos)
            out[e.ranking[pos - 1]] += e.count * positional_score(v, r, len, pos);
    }
    return out;
}

Cand winner(const Profile& p, const Rule& rule, const TieBreakOrder& tb) {
    if (auto err = rule_mode_error(rule, p.mode))
        throw std::invalid_argument("winner: " + *err);
    if (tb.m() != p.m) throw std::invalid_argument("winner: tie-break order size mismatch");
    if (p.m == 1) return 0;
    switch (rule.kind) {
        case Rule::Kind::Stv:
            return stv_winner(p, tb).winner;
        case Rule::Kind::Copeland: {
            auto cs = copeland_scores(p);
            std::vector<long long> vals(p.m);
            for (Cand c = 0; c < p.m; ++c) vals[c] = copeland_value(cs[c], rule.alpha);
            return argmax_with_tiebreak(vals, tb);
        }
        case Rule::Kind::Maximin:
            return argmax_with_tiebreak(maximin_scores(p), tb);
        case Rule::Kind::Scoring:
            return argmax_with_tiebreak(scoring_scores(p, rule.vec, rule.rounding), tb);
    }
    throw std::logic_error("winner: unknown rule kind");
}

std::string to_string(const Rule& rule) {
    switch (rule.kind) {
        case Rule::Kind::Stv: return "stv";
        case Rule::Kind::Copeland:
            return "copeland:" + std::to_string(rule.alpha.num) +
                   (rule.alpha.den == 1 ? "" : "/" + std::to_string(rule.alpha.den));
        case Rule::Kind::Maximin: return "maximin";
        case Rule::Kind::Scoring: {
            std::string s = "score:";
            for (size_t i = 0; i < rule.vec.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(rule.vec[i]);
            }
            if (rule.rounding == Rounding::Up) s += ":up";
            if (rule.rounding == Rounding::Down) s += ":down";
            return s;
        }
    }
    return "?";
}

}  // namespace wav
