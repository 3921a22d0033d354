#include "wav/wav_core.hpp"

#include <algorithm>
#include <numeric>

namespace wav {

void validate_instance(const WavInstance& inst) {
    if (inst.known.m != inst.m)
        throw std::invalid_argument("instance: known profile has wrong candidate count");
    if (inst.known.mode != inst.mode)
        throw std::invalid_argument("instance: known profile has wrong ballot mode");
    if (inst.target < 0 || inst.target >= inst.m)
        throw std::invalid_argument("instance: target out of range");
    if (inst.t < 0) throw std::invalid_argument("instance: negative absent-vote count");
    if (inst.tb.m() != inst.m)
        throw std::invalid_argument("instance: tie-break order size mismatch");
    if (auto err = rule_mode_error(inst.rule, inst.mode))
        throw std::invalid_argument("instance: " + *err);
    if (inst.mode.len > inst.m)
        throw std::invalid_argument("instance: ballot length exceeds candidate count");
}

namespace {

void emit_permutations(int m, int len, Ranking& prefix, std::vector<char>& used,
                       std::vector<Ranking>& out) {
    if (static_cast<int>(prefix.size()) == len) {
        out.push_back(prefix);
        return;
    }
    for (Cand c = 0; c < m; ++c) {
        if (used[c]) continue;
        used[c] = 1;
        prefix.push_back(c);
        emit_permutations(m, len, prefix, used, out);
        prefix.pop_back();
        used[c] = 0;
    }
}

unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

unsigned long long sat_add(unsigned long long a, unsigned long long b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

unsigned long long falling_factorial(int m, int len) {
    unsigned long long r = 1;
    for (int i = 0; i < len; ++i) r = sat_mul(r, static_cast<unsigned long long>(m - i));
    return r;
}

}  // namespace

std::vector<Ranking> enumerate_rankings(const BallotMode& mode, int m) {
    if (mode.len > m)
        throw std::invalid_argument("enumerate_rankings: ballot length exceeds candidate count");
    if (mode.len < 1) throw std::invalid_argument("enumerate_rankings: non-positive length");
    std::vector<Ranking> out;
    Ranking prefix;
    std::vector<char> used(m, 0);
    if (mode.kind == BallotMode::Kind::TopExactly) {
        emit_permutations(m, mode.len, prefix, used, out);
    } else {
        for (int len = 1; len <= mode.len; ++len)
            emit_permutations(m, len, prefix, used, out);
    }
    return out;
}

unsigned long long count_rankings(const BallotMode& mode, int m) {
    if (mode.kind == BallotMode::Kind::TopExactly) return falling_factorial(m, mode.len);
    unsigned long long total = 0;
    for (int len = 1; len <= mode.len; ++len)
        total = sat_add(total, falling_factorial(m, len));
    return total;
}

unsigned long long count_anonymous_profiles(unsigned long long num_rankings, long long t) {
    // C(t + R - 1, R - 1) = C(t + R - 1, t), computed as a running product.
    if (t < 0) throw std::invalid_argument("negative absent-vote count");
    if (t == 0) return 1;
    if (num_rankings == 0) return 0;
    unsigned long long result = 1;
    for (long long i = 1; i <= t; ++i) {
        unsigned long long num = num_rankings - 1 + static_cast<unsigned long long>(i);
        // result * num / i stays integral because it is a binomial prefix.
        if (result > UINT64_MAX / num) {
            unsigned long long g = std::gcd(num, static_cast<unsigned long long>(i));
            unsigned long long num2 = num / g;
            unsigned long long den2 = static_cast<unsigned long long>(i) / g;
            unsigned long long r2 = result / den2;
            if (r2 > UINT64_MAX / num2) return UINT64_MAX;
            result = r2 * num2;
        } else {
            result = result * num / static_cast<unsigned long long>(i);
        }
    }
    return result;
}

namespace {

bool walk_counts(std::vector<Count>& counts, size_t idx, long long remaining,
                 const std::function<bool(const std::vector<Count>&)>& visit) {
    if (idx + 1 == counts.size()) {
        counts[idx] = remaining;
        bool keep = visit(counts);
        counts[idx] = 0;
        return keep;
    }
    for (long long c = remaining; c >= 0; --c) {
        counts[idx] = c;
        if (!walk_counts(counts, idx + 1, remaining - c, visit)) {
            counts[idx] = 0;
            return false;
        }
    }
    counts[idx] = 0;
    return true;
}

}  // namespace

bool for_each_anonymous_profile(size_t num_rankings, long long t,
                                const std::function<bool(const std::vector<Count>&)>& visit) {
    if (t < 0) throw std::invalid_argument("negative absent-vote count");
    std::vector<Count> counts(num_rankings, 0);
    if (t == 0) return visit(counts);
    if (num_rankings == 0) return true;
    return walk_counts(counts, 0, t, visit);
}

namespace {

// Sparse pairwise-margin contribution of one ranking, as (a, b) pairs each
// worth +1 for a over b.
std::vector<std::pair<Cand, Cand>> wmg_delta(const Ranking& r, int m) {
    std::vector<std::pair<Cand, Cand>> d;
    std::vector<char> ranked(m, 0);
    for (Cand c : r) ranked[c] = 1;
    for (size_t i = 0; i < r.size(); ++i) {
        for (size_t j = i + 1; j < r.size(); ++j) d.emplace_back(r[i], r[j]);
        for (Cand u = 0; u < m; ++u)
            if (!ranked[u]) d.emplace_back(r[i], u);
    }
    return d;
}

struct BruteforceState {
    const WavInstance& inst;
    const std::vector<Ranking>& rankings;

    // Scoring path: running per-candidate totals.
    std::vector<long long> scores;
    std::vector<std::vector<std::pair<Cand, long long>>> score_delta;

    // Copeland / Maximin path: running majority graph.
    Wmg graph;
    std::vector<std::vector<std::pair<Cand, Cand>>> graph_delta;

    // STV path: merged profile whose tail mirrors the current counts.
    Profile merged;
    size_t known_entries = 0;

    std::vector<Count> counts;
    bool found = false;
    std::vector<Count> witness_counts;

    explicit BruteforceState(const WavInstance& inst_, const std::vector<Ranking>& rankings_)
        : inst(inst_), rankings(rankings_) {
        switch (inst.rule.kind) {
            case Rule::Kind::Scoring:
                scores = scoring_scores(inst.known, inst.rule.vec, inst.rule.rounding);
                score_delta.resize(rankings.size());
                for (size_t i = 0; i < rankings.size(); ++i) {
                    const auto& r = rankings[i];
                    for (int pos = 1; pos <= static_cast<int>(r.size()); ++pos)
                        score_delta[i].emplace_back(
                            r[pos - 1],
                            positional_score(inst.rule.vec, inst.rule.rounding,
                                             static_cast<int>(r.size()), pos));
                }
                break;
            case Rule::Kind::Copeland:
            case Rule::Kind::Maximin:
                graph = wmg(inst.known);
                graph_delta.resize(rankings.size());
                for (size_t i = 0; i < rankings.size(); ++i)
                    graph_delta[i] = wmg_delta(rankings[i], inst.m);
                break;
            case Rule::Kind::Stv:
                merged = inst.known;
                known_entries = merged.entries.size();
                for (const auto& r : rankings) merged.entries.push_back({r, 0});
                break;
        }
        counts.assign(rankings.size(), 0);
    }

    void apply(size_t idx, long long k) {
        if (k == 0) return;
        switch (inst.rule.kind) {
            case Rule::Kind::Scoring:
                for (auto [c, pts] : score_delta[idx]) scores[c] += k * pts;
                break;
            case Rule::Kind::Copeland:
            case Rule::Kind::Maximin:
                for (auto [a, b] : graph_delta[idx]) {
                    graph.at(a, b) += k;
                    graph.at(b, a) -= k;
                }
                break;
            case Rule::Kind::Stv:
                merged.entries[known_entries + idx].count += k;
                break;
        }
    }

    bool target_wins() const {
        const auto& tb = inst.tb;
        switch (inst.rule.kind) {
            case Rule::Kind::Scoring:
                return argmax_with_tiebreak(scores, tb) == inst.target;
            case Rule::Kind::Copeland: {
                auto cs = copeland_scores_from_wmg(graph);
                std::vector<long long> vals(inst.m);
                for (Cand c = 0; c < inst.m; ++c) vals[c] = copeland_value(cs[c], inst.rule.alpha);
                return argmax_with_tiebreak(vals, tb) == inst.target;
            }
            case Rule::Kind::Maximin:
                if (inst.m == 1) return inst.target == 0;
                return argmax_with_tiebreak(maximin_scores_from_wmg(graph), tb) == inst.target;
            case Rule::Kind::Stv:
                return stv_winner(merged, tb).winner == inst.target;
        }
        return false;
    }

    // Counts assigned left to right, highest first; the first satisfying
    // assignment in this order is the witness, so the answer is deterministic
    // no matter how the search might later be chunked.
    void search(size_t idx, long long remaining) {
        if (found) return;
        if (idx + 1 == counts.size() || remaining == 0) {
            apply(idx, remaining);
            counts[idx] = remaining;
            if (target_wins()) {
                found = true;
                witness_counts = counts;
            }
            apply(idx, -remaining);
            counts[idx] = 0;
            return;
        }
        for (long long k = remaining; k >= 0 && !found; --k) {
            apply(idx, k);
            counts[idx] = k;
            search(idx + 1, remaining - k);
            apply(idx, -k);
            counts[idx] = 0;
        }
    }
};

}  // namespace

WavAnswer wav_bruteforce(const WavInstance& inst, unsigned long long budget) {
    validate_instance(inst);

    if (inst.t == 0) {
        if (winner(inst.known, inst.rule, inst.tb) == inst.target)
            return {true, Profile(inst.mode, inst.m)};
        return WavAnswer::no();
    }

    const auto rankings = enumerate_rankings(inst.mode, inst.m);
    const unsigned long long needed = count_anonymous_profiles(rankings.size(), inst.t);
    if (needed > budget) throw BudgetExceeded(needed);

    BruteforceState state(inst, rankings);
    state.search(0, inst.t);
    if (!state.found) return WavAnswer::no();

    Profile witness(inst.mode, inst.m);
    for (size_t i = 0; i < rankings.size(); ++i)
        if (state.witness_counts[i] > 0) witness.add(rankings[i], state.witness_counts[i]);

    // Soundness check on every returned witness.
    if (winner(merge(inst.known, witness), inst.rule, inst.tb) != inst.target)
        throw std::logic_error("wav_bruteforce: witness failed re-verification");
    return {true, std::move(witness)};
}

}  // namespace wav
