#include "wav/mcgarvey.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "wav/wav_core.hpp"

namespace wav {

std::optional<std::string> validate_wmg_target(const Wmg& target) {
    for (Cand a = 0; a < target.m; ++a) {
        if (target.at(a, a) != 0) return "nonzero diagonal entry";
        for (Cand b = 0; b < target.m; ++b) {
            if (target.at(a, b) != -target.at(b, a)) return "matrix is not antisymmetric";
            if (target.at(a, b) % 2 != 0) return "odd margin cannot be realized";
        }
    }
    return std::nullopt;
}

namespace {

long long perm_count(int m, int len) {
    long long r = 1;
    for (int i = 0; i < len; ++i) r *= m - i;
    return r;
}

// Length-(l-2) suffixes over candidates other than a and b, lexicographic.
void emit_suffixes(int m, int len, Cand a, Cand b, Ranking& prefix, std::vector<char>& used,
                   std::vector<Ranking>& out, long long limit) {
    if (static_cast<long long>(out.size()) >= limit) return;
    if (static_cast<int>(prefix.size()) == len) {
        out.push_back(prefix);
        return;
    }
    for (Cand c = 0; c < m; ++c) {
        if (used[c] || c == a || c == b) continue;
        used[c] = 1;
        prefix.push_back(c);
        emit_suffixes(m, len, a, b, prefix, used, out, limit);
        prefix.pop_back();
        used[c] = 0;
    }
}

std::vector<Ranking> suffixes_for_pair(int m, int l, Cand a, Cand b, long long limit) {
    std::vector<Ranking> out;
    Ranking prefix;
    std::vector<char> used(m, 0);
    emit_suffixes(m, l - 2, a, b, prefix, used, out, limit);
    return out;
}

void check_gadget_args(int m, int l, Cand a, Cand b) {
    if (l < 2) throw std::invalid_argument("edge gadget needs ballots of length >= 2");
    if (l > m) throw std::invalid_argument("edge gadget: ballot length exceeds candidate count");
    if (a == b) throw std::invalid_argument("edge gadget: a == b");
    if (a < 0 || a >= m || b < 0 || b >= m)
        throw std::invalid_argument("edge gadget: candidate out of range");
}

}  // namespace

Profile unit_edge_profile(int m, int l, Cand a, Cand b) {
    check_gadget_args(m, l, a, b);
    Profile p(BallotMode::top_exactly(l), m);
    auto rankings = enumerate_rankings(BallotMode::top_exactly(l), m);
    p.entries.reserve(rankings.size());
    for (auto& r : rankings) p.entries.push_back({std::move(r), 1});

    // Swap a and b in the first ballot of the form [b, a, ...].
    Ranking source{b, a};
    Ranking swapped{a, b};
    auto suffix = suffixes_for_pair(m, l, a, b, 1);
    source.insert(source.end(), suffix[0].begin(), suffix[0].end());
    swapped.insert(swapped.end(), suffix[0].begin(), suffix[0].end());
    Profile adjustment(BallotMode::top_exactly(l), m);
    adjustment.entries = {{source, -1}, {swapped, 1}};
    return merge(p, adjustment);
}

Profile realize_wmg(const Wmg& target, int l) {
    if (auto err = validate_wmg_target(target))
        throw std::invalid_argument("realize_wmg: " + *err);
    const int m = target.m;
    if (l < 2 || l > m)
        throw std::invalid_argument("realize_wmg: ballot length must be in [2, m]");

    const long long per_pair_capacity = perm_count(m - 2, l - 2);
    long long blocks = 0;
    for (Cand a = 0; a < m; ++a)
        for (Cand b = 0; b < m; ++b) {
            if (target.at(a, b) <= 0) continue;
            long long units = target.at(a, b) / 2;
            blocks = std::max(blocks, (units + per_pair_capacity - 1) / per_pair_capacity);
        }
    Profile p(BallotMode::top_exactly(l), m);
    if (blocks == 0) return p;

    std::map<Ranking, Count> counts;
    for (auto& r : enumerate_rankings(BallotMode::top_exactly(l), m)) counts[r] = blocks;

    // Each unit of the edge a -> b swaps one ballot [b, a, suffix]; a suffix
    // can be reused once per block, and distinct pairs touch disjoint ballots.
    for (Cand a = 0; a < m; ++a) {
        for (Cand b = 0; b < m; ++b) {
            if (target.at(a, b) <= 0) continue;
            long long units = target.at(a, b) / 2;
            auto suffixes = suffixes_for_pair(m, l, a, b, (units + blocks - 1) / blocks + 1);
            for (size_t i = 0; units > 0; ++i) {
                long long take = std::min(units, blocks);
                Ranking source{b, a};
                Ranking swapped{a, b};
                source.insert(source.end(), suffixes[i].begin(), suffixes[i].end());
                swapped.insert(swapped.end(), suffixes[i].begin(), suffixes[i].end());
                counts[source] -= take;
                counts[swapped] += take;
                units -= take;
            }
        }
    }
    for (auto& [r, c] : counts)
        if (c != 0) p.entries.push_back({r, c});
    return p;
}

long long realize_naive_vote_bound(const Wmg& target, int l) {
    long long units = 0;
    for (Cand a = 0; a < target.m; ++a)
        for (Cand b = 0; b < target.m; ++b)
            if (target.at(a, b) > 0) units += target.at(a, b) / 2;
    return units * perm_count(target.m, l);
}

}  // namespace wav
