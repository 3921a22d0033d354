#include "wav/ballots.hpp"

#include <algorithm>
#include <stdexcept>

namespace wav {

std::string to_string(const BallotMode& mode) {
    return (mode.kind == BallotMode::Kind::TopExactly ? "top-l " : "up-to-l ")
        + std::to_string(mode.len);
}

std::optional<std::string> validate_ranking(const Ranking& r, const BallotMode& mode, int m) {
    if (mode.len < 1) return "ballot mode length must be positive";
    if (mode.len > m) return "ballot mode length exceeds candidate count";
    const int n = static_cast<int>(r.size());
    if (mode.kind == BallotMode::Kind::TopExactly) {
        if (n != mode.len)
            return "ranking length " + std::to_string(n) + " != required " + std::to_string(mode.len);
    } else {
        if (n < 1 || n > mode.len)
            return "ranking length " + std::to_string(n) + " outside [1, " + std::to_string(mode.len) + "]";
    }
    for (Cand c : r) {
        if (c < 0 || c >= m)
            return "candidate index " + std::to_string(c) + " outside [0, " + std::to_string(m) + ")";
    }
    std::vector<Cand> sorted(r);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return "duplicate candidate in ranking";
    return std::nullopt;
}

Pref prefers(const Ranking& r, Cand a, Cand b) {
    if (a == b) throw std::invalid_argument("prefers: a == b");
    int pos_a = -1, pos_b = -1;
    for (int i = 0; i < static_cast<int>(r.size()); ++i) {
        if (r[i] == a) pos_a = i;
        if (r[i] == b) pos_b = i;
    }
    if (pos_a < 0 && pos_b < 0) return Pref::Tie;
    if (pos_a < 0) return Pref::B;
    if (pos_b < 0) return Pref::A;
    return pos_a < pos_b ? Pref::A : Pref::B;
}

namespace {

void normalize(std::vector<Profile::Entry>& entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Profile::Entry& a, const Profile::Entry& b) { return a.ranking < b.ranking; });
    std::vector<Profile::Entry> out;
    out.reserve(entries.size());
    for (auto& e : entries) {
        if (!out.empty() && out.back().ranking == e.ranking)
            out.back().count += e.count;
        else
            out.push_back(std::move(e));
    }
    std::erase_if(out, [](const Profile::Entry& e) { return e.count == 0; });
    for (const auto& e : out)
        if (e.count < 0) throw std::invalid_argument("profile entry with negative count");
    entries = std::move(out);
}

}  // namespace

void Profile::add(const Ranking& r, Count count) {
    if (count == 0) return;
    if (auto err = validate_ranking(r, mode, m))
        throw std::invalid_argument("invalid ranking: " + *err);
    entries.push_back({r, count});
    normalize(entries);
}

Count Profile::total_votes() const {
    Count n = 0;
    for (const auto& e : entries) n += e.count;
    return n;
}

bool Profile::operator==(const Profile& other) const {
    if (mode != other.mode || m != other.m) return false;
    if (entries.size() != other.entries.size()) return false;
    for (size_t i = 0; i < entries.size(); ++i)
        if (entries[i].ranking != other.entries[i].ranking || entries[i].count != other.entries[i].count)
            return false;
    return true;
}

Profile make_profile(BallotMode mode, int m,
                     const std::vector<std::pair<Ranking, Count>>& entries) {
    Profile p(mode, m);
    for (const auto& [r, c] : entries) {
        if (c < 0) throw std::invalid_argument("negative ballot count");
        if (auto err = validate_ranking(r, mode, m))
            throw std::invalid_argument("invalid ranking: " + *err);
        p.entries.push_back({r, c});
    }
    normalize(p.entries);
    return p;
}

void Wmg::accumulate(const Ranking& r, Count count) {
    // Ranked-vs-ranked pairs, then every ranked candidate beats every
    // unranked one. Unranked pairs are ties and contribute nothing.
    std::vector<char> ranked(m, 0);
    for (Cand c : r) ranked[c] = 1;
    for (size_t i = 0; i < r.size(); ++i) {
        for (size_t j = i + 1; j < r.size(); ++j) {
            at(r[i], r[j]) += count;
            at(r[j], r[i]) -= count;
        }
        for (Cand u = 0; u < m; ++u) {
            if (!ranked[u]) {
                at(r[i], u) += count;
                at(u, r[i]) -= count;
            }
        }
    }
}

Wmg wmg(const Profile& p) {
    Wmg g(p.m);
    for (const auto& e : p.entries) g.accumulate(e.ranking, e.count);
    return g;
}

namespace {

bool mode_admissible(const BallotMode& host, const BallotMode& guest) {
    if (host == guest) return true;
    return host.kind == BallotMode::Kind::UpTo &&
           guest.kind == BallotMode::Kind::TopExactly && guest.len <= host.len;
}

}  // namespace

Profile merge(const Profile& p, const Profile& q) {
    if (p.m != q.m) throw std::invalid_argument("merge: candidate count mismatch");
    if (!mode_admissible(p.mode, q.mode))
        throw std::invalid_argument("merge: ballot mode mismatch");
    Profile out = p;
    for (const auto& e : q.entries) out.entries.push_back(e);
    normalize(out.entries);
    return out;
}

TieBreakOrder TieBreakOrder::lexicographic(int m) {
    std::vector<Cand> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    return from_priority(std::move(order));
}

TieBreakOrder TieBreakOrder::from_priority(std::vector<Cand> order) {
    const int m = static_cast<int>(order.size());
    std::vector<int> rank(m, -1);
    for (int pos = 0; pos < m; ++pos) {
        Cand c = order[pos];
        if (c < 0 || c >= m || rank[c] != -1)
            throw std::invalid_argument("tie-break order is not a permutation");
        rank[c] = pos;
    }
    TieBreakOrder tb;
    tb.priority = std::move(order);
    tb.rank = std::move(rank);
    return tb;
}

}  // namespace wav
