// Ballot and profile representation for top-truncated votes, plus the
// weighted majority graph. Everything here is a pure value type: profiles
// and majority graphs are never mutated after construction, so all
// operations are safe to call concurrently.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wav {

using Cand = int;               // dense candidate index in [0, m)
using Count = long long;        // ballot multiplicity

// A ballot either ranks exactly `len` candidates (TopExactly) or anywhere
// between 1 and `len` candidates (UpTo). Unranked candidates are tied below
// every ranked one.
struct BallotMode {
    enum class Kind { TopExactly, UpTo };
    Kind kind = Kind::TopExactly;
    int len = 1;

    static BallotMode top_exactly(int l) { return {Kind::TopExactly, l}; }
    static BallotMode up_to(int L) { return {Kind::UpTo, L}; }

    bool operator==(const BallotMode&) const = default;
};

std::string to_string(const BallotMode& mode);

// Ordered list of distinct candidates; index 0 is the most preferred.
using Ranking = std::vector<Cand>;

// nullopt when the ranking is admissible under (mode, m), otherwise a short
// description of the violation.
std::optional<std::string> validate_ranking(const Ranking& r, const BallotMode& mode, int m);

enum class Pref { A, B, Tie };

// Who does ballot r prefer among a and b? Requires a != b. A candidate that
// is ranked beats any unranked one; two unranked candidates are tied.
Pref prefers(const Ranking& r, Cand a, Cand b);

// Anonymous multiset of ballots with explicit multiplicities. Entries are
// kept in a canonical sorted form so that value equality and hashing see
// through entry order (anonymity).
struct Profile {
    struct Entry {
        Ranking ranking;
        Count count = 0;
    };

    BallotMode mode;
    int m = 0;
    std::vector<Entry> entries;

    Profile() = default;
    Profile(BallotMode mode_, int m_) : mode(mode_), m(m_) {}

    // Validates the ranking, adds `count` copies and restores canonical form.
    void add(const Ranking& r, Count count);

    Count total_votes() const;
    bool operator==(const Profile& other) const;
};

// Builds a profile from raw entries, validating each ranking. Throws
// std::invalid_argument on any violation.
Profile make_profile(BallotMode mode, int m,
                     const std::vector<std::pair<Ranking, Count>>& entries);

// Antisymmetric matrix of pairwise net margins: w(a,b) = #votes preferring a
// over b minus #votes preferring b over a.
struct Wmg {
    int m = 0;
    std::vector<long long> w;   // row-major m*m

    Wmg() = default;
    explicit Wmg(int m_) : m(m_), w(static_cast<size_t>(m_) * m_, 0) {}

    long long at(Cand a, Cand b) const { return w[static_cast<size_t>(a) * m + b]; }
    long long& at(Cand a, Cand b) { return w[static_cast<size_t>(a) * m + b]; }

    // Adds `count` copies of ranking r to the margins.
    void accumulate(const Ranking& r, Count count);

    bool operator==(const Wmg&) const = default;
};

Wmg wmg(const Profile& p);

// Multiset union. Requires equal m and q's mode admissible under p's mode:
// identical modes, or p = UpTo(L) absorbing q = TopExactly(l) with l <= L.
Profile merge(const Profile& p, const Profile& q);

// Total priority order over candidates; earlier position = favored, i.e.
// wins score ties and survives STV elimination ties.
struct TieBreakOrder {
    std::vector<Cand> priority;   // priority[k] = candidate in k-th place
    std::vector<int> rank;        // rank[c] = position of c in `priority`

    static TieBreakOrder lexicographic(int m);
    static TieBreakOrder from_priority(std::vector<Cand> order);

    int m() const { return static_cast<int>(priority.size()); }
    bool favors(Cand a, Cand b) const { return rank[a] < rank[b]; }
};

}  // namespace wav
