// Restricted exact three-cover instances and the three hardness
// constructions (STV, Maximin, Copeland) with witness builders and a
// proof-claim verifier. Generators are deterministic: the same instance and
// parameters always produce byte-identical output, and every numeric claim
// the construction relies on is emitted as bookkeeping for verification.
#pragma once

#include <map>
#include <optional>
#include <string>

#include "wav/mcgarvey.hpp"
#include "wav/wav_core.hpp"

namespace wav {

// q elements 1..q and q three-element subsets, each element in exactly three
// of them. Asks for q/3 pairwise-disjoint sets covering all elements.
struct Rxc3Instance {
    int q = 0;
    std::vector<std::vector<int>> sets;   // sets[j] lists elements, 1-based
};

// 1-based indices of the chosen sets, sorted ascending.
struct Rxc3Solution {
    std::vector<int> indices;
};

std::optional<std::string> validate_rxc3(const Rxc3Instance& inst);

// Lexicographically-first exact cover, or nullopt. Throws BudgetExceeded when
// C(q, q/3) is above `budget`.
std::optional<Rxc3Solution> solve_rxc3_bruteforce(const Rxc3Instance& inst,
                                                  unsigned long long budget = kDefaultProfileBudget);

// Disjoint duplication of elements and sets until `divisor` divides q.
// Preserves the YES/NO status.
Rxc3Instance preprocess_rxc3(const Rxc3Instance& inst, int divisor);

// A generated WAV instance together with its role map and the quantities the
// verifier asserts. `expected_votes` names the explicitly-added ballots;
// `expected_wmg` (Maximin/Copeland) is the exact majority graph of the known
// profile, gadget and explicit votes combined.
struct ReductionOutput {
    WavInstance instance;
    std::vector<std::string> roles;    // per candidate index
    std::string family;                // "stv" | "maximin" | "copeland"
    int l = 2;
    Alpha alpha;                       // copeland only
    Rxc3Instance source;

    std::vector<std::pair<std::string, Profile::Entry>> expected_votes;
    bool has_expected_wmg = false;
    Wmg expected_wmg;
    std::map<std::string, long long> expect;

    Cand role_index(const std::string& role) const;
};

// Required q-divisor for each family at ballot length l. STV needs q even;
// Maximin/Copeland need q divisible by 6(l-1) so that t = q/(3(l-1)) is even
// and every gadget margin stays even.
int required_divisor(const std::string& family, int l);

// 3q+3 candidates, t = q/3 absent votes, six printed vote blocks truncated to
// the first l positions and padded deterministically when l exceeds the
// printed prefix.
ReductionOutput reduce_stv(const Rxc3Instance& inst, int l);

// One absent ballot [bb_i > b_i > c > w] (truncated to l) per chosen set.
Profile stv_witness_from_cover(const ReductionOutput& red, const Rxc3Solution& sol);

// 2q+l candidates, t = q/(3(l-1)); margins realized by McGarvey blocks plus
// one ballot [c > w_1 > ... > w_{l-1}].
ReductionOutput reduce_maximin(const Rxc3Instance& inst, int l);

// t ballots, each [c] followed by l-1 of the chosen sets; across the witness
// the chosen sets appear exactly once each.
Profile maximin_witness_from_cover(const ReductionOutput& red, const Rxc3Solution& sol);

// 2q+q/2+3 candidates. For alpha < 1 (and alpha < (q-3)/q) the known profile
// carries one ballot [S_j > x_i > w...] per membership and two ballots
// [c > w...]; for alpha = 1 the membership ballots are dropped and the
// member pairs are exactly tied. alpha = 1 additionally needs q >= 12.
ReductionOutput reduce_copeland(const Rxc3Instance& inst, int l, Alpha alpha);

Profile copeland_witness_from_cover(const ReductionOutput& red, const Rxc3Solution& sol);

struct VerifyOptions {
    bool witness_check = true;
    // Budget for the exhaustive NO check when the source instance has no
    // cover; 0 disables the check.
    unsigned long long no_check_budget = 0;
};

struct VerifyReport {
    struct Check {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Check> checks;

    bool ok() const;
    void add(const std::string& name, bool pass, const std::string& detail = "");
};

// Asserts the construction's checkable claims: structural counts, margins and
// score tables against the bookkeeping, witness validity when the source has
// a cover, and (budget permitting) the exhaustive NO answer when it has none.
VerifyReport verify_reduction(const ReductionOutput& red, const Rxc3Instance& source,
                              const VerifyOptions& opts = {});

}  // namespace wav
