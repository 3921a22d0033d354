// McGarvey-style gadgets: top-l profiles whose majority graph is a single
// directed edge of weight 2, and their composition into profiles realizing
// arbitrary even-weight antisymmetric margin targets.
#pragma once

#include "wav/ballots.hpp"

namespace wav {

// nullopt when w is a valid target: antisymmetric, zero diagonal, all
// entries even.
std::optional<std::string> validate_wmg_target(const Wmg& target);

// All length-l permutations once, except that one ballot [b, a, ...] is
// swapped to [a, b, ...]; the swap flips only the (a, b) margin, from 0 to 2.
// Requires 2 <= l <= m and a != b.
Profile unit_edge_profile(int m, int l, Cand a, Cand b);

// A profile with wmg(result) == target, built from symmetric base blocks.
// One block of all length-l permutations supports many swaps at once: the
// pair (a, b) can host one swap per distinct suffix, so the block count is
// max over pairs of ceil(units / suffix_count) rather than the total number
// of edge units.
Profile realize_wmg(const Wmg& target, int l);

// Vote count of the one-block-per-edge-unit construction, for size reporting.
long long realize_naive_vote_bound(const Wmg& target, int l);

}  // namespace wav
