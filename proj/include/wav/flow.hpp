// Polynomial WAV solvers for positional scoring rules: the max-flow
// construction for top-l ballots with a_2 = ... = a_l, the rank-target-alone
// shortcut for up-rounding, and the split enumeration for down-rounding.
#pragma once

#include <vector>

#include "wav/wav_core.hpp"

namespace wav {

// A plain arc-list flow network. Tests build these by hand; the WAV solvers
// build them from instances.
struct FlowNetwork {
    struct Arc {
        int from = 0;
        int to = 0;
        long long cap = 0;
    };
    int node_count = 0;
    int source = 0;
    int sink = 0;
    std::vector<Arc> arcs;

    int add_node() { return node_count++; }
    size_t add_arc(int from, int to, long long cap);
};

// Integral maximum flow with per-arc assignments; conservation holds at every
// internal node. Shortest-augmenting-path (Edmonds-Karp), exact integer
// arithmetic throughout.
struct FlowResult {
    long long value = 0;
    std::vector<long long> flow;   // parallel to FlowNetwork::arcs
};

FlowResult max_flow(const FlowNetwork& net);

// Outcome of translating a WAV instance into a network. Position d of absent
// vote v maps to one unit-capacity node; (v, a) pair nodes enforce that a
// candidate appears at most once per vote; rival a's sink arc has capacity
// floor(budget_a / A). budget_a = target's final score - s(P, a) - delta_a,
// where delta_a is 1 iff a is tb-favored over the target. A negative budget
// is an immediate NO; A = 0 makes positions scoreless and the budgets decide
// directly.
struct WavNetwork {
    enum class Kind { ImmediateNo, ImmediateYes, Network };
    Kind kind = Kind::Network;

    FlowNetwork net;
    long long positions = 0;            // required flow value
    std::vector<long long> budgets;     // per rival candidate (skips target)
    std::vector<Cand> rivals;           // rival index -> candidate id

    // arc ids for witness decoding: position_arcs[v][d-2][rival] is the arc
    // (v_d -> (v, a)); defined only in the Network case.
    std::vector<std::vector<std::vector<size_t>>> position_arcs;
};

// Builds the network for a top-l instance (votes = t, positions per vote =
// l - 1) given the score the target ends up with. Shared by the top-l solver
// and the per-case down-rounding solver.
WavNetwork build_network(int m, Cand target, long long votes, int positions_per_vote,
                         long long per_position_score, long long target_final_score,
                         const std::vector<long long>& base_scores, const TieBreakOrder& tb);

// Theorem-style network for a TopExactly(l) scoring instance with
// a_2 = ... = a_l. Throws std::invalid_argument when preconditions fail.
WavNetwork build_wav_network(const WavInstance& inst);

// YES iff the maximum flow saturates every position node; the witness ranks
// the target first everywhere and fills position d of vote v with the rival
// whose pair arc carries flow. Scoreless positions (A = 0) are filled with
// the lowest-index unused candidates.
WavAnswer wav_scoring_topl(const WavInstance& inst);

// Up-rounding shortcut: the target gains the most and rivals nothing when
// every absent vote ranks the target alone, so that single completion decides.
WavAnswer wav_scoring_up_rounding(const WavInstance& inst);

// Down-rounding with a_2 = ... = a_L: split the t absent votes into k ballots
// [target] (worth a_L each) and t - k full-length ballots with the target
// first (worth a_1), and solve a flow instance per split. Returns the witness
// for the smallest feasible k.
WavAnswer wav_scoring_down_rounding(const WavInstance& inst);

// True when one of the three polynomial solvers applies to the instance.
bool flow_solver_applicable(const WavInstance& inst);

// Dispatches to whichever polynomial solver matches the instance's rule and
// mode. Throws std::invalid_argument if none applies.
WavAnswer wav_scoring_poly(const WavInstance& inst);

}  // namespace wav
