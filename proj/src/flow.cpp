#include "wav/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace wav {

size_t FlowNetwork::add_arc(int from, int to, long long cap) {
    if (cap < 0) throw std::invalid_argument("flow arc with negative capacity");
    arcs.push_back({from, to, cap});
    return arcs.size() - 1;
}

namespace {

struct ResidualGraph {
    // Paired forward/backward residual edges; edge i's partner is i ^ 1.
    struct Edge {
        int to;
        long long cap;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adj;

    explicit ResidualGraph(const FlowNetwork& net) : adj(net.node_count) {
        edges.reserve(net.arcs.size() * 2);
        for (const auto& a : net.arcs) {
            adj[a.from].push_back(static_cast<int>(edges.size()));
            edges.push_back({a.to, a.cap});
            adj[a.to].push_back(static_cast<int>(edges.size()));
            edges.push_back({a.from, 0});
        }
    }
};

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
    if (net.source < 0 || net.source >= net.node_count || net.sink < 0 ||
        net.sink >= net.node_count)
        throw std::invalid_argument("max_flow: source/sink out of range");

    ResidualGraph g(net);
    long long total = 0;
    if (net.source != net.sink) {
        std::vector<int> parent_edge(net.node_count);
        while (true) {
            std::fill(parent_edge.begin(), parent_edge.end(), -1);
            std::deque<int> queue{net.source};
            parent_edge[net.source] = -2;
            while (!queue.empty() && parent_edge[net.sink] == -1) {
                int u = queue.front();
                queue.pop_front();
                for (int id : g.adj[u]) {
                    const auto& e = g.edges[id];
                    if (e.cap > 0 && parent_edge[e.to] == -1) {
                        parent_edge[e.to] = id;
                        queue.push_back(e.to);
                    }
                }
            }
            if (parent_edge[net.sink] == -1) break;
            long long push = std::numeric_limits<long long>::max();
            for (int v = net.sink; v != net.source;) {
                int id = parent_edge[v];
                push = std::min(push, g.edges[id].cap);
                v = g.edges[id ^ 1].to;
            }
            for (int v = net.sink; v != net.source;) {
                int id = parent_edge[v];
                g.edges[id].cap -= push;
                g.edges[id ^ 1].cap += push;
                v = g.edges[id ^ 1].to;
            }
            total += push;
        }
    }

    FlowResult res;
    res.value = total;
    res.flow.resize(net.arcs.size());
    for (size_t i = 0; i < net.arcs.size(); ++i)
        res.flow[i] = net.arcs[i].cap - g.edges[2 * i].cap;
    return res;
}

WavNetwork build_network(int m, Cand target, long long votes, int positions_per_vote,
                         long long per_position_score, long long target_final_score,
                         const std::vector<long long>& base_scores, const TieBreakOrder& tb) {
    WavNetwork out;
    for (Cand a = 0; a < m; ++a) {
        if (a == target) continue;
        long long delta = tb.favors(a, target) ? 1 : 0;
        out.budgets.push_back(target_final_score - base_scores[a] - delta);
        out.rivals.push_back(a);
    }
    for (long long b : out.budgets) {
        if (b < 0) {
            out.kind = WavNetwork::Kind::ImmediateNo;
            return out;
        }
    }
    if (per_position_score == 0) {
        // Positions are scoreless; any fill works once the budgets allow it.
        out.kind = WavNetwork::Kind::ImmediateYes;
        return out;
    }

    out.kind = WavNetwork::Kind::Network;
    out.positions = votes * positions_per_vote;
    FlowNetwork& net = out.net;
    net.source = net.add_node();
    net.sink = net.add_node();
    const size_t num_rivals = out.rivals.size();
    std::vector<int> rival_nodes(num_rivals);
    for (size_t i = 0; i < num_rivals; ++i) {
        rival_nodes[i] = net.add_node();
        net.add_arc(rival_nodes[i], net.sink, out.budgets[i] / per_position_score);
    }
    out.position_arcs.resize(votes);
    for (long long v = 0; v < votes; ++v) {
        std::vector<int> pair_nodes(num_rivals);
        std::vector<size_t> pair_arc(num_rivals);
        for (size_t i = 0; i < num_rivals; ++i) {
            pair_nodes[i] = net.add_node();
            pair_arc[i] = net.add_arc(pair_nodes[i], rival_nodes[i], 1);
        }
        out.position_arcs[v].resize(positions_per_vote);
        for (int d = 0; d < positions_per_vote; ++d) {
            int pos_node = net.add_node();
            net.add_arc(net.source, pos_node, 1);
            auto& arcs_here = out.position_arcs[v][d];
            arcs_here.resize(num_rivals);
            for (size_t i = 0; i < num_rivals; ++i)
                arcs_here[i] = net.add_arc(pos_node, pair_nodes[i], 1);
        }
        (void)pair_arc;
    }
    return out;
}

namespace {

void require_topl_preconditions(const WavInstance& inst) {
    validate_instance(inst);
    if (inst.rule.kind != Rule::Kind::Scoring || inst.rule.rounding != Rounding::TopExact)
        throw std::invalid_argument("top-l flow solver needs a top-l scoring rule");
    const auto& v = inst.rule.vec;
    for (size_t i = 2; i < v.size(); ++i)
        if (v[i] != v[1])
            throw std::invalid_argument("top-l flow solver needs a_2 = ... = a_l");
}

// Fills the witness votes: target first, decoded rivals at their positions,
// remaining slots (if any) taken by the lowest-index unused candidates.
Profile decode_witness(const WavInstance& inst, long long votes, int positions_per_vote,
                       const WavNetwork& wn, const FlowResult* flow) {
    Profile witness(inst.mode, inst.m);
    for (long long v = 0; v < votes; ++v) {
        Ranking r{inst.target};
        std::vector<char> used(inst.m, 0);
        used[inst.target] = 1;
        std::vector<Cand> slots(positions_per_vote, -1);
        if (flow) {
            for (int d = 0; d < positions_per_vote; ++d)
                for (size_t i = 0; i < wn.rivals.size(); ++i)
                    if (flow->flow[wn.position_arcs[v][d][i]] == 1) slots[d] = wn.rivals[i];
        }
        for (int d = 0; d < positions_per_vote; ++d) {
            Cand c = slots[d];
            if (c < 0) {
                for (Cand x = 0; x < inst.m; ++x)
                    if (!used[x]) {
                        c = x;
                        break;
                    }
            }
            used[c] = 1;
            r.push_back(c);
        }
        witness.add(r, 1);
    }
    return witness;
}

}  // namespace

WavNetwork build_wav_network(const WavInstance& inst) {
    require_topl_preconditions(inst);
    const int l = inst.mode.len;
    const long long a1 = inst.rule.vec[0];
    const long long A = l >= 2 ? inst.rule.vec[1] : 0;
    const auto base = scoring_scores(inst.known, inst.rule.vec, inst.rule.rounding);
    const long long target_final = base[inst.target] + inst.t * a1;
    return build_network(inst.m, inst.target, inst.t, l - 1, A, target_final, base, inst.tb);
}

WavAnswer wav_scoring_topl(const WavInstance& inst) {
    WavNetwork wn = build_wav_network(inst);
    const int positions_per_vote = inst.mode.len - 1;
    switch (wn.kind) {
        case WavNetwork::Kind::ImmediateNo:
            return WavAnswer::no();
        case WavNetwork::Kind::ImmediateYes:
            return {true, decode_witness(inst, inst.t, positions_per_vote, wn, nullptr)};
        case WavNetwork::Kind::Network: {
            FlowResult flow = max_flow(wn.net);
            if (flow.value != wn.positions) return WavAnswer::no();
            return {true, decode_witness(inst, inst.t, positions_per_vote, wn, &flow)};
        }
    }
    return WavAnswer::no();
}

WavAnswer wav_scoring_up_rounding(const WavInstance& inst) {
    validate_instance(inst);
    if (inst.rule.kind != Rule::Kind::Scoring || inst.rule.rounding != Rounding::Up)
        throw std::invalid_argument("up-rounding shortcut needs an up-rounding scoring rule");
    Profile witness(inst.mode, inst.m);
    if (inst.t > 0) witness.add({inst.target}, inst.t);
    if (winner(merge(inst.known, witness), inst.rule, inst.tb) == inst.target)
        return {true, std::move(witness)};
    return WavAnswer::no();
}

WavAnswer wav_scoring_down_rounding(const WavInstance& inst) {
    validate_instance(inst);
    if (inst.rule.kind != Rule::Kind::Scoring || inst.rule.rounding != Rounding::Down)
        throw std::invalid_argument("down-rounding solver needs a down-rounding scoring rule");
    const auto& vec = inst.rule.vec;
    for (size_t i = 2; i < vec.size(); ++i)
        if (vec[i] != vec[1])
            throw std::invalid_argument("down-rounding solver needs a_2 = ... = a_L");

    const int L = inst.mode.len;
    const long long a1 = vec[0];
    const long long aL = vec.back();
    const long long A = L >= 2 ? vec[1] : vec[0];
    const auto base = scoring_scores(inst.known, vec, Rounding::Down);

    // k votes [target] score a_L each; the other t - k votes are full top-L
    // rankings led by the target, scoring a_1 for it and A per filled slot
    // for anyone else. Smallest feasible k wins for determinism.
    for (long long k = 0; k <= inst.t; ++k) {
        const long long full = inst.t - k;
        const long long target_final = base[inst.target] + k * aL + full * a1;
        WavNetwork wn = build_network(inst.m, inst.target, full, L - 1, A, target_final,
                                      base, inst.tb);
        Profile witness(inst.mode, inst.m);
        bool ok = false;
        switch (wn.kind) {
            case WavNetwork::Kind::ImmediateNo:
                break;
            case WavNetwork::Kind::ImmediateYes:
                witness = decode_witness(inst, full, L - 1, wn, nullptr);
                ok = true;
                break;
            case WavNetwork::Kind::Network: {
                FlowResult flow = max_flow(wn.net);
                if (flow.value == wn.positions) {
                    witness = decode_witness(inst, full, L - 1, wn, &flow);
                    ok = true;
                }
                break;
            }
        }
        if (!ok) continue;
        if (k > 0) witness.add({inst.target}, k);
        return {true, std::move(witness)};
    }
    return WavAnswer::no();
}

bool flow_solver_applicable(const WavInstance& inst) {
    if (inst.rule.kind != Rule::Kind::Scoring) return false;
    const auto& v = inst.rule.vec;
    switch (inst.rule.rounding) {
        case Rounding::Up:
            return inst.mode.kind == BallotMode::Kind::UpTo;
        case Rounding::TopExact:
        case Rounding::Down: {
            if (inst.rule.rounding == Rounding::TopExact &&
                inst.mode.kind != BallotMode::Kind::TopExactly)
                return false;
            if (inst.rule.rounding == Rounding::Down &&
                inst.mode.kind != BallotMode::Kind::UpTo)
                return false;
            for (size_t i = 2; i < v.size(); ++i)
                if (v[i] != v[1]) return false;
            return true;
        }
    }
    return false;
}

WavAnswer wav_scoring_poly(const WavInstance& inst) {
    if (!flow_solver_applicable(inst))
        throw std::invalid_argument("no polynomial solver applies to this instance");
    switch (inst.rule.rounding) {
        case Rounding::TopExact: return wav_scoring_topl(inst);
        case Rounding::Up: return wav_scoring_up_rounding(inst);
        case Rounding::Down: return wav_scoring_down_rounding(inst);
    }
    return WavAnswer::no();
}

}  // namespace wav
