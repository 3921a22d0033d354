#include "wav/reductions.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace wav {

std::optional<std::string> validate_rxc3(const Rxc3Instance& inst) {
    if (inst.q <= 0) return "q must be positive";
    if (inst.q % 3 != 0) return "q must be divisible by 3";
    if (static_cast<int>(inst.sets.size()) != inst.q)
        return "expected exactly q sets, got " + std::to_string(inst.sets.size());
    std::vector<int> occurrences(inst.q + 1, 0);
    for (size_t j = 0; j < inst.sets.size(); ++j) {
        const auto& s = inst.sets[j];
        if (s.size() != 3)
            return "set " + std::to_string(j + 1) + " has size " + std::to_string(s.size());
        std::vector<int> sorted(s);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return "set " + std::to_string(j + 1) + " repeats an element";
        for (int x : s) {
            if (x < 1 || x > inst.q)
                return "set " + std::to_string(j + 1) + " contains out-of-range element " +
                       std::to_string(x);
            occurrences[x]++;
        }
    }
    for (int x = 1; x <= inst.q; ++x)
        if (occurrences[x] != 3)
            return "element " + std::to_string(x) + " appears in " +
                   std::to_string(occurrences[x]) + " sets, expected 3";
    return std::nullopt;
}

namespace {

unsigned long long binomial_sat(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) {
        unsigned long long num = static_cast<unsigned long long>(n - k + i);
        if (r > UINT64_MAX / num) return UINT64_MAX;
        r = r * num / static_cast<unsigned long long>(i);
    }
    return r;
}

bool cover_search(const Rxc3Instance& inst, int start, int need, std::vector<char>& covered,
                  std::vector<int>& chosen) {
    if (need == 0) {
        for (int x = 1; x <= inst.q; ++x)
            if (!covered[x]) return false;
        return true;
    }
    for (int j = start; j <= inst.q; ++j) {
        const auto& s = inst.sets[j - 1];
        bool disjoint = true;
        for (int x : s)
            if (covered[x]) {
                disjoint = false;
                break;
            }
        if (!disjoint) continue;
        for (int x : s) covered[x] = 1;
        chosen.push_back(j);
        if (cover_search(inst, j + 1, need - 1, covered, chosen)) return true;
        chosen.pop_back();
        for (int x : s) covered[x] = 0;
    }
    return false;
}

}  // namespace

std::optional<Rxc3Solution> solve_rxc3_bruteforce(const Rxc3Instance& inst,
                                                  unsigned long long budget) {
    if (auto err = validate_rxc3(inst)) throw std::invalid_argument("rxc3: " + *err);
    unsigned long long needed = binomial_sat(inst.q, inst.q / 3);
    if (needed > budget) throw BudgetExceeded(needed);
    std::vector<char> covered(inst.q + 1, 0);
    std::vector<int> chosen;
    if (cover_search(inst, 1, inst.q / 3, covered, chosen)) return Rxc3Solution{chosen};
    return std::nullopt;
}

Rxc3Instance preprocess_rxc3(const Rxc3Instance& inst, int divisor) {
    if (auto err = validate_rxc3(inst)) throw std::invalid_argument("rxc3: " + *err);
    if (divisor < 1) throw std::invalid_argument("divisor must be positive");
    int copies = divisor / std::gcd(divisor, inst.q);
    Rxc3Instance out;
    out.q = inst.q * copies;
    out.sets.reserve(out.q);
    for (int r = 0; r < copies; ++r)
        for (const auto& s : inst.sets) {
            std::vector<int> shifted;
            shifted.reserve(3);
            for (int x : s) shifted.push_back(x + r * inst.q);
            out.sets.push_back(std::move(shifted));
        }
    return out;
}

Cand ReductionOutput::role_index(const std::string& role) const {
    for (Cand c = 0; c < static_cast<int>(roles.size()); ++c)
        if (roles[c] == role) return c;
    throw std::invalid_argument("unknown role: " + role);
}

int required_divisor(const std::string& family, int l) {
    if (family == "stv") return 6;
    if (family == "maximin" || family == "copeland") return 6 * (l - 1);
    throw std::invalid_argument("unknown reduction family: " + family);
}

namespace {

void check_solution(const Rxc3Instance& inst, const Rxc3Solution& sol) {
    if (static_cast<int>(sol.indices.size()) != inst.q / 3)
        throw std::invalid_argument("solution must pick exactly q/3 sets");
    std::vector<char> covered(inst.q + 1, 0);
    for (int j : sol.indices) {
        if (j < 1 || j > inst.q) throw std::invalid_argument("solution set index out of range");
        for (int x : inst.sets[j - 1]) {
            if (covered[x]) throw std::invalid_argument("solution sets are not disjoint");
            covered[x] = 1;
        }
    }
}

// Appends the lowest-priority unused candidates until the ranking reaches
// length l.
Ranking pad_ranking(Ranking prefix, int l, const TieBreakOrder& tb) {
    if (static_cast<int>(prefix.size()) > l) prefix.resize(l);
    std::vector<char> used(tb.m(), 0);
    for (Cand c : prefix) used[c] = 1;
    for (int pos = tb.m() - 1; pos >= 0 && static_cast<int>(prefix.size()) < l; --pos) {
        Cand c = tb.priority[pos];
        if (!used[c]) {
            prefix.push_back(c);
            used[c] = 1;
        }
    }
    return prefix;
}

}  // namespace

// ---------------------------------------------------------------------------
// STV
// ---------------------------------------------------------------------------

namespace {

struct StvLayout {
    int q;
    Cand c = 0;
    Cand w = 1;
    Cand d(int j) const { return 2 + j; }                 // j in 0..q
    Cand b(int i) const { return q + 3 + 2 * (i - 1); }   // i in 1..q
    Cand bb(int i) const { return q + 4 + 2 * (i - 1); }
    int m() const { return 3 * q + 3; }
};

TieBreakOrder stv_tiebreak(const StvLayout& lay) {
    // w first so that it survives the round-(q+1) ties against the d's; the
    // target goes last so ties never hand it a win.
    std::vector<Cand> order;
    order.push_back(lay.w);
    for (int j = 0; j <= lay.q; ++j) order.push_back(lay.d(j));
    for (int i = 1; i <= lay.q; ++i) {
        order.push_back(lay.b(i));
        order.push_back(lay.bb(i));
    }
    order.push_back(lay.c);
    return TieBreakOrder::from_priority(std::move(order));
}

}  // namespace

ReductionOutput reduce_stv(const Rxc3Instance& inst, int l) {
    if (auto err = validate_rxc3(inst)) throw std::invalid_argument("rxc3: " + *err);
    if (l < 2) throw std::invalid_argument("reduce_stv: l must be at least 2");
    if (inst.q % 2 != 0)
        throw std::invalid_argument("reduce_stv: q must be divisible by " +
                                    std::to_string(required_divisor("stv", l)) +
                                    "; preprocess the instance first");
    const int q = inst.q;
    StvLayout lay{q};
    if (l > lay.m()) throw std::invalid_argument("reduce_stv: l exceeds candidate count");

    ReductionOutput red;
    red.family = "stv";
    red.l = l;
    red.source = inst;
    red.roles.assign(lay.m(), "");
    red.roles[lay.c] = "c";
    red.roles[lay.w] = "w";
    for (int j = 0; j <= q; ++j) red.roles[lay.d(j)] = "d" + std::to_string(j);
    for (int i = 1; i <= q; ++i) {
        red.roles[lay.b(i)] = "b" + std::to_string(i);
        red.roles[lay.bb(i)] = "bb" + std::to_string(i);
    }
    TieBreakOrder tb = stv_tiebreak(lay);

    auto block = [&](const std::string& name, Ranking prefix, Count count) {
        red.expected_votes.push_back({name, {pad_ranking(std::move(prefix), l, tb), count}});
    };
    block("P1", {lay.c, lay.w}, 12 * q);
    block("P2", {lay.w, lay.c}, 12 * q - 1);
    block("P3", {lay.d(0), lay.w, lay.c}, 10 * q + 2 * q / 3);
    for (int i = 1; i <= q; ++i)
        block("P4." + std::to_string(i), {lay.d(i), lay.w, lay.c}, 12 * q - 2);
    for (int i = 1; i <= q; ++i) {
        block("P5a." + std::to_string(i), {lay.b(i), lay.bb(i), lay.w, lay.c}, 6 * q + 4 * i - 6);
        for (int x : inst.sets[i - 1])
            block("P5b." + std::to_string(i) + "." + std::to_string(x),
                  {lay.b(i), lay.d(x), lay.w, lay.c}, 2);
    }
    for (int i = 1; i <= q; ++i) {
        block("P6a." + std::to_string(i), {lay.bb(i), lay.b(i), lay.w, lay.c}, 6 * q + 4 * i - 2);
        block("P6b." + std::to_string(i), {lay.bb(i), lay.d(0), lay.w, lay.c}, 2);
    }

    Profile known(BallotMode::top_exactly(l), lay.m());
    for (const auto& [name, entry] : red.expected_votes) {
        (void)name;
        known.add(entry.ranking, entry.count);
    }

    red.instance = {BallotMode::top_exactly(l), lay.m(), std::move(known), q / 3, lay.c,
                    Rule::stv(), std::move(tb)};
    red.expect["q"] = q;
    red.expect["candidates"] = lay.m();
    red.expect["t"] = q / 3;
    red.expect["total_votes"] = 28LL * q * q + 36LL * q + 2 * q / 3 - 1;
    validate_instance(red.instance);
    return red;
}

Profile stv_witness_from_cover(const ReductionOutput& red, const Rxc3Solution& sol) {
    if (red.family != "stv") throw std::invalid_argument("expected an stv reduction");
    check_solution(red.source, sol);
    const int q = static_cast<int>(red.expect.at("q"));
    StvLayout lay{q};
    Profile witness(red.instance.mode, red.instance.m);
    for (int i : sol.indices)
        witness.add(pad_ranking({lay.bb(i), lay.b(i), lay.c, lay.w}, red.l, red.instance.tb), 1);
    return witness;
}

// ---------------------------------------------------------------------------
// Maximin
// ---------------------------------------------------------------------------

namespace {

struct MaximinLayout {
    int q;
    int l;
    Cand c = 0;
    Cand x(int i) const { return i; }           // i in 1..q
    Cand s(int j) const { return q + j; }       // j in 1..q
    Cand w(int k) const { return 2 * q + k; }   // k in 1..l-1
    int m() const { return 2 * q + l; }
};

}  // namespace

ReductionOutput reduce_maximin(const Rxc3Instance& inst, int l) {
    if (auto err = validate_rxc3(inst)) throw std::invalid_argument("rxc3: " + *err);
    if (l < 2) throw std::invalid_argument("reduce_maximin: l must be at least 2");
    const int q = inst.q;
    const int divisor = required_divisor("maximin", l);
    if (q % divisor != 0)
        throw std::invalid_argument("reduce_maximin: q must be divisible by " +
                                    std::to_string(divisor) + "; preprocess the instance first");
    MaximinLayout lay{q, l};
    const long long t = q / (3 * (l - 1));

    ReductionOutput red;
    red.family = "maximin";
    red.l = l;
    red.source = inst;
    red.roles.assign(lay.m(), "");
    red.roles[lay.c] = "c";
    for (int i = 1; i <= q; ++i) red.roles[lay.x(i)] = "x" + std::to_string(i);
    for (int j = 1; j <= q; ++j) red.roles[lay.s(j)] = "s" + std::to_string(j);
    for (int k = 1; k < l; ++k) red.roles[lay.w(k)] = "w" + std::to_string(k);

    std::vector<Cand> order;
    order.push_back(lay.c);
    for (int i = 1; i <= q; ++i) order.push_back(lay.x(i));
    for (int j = 1; j <= q; ++j) order.push_back(lay.s(j));
    for (int k = 1; k < l; ++k) order.push_back(lay.w(k));
    TieBreakOrder tb = TieBreakOrder::from_priority(std::move(order));

    // Gadget margins. Member sets beat their elements by q; every element
    // beats every non-member set by 2q; elements and sets beat the target by
    // q + t + 2; elements, the target and the sets relate to the W block by
    // 2q with W above the sets and below everything else.
    Wmg gadget(lay.m());
    auto set_edge = [&](Cand from, Cand to, long long weight) {
        gadget.at(from, to) = weight;
        gadget.at(to, from) = -weight;
    };
    std::vector<std::vector<char>> member(q + 1, std::vector<char>(q + 1, 0));
    for (int j = 1; j <= q; ++j)
        for (int x : inst.sets[j - 1]) member[x][j] = 1;
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= q; ++j)
            if (member[i][j])
                set_edge(lay.s(j), lay.x(i), q);
            else
                set_edge(lay.x(i), lay.s(j), 2 * q);
    for (int i = 1; i <= q; ++i) set_edge(lay.x(i), lay.c, q + t + 2);
    for (int j = 1; j <= q; ++j) set_edge(lay.s(j), lay.c, q + t + 2);
    for (int k = 1; k < l; ++k) {
        for (int i = 1; i <= q; ++i) set_edge(lay.x(i), lay.w(k), 2 * q);
        for (int j = 1; j <= q; ++j) set_edge(lay.w(k), lay.s(j), 2 * q);
        set_edge(lay.c, lay.w(k), 2 * q);
    }
    if (auto err = validate_wmg_target(gadget))
        throw std::logic_error("maximin gadget target invalid: " + *err);

    Profile known = realize_wmg(gadget, l);
    Ranking seed{lay.c};
    for (int k = 1; k < l; ++k) seed.push_back(lay.w(k));
    known.add(seed, 1);

    Profile explicit_votes(BallotMode::top_exactly(l), lay.m());
    explicit_votes.add(seed, 1);
    const Wmg evwmg = wmg(explicit_votes);
    red.expected_wmg = gadget;
    for (int a = 0; a < lay.m(); ++a)
        for (int b = 0; b < lay.m(); ++b) red.expected_wmg.at(a, b) += evwmg.at(a, b);
    red.has_expected_wmg = true;

    Count seed_count = 0;
    for (const auto& e : known.entries)
        if (e.ranking == seed) seed_count = e.count;
    red.expected_votes.push_back({"seed-vote", {seed, seed_count}});

    red.instance = {BallotMode::top_exactly(l), lay.m(), std::move(known), t, lay.c,
                    Rule::maximin(), std::move(tb)};
    red.expect["q"] = q;
    red.expect["candidates"] = lay.m();
    red.expect["t"] = t;
    red.expect["total_votes"] = red.instance.known.total_votes();
    red.expect["minscore_c"] = -(q + t + 1);
    red.expect["minscore_w"] = -(2 * q + 1);
    red.expect["minscore_x"] = -q;
    red.expect["minscore_s"] = -2 * q;
    red.expect["post_minscore_c"] = -(q + 1);
    red.expect["post_minscore_x"] = -(q + 1);
    red.expect["post_bound_s"] = -(2 * q - 1);
    red.expect["post_bound_w"] = -(2 * q - 1);
    validate_instance(red.instance);
    return red;
}

Profile maximin_witness_from_cover(const ReductionOutput& red, const Rxc3Solution& sol) {
    if (red.family != "maximin") throw std::invalid_argument("expected a maximin reduction");
    check_solution(red.source, sol);
    const int q = static_cast<int>(red.expect.at("q"));
    const int l = red.l;
    MaximinLayout lay{q, l};
    std::vector<int> chosen(sol.indices);
    std::sort(chosen.begin(), chosen.end());
    Profile witness(red.instance.mode, red.instance.m);
    const long long t = red.expect.at("t");
    size_t pos = 0;
    for (long long v = 0; v < t; ++v) {
        Ranking r{lay.c};
        for (int k = 1; k < l; ++k) r.push_back(lay.s(chosen[pos++]));
        witness.add(r, 1);
    }
    return witness;
}

// ---------------------------------------------------------------------------
// Copeland
// ---------------------------------------------------------------------------

namespace {

struct CopelandLayout {
    int q;
    Cand c = 0;
    Cand x(int i) const { return i; }
    Cand s(int j) const { return q + j; }
    Cand b() const { return 2 * q + 1; }
    Cand w(int k) const { return 2 * q + 1 + k; }   // k in 1..q/2+1
    int wcount() const { return q / 2 + 1; }
    int m() const { return 2 * q + q / 2 + 3; }
};

}  // namespace

ReductionOutput reduce_copeland(const Rxc3Instance& inst, int l, Alpha alpha) {
    if (auto err = validate_rxc3(inst)) throw std::invalid_argument("rxc3: " + *err);
    if (l < 2) throw std::invalid_argument("reduce_copeland: l must be at least 2");
    const int q = inst.q;
    const int divisor = required_divisor("copeland", l);
    if (q % divisor != 0)
        throw std::invalid_argument("reduce_copeland: q must be divisible by " +
                                    std::to_string(divisor) + "; preprocess the instance first");
    const bool tied_variant = alpha.num == alpha.den;   // alpha == 1
    if (!tied_variant && alpha.num * q >= alpha.den * (q - 3))
        throw std::invalid_argument("reduce_copeland: alpha must be below (q-3)/q at this q");
    if (tied_variant && q < 12)
        throw std::invalid_argument("reduce_copeland: alpha = 1 needs q >= 12");
    CopelandLayout lay{q};
    if (l - 1 > lay.wcount())
        throw std::invalid_argument("reduce_copeland: l too large for the W block");
    const long long t = q / (3 * (l - 1));

    ReductionOutput red;
    red.family = "copeland";
    red.l = l;
    red.alpha = alpha;
    red.source = inst;
    red.roles.assign(lay.m(), "");
    red.roles[lay.c] = "c";
    red.roles[lay.b()] = "b";
    for (int i = 1; i <= q; ++i) red.roles[lay.x(i)] = "x" + std::to_string(i);
    for (int j = 1; j <= q; ++j) red.roles[lay.s(j)] = "s" + std::to_string(j);
    for (int k = 1; k <= lay.wcount(); ++k) red.roles[lay.w(k)] = "w" + std::to_string(k);

    // Every x must be tb-favored over c: an uncovered x ties c's final score
    // and the tie must go against the target.
    std::vector<Cand> order;
    for (int j = 1; j <= q; ++j) order.push_back(lay.s(j));
    for (int i = 1; i <= q; ++i) order.push_back(lay.x(i));
    order.push_back(lay.c);
    for (int k = 1; k <= lay.wcount(); ++k) order.push_back(lay.w(k));
    order.push_back(lay.b());
    TieBreakOrder tb = TieBreakOrder::from_priority(std::move(order));

    std::vector<std::vector<char>> member(q + 1, std::vector<char>(q + 1, 0));
    for (int j = 1; j <= q; ++j)
        for (int x : inst.sets[j - 1]) member[x][j] = 1;

    Wmg gadget(lay.m());
    auto set_edge = [&](Cand from, Cand to, long long weight) {
        gadget.at(from, to) += weight;
        gadget.at(to, from) -= weight;
    };
    const long long heavy = 4 * q;
    // Near-balanced cyclic tournaments over the x block and the S block; the
    // diameter pairs route through b so that b beats the low half of the x's
    // while every S beats b.
    for (int i1 = 1; i1 <= q; ++i1)
        for (int i2 = i1 + 1; i2 <= q; ++i2) {
            int d = i2 - i1;
            if (d < q / 2) {
                set_edge(lay.x(i1), lay.x(i2), heavy);
                set_edge(lay.s(i1), lay.s(i2), heavy);
            } else if (d > q / 2) {
                set_edge(lay.x(i2), lay.x(i1), heavy);
                set_edge(lay.s(i2), lay.s(i1), heavy);
            } else {
                set_edge(lay.x(i1), lay.x(i2), heavy);
                set_edge(lay.x(i2), lay.b(), heavy);
                set_edge(lay.b(), lay.x(i1), heavy);
                set_edge(lay.s(i1), lay.s(i2), heavy);
                set_edge(lay.s(i2), lay.b(), heavy);
                set_edge(lay.s(i1), lay.b(), heavy);
            }
        }
    for (int j = 1; j <= q; ++j)
        for (int k = 1; k <= lay.wcount(); ++k) set_edge(lay.s(j), lay.w(k), heavy);
    for (int i = 1; i <= q; ++i)
        for (int k = 1; k <= lay.wcount(); ++k) set_edge(lay.w(k), lay.x(i), heavy);
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= q; ++j)
            if (!member[i][j]) set_edge(lay.x(i), lay.s(j), heavy);
    for (int i = 1; i <= q; ++i) set_edge(lay.x(i), lay.c, heavy);
    for (int k = 1; k <= lay.wcount(); ++k) {
        set_edge(lay.c, lay.w(k), heavy);
        set_edge(lay.b(), lay.w(k), heavy);
    }
    set_edge(lay.b(), lay.c, heavy);

    // Sensitive margins. With the membership ballots in place (alpha < 1),
    // each x beats its member sets by 1 net and each S beats c by t - 1 net;
    // the tied variant drops the membership ballots and realizes exact ties.
    Profile explicit_votes(BallotMode::top_exactly(l), lay.m());
    if (!tied_variant) {
        for (int j = 1; j <= q; ++j)
            for (int x : inst.sets[j - 1]) {
                Ranking r{lay.s(j), lay.x(x)};
                for (int k = 1; k <= l - 2; ++k) r.push_back(lay.w(k));
                explicit_votes.add(r, 1);
            }
        for (int i = 1; i <= q; ++i)
            for (int j = 1; j <= q; ++j)
                if (member[i][j]) set_edge(lay.x(i), lay.s(j), 2);
        for (int j = 1; j <= q; ++j) set_edge(lay.s(j), lay.c, t - 2);
    } else {
        for (int j = 1; j <= q; ++j) set_edge(lay.s(j), lay.c, t + 2);
    }
    Ranking cvote{lay.c};
    for (int k = 1; k <= l - 1; ++k) cvote.push_back(lay.w(k));
    explicit_votes.add(cvote, 2);

    if (auto err = validate_wmg_target(gadget))
        throw std::logic_error("copeland gadget target invalid: " + *err);

    Profile known = merge(realize_wmg(gadget, l), explicit_votes);

    red.expected_wmg = gadget;
    Wmg evwmg = wmg(explicit_votes);
    for (int a = 0; a < lay.m(); ++a)
        for (int b2 = 0; b2 < lay.m(); ++b2) red.expected_wmg.at(a, b2) += evwmg.at(a, b2);
    red.has_expected_wmg = true;
    for (const auto& e : explicit_votes.entries) {
        Count in_known = 0;
        for (const auto& k : known.entries)
            if (k.ranking == e.ranking) in_known = k.count;
        std::string name = "vote[" + red.roles[e.ranking[0]] + ">" + red.roles[e.ranking[1]] + "]";
        red.expected_votes.push_back({name, {e.ranking, in_known}});
    }

    red.instance = {BallotMode::top_exactly(l), lay.m(), std::move(known), t, lay.c,
                    Rule::copeland(alpha), std::move(tb)};
    red.expect["q"] = q;
    red.expect["candidates"] = lay.m();
    red.expect["t"] = t;
    red.expect["total_votes"] = red.instance.known.total_votes();
    red.expect["margin_member"] = tied_variant ? 0 : 1;      // x_i vs member S_j
    red.expect["margin_sc"] = tied_variant ? t : t - 1;      // S_j vs c
    red.expect["pre_c_wins"] = q / 2 + 1;
    red.expect["pre_c_ties"] = 0;
    red.expect["pre_x_wins"] = tied_variant ? q + q / 2 - 2 : q + q / 2 + 1;
    red.expect["pre_x_ties"] = tied_variant ? 3 : 0;
    red.expect["pre_b_wins"] = q + 2;
    red.expect["pre_b_ties"] = 0;
    red.expect["pre_s_value_bound"] = (tied_variant ? q + 6 : q + 3) * alpha.den;
    red.expect["pre_w_value_bound"] = (q + q / 2) * alpha.den;
    red.expect["post_c_wins"] = tied_variant ? q / 2 + 1 : q + q / 2 + 1;
    red.expect["post_c_ties"] = tied_variant ? q : 0;
    red.expect["post_x_wins"] = tied_variant ? q + q / 2 - 2 : q + q / 2;
    red.expect["post_x_ties"] = tied_variant ? 2 : 1;
    validate_instance(red.instance);
    return red;
}

Profile copeland_witness_from_cover(const ReductionOutput& red, const Rxc3Solution& sol) {
    if (red.family != "copeland") throw std::invalid_argument("expected a copeland reduction");
    check_solution(red.source, sol);
    const int q = static_cast<int>(red.expect.at("q"));
    const int l = red.l;
    CopelandLayout lay{q};
    std::vector<int> chosen(sol.indices);
    std::sort(chosen.begin(), chosen.end());
    Profile witness(red.instance.mode, red.instance.m);
    const long long t = red.expect.at("t");
    size_t pos = 0;
    for (long long v = 0; v < t; ++v) {
        Ranking r{lay.c};
        for (int k = 1; k < l; ++k) r.push_back(lay.s(chosen[pos++]));
        witness.add(r, 1);
    }
    return witness;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

bool VerifyReport::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void VerifyReport::add(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({name, pass, detail});
}

namespace {

std::string show(long long v) { return std::to_string(v); }

void check_vote_blocks(const ReductionOutput& red, VerifyReport& rep) {
    bool all = true;
    std::string detail;
    for (const auto& [name, entry] : red.expected_votes) {
        Count actual = 0;
        for (const auto& e : red.instance.known.entries)
            if (e.ranking == entry.ranking) actual = e.count;
        if (actual != entry.count) {
            all = false;
            detail = "block " + name + ": expected " + show(entry.count) + " votes, found " +
                     show(actual);
            break;
        }
    }
    if (all && red.family == "stv" &&
        red.instance.known.entries.size() != red.expected_votes.size()) {
        all = false;
        detail = "profile has " + show(red.instance.known.entries.size()) +
                 " distinct ballots, expected " + show(red.expected_votes.size());
    }
    rep.add("vote-blocks", all, detail);
}

void check_counts(const ReductionOutput& red, VerifyReport& rep) {
    long long m = red.expect.at("candidates");
    rep.add("candidate-count", red.instance.m == m,
            red.instance.m == m ? "" : "found " + show(red.instance.m) + ", expected " + show(m));
    long long t = red.expect.at("t");
    rep.add("absent-count", red.instance.t == t,
            red.instance.t == t ? "" : "found " + show(red.instance.t) + ", expected " + show(t));
    long long total = red.expect.at("total_votes");
    long long actual = red.instance.known.total_votes();
    rep.add("total-votes", actual == total,
            actual == total ? "" : "found " + show(actual) + ", expected " + show(total));
}

void check_wmg(const ReductionOutput& red, VerifyReport& rep) {
    if (!red.has_expected_wmg) return;
    Wmg actual = wmg(red.instance.known);
    for (Cand a = 0; a < actual.m; ++a)
        for (Cand b = 0; b < actual.m; ++b)
            if (actual.at(a, b) != red.expected_wmg.at(a, b)) {
                rep.add("wmg", false,
                        "margin " + red.roles[a] + "->" + red.roles[b] + " is " +
                            show(actual.at(a, b)) + ", expected " +
                            show(red.expected_wmg.at(a, b)));
                return;
            }
    rep.add("wmg", true);
}

void group_stat(const std::vector<long long>& scores, const ReductionOutput& red, char role_prefix,
                long long& lo, long long& hi) {
    bool first = true;
    for (Cand c = 0; c < static_cast<int>(red.roles.size()); ++c) {
        const auto& r = red.roles[c];
        if (r.empty() || r[0] != role_prefix) continue;
        if (role_prefix == 'b' && r.size() > 1 && r[1] == 'b') continue;   // stv bb roles
        if (first || scores[c] < lo) lo = scores[c];
        if (first || scores[c] > hi) hi = scores[c];
        first = false;
    }
}

void check_maximin_tables(const ReductionOutput& red, VerifyReport& rep) {
    auto scores = maximin_scores(red.instance.known);
    auto check_role = [&](const std::string& key, char prefix, const std::string& label) {
        long long lo = 0, hi = 0;
        group_stat(scores, red, prefix, lo, hi);
        long long want = red.expect.at(key);
        bool pass = lo == want && hi == want;
        rep.add(label, pass,
                pass ? "" : "min-scores in [" + show(lo) + ", " + show(hi) + "], expected " +
                            show(want));
    };
    long long c_score = scores[red.role_index("c")];
    long long want_c = red.expect.at("minscore_c");
    rep.add("minscore-c", c_score == want_c,
            c_score == want_c ? "" : "found " + show(c_score) + ", expected " + show(want_c));
    check_role("minscore_x", 'x', "minscore-x");
    check_role("minscore_s", 's', "minscore-s");
    check_role("minscore_w", 'w', "minscore-w");
}

void check_copeland_tables(const ReductionOutput& red, VerifyReport& rep) {
    const auto g = wmg(red.instance.known);
    const auto cs = copeland_scores_from_wmg(g);
    const Alpha alpha = red.alpha;
    auto exact = [&](const std::string& label, Cand cand, long long wins, long long ties) {
        bool pass = cs[cand].wins == wins && cs[cand].ties == ties;
        rep.add(label, pass,
                pass ? ""
                     : red.roles[cand] + " has " + show(cs[cand].wins) + " wins / " +
                           show(cs[cand].ties) + " ties, expected " + show(wins) + " / " +
                           show(ties));
    };
    exact("pre-score-c", red.role_index("c"), red.expect.at("pre_c_wins"),
          red.expect.at("pre_c_ties"));
    exact("pre-score-b", red.role_index("b"), red.expect.at("pre_b_wins"),
          red.expect.at("pre_b_ties"));
    bool xs_ok = true;
    std::string detail;
    for (Cand cand = 0; cand < static_cast<int>(red.roles.size()); ++cand) {
        if (red.roles[cand].empty() || red.roles[cand][0] != 'x') continue;
        if (cs[cand].wins != red.expect.at("pre_x_wins") ||
            cs[cand].ties != red.expect.at("pre_x_ties")) {
            xs_ok = false;
            detail = red.roles[cand] + " has " + show(cs[cand].wins) + " wins / " +
                     show(cs[cand].ties) + " ties, expected " + show(red.expect.at("pre_x_wins")) +
                     " / " + show(red.expect.at("pre_x_ties"));
            break;
        }
    }
    rep.add("pre-score-x", xs_ok, detail);
    auto bound = [&](const std::string& label, char prefix, const std::string& key) {
        long long worst = LLONG_MIN;
        Cand worst_cand = -1;
        for (Cand cand = 0; cand < static_cast<int>(red.roles.size()); ++cand) {
            if (red.roles[cand].empty() || red.roles[cand][0] != prefix) continue;
            long long v = copeland_value(cs[cand], alpha);
            if (v > worst) {
                worst = v;
                worst_cand = cand;
            }
        }
        long long limit = red.expect.at(key);
        rep.add(label, worst <= limit,
                worst <= limit ? ""
                               : red.roles[worst_cand] + " scores " + show(worst) + "/" +
                                     show(alpha.den) + ", bound " + show(limit) + "/" +
                                     show(alpha.den));
    };
    bound("pre-score-s-bound", 's', "pre_s_value_bound");
    bound("pre-score-w-bound", 'w', "pre_w_value_bound");

    // Sensitive margins by role.
    long long want_sc = red.expect.at("margin_sc");
    bool margins_ok = true;
    std::string margin_detail;
    for (Cand a = 0; a < static_cast<int>(red.roles.size()) && margins_ok; ++a) {
        if (red.roles[a].empty() || red.roles[a][0] != 's') continue;
        long long got = g.at(a, red.role_index("c"));
        if (got != want_sc) {
            margins_ok = false;
            margin_detail = "margin " + red.roles[a] + "->c is " + show(got) + ", expected " +
                            show(want_sc);
        }
    }
    rep.add("margin-s-to-c", margins_ok, margin_detail);

    long long want_member = red.expect.at("margin_member");
    bool members_ok = true;
    std::string member_detail;
    const int q = static_cast<int>(red.expect.at("q"));
    for (int j = 1; j <= q && members_ok; ++j) {
        for (int x : red.source.sets[j - 1]) {
            long long got = g.at(red.role_index("x" + std::to_string(x)),
                                 red.role_index("s" + std::to_string(j)));
            if (got != want_member) {
                members_ok = false;
                member_detail = "margin x" + std::to_string(x) + "->s" + std::to_string(j) +
                                " is " + show(got) + ", expected " + show(want_member);
                break;
            }
        }
    }
    rep.add("margin-x-to-member-s", members_ok, member_detail);
}

void check_witness(const ReductionOutput& red, const Rxc3Solution& sol, VerifyReport& rep) {
    Profile witness;
    if (red.family == "stv")
        witness = stv_witness_from_cover(red, sol);
    else if (red.family == "maximin")
        witness = maximin_witness_from_cover(red, sol);
    else
        witness = copeland_witness_from_cover(red, sol);
    Profile merged = merge(red.instance.known, witness);
    Cand won = winner(merged, red.instance.rule, red.instance.tb);
    rep.add("witness-count", witness.total_votes() == red.instance.t);
    rep.add("witness-elects-target", won == red.instance.target,
            won == red.instance.target ? "" : "winner is " + red.roles[won]);
    if (won != red.instance.target) return;

    if (red.family == "stv") {
        // Plurality table at the start of round q+1.
        const int q = static_cast<int>(red.expect.at("q"));
        auto trace = stv_winner(merged, red.instance.tb).trace;
        const auto& scores = trace.rounds[q].scores;
        std::vector<char> in_cover(q + 1, 0);
        for (int i : sol.indices) in_cover[i] = 1;
        StvLayout lay{q};
        bool ok = true;
        std::string detail;
        auto expect_score = [&](Cand cand, long long want, const std::string& label) {
            if (!ok) return;
            if (scores[cand] != want) {
                ok = false;
                detail = label + " scores " + show(scores[cand]) + " in round q+1, expected " +
                         show(want);
            }
        };
        expect_score(lay.w, 12LL * q - 1, "w");
        expect_score(lay.c, 12LL * q, "c");
        for (int j = 0; j <= q; ++j) expect_score(lay.d(j), 12LL * q, red.roles[lay.d(j)]);
        for (int i = 1; i <= q; ++i) {
            if (in_cover[i])
                expect_score(lay.bb(i), 12LL * q + 8LL * i - 5, red.roles[lay.bb(i)]);
            else
                expect_score(lay.b(i), 12LL * q + 8LL * i - 2, red.roles[lay.b(i)]);
        }
        rep.add("stv-round-table", ok, detail);
    } else if (red.family == "maximin") {
        auto post = maximin_scores(merged);
        bool ok = post[red.role_index("c")] == red.expect.at("post_minscore_c");
        rep.add("post-minscore-c", ok,
                ok ? "" : "found " + show(post[red.role_index("c")]));
        bool xs = true;
        std::string detail;
        for (Cand cand = 0; cand < static_cast<int>(red.roles.size()); ++cand) {
            if (red.roles[cand].empty() || red.roles[cand][0] != 'x') continue;
            if (post[cand] != red.expect.at("post_minscore_x")) {
                xs = false;
                detail = red.roles[cand] + " post min-score " + show(post[cand]);
                break;
            }
        }
        rep.add("post-minscore-x", xs, detail);
        long long bound_s = red.expect.at("post_bound_s");
        long long bound_w = red.expect.at("post_bound_w");
        bool bounds = true;
        for (Cand cand = 0; cand < static_cast<int>(red.roles.size()); ++cand) {
            const auto& r = red.roles[cand];
            if (r.empty()) continue;
            if (r[0] == 's' && post[cand] > bound_s) bounds = false;
            if (r[0] == 'w' && post[cand] > bound_w) bounds = false;
        }
        rep.add("post-bounds-s-w", bounds);
    } else {
        auto cs = copeland_scores(merged);
        auto exact = [&](const std::string& label, Cand cand, long long wins, long long ties) {
            bool pass = cs[cand].wins == wins && cs[cand].ties == ties;
            rep.add(label, pass,
                    pass ? ""
                         : red.roles[cand] + " has " + show(cs[cand].wins) + " wins / " +
                               show(cs[cand].ties) + " ties, expected " + show(wins) + " / " +
                               show(ties));
        };
        exact("post-score-c", red.role_index("c"), red.expect.at("post_c_wins"),
              red.expect.at("post_c_ties"));
        bool xs_ok = true;
        std::string detail;
        for (Cand cand = 0; cand < static_cast<int>(red.roles.size()); ++cand) {
            if (red.roles[cand].empty() || red.roles[cand][0] != 'x') continue;
            if (cs[cand].wins != red.expect.at("post_x_wins") ||
                cs[cand].ties != red.expect.at("post_x_ties")) {
                xs_ok = false;
                detail = red.roles[cand] + " has " + show(cs[cand].wins) + " wins / " +
                         show(cs[cand].ties) + " ties";
                break;
            }
        }
        rep.add("post-score-x", xs_ok, detail);
    }
}

}  // namespace

VerifyReport verify_reduction(const ReductionOutput& red, const Rxc3Instance& source,
                              const VerifyOptions& opts) {
    VerifyReport rep;
    auto err = validate_rxc3(source);
    rep.add("rxc3-valid", !err, err ? *err : "");
    if (err) return rep;
    bool same_source = red.source.q == source.q && red.source.sets == source.sets;
    rep.add("source-match", same_source,
            same_source ? "" : "reduction was generated from a different instance");
    if (!same_source) return rep;

    check_counts(red, rep);
    check_vote_blocks(red, rep);
    check_wmg(red, rep);
    if (red.family == "maximin") check_maximin_tables(red, rep);
    if (red.family == "copeland") check_copeland_tables(red, rep);

    auto cover = solve_rxc3_bruteforce(source);
    if (cover) {
        if (opts.witness_check) check_witness(red, *cover, rep);
    } else if (opts.no_check_budget > 0) {
        try {
            WavAnswer answer = wav_bruteforce(red.instance, opts.no_check_budget);
            rep.add("no-direction", !answer.yes,
                    answer.yes ? "exhaustive search found a completion electing the target" : "");
        } catch (const BudgetExceeded& e) {
            rep.add("no-direction", false,
                    "budget exceeded: " + show(static_cast<long long>(e.needed)) + " profiles");
        }
    }
    return rep;
}

}  // namespace wav
