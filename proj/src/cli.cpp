#include "wav/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "wav/flow.hpp"
#include "wav/textio.hpp"

namespace wav {

namespace {

BallotFile load_ballot_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_ballot_file(in);
}

Rxc3Instance load_rxc3_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_rxc3_file(in);
}

RolesFile load_roles_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_roles_file(in);
}

Rule resolve_rule(const BallotFile& bf, const std::string& flag) {
    if (!flag.empty()) return parse_rule_spec(flag);
    if (bf.rule_spec) return parse_rule_spec(*bf.rule_spec);
    throw ParseError("no rule given: pass --rule or add a 'rule:' line to the file");
}

std::string fraction(long long num, long long den) {
    if (num % den == 0) return std::to_string(num / den);
    return std::to_string(num) + "/" + std::to_string(den);
}

int cmd_winner(const std::string& ballots_path, const std::string& rule_flag, std::ostream& out) {
    BallotFile bf = load_ballot_file(ballots_path);
    Rule rule = resolve_rule(bf, rule_flag);
    if (auto err = rule_mode_error(rule, bf.profile.mode)) throw ParseError(*err);

    const auto& names = bf.names;
    if (rule.kind == Rule::Kind::Stv) {
        StvResult res = stv_winner(bf.profile, bf.tiebreak);
        for (size_t i = 0; i < res.trace.rounds.size(); ++i) {
            const auto& round = res.trace.rounds[i];
            out << "round " << i + 1 << ":";
            for (Cand c = 0; c < bf.profile.m; ++c)
                if (round.scores[c] >= 0) out << ' ' << names[c] << '=' << round.scores[c];
            out << " eliminated=" << names[round.eliminated] << '\n';
        }
        out << "winner: " << names[res.winner] << '\n';
        return kExitYes;
    }

    out << "scores:";
    switch (rule.kind) {
        case Rule::Kind::Copeland: {
            auto cs = copeland_scores(bf.profile);
            for (Cand c = 0; c < bf.profile.m; ++c)
                out << ' ' << names[c] << '='
                    << fraction(copeland_value(cs[c], rule.alpha), rule.alpha.den);
            break;
        }
        case Rule::Kind::Maximin: {
            auto ms = maximin_scores(bf.profile);
            for (Cand c = 0; c < bf.profile.m; ++c) out << ' ' << names[c] << '=' << ms[c];
            break;
        }
        case Rule::Kind::Scoring: {
            auto ss = scoring_scores(bf.profile, rule.vec, rule.rounding);
            for (Cand c = 0; c < bf.profile.m; ++c) out << ' ' << names[c] << '=' << ss[c];
            break;
        }
        default:
            break;
    }
    out << '\n';
    out << "winner: " << names[winner(bf.profile, rule, bf.tiebreak)] << '\n';
    return kExitYes;
}

int cmd_wav(const std::string& ballots_path, const std::string& rule_flag, long long absent_flag,
            bool absent_set, const std::string& target_flag, const std::string& method,
            unsigned long long budget, std::ostream& out, std::ostream& err) {
    BallotFile bf = load_ballot_file(ballots_path);
    Rule rule = resolve_rule(bf, rule_flag);

    WavInstance inst;
    inst.mode = bf.profile.mode;
    inst.m = bf.profile.m;
    inst.known = bf.profile;
    inst.rule = rule;
    inst.tb = bf.tiebreak;
    if (absent_set)
        inst.t = absent_flag;
    else if (bf.absent)
        inst.t = *bf.absent;
    else
        throw ParseError("no absent-vote count: pass --absent or add an 'absent:' line");
    std::string target_name;
    if (!target_flag.empty())
        target_name = target_flag;
    else if (bf.target)
        target_name = *bf.target;
    else
        throw ParseError("no target: pass --target or add a 'target:' line");
    inst.target = bf.index_of(target_name);
    try {
        validate_instance(inst);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }

    WavAnswer answer;
    if (method == "flow") {
        if (!flow_solver_applicable(inst))
            throw ParseError("the flow method needs a scoring rule with a_2 = ... = a_l "
                             "(or up-rounding)");
        answer = wav_scoring_poly(inst);
    } else if (method == "bruteforce") {
        answer = wav_bruteforce(inst, budget);
    } else if (method == "auto") {
        answer = flow_solver_applicable(inst) ? wav_scoring_poly(inst)
                                              : wav_bruteforce(inst, budget);
    } else {
        throw ParseError("unknown method '" + method + "'");
    }

    if (!answer.yes) {
        out << "NO\n";
        return kExitNo;
    }
    out << "YES\n";
    for (const auto& e : answer.witness.entries)
        out << format_ballot_line(bf.names, e.ranking, e.count) << '\n';
    // Belt-and-braces: a printed witness must replay to the target.
    if (inst.t > 0 && winner(merge(inst.known, answer.witness), rule, inst.tb) != inst.target) {
        err << "internal error: witness failed replay\n";
        return kExitInputError;
    }
    return kExitYes;
}

ReductionOutput generate_reduction(const Rxc3Instance& rxc3, const std::string& family, int l,
                                   const Alpha& alpha) {
    if (family == "stv") return reduce_stv(rxc3, l);
    if (family == "maximin") return reduce_maximin(rxc3, l);
    if (family == "copeland") return reduce_copeland(rxc3, l, alpha);
    throw ParseError("reductions exist for stv, maximin and copeland only");
}

int cmd_reduce(const std::string& rxc3_path, const std::string& rule_flag, int l,
               const std::string& out_prefix, std::ostream& out) {
    Rxc3Instance rxc3 = load_rxc3_file(rxc3_path);
    Rule rule = parse_rule_spec(rule_flag);
    std::string family;
    switch (rule.kind) {
        case Rule::Kind::Stv: family = "stv"; break;
        case Rule::Kind::Maximin: family = "maximin"; break;
        case Rule::Kind::Copeland: family = "copeland"; break;
        default: throw ParseError("reductions exist for stv, maximin and copeland only");
    }
    ReductionOutput red;
    try {
        red = generate_reduction(rxc3, family, l, rule.alpha);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }

    const std::string ballots_path = out_prefix + ".ballots";
    const std::string roles_path = out_prefix + ".roles";
    std::ofstream bout(ballots_path);
    if (!bout) throw ParseError("cannot write '" + ballots_path + "'");
    bout << print_ballot_file(reduction_ballot_file(red));
    std::ofstream rout(roles_path);
    if (!rout) throw ParseError("cannot write '" + roles_path + "'");
    rout << print_roles_file(red);

    out << "wrote " << ballots_path << " (" << red.instance.m << " candidates, "
        << red.instance.known.total_votes() << " votes, t=" << red.instance.t << ")\n";
    out << "wrote " << roles_path << '\n';
    return kExitYes;
}

int cmd_verify(const std::string& rxc3_path, const std::string& ballots_path,
               const std::string& roles_path, unsigned long long no_budget, std::ostream& out) {
    Rxc3Instance rxc3 = load_rxc3_file(rxc3_path);
    RolesFile rf = load_roles_file(roles_path);
    BallotFile bf = load_ballot_file(ballots_path);

    ReductionOutput red;
    try {
        red = generate_reduction(rxc3, rf.family, rf.l, rf.alpha);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }

    VerifyReport rep;
    if (bf.names != red.roles) {
        rep.add("role-map", false, "candidate names do not match the generated roles");
    } else {
        rep.add("role-map", true);
        // Run the claim checks against the profile as parsed from disk, so
        // any edit to the ballot file is caught by name.
        ReductionOutput checked = red;
        checked.instance.known = bf.profile;
        checked.instance.tb = bf.tiebreak;
        VerifyOptions opts;
        opts.no_check_budget = no_budget;
        rep = verify_reduction(checked, rxc3, opts);
        bool tb_ok = bf.tiebreak.priority == red.instance.tb.priority;
        rep.add("tiebreak", tb_ok, tb_ok ? "" : "tie-break order differs from the construction");
    }

    for (const auto& c : rep.checks)
        out << (c.pass ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail)
            << '\n';
    out << (rep.ok() ? "verification passed" : "verification FAILED") << '\n';
    return rep.ok() ? kExitYes : kExitNo;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"winner determination with absent votes for top-truncated ballots"};
    app.require_subcommand(1);

    std::string ballots_path, rule_flag, target_flag, method = "auto";
    std::string rxc3_path, roles_path, out_prefix;
    long long absent_flag = 0;
    int l = 2;
    unsigned long long budget = kDefaultProfileBudget;
    unsigned long long no_budget = 0;

    auto* winner_cmd = app.add_subcommand("winner", "tabulate a ballot file");
    winner_cmd->add_option("--ballots", ballots_path, "ballot file")->required();
    winner_cmd->add_option("--rule", rule_flag,
                           "stv | maximin | copeland:<a> | score:v1,..,vk[:up|:down]");

    auto* wav_cmd = app.add_subcommand("wav", "decide winner-with-absent-votes");
    wav_cmd->add_option("--ballots", ballots_path, "ballot file")->required();
    wav_cmd->add_option("--rule", rule_flag, "voting rule");
    auto* absent_opt = wav_cmd->add_option("--absent", absent_flag, "number of absent votes");
    wav_cmd->add_option("--target", target_flag, "target candidate name");
    wav_cmd->add_option("--method", method, "auto | bruteforce | flow")
        ->check(CLI::IsMember({"auto", "bruteforce", "flow"}));
    wav_cmd->add_option("--budget", budget, "brute-force profile budget");

    auto* reduce_cmd = app.add_subcommand("reduce", "build a WAV instance from an RXC3 instance");
    reduce_cmd->add_option("--rxc3", rxc3_path, "exact-cover instance file")->required();
    reduce_cmd->add_option("--rule", rule_flag, "stv | maximin | copeland:<a>")->required();
    reduce_cmd->add_option("--l", l, "ballot length")->required();
    reduce_cmd->add_option("--out", out_prefix, "output prefix")->required();

    auto* verify_cmd = app.add_subcommand("verify", "check a generated reduction");
    verify_cmd->add_option("--rxc3", rxc3_path, "exact-cover instance file")->required();
    verify_cmd->add_option("--ballots", ballots_path, "generated ballot file")->required();
    verify_cmd->add_option("--roles", roles_path, "generated roles file")->required();
    verify_cmd->add_option("--no-budget", no_budget,
                           "profile budget for the exhaustive NO check (0 = skip)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitYes;
        }
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (winner_cmd->parsed()) return cmd_winner(ballots_path, rule_flag, out);
        if (wav_cmd->parsed())
            return cmd_wav(ballots_path, rule_flag, absent_flag, absent_opt->count() > 0,
                           target_flag, method, budget, out, err);
        if (reduce_cmd->parsed()) return cmd_reduce(rxc3_path, rule_flag, l, out_prefix, out);
        if (verify_cmd->parsed())
            return cmd_verify(rxc3_path, ballots_path, roles_path, no_budget, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace wav
