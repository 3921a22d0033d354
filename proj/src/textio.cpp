#include "wav/textio.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wav {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

long long parse_int(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer for " + what + ", got '" + s + "'");
    }
}

// key/value lines: "key: value", '#' starts a comment, blank lines skipped.
struct LineReader {
    std::istream& in;
    int lineno = 0;

    bool next(std::string& key, std::string& value) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            line = trim(line);
            if (line.empty()) continue;
            auto colon = line.find(':');
            if (colon == std::string::npos)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'key: value'");
            key = trim(line.substr(0, colon));
            value = trim(line.substr(colon + 1));
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    }
};

}  // namespace

Cand BallotFile::index_of(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<Cand>(i);
    throw ParseError("unknown candidate '" + name + "'");
}

BallotFile parse_ballot_file(std::istream& in) {
    LineReader reader{in};
    BallotFile bf;
    std::optional<BallotMode> mode;
    std::vector<std::pair<Ranking, Count>> ballots;
    std::optional<std::vector<std::string>> tiebreak_names;

    std::string key, value;
    while (reader.next(key, value)) {
        if (key == "candidates") {
            bf.names = split_ws(value);
            if (bf.names.empty()) reader.fail("candidate list is empty");
            for (size_t i = 0; i < bf.names.size(); ++i)
                for (size_t j = i + 1; j < bf.names.size(); ++j)
                    if (bf.names[i] == bf.names[j])
                        reader.fail("duplicate candidate name '" + bf.names[i] + "'");
        } else if (key == "mode") {
            auto toks = split_ws(value);
            if (toks.size() != 2 || (toks[0] != "top-l" && toks[0] != "up-to-l"))
                reader.fail("mode must be 'top-l <k>' or 'up-to-l <k>'");
            int len = static_cast<int>(parse_int(toks[1], "mode length"));
            mode = toks[0] == "top-l" ? BallotMode::top_exactly(len) : BallotMode::up_to(len);
        } else if (key == "tiebreak") {
            tiebreak_names = split_ws(value);
        } else if (key == "absent") {
            bf.absent = parse_int(value, "absent");
        } else if (key == "target") {
            bf.target = value;
        } else if (key == "rule") {
            bf.rule_spec = value;
        } else if (key == "ballot") {
            auto xpos = value.find(" x ");
            if (xpos == std::string::npos) reader.fail("ballot line needs '<count> x <ranking>'");
            Count count = parse_int(trim(value.substr(0, xpos)), "ballot count");
            if (count <= 0) reader.fail("ballot count must be positive");
            if (bf.names.empty()) reader.fail("ballot line before candidates line");
            Ranking r;
            for (const auto& name : split_on(value.substr(xpos + 3), '>')) {
                if (name.empty()) reader.fail("empty candidate name in ranking");
                r.push_back(bf.index_of(name));
            }
            ballots.emplace_back(std::move(r), count);
        } else {
            reader.fail("unknown key '" + key + "'");
        }
    }
    if (bf.names.empty()) throw ParseError("missing candidates line");
    if (!mode) throw ParseError("missing mode line");

    try {
        bf.profile = make_profile(*mode, static_cast<int>(bf.names.size()), ballots);
        if (tiebreak_names) {
            std::vector<Cand> order;
            for (const auto& n : *tiebreak_names) order.push_back(bf.index_of(n));
            bf.tiebreak = TieBreakOrder::from_priority(std::move(order));
        } else {
            bf.tiebreak = TieBreakOrder::lexicographic(static_cast<int>(bf.names.size()));
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return bf;
}

BallotFile parse_ballot_file_text(const std::string& text) {
    std::istringstream iss(text);
    return parse_ballot_file(iss);
}

std::string format_ballot_line(const std::vector<std::string>& names, const Ranking& r,
                               Count count) {
    std::string line = "ballot: " + std::to_string(count) + " x ";
    for (size_t i = 0; i < r.size(); ++i) {
        if (i) line += " > ";
        line += names[r[i]];
    }
    return line;
}

std::string print_ballot_file(const BallotFile& bf) {
    std::ostringstream out;
    out << "candidates:";
    for (const auto& n : bf.names) out << ' ' << n;
    out << '\n';
    out << "mode: " << to_string(bf.profile.mode) << '\n';
    out << "tiebreak:";
    for (Cand c : bf.tiebreak.priority) out << ' ' << bf.names[c];
    out << '\n';
    if (bf.absent) out << "absent: " << *bf.absent << '\n';
    if (bf.target) out << "target: " << *bf.target << '\n';
    if (bf.rule_spec) out << "rule: " << *bf.rule_spec << '\n';
    for (const auto& e : bf.profile.entries)
        out << format_ballot_line(bf.names, e.ranking, e.count) << '\n';
    return out.str();
}

Rxc3Instance parse_rxc3_file(std::istream& in) {
    LineReader reader{in};
    Rxc3Instance inst;
    std::string key, value;
    while (reader.next(key, value)) {
        if (key == "q") {
            inst.q = static_cast<int>(parse_int(value, "q"));
        } else if (key == "set") {
            std::vector<int> s;
            for (const auto& tok : split_ws(value))
                s.push_back(static_cast<int>(parse_int(tok, "set element")));
            inst.sets.push_back(std::move(s));
        } else {
            reader.fail("unknown key '" + key + "'");
        }
    }
    if (auto err = validate_rxc3(inst)) throw ParseError("invalid instance: " + *err);
    return inst;
}

Rxc3Instance parse_rxc3_file_text(const std::string& text) {
    std::istringstream iss(text);
    return parse_rxc3_file(iss);
}

std::string print_rxc3_file(const Rxc3Instance& inst) {
    std::ostringstream out;
    out << "q: " << inst.q << '\n';
    for (const auto& s : inst.sets) {
        out << "set:";
        for (int x : s) out << ' ' << x;
        out << '\n';
    }
    return out.str();
}

std::string print_roles_file(const ReductionOutput& red) {
    std::ostringstream out;
    out << "family: " << red.family << '\n';
    out << "l: " << red.l << '\n';
    if (red.family == "copeland")
        out << "alpha: " << red.alpha.num << '/' << red.alpha.den << '\n';
    for (size_t i = 0; i < red.roles.size(); ++i)
        out << "role: " << red.roles[i] << '\n';
    return out.str();
}

RolesFile parse_roles_file(std::istream& in) {
    LineReader reader{in};
    RolesFile rf;
    std::string key, value;
    while (reader.next(key, value)) {
        if (key == "family") {
            rf.family = value;
        } else if (key == "l") {
            rf.l = static_cast<int>(parse_int(value, "l"));
        } else if (key == "alpha") {
            auto parts = split_on(value, '/');
            if (parts.size() == 2)
                rf.alpha = Alpha::of(parse_int(parts[0], "alpha"), parse_int(parts[1], "alpha"));
            else
                rf.alpha = Alpha::of(parse_int(value, "alpha"), 1);
        } else if (key == "role") {
            rf.roles.push_back(value);
        } else {
            reader.fail("unknown key '" + key + "'");
        }
    }
    if (rf.family.empty()) throw ParseError("missing family line");
    return rf;
}

RolesFile parse_roles_file_text(const std::string& text) {
    std::istringstream iss(text);
    return parse_roles_file(iss);
}

Rule parse_rule_spec(const std::string& spec) {
    auto parts = split_on(spec, ':');
    const std::string& head = parts[0];
    if (head == "stv") {
        if (parts.size() != 1) throw ParseError("stv takes no parameters");
        return Rule::stv();
    }
    if (head == "maximin") {
        if (parts.size() != 1) throw ParseError("maximin takes no parameters");
        return Rule::maximin();
    }
    if (head == "copeland") {
        if (parts.size() != 2) throw ParseError("copeland needs an alpha, e.g. copeland:1/2");
        const std::string& a = parts[1];
        try {
            auto slash = a.find('/');
            if (slash != std::string::npos)
                return Rule::copeland(Alpha::of(parse_int(a.substr(0, slash), "alpha"),
                                                parse_int(a.substr(slash + 1), "alpha")));
            auto dot = a.find('.');
            if (dot != std::string::npos) {
                std::string frac = a.substr(dot + 1);
                long long den = 1;
                for (size_t i = 0; i < frac.size(); ++i) den *= 10;
                long long whole = dot == 0 ? 0 : parse_int(a.substr(0, dot), "alpha");
                long long num = frac.empty() ? 0 : parse_int(frac, "alpha");
                return Rule::copeland(Alpha::of(whole * den + num, den));
            }
            return Rule::copeland(Alpha::of(parse_int(a, "alpha"), 1));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    if (head == "score") {
        if (parts.size() < 2 || parts.size() > 3)
            throw ParseError("score needs a vector, e.g. score:8,2,1:up");
        ScoringVector vec;
        for (const auto& tok : split_on(parts[1], ','))
            vec.push_back(parse_int(tok, "scoring vector entry"));
        Rounding r = Rounding::TopExact;
        if (parts.size() == 3) {
            if (parts[2] == "up")
                r = Rounding::Up;
            else if (parts[2] == "down")
                r = Rounding::Down;
            else
                throw ParseError("rounding must be 'up' or 'down'");
        }
        try {
            return Rule::scoring(std::move(vec), r);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("unknown rule '" + head + "'");
}

BallotFile reduction_ballot_file(const ReductionOutput& red) {
    BallotFile bf;
    bf.names = red.roles;
    bf.profile = red.instance.known;
    bf.tiebreak = red.instance.tb;
    bf.absent = red.instance.t;
    bf.target = red.roles[red.instance.target];
    bf.rule_spec = to_string(red.instance.rule);
    return bf;
}

}  // namespace wav
