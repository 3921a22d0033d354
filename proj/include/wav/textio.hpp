// Text formats: ballot files, exact-cover instance files, and the role /
// bookkeeping sidecar emitted next to generated instances. Grammars are
// documented in docs/formats.md; printing is byte-deterministic and
// parse(print(x)) == x.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "wav/reductions.hpp"

namespace wav {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A profile plus the name table and the optional WAV fields a ballot file may
// carry. The tie-break order defaults to the candidate listing order.
struct BallotFile {
    std::vector<std::string> names;
    Profile profile;
    TieBreakOrder tiebreak;
    std::optional<long long> absent;
    std::optional<std::string> target;
    std::optional<std::string> rule_spec;

    Cand index_of(const std::string& name) const;
};

BallotFile parse_ballot_file(std::istream& in);
BallotFile parse_ballot_file_text(const std::string& text);
std::string print_ballot_file(const BallotFile& bf);

// One ballot line, used for witness output: "ballot: <count> x a > b".
std::string format_ballot_line(const std::vector<std::string>& names, const Ranking& r,
                               Count count);

Rxc3Instance parse_rxc3_file(std::istream& in);
Rxc3Instance parse_rxc3_file_text(const std::string& text);
std::string print_rxc3_file(const Rxc3Instance& inst);

// Sidecar with the reduction family, parameters, role map and bookkeeping.
// Together with the source instance it reconstructs the full expectation set
// for verification.
struct RolesFile {
    std::string family;
    int l = 2;
    Alpha alpha{0, 1};
    std::vector<std::string> roles;
};

std::string print_roles_file(const ReductionOutput& red);
RolesFile parse_roles_file(std::istream& in);
RolesFile parse_roles_file_text(const std::string& text);

// "stv", "maximin", "copeland:<alpha>" or "score:v1,...,vk[:up|:down]".
// Alpha accepts integers, fractions ("1/2") and decimals ("0.5").
Rule parse_rule_spec(const std::string& spec);

// Ballot-file view of a generated reduction: candidate names are the roles,
// and the absent count, target and rule are recorded in the file.
BallotFile reduction_ballot_file(const ReductionOutput& red);

}  // namespace wav
