#ifndef SCLAB_IO_HPP
#define SCLAB_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"

#include "sclab/automata.hpp"
#include "sclab/complexity.hpp"

namespace sclab::io {

// Automaton documents:
//
//   {"alphabet": ["a", "b"], "states": 2, "initial": 0, "finals": [1],
//    "transitions": {"a": [1, 0], "b": [0, 1]}}
//
// Entry i of transitions[s] is the successor of state i on s. An NFA uses
// "initials" instead of "initial" and arrays of successors as entries.

nlohmann::ordered_json to_json(const Dfa& d);
nlohmann::ordered_json to_json(const Nfa& n);

/// Throws InvalidArgument on schema violations.
Dfa dfa_from_json(const nlohmann::json& doc);
Nfa nfa_from_json(const nlohmann::json& doc);

/// True if the document has the NFA shape ("initials" present).
bool is_nfa_document(const nlohmann::json& doc);

/// Parses text and throws InvalidArgument on malformed JSON.
nlohmann::json parse_document(std::string_view text);

/// One record with every report field. Integers are decimal strings where
/// they may exceed 64 bits. Elapsed time is included only on request so
/// that repeated runs produce identical output.
nlohmann::ordered_json to_json(const VerificationReport& r, bool with_timing = false);

inline constexpr std::string_view report_csv_header =
    "m,n,p,op,computed,predicted,bound_only,status";
std::string to_csv_row(const VerificationReport& r);

std::string_view status_of(const VerificationReport& r);

} // namespace sclab::io

#endif
