#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ptk/automaton.hh"
#include "ptk/families.hh"

namespace ptk {

/// Parses an automaton document:
///   {"alphabet": [...], "states": [...], "initial": [...],
///    "accepting": [...], "transitions": [["q", "a", "r"], ...]}
/// Key order is irrelevant. Duplicate transition triples are dropped and
/// reported through `warnings` when given. Errors are InputError with the
/// line and column (syntax) or the field path (structure).
Automaton parse_automaton(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Canonical document: one list per line, every list sorted (integer state
/// names numerically and before other names), one transition per line.
std::string serialize_automaton(const Automaton& a);

/// Order used for state names in canonical output.
bool state_name_less(const std::string& x, const std::string& y);

/// Graphviz rendering of the transition graph.
std::string to_dot(const Automaton& a);

/// DIMACS CNF ("p cnf <vars> <clauses>", clauses terminated by 0).
CnfFormula parse_dimacs(std::string_view text);

/// Word syntax: letters separated by commas when some letter of the
/// alphabet has more than one character, contiguous characters otherwise.
/// The empty string is the empty word. Unknown letters raise InputError.
Word parse_word(std::string_view text, const std::vector<Letter>& alphabet);
std::string format_word(const Word& w, const std::vector<Letter>& alphabet);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace ptk
