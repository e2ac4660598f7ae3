#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ptk/automaton.hh"
#include "ptk/verdict.hh"

namespace ptk {

inline constexpr std::size_t kDefaultDepthBudget = 20;
inline constexpr std::size_t kDefaultProductBudget = 1'000'000;

// Membership -----------------------------------------------------------------

/// S·w. Unknown letters raise InputError.
StateSet step(const Automaton& a, const StateSet& s, const Word& w);
StateSet step(const Automaton& a, const StateSet& s, const IndexWord& w);
/// Name-level convenience: names of S·w for S given by state names.
std::vector<std::string> step(const Automaton& a, const std::vector<std::string>& s, const Word& w);

bool accepts(const Automaton& a, const Word& w);
bool accepts(const Automaton& a, const IndexWord& w);

// Completion and rational operations ----------------------------------------

bool is_complete(const Automaton& a);
/// Adds a non-accepting sink named `sink` when `a` is incomplete; returns `a`
/// unchanged otherwise. A clash with an existing state name is an InputError.
Automaton complete(const Automaton& a, const std::string& sink = "s");

Automaton reverse(const Automaton& a);
Automaton concat_automata(const Automaton& a, const Automaton& b);
Automaton union_automata(const Automaton& a, const Automaton& b);
/// Self-loops on every letter of `bigger` ∖ alphabet at every state.
Automaton inverse_projection(const Automaton& a, const std::vector<Letter>& bigger);
/// Intersection of the inverse projections onto the union alphabet.
Automaton parallel_compose(std::span<const Automaton> parts, std::size_t budget = kDefaultProductBudget);
/// Copy of `a` over alphabet ∪ `extra` (new letters carry no transitions).
Automaton extend_alphabet(const Automaton& a, const std::vector<Letter>& extra);

// Determinization and minimization -------------------------------------------

struct SubsetConstruction {
    Dfa dfa;
    /// subsets[q] is the set of NFA states represented by DFA state q.
    std::vector<StateSet> subsets;
};

/// Accessible subset construction in breadth-first order over sorted
/// letters; states are named "0", "1", ... in discovery order. The empty
/// subset is included when reachable, so the result is total.
SubsetConstruction subset_construction(const Automaton& a, std::size_t budget = kDefaultProductBudget);
Dfa determinize(const Automaton& a, std::size_t budget = kDefaultProductBudget);
/// Minimal total DFA (dead state kept), canonically numbered.
Dfa minimize(const Dfa& d);
/// minimize(determinize(a)), skipping determinization for DFAs.
Dfa minimal_dfa(const Automaton& a, std::size_t budget = kDefaultProductBudget);
bool is_minimal(const Dfa& d);

// Language comparisons ---------------------------------------------------------

/// Witness: a shortest (then lexicographically least) word in the symmetric difference.
Verdict equivalent(const Automaton& a, const Automaton& b, std::size_t budget = kDefaultProductBudget);
/// Witness on a negative answer: a shortest accepted word.
Verdict is_empty_language(const Automaton& a);
/// Witness on a negative answer: a shortest rejected word.
Verdict is_universal(const Automaton& a, std::size_t budget = kDefaultProductBudget);

// Order structure ----------------------------------------------------------------

/// Strongly connected components in reverse topological order.
std::vector<std::vector<StateId>> strongly_connected_components(const Automaton& a);
/// Witness: a nontrivial component as a CycleWitness.
Verdict is_partially_ordered(const Automaton& a);
/// Transitions on the longest simple path from an initial state.
/// Cyclic automata with more than `budget` states raise ResourceError.
std::size_t depth(const Automaton& a, std::size_t budget = kDefaultDepthBudget);
/// States reachable from `from` (including the members of `from`).
StateSet reachable_from(const Automaton& a, const StateSet& from);
Automaton sub_automaton(const Automaton& a, const std::string& state);

} // namespace ptk
