#pragma once

// Test-side reference implementations. They work from the transition
// triples and from definitions only, and share no code paths with the
// library algorithms they check.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ptk/automaton.hh"
#include "ptk/families.hh"

namespace oracle {

using ptk::Automaton;
using ptk::Letter;
using ptk::Word;

/// Set of state names reached from the initial states, by naive relation walking.
std::set<std::string> reach_names(const Automaton& a, const Word& w);
bool accepts(const Automaton& a, const Word& w);

/// All words over `sigma` of length exactly / at most n, in shortlex order.
std::vector<Word> words_of_length(const std::vector<Letter>& sigma, std::size_t n);
std::vector<Word> words_up_to(const std::vector<Letter>& sigma, std::size_t n);

/// u ≼ w by backtracking over embeddings.
bool embeds(const Word& u, const Word& w);
/// sub_k(w) as the set of candidate words u (|u| ≤ k, over alp(w)) with u ≼ w.
std::set<Word> sub_k(const Word& w, std::size_t k);
bool sim_k(const Word& u, const Word& v, std::size_t k);

/// Congruence oracle: L(a) is k-PT iff no two ~_k-equivalent words differ on
/// membership. Explores pairs (sub_k(w), I·w) breadth-first over words w;
/// every pair is computed from a representative word by the definitions.
/// Returns a clashing word pair when one exists.
struct CongruenceResult {
    bool k_pt = true;
    std::optional<std::pair<Word, Word>> clash;
    std::size_t explored = 0;
};
CongruenceResult congruence_check(const Automaton& a, std::size_t k, std::size_t max_pairs = 2'000'000);

/// Literal check over all words of length at most n: true iff no pair of
/// words up to that length is ~_k-equivalent with different membership.
bool no_short_clash(const Automaton& a, std::size_t k, std::size_t n);

/// L(a) = L(b) on all words up to length n.
bool agree_up_to(const Automaton& a, const Automaton& b, std::size_t n);

/// Brute-force satisfiability.
bool satisfiable(std::size_t num_vars, const std::vector<std::vector<int>>& clauses);

/// Longest simple path from an initial state, by exhaustive DFS.
std::size_t depth(const Automaton& a);

/// Unique-maximal reading of UMS: p is the only state of its weak component
/// in G(A, Σ(p)) without outgoing edges other than self-loops.
bool ums_unique_maximal(const Automaton& a);

/// Nontrivial strongly connected component exists (Floyd–Warshall closure).
bool has_cycle(const Automaton& a);

// Generators ------------------------------------------------------------------------

using Rng = std::mt19937_64;

std::vector<Letter> letters(std::size_t n);
/// Random NFA: every (state, letter) gets each target with probability `density`.
Automaton random_nfa(Rng& rng, std::size_t states, std::size_t num_letters, double density = 0.3);
/// Random partially ordered complete NFA (transitions to higher states or a
/// self-loop p·x = {p}); candidates are resampled until they are ptNFAs.
Automaton random_ptnfa(Rng& rng, std::size_t states, std::size_t num_letters);
/// Random total DFA.
Automaton random_dfa(Rng& rng, std::size_t states, std::size_t num_letters);
ptk::CnfFormula random_cnf(Rng& rng, std::size_t max_vars, std::size_t max_clauses);

} // namespace oracle
