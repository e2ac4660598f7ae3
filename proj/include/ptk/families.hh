#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ptk/automaton.hh"

namespace ptk {

/// A_i over {a0..ai}: states 0..i, all initial, 0 accepting; ℓ·a_j = ℓ for
/// ℓ > j and ℓ·a_ℓ = {0..ℓ−1}. Incomplete; pair with complete().
Automaton gen_ai(std::size_t i);
/// B_i over {a0..ai}: states −i..i, initial 0..i, accepting 0,−1..−i.
Automaton gen_bi(std::size_t i);
/// w_0 = a0, w_ℓ = w_{ℓ−1} aℓ w_{ℓ−1}.
Word gen_wi(std::size_t i);

/// Two a-cycles of length i+1 through 0 (states 1..i and 1'..i'), a
/// self-loop at i', accepting {i}. Recognizes a^i + a^{2i+1}a*.
Automaton gen_cycle_nfa(std::size_t i);
/// The chain 0 → 1 → … → 2i+1 with a loop at 2i+1 and accepting {i, 2i+1}.
Dfa gen_cycle_min_dfa(std::size_t i);

Automaton gen_fig1();
/// ab* + c(a+b)* over {a,b,c}.
Automaton gen_example_l();
/// Words containing every letter of `sigma`; states are the seen subsets
/// ("q" plus a bit string in alphabet order). ResourceError above 10 letters.
Dfa all_letters_language_nfa(const std::vector<Letter>& sigma);

/// Clauses of nonzero literals over variables 1..num_vars.
struct CnfFormula {
    std::size_t num_vars = 0;
    std::vector<std::vector<int>> clauses;

    /// InputError on out-of-range literals or a clause with x and ¬x.
    void validate() const;
    [[nodiscard]] bool satisfied_by(const std::vector<bool>& assignment) const;
    /// Exhaustive search over all assignments.
    [[nodiscard]] bool satisfiable() const;
};

/// CNF with exactly three literals over distinct variables per clause.
struct ThreeCnfFormula : CnfFormula {
    void validate() const;
};

/// Binary ptNFA accepting L(β) ∪ {w : |w| ≠ n}, where β lists the
/// assignments falsifying some clause. Universal iff the formula is UNSAT.
Automaton cnf_to_ptnfa(const CnfFormula& phi);

/// Adds a fresh letter (default "z") with self-loops everywhere and a new
/// initial state i' per initial state i, looping on the old letters and
/// moving to i on the fresh letter. PreconditionError unless `m` is a ptNFA.
Automaton lift_k(const Automaton& m, const Letter& fresh = "z");
/// Prefixes every initial state with a chain of k new states read by the
/// fresh letter; the new states loop on the old letters.
Automaton lift_k_fixed(const Automaton& m, std::size_t k, const Letter& fresh = "z");

/// Least z ≥ 0 with z ≡ r (mod m) for every (m, r). InputError unless the
/// moduli are pairwise coprime and the residues lie in range.
std::uint64_t crt_offset(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& constraints);

inline constexpr std::size_t kDefaultUnaryVarCap = 4;

/// Unary NFA over {"0"} whose language is 0* iff the 3CNF formula is
/// unsatisfiable. Variable r is encoded by the r-th prime; ResourceError
/// if num_vars exceeds `var_cap` (at most 4).
Automaton cnf3_to_unary_nfa(const ThreeCnfFormula& phi, std::size_t var_cap = kDefaultUnaryVarCap);

} // namespace ptk
