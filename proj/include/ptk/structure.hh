#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptk/automaton.hh"
#include "ptk/verdict.hh"

namespace ptk {

/// Σ(p): letters with a self-loop at p.
std::vector<Letter> self_loop_alphabet(const Automaton& a, const std::string& state);
std::vector<LetterId> self_loop_letters(const Automaton& a, StateId p);

/// Adjacency of G(A, Γ): out[p] lists the q (ascending) with q ∈ p·x for some x ∈ Γ.
struct LetterGraph {
    std::vector<std::vector<StateId>> out;

    [[nodiscard]] bool has_edge(StateId p, StateId q) const;
    [[nodiscard]] std::size_t num_edges() const;
};

LetterGraph letter_graph(const Automaton& a, const std::vector<Letter>& gamma);
LetterGraph letter_graph(const Automaton& a, const std::vector<LetterId>& gamma);

struct UmsOptions {
    /// Only inspect states reachable from an initial state.
    bool reachable_only = false;
};

/// UMS property. Requires a partially ordered automaton (PreconditionError
/// otherwise). Negative answers carry every violation as witness.
Verdict has_ums_property(const Automaton& a, UmsOptions options = {});
/// All UMS violations; empty iff the property holds.
std::vector<UmsViolation> ums_violations(const Automaton& a, UmsOptions options = {});

/// Confluence of a total DFA (PreconditionError on other input).
Verdict is_confluent_dfa(const Automaton& d);

struct PtReport {
    bool partially_ordered = false;
    bool complete = false;
    /// Only evaluated when the automaton is partially ordered.
    std::optional<bool> ums;
    bool verdict = false;
    std::optional<CycleWitness> cycle;
    std::vector<UmsViolation> violations;
};

PtReport is_ptnfa(const Automaton& a);

/// Piecewise testability of the language of a DFA, decided on its minimal
/// DFA by both partial-order+confluence and partial-order+UMS; the two
/// must agree or InvariantError is raised.
Verdict is_piecewise_testable_dfa(const Dfa& d);
/// ptNFA fast path, else the DFA decision on the minimal DFA.
Verdict is_piecewise_testable_nfa(const Automaton& a);
/// A ptNFA for L(a): its minimal total DFA. DomainError if L(a) is not PT.
Automaton ptnfa_witness(const Automaton& a);

/// 1-PT test for minimal DFAs: paa = pa and pab = pba.
/// PreconditionError on a non-minimal DFA.
Verdict is_one_pt_dfa(const Dfa& d);
/// The same identities on state sets of a complete NFA. Sufficient only:
/// negative answers are marked inconclusive.
Verdict one_pt_sufficient_nfa(const Automaton& a);
/// 2-PT test for minimal partially ordered confluent DFAs.
Verdict is_two_pt_dfa(const Dfa& d);
/// The 2-PT condition on the states of a ptNFA. Sufficient only.
Verdict two_pt_sufficient_nfa(const Automaton& a);

/// Depth-based upper bound on the least k, if a structural bound applies:
/// depth(a) for ptNFAs and for partially ordered confluent total DFAs.
std::optional<std::size_t> depth_upper_bound_k(const Automaton& a);

} // namespace ptk
