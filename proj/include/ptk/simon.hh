#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ptk/automaton.hh"
#include "ptk/operations.hh"
#include "ptk/verdict.hh"

namespace ptk {

/// Shortlex order: shorter words first, then lexicographic by symbol.
bool shortlex_less(const Word& u, const Word& v);

/// sub_k(w): all subsequences of w of length at most k, in shortlex order.
struct SubkSet {
    std::size_t k = 0;
    std::vector<Word> words;

    [[nodiscard]] bool contains(const Word& u) const;
    friend bool operator==(const SubkSet&, const SubkSet&) = default;
};

/// u ≼ w (greedy left-to-right embedding).
bool is_subsequence(const Word& u, const Word& w);
SubkSet sub_k(const Word& w, std::size_t k);
bool sim_k_equivalent(const Word& u, const Word& v, std::size_t k);
/// sub_k(w·a) computed from sub_k(w).
SubkSet canonical_step(const SubkSet& s, const Letter& a);

/// The canonical ~_k automaton over an alphabet of `num_letters` letters,
/// with states encoded as bitsets over the shortlex index of every word of
/// length ≤ k. States are produced on demand.
class CanonicalAutomaton {
public:
    using State = std::vector<std::uint64_t>;

    /// ResourceError if the index space exceeds `max_bits`.
    CanonicalAutomaton(std::size_t num_letters, std::size_t k, std::size_t max_bits = std::size_t{1} << 22);

    [[nodiscard]] std::size_t k() const { return k_; }
    [[nodiscard]] std::size_t num_words() const { return num_words_; }
    /// sub_k(ε) = {ε}.
    [[nodiscard]] State initial() const;
    [[nodiscard]] State step(const State& s, LetterId a) const;
    /// Decodes a state into explicit words using the given letter names.
    [[nodiscard]] SubkSet decode(const State& s, const std::vector<Letter>& alphabet) const;

private:
    std::size_t num_letters_;
    std::size_t k_;
    std::size_t num_words_ = 0;
    std::size_t blocks_ = 0;
    std::size_t last_level_start_ = 0;  // first index of the words of length k
};

struct StateHash {
    std::size_t operator()(const CanonicalAutomaton::State& s) const noexcept;
};

/// Decides whether L(a) is k-piecewise testable; negative answers carry a
/// KptCounterexample. Raises ResourceError beyond `budget` product states.
Verdict decide_k_pt(const Automaton& a, std::size_t k, std::size_t budget = kDefaultProductBudget);
/// Same, on an already minimal DFA.
Verdict decide_k_pt_minimal(const Dfa& minimal, std::size_t k, std::size_t budget = kDefaultProductBudget);
std::optional<KptCounterexample> counterexample_pair(const Automaton& a, std::size_t k,
                                                     std::size_t budget = kDefaultProductBudget);

struct MinKOptions {
    /// Stop searching above this k.
    std::optional<std::size_t> max_k;
    /// Use the depth of `a` as an additional cap when `a` is a ptNFA.
    bool use_ptnfa_depth = true;
    std::size_t budget = kDefaultProductBudget;
};

struct MinKResult {
    bool piecewise_testable = false;
    /// Least k; absent if not PT or if it exceeds max_k.
    std::optional<std::size_t> k;
    /// Structural upper bound used as the search cap.
    std::size_t upper_bound = 0;
    bool bound_from_ptnfa = false;
};

MinKResult min_k_search(const Automaton& a, const MinKOptions& options = {});
/// Least k such that L(a) is k-PT, or nothing for non-PT languages.
std::optional<std::size_t> min_k(const Automaton& a);

/// C(k+n, k) − 1; ResourceError on 64-bit overflow.
std::uint64_t binomial_depth_bound(std::uint64_t k, std::uint64_t n);
/// ceil(((k+2c−1)/c)^c); PreconditionError for c = 0, ResourceError on overflow.
std::uint64_t fixed_alphabet_rep_bound(std::uint64_t k, std::uint64_t c);

// Unary alphabets --------------------------------------------------------------

/// k-PT for unary ptNFAs: compares a^l with a^k for k ≤ l ≤ depth.
Verdict unary_decide_k_pt(const Automaton& a, std::size_t k);
/// a^z ∈ L(a) by repeated squaring of the boolean transition matrix.
bool unary_membership_power(const Automaton& a, std::uint64_t z);
/// Piecewise testability of a unary language via the ρ-shaped subset chain.
Verdict unary_is_pt(const Automaton& a, std::size_t budget = kDefaultProductBudget);

} // namespace ptk
