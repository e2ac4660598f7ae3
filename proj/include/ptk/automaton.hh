#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ptk/state_set.hh"

namespace ptk {

using Letter = std::string;
/// A word is a sequence of letter symbols; the empty vector is the empty word.
using Word = std::vector<Letter>;
/// Index-level word over the letter ids of one automaton.
using IndexWord = std::vector<LetterId>;

struct Transition {
    std::string from;
    Letter letter;
    std::string to;

    friend bool operator==(const Transition&, const Transition&) = default;
    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Throws InputError unless `symbol` is a valid letter (nonempty, no whitespace, no comma).
void validate_letter(std::string_view symbol);

/// Epsilon-free NFA over named states and letters.
///
/// States keep their declaration order and are addressed by dense ids;
/// letters are kept sorted by symbol so that letter id order equals the
/// lexicographic order of symbols. Instances are immutable; use
/// AutomatonBuilder to construct one.
class Automaton {
public:
    /// Name-level constructor. Validates referential integrity and throws
    /// InputError naming the offending item.
    Automaton(std::vector<std::string> states, std::vector<Letter> alphabet,
              const std::vector<std::string>& initial, const std::vector<std::string>& accepting,
              const std::vector<Transition>& transitions);

    [[nodiscard]] std::size_t num_states() const { return state_names_.size(); }
    [[nodiscard]] std::size_t num_letters() const { return letters_.size(); }

    [[nodiscard]] const std::vector<std::string>& state_names() const { return state_names_; }
    [[nodiscard]] const std::string& state_name(StateId q) const { return state_names_[q]; }
    [[nodiscard]] const std::vector<Letter>& alphabet() const { return letters_; }
    [[nodiscard]] const Letter& letter_name(LetterId a) const { return letters_[a]; }

    [[nodiscard]] bool has_state(std::string_view name) const;
    [[nodiscard]] bool has_letter(std::string_view symbol) const;
    /// Throws InputError for unknown names.
    [[nodiscard]] StateId state_id(std::string_view name) const;
    [[nodiscard]] LetterId letter_id(std::string_view symbol) const;
    [[nodiscard]] StateSet state_set(std::span<const std::string> names) const;
    [[nodiscard]] IndexWord index_word(const Word& w) const;
    [[nodiscard]] Word word_of(const IndexWord& w) const;
    /// Names of the members, in state id order.
    [[nodiscard]] std::vector<std::string> names_of(const StateSet& s) const;

    [[nodiscard]] const StateSet& initial() const { return initial_; }
    [[nodiscard]] const StateSet& accepting() const { return accepting_; }
    [[nodiscard]] bool is_accepting(StateId q) const { return accepting_.contains(q); }

    /// Successor set q·a.
    [[nodiscard]] const StateSet& successors(StateId q, LetterId a) const {
        return delta_[static_cast<std::size_t>(q) * letters_.size() + a];
    }
    /// S·a.
    [[nodiscard]] StateSet post(const StateSet& s, LetterId a) const;
    [[nodiscard]] StateSet empty_set() const { return StateSet(num_states()); }

    /// All transitions as name triples, sorted.
    [[nodiscard]] std::vector<Transition> transitions() const;
    [[nodiscard]] std::size_t num_transitions() const;

    /// Structural equality up to state and transition ordering.
    friend bool operator==(const Automaton& a, const Automaton& b);

private:
    friend class AutomatonBuilder;
    Automaton() = default;
    void index_names();

    std::vector<std::string> state_names_;
    std::vector<Letter> letters_;
    std::unordered_map<std::string, StateId> state_index_;
    std::unordered_map<std::string, LetterId> letter_index_;
    StateSet initial_;
    StateSet accepting_;
    std::vector<StateSet> delta_;
};

/// Incremental, index-based construction of an Automaton.
class AutomatonBuilder {
public:
    /// The alphabet is sorted and deduplicated; every symbol is validated.
    explicit AutomatonBuilder(std::vector<Letter> alphabet);

    StateId add_state(std::string name, bool initial = false, bool accepting = false);
    void add_transition(StateId from, LetterId letter, StateId to);
    void add_transition(std::string_view from, std::string_view letter, std::string_view to);
    void set_initial(StateId q, bool value = true);
    void set_accepting(StateId q, bool value = true);

    [[nodiscard]] bool has_state(std::string_view name) const;
    [[nodiscard]] StateId state_id(std::string_view name) const;
    [[nodiscard]] LetterId letter_id(std::string_view symbol) const;
    [[nodiscard]] const std::vector<Letter>& alphabet() const { return letters_; }
    [[nodiscard]] std::size_t num_states() const { return names_.size(); }

    /// Throws InputError if there are no states.
    [[nodiscard]] Automaton build() const;

private:
    std::vector<Letter> letters_;
    std::unordered_map<std::string, LetterId> letter_index_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, StateId> state_index_;
    std::vector<bool> initial_;
    std::vector<bool> accepting_;
    struct Edge {
        StateId from;
        LetterId letter;
        StateId to;
    };
    std::vector<Edge> edges_;
};

/// Deterministic, total automaton: one initial state and exactly one
/// successor per (state, letter).
class Dfa : public Automaton {
public:
    /// Throws PreconditionError if `a` is not deterministic and total.
    explicit Dfa(Automaton a);

    [[nodiscard]] StateId initial_state() const { return initial_state_; }
    [[nodiscard]] StateId next(StateId q, LetterId a) const {
        return table_[static_cast<std::size_t>(q) * num_letters() + a];
    }
    [[nodiscard]] StateId run(StateId q, const IndexWord& w) const {
        for (auto a : w) q = next(q, a);
        return q;
    }

    /// True iff `a` has one initial state and a single successor everywhere.
    static bool is_deterministic_total(const Automaton& a);

private:
    StateId initial_state_ = 0;
    std::vector<StateId> table_;
};

} // namespace ptk
