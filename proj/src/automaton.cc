#include "ptk/automaton.hh"

#include <algorithm>
#include <cctype>
#include <set>

#include "ptk/errors.hh"

namespace ptk {

void validate_letter(std::string_view symbol) {
    if (symbol.empty()) throw InputError("letter symbols must be nonempty");
    for (char c : symbol) {
        if (std::isspace(static_cast<unsigned char>(c)) != 0 || c == ',')
            throw InputError("invalid letter symbol \"" + std::string(symbol) +
                             "\": whitespace and commas are not allowed");
    }
}

Automaton::Automaton(std::vector<std::string> states, std::vector<Letter> alphabet,
                     const std::vector<std::string>& initial, const std::vector<std::string>& accepting,
                     const std::vector<Transition>& transitions) {
    AutomatonBuilder b(std::move(alphabet));
    for (auto& s : states) b.add_state(std::move(s));
    for (const auto& s : initial) {
        if (!b.has_state(s)) throw InputError("initial state \"" + s + "\" is not a declared state");
        b.set_initial(b.state_id(s));
    }
    for (const auto& s : accepting) {
        if (!b.has_state(s)) throw InputError("accepting state \"" + s + "\" is not a declared state");
        b.set_accepting(b.state_id(s));
    }
    for (const auto& t : transitions) b.add_transition(t.from, t.letter, t.to);
    *this = b.build();
}

void Automaton::index_names() {
    state_index_.clear();
    letter_index_.clear();
    for (StateId q = 0; q < state_names_.size(); ++q) state_index_.emplace(state_names_[q], q);
    for (LetterId a = 0; a < letters_.size(); ++a) letter_index_.emplace(letters_[a], a);
}

bool Automaton::has_state(std::string_view name) const {
    return state_index_.find(std::string(name)) != state_index_.end();
}

bool Automaton::has_letter(std::string_view symbol) const {
    return letter_index_.find(std::string(symbol)) != letter_index_.end();
}

StateId Automaton::state_id(std::string_view name) const {
    auto it = state_index_.find(std::string(name));
    if (it == state_index_.end()) throw InputError("unknown state \"" + std::string(name) + "\"");
    return it->second;
}

LetterId Automaton::letter_id(std::string_view symbol) const {
    auto it = letter_index_.find(std::string(symbol));
    if (it == letter_index_.end()) throw InputError("unknown letter \"" + std::string(symbol) + "\"");
    return it->second;
}

StateSet Automaton::state_set(std::span<const std::string> names) const {
    StateSet s(num_states());
    for (const auto& n : names) s.insert(state_id(n));
    return s;
}

IndexWord Automaton::index_word(const Word& w) const {
    IndexWord out;
    out.reserve(w.size());
    for (const auto& x : w) out.push_back(letter_id(x));
    return out;
}

Word Automaton::word_of(const IndexWord& w) const {
    Word out;
    out.reserve(w.size());
    for (auto a : w) out.push_back(letters_[a]);
    return out;
}

std::vector<std::string> Automaton::names_of(const StateSet& s) const {
    std::vector<std::string> out;
    s.for_each([&](StateId q) { out.push_back(state_names_[q]); });
    return out;
}

StateSet Automaton::post(const StateSet& s, LetterId a) const {
    StateSet out(num_states());
    s.for_each([&](StateId q) { out |= successors(q, a); });
    return out;
}

std::vector<Transition> Automaton::transitions() const {
    std::vector<Transition> out;
    for (StateId q = 0; q < num_states(); ++q)
        for (LetterId a = 0; a < num_letters(); ++a)
            successors(q, a).for_each(
                [&](StateId r) { out.push_back({state_names_[q], letters_[a], state_names_[r]}); });
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Automaton::num_transitions() const {
    std::size_t n = 0;
    for (const auto& s : delta_) n += s.size();
    return n;
}

bool operator==(const Automaton& a, const Automaton& b) {
    if (a.num_states() != b.num_states() || a.letters_ != b.letters_) return false;
    auto sorted = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    return sorted(a.state_names_) == sorted(b.state_names_) &&
           sorted(a.names_of(a.initial_)) == sorted(b.names_of(b.initial_)) &&
           sorted(a.names_of(a.accepting_)) == sorted(b.names_of(b.accepting_)) &&
           a.transitions() == b.transitions();
}

AutomatonBuilder::AutomatonBuilder(std::vector<Letter> alphabet) : letters_(std::move(alphabet)) {
    for (const auto& x : letters_) validate_letter(x);
    std::sort(letters_.begin(), letters_.end());
    letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
    if (letters_.empty()) throw InputError("the alphabet must be nonempty");
    for (LetterId a = 0; a < letters_.size(); ++a) letter_index_.emplace(letters_[a], a);
}

StateId AutomatonBuilder::add_state(std::string name, bool initial, bool accepting) {
    if (name.empty()) throw InputError("state names must be nonempty");
    if (state_index_.count(name) != 0) throw InputError("duplicate state name \"" + name + "\"");
    auto id = static_cast<StateId>(names_.size());
    state_index_.emplace(name, id);
    names_.push_back(std::move(name));
    initial_.push_back(initial);
    accepting_.push_back(accepting);
    return id;
}

void AutomatonBuilder::add_transition(StateId from, LetterId letter, StateId to) {
    edges_.push_back({from, letter, to});
}

void AutomatonBuilder::add_transition(std::string_view from, std::string_view letter, std::string_view to) {
    auto describe = [&] {
        return "transition [\"" + std::string(from) + "\", \"" + std::string(letter) + "\", \"" +
               std::string(to) + "\"]";
    };
    if (!has_state(from)) throw InputError(describe() + ": unknown state \"" + std::string(from) + "\"");
    if (!has_state(to)) throw InputError(describe() + ": unknown state \"" + std::string(to) + "\"");
    auto it = letter_index_.find(std::string(letter));
    if (it == letter_index_.end())
        throw InputError(describe() + ": unknown letter \"" + std::string(letter) + "\"");
    add_transition(state_id(from), it->second, state_id(to));
}

void AutomatonBuilder::set_initial(StateId q, bool value) { initial_[q] = value; }
void AutomatonBuilder::set_accepting(StateId q, bool value) { accepting_[q] = value; }

bool AutomatonBuilder::has_state(std::string_view name) const {
    return state_index_.find(std::string(name)) != state_index_.end();
}

StateId AutomatonBuilder::state_id(std::string_view name) const {
    auto it = state_index_.find(std::string(name));
    if (it == state_index_.end()) throw InputError("unknown state \"" + std::string(name) + "\"");
    return it->second;
}

LetterId AutomatonBuilder::letter_id(std::string_view symbol) const {
    auto it = letter_index_.find(std::string(symbol));
    if (it == letter_index_.end()) throw InputError("unknown letter \"" + std::string(symbol) + "\"");
    return it->second;
}

Automaton AutomatonBuilder::build() const {
    if (names_.empty()) throw InputError("an automaton needs at least one state");
    Automaton a;
    a.state_names_ = names_;
    a.letters_ = letters_;
    const auto n = names_.size();
    a.initial_ = StateSet(n);
    a.accepting_ = StateSet(n);
    for (StateId q = 0; q < n; ++q) {
        if (initial_[q]) a.initial_.insert(q);
        if (accepting_[q]) a.accepting_.insert(q);
    }
    a.delta_.assign(n * letters_.size(), StateSet(n));
    for (const auto& e : edges_) a.delta_[static_cast<std::size_t>(e.from) * letters_.size() + e.letter].insert(e.to);
    a.index_names();
    return a;
}

bool Dfa::is_deterministic_total(const Automaton& a) {
    if (a.initial().size() != 1) return false;
    for (StateId q = 0; q < a.num_states(); ++q)
        for (LetterId x = 0; x < a.num_letters(); ++x)
            if (a.successors(q, x).size() != 1) return false;
    return true;
}

Dfa::Dfa(Automaton a) : Automaton(std::move(a)) {
    if (initial().size() != 1) throw PreconditionError("a DFA needs exactly one initial state");
    initial_state_ = initial().front();
    table_.resize(num_states() * num_letters());
    for (StateId q = 0; q < num_states(); ++q) {
        for (LetterId x = 0; x < num_letters(); ++x) {
            const auto& s = successors(q, x);
            if (s.size() != 1)
                throw PreconditionError("not a total DFA: state \"" + state_name(q) + "\" has " +
                                        std::to_string(s.size()) + " successors under \"" + letter_name(x) +
                                        "\"");
            table_[static_cast<std::size_t>(q) * num_letters() + x] = s.front();
        }
    }
}

} // namespace ptk
