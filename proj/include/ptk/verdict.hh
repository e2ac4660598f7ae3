#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ptk/automaton.hh"

namespace ptk {

/// A nontrivial strongly connected set of states; `access`, when present,
/// is a shortest word leading from an initial state into the set.
struct CycleWitness {
    std::vector<std::string> states;
    std::optional<Word> access;
};

/// State p fails UMS: `component` is the weak component of p in
/// G(A, Σ(p)) and `maximal_states` its maximal elements there.
struct UmsViolation {
    std::string state;
    std::vector<std::string> component;
    std::vector<std::string> maximal_states;
};

/// No word over {first, second} joins q·first and q·second.
struct ConfluenceFailure {
    std::string state;
    Letter first;
    Letter second;
};

/// A state and letters at which an identity such as paa = pa or pab = pba
/// fails. `second` is absent for single-letter identities and, for the
/// 2-PT condition, stands for b = ε.
struct IdentityFailure {
    std::string identity;
    std::string state;
    Letter first;
    std::optional<Letter> second;
};

/// u ~_k v with exactly one of u, v in the language.
struct KptCounterexample {
    Word u;
    Word v;
    std::size_t k = 0;
};

/// Unary partial-order violation: I·a^l1 = I·a^l3 ≠ I·a^l2, with the
/// acceptance of a^l2 differing from a^l1.
struct UnaryPattern {
    std::uint64_t l1 = 0;
    std::uint64_t l2 = 0;
    std::uint64_t l3 = 0;
};

using Witness = std::variant<Word, CycleWitness, std::vector<UmsViolation>, ConfluenceFailure, IdentityFailure,
                             KptCounterexample, UnaryPattern>;

/// Short tag naming the witness alternative ("word", "cycle", ...).
std::string_view witness_kind(const Witness& w);

struct Verdict {
    bool answer = false;
    std::optional<Witness> witness;
    /// False when a negative answer of a one-sided (sufficient) test carries
    /// no information about the property itself.
    bool conclusive = true;

    explicit operator bool() const { return answer; }

    template <typename T>
    [[nodiscard]] const T* witness_as() const {
        return witness ? std::get_if<T>(&*witness) : nullptr;
    }
};

inline Verdict yes() { return Verdict{true, std::nullopt, true}; }
inline Verdict no(Witness w) { return Verdict{false, std::move(w), true}; }

} // namespace ptk
