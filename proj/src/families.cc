#include "ptk/families.hh"

#include <numeric>

#include "ptk/errors.hh"
#include "ptk/structure.hh"

namespace ptk {

namespace {

std::vector<Letter> indexed_letters(std::size_t i) {
    std::vector<Letter> out;
    for (std::size_t j = 0; j <= i; ++j) out.push_back("a" + std::to_string(j));
    return out;
}

std::string letter_a(std::size_t j) { return "a" + std::to_string(j); }

} // namespace

Automaton gen_ai(std::size_t i) {
    AutomatonBuilder b(indexed_letters(i));
    for (std::size_t l = 0; l <= i; ++l) b.add_state(std::to_string(l), true, l == 0);
    for (std::size_t l = 1; l <= i; ++l) {
        const auto from = std::to_string(l);
        for (std::size_t j = 0; j < l; ++j) {
            b.add_transition(from, letter_a(j), from);
            b.add_transition(from, letter_a(l), std::to_string(j));
        }
    }
    return b.build();
}

Automaton gen_bi(std::size_t i) {
    AutomatonBuilder b(indexed_letters(i));
    auto name = [](long j) { return std::to_string(j); };
    const auto n = static_cast<long>(i);
    for (long j = n; j >= 1; --j) b.add_state(name(-j), false, true);
    b.add_state("0", true, true);
    for (long j = 1; j <= n; ++j) b.add_state(name(j), true, false);
    for (long j = -n; j <= n; ++j) {
        for (long l = 0; l < std::labs(j); ++l) b.add_transition(name(j), letter_a(l), name(j));
    }
    for (long l = 1; l <= n; ++l) {
        for (long j = 0; j < l; ++j) {
            b.add_transition(name(l), letter_a(l), name(j));
            b.add_transition(name(-j), letter_a(l), name(-l));
        }
    }
    return b.build();
}

Word gen_wi(std::size_t i) {
    Word w{letter_a(0)};
    for (std::size_t l = 1; l <= i; ++l) {
        Word next = w;
        next.push_back(letter_a(l));
        next.insert(next.end(), w.begin(), w.end());
        w = std::move(next);
    }
    return w;
}

Automaton gen_cycle_nfa(std::size_t i) {
    if (i == 0) throw PreconditionError("the cycle family needs i >= 1");
    AutomatonBuilder b({"a"});
    b.add_state("0", true, false);
    for (std::size_t p = 1; p <= i; ++p) b.add_state(std::to_string(p), false, p == i);
    for (std::size_t p = 1; p <= i; ++p) b.add_state(std::to_string(p) + "'", false, false);
    for (std::size_t p = 0; p < i; ++p) {
        b.add_transition(std::to_string(p), "a", std::to_string(p + 1));
        b.add_transition(p == 0 ? std::string("0") : std::to_string(p) + "'", "a", std::to_string(p + 1) + "'");
    }
    b.add_transition(std::to_string(i), "a", "0");
    const auto last = std::to_string(i) + "'";
    b.add_transition(last, "a", "0");
    b.add_transition(last, "a", last);
    return b.build();
}

Dfa gen_cycle_min_dfa(std::size_t i) {
    if (i == 0) throw PreconditionError("the cycle family needs i >= 1");
    AutomatonBuilder b({"a"});
    const auto top = 2 * i + 1;
    for (std::size_t p = 0; p <= top; ++p) b.add_state(std::to_string(p), p == 0, p == i || p == top);
    for (std::size_t p = 0; p < top; ++p) b.add_transition(std::to_string(p), "a", std::to_string(p + 1));
    b.add_transition(std::to_string(top), "a", std::to_string(top));
    return Dfa(b.build());
}

Automaton gen_fig1() {
    return Automaton({"0", "1", "2"}, {"a", "b"}, {"0"}, {"1"},
                     {{"0", "a", "0"}, {"0", "a", "1"}, {"0", "b", "0"}, {"1", "a", "1"}, {"1", "b", "2"},
                      {"2", "a", "2"}, {"2", "b", "2"}});
}

Automaton gen_example_l() {
    return Automaton({"0", "1", "2"}, {"a", "b", "c"}, {"0"}, {"1", "2"},
                     {{"0", "a", "1"}, {"1", "b", "1"}, {"0", "c", "2"}, {"2", "a", "2"}, {"2", "b", "2"}});
}

Dfa all_letters_language_nfa(const std::vector<Letter>& sigma) {
    if (sigma.empty()) throw PreconditionError("the all-letters language needs a nonempty alphabet");
    if (sigma.size() > 10) throw ResourceError("the all-letters automaton is limited to 10 letters");
    AutomatonBuilder b(sigma);
    const auto m = b.alphabet().size();
    const std::size_t full = (std::size_t{1} << m) - 1;
    auto name = [m](std::size_t mask) {
        std::string s = "q";
        for (std::size_t x = 0; x < m; ++x) s += ((mask >> x) & 1U) != 0 ? '1' : '0';
        return s;
    };
    for (std::size_t mask = 0; mask <= full; ++mask) b.add_state(name(mask), mask == 0, mask == full);
    for (std::size_t mask = 0; mask <= full; ++mask)
        for (std::size_t x = 0; x < m; ++x)
            b.add_transition(static_cast<StateId>(mask), static_cast<LetterId>(x),
                             static_cast<StateId>(mask | (std::size_t{1} << x)));
    return Dfa(b.build());
}

// Formulas --------------------------------------------------------------------------

void CnfFormula::validate() const {
    if (num_vars == 0) throw InputError("a CNF formula needs at least one variable");
    for (std::size_t c = 0; c < clauses.size(); ++c) {
        for (auto lit : clauses[c]) {
            if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > num_vars)
                throw InputError("clause " + std::to_string(c + 1) + ": literal " + std::to_string(lit) +
                                 " is out of range");
            for (auto other : clauses[c])
                if (other == -lit)
                    throw InputError("clause " + std::to_string(c + 1) + " contains both x" +
                                     std::to_string(std::abs(lit)) + " and its negation");
        }
    }
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
    for (const auto& clause : clauses) {
        bool sat = false;
        for (auto lit : clause) {
            bool value = assignment[static_cast<std::size_t>(std::abs(lit)) - 1];
            if ((lit > 0) == value) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

bool CnfFormula::satisfiable() const {
    if (num_vars > 24) throw ResourceError("exhaustive satisfiability is limited to 24 variables");
    std::vector<bool> assignment(num_vars);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << num_vars); ++bits) {
        for (std::size_t v = 0; v < num_vars; ++v) assignment[v] = ((bits >> v) & 1U) != 0;
        if (satisfied_by(assignment)) return true;
    }
    return false;
}

void ThreeCnfFormula::validate() const {
    CnfFormula::validate();
    for (std::size_t c = 0; c < clauses.size(); ++c) {
        const auto& clause = clauses[c];
        if (clause.size() != 3) throw InputError("clause " + std::to_string(c + 1) + " does not have 3 literals");
        for (std::size_t x = 0; x < 3; ++x)
            for (std::size_t y = x + 1; y < 3; ++y)
                if (std::abs(clause[x]) == std::abs(clause[y]))
                    throw InputError("clause " + std::to_string(c + 1) + " repeats variable x" +
                                     std::to_string(std::abs(clause[x])));
    }
}

// Reductions --------------------------------------------------------------------------

Automaton cnf_to_ptnfa(const CnfFormula& phi) {
    phi.validate();
    const auto n = phi.num_vars;
    const auto m = phi.clauses.size();
    AutomatonBuilder b({"0", "1"});
    auto q = [](std::size_t i, std::size_t l) { return "q" + std::to_string(i) + "_" + std::to_string(l); };
    auto alpha = [](std::size_t l) { return "al" + std::to_string(l); };
    auto r = [](std::size_t l) { return "r" + std::to_string(l); };

    b.add_state("0", true, true);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t l = 1; l <= n; ++l) b.add_state(q(i, l), false, l == n);
    for (std::size_t l = 1; l <= n + 1; ++l) b.add_state(alpha(l), false, l != n);
    for (std::size_t l = 1; l <= n; ++l) b.add_state(r(l), false, false);

    // β_{i,j}: the letters x_j may take in an assignment falsifying clause i.
    for (std::size_t i = 1; i <= m; ++i) {
        const auto& clause = phi.clauses[i - 1];
        for (std::size_t j = 1; j <= n; ++j) {
            const auto from = j == 1 ? std::string("0") : q(i, j - 1);
            bool pos = false;
            bool neg = false;
            for (auto lit : clause) {
                if (lit == static_cast<int>(j)) pos = true;
                if (lit == -static_cast<int>(j)) neg = true;
            }
            if (!pos) b.add_transition(from, "1", q(i, j));
            if (!neg) b.add_transition(from, "0", q(i, j));
        }
    }
    for (const char* x : {"0", "1"}) {
        for (std::size_t l = 0; l <= n; ++l) b.add_transition(l == 0 ? std::string("0") : alpha(l), x, alpha(l + 1));
        b.add_transition(alpha(n + 1), x, alpha(n + 1));
        for (std::size_t l = 1; l < n; ++l) b.add_transition(r(l), x, r(l + 1));
        b.add_transition(r(n), x, alpha(n + 1));
    }
    // Route every missing transition to r1.
    auto partial = b.build();
    for (StateId s = 0; s < partial.num_states(); ++s)
        for (LetterId x = 0; x < 2; ++x)
            if (partial.successors(s, x).empty()) b.add_transition(s, x, b.state_id(r(1)));
    return b.build();
}

namespace {

void require_ptnfa(const Automaton& m, const char* what) {
    if (!is_ptnfa(m).verdict) throw PreconditionError(std::string(what) + " requires a ptNFA");
}

AutomatonBuilder lifted_copy(const Automaton& m, const Letter& fresh) {
    validate_letter(fresh);
    if (m.has_letter(fresh)) throw InputError("letter \"" + fresh + "\" already belongs to the alphabet");
    auto letters = m.alphabet();
    letters.push_back(fresh);
    AutomatonBuilder b(letters);
    for (StateId s = 0; s < m.num_states(); ++s) b.add_state(m.state_name(s), false, m.is_accepting(s));
    for (const auto& t : m.transitions()) b.add_transition(t.from, t.letter, t.to);
    for (const auto& s : m.state_names()) b.add_transition(s, fresh, s);
    return b;
}

std::string fresh_state(const AutomatonBuilder& b, std::string name) {
    if (b.has_state(name)) throw InputError("state name \"" + name + "\" is already taken");
    return name;
}

} // namespace

Automaton lift_k(const Automaton& m, const Letter& fresh) {
    require_ptnfa(m, "lift_k");
    auto b = lifted_copy(m, fresh);
    m.initial().for_each([&](StateId i) {
        const auto& target = m.state_name(i);
        auto id = b.add_state(fresh_state(b, target + "'"), true, false);
        for (const auto& x : m.alphabet()) b.add_transition(id, b.letter_id(x), id);
        b.add_transition(id, b.letter_id(fresh), b.state_id(target));
    });
    return b.build();
}

Automaton lift_k_fixed(const Automaton& m, std::size_t k, const Letter& fresh) {
    require_ptnfa(m, "lift_k_fixed");
    if (k == 0) throw PreconditionError("lift_k_fixed needs k >= 1");
    auto b = lifted_copy(m, fresh);
    m.initial().for_each([&](StateId i) {
        const auto& target = m.state_name(i);
        std::vector<StateId> chain;
        for (std::size_t l = 1; l <= k; ++l) {
            auto id = b.add_state(fresh_state(b, target + "'" + std::to_string(l)), l == 1, false);
            for (const auto& x : m.alphabet()) b.add_transition(id, b.letter_id(x), id);
            chain.push_back(id);
        }
        for (std::size_t l = 0; l + 1 < k; ++l) b.add_transition(chain[l], b.letter_id(fresh), chain[l + 1]);
        b.add_transition(chain.back(), b.letter_id(fresh), b.state_id(target));
    });
    return b.build();
}

std::uint64_t crt_offset(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& constraints) {
    std::uint64_t z = 0;
    std::uint64_t modulus = 1;
    for (std::size_t c = 0; c < constraints.size(); ++c) {
        const auto [p, r] = constraints[c];
        if (p == 0) throw InputError("constraint " + std::to_string(c + 1) + ": modulus must be positive");
        if (r >= p) throw InputError("constraint " + std::to_string(c + 1) + ": residue out of range");
        if (std::gcd(p, modulus) != 1)
            throw InputError("constraint " + std::to_string(c + 1) + ": modulus is not coprime to the others");
        if (modulus > UINT64_MAX / p) throw ResourceError("modulus product overflows 64 bits");
        // Step z by the current modulus until the new congruence holds.
        while (z % p != r) z += modulus;
        modulus *= p;
    }
    return z;
}

Automaton cnf3_to_unary_nfa(const ThreeCnfFormula& phi, std::size_t var_cap) {
    static constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7};
    phi.validate();
    if (var_cap > std::size(kPrimes)) throw PreconditionError("the prime table covers at most 4 variables");
    if (phi.num_vars > var_cap)
        throw ResourceError("the unary reduction is capped at " + std::to_string(var_cap) + " variables");
    AutomatonBuilder b({"0"});
    // One cycle of length `length` whose position `accept` is accepting.
    auto add_cycle = [&b](const std::string& prefix, std::uint64_t length, auto accepting) {
        std::vector<StateId> ids;
        for (std::uint64_t j = 0; j < length; ++j)
            ids.push_back(b.add_state(prefix + std::to_string(j), j == 0, accepting(j)));
        for (std::uint64_t j = 0; j < length; ++j) b.add_transition(ids[j], 0, ids[(j + 1) % length]);
    };
    for (std::size_t v = 0; v < phi.num_vars; ++v)
        add_cycle("e" + std::to_string(v + 1) + "_", kPrimes[v], [](std::uint64_t j) { return j >= 2; });
    for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> cons;
        std::uint64_t length = 1;
        for (auto lit : phi.clauses[c]) {
            auto p = kPrimes[std::abs(lit) - 1];
            cons.emplace_back(p, lit > 0 ? 0 : 1);
            length *= p;
        }
        const auto z = crt_offset(cons);
        add_cycle("c" + std::to_string(c + 1) + "_", length, [z](std::uint64_t j) { return j == z; });
    }
    return b.build();
}

} // namespace ptk
