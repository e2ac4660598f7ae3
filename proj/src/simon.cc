#include "ptk/simon.hh"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <unordered_map>

#include "ptk/errors.hh"
#include "ptk/structure.hh"

namespace ptk {

bool shortlex_less(const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    return u < v;
}

namespace {

struct ShortlexLess {
    bool operator()(const Word& u, const Word& v) const { return shortlex_less(u, v); }
};

using WordSet = std::set<Word, ShortlexLess>;

void extend_by(WordSet& set, const Letter& a, std::size_t k) {
    std::vector<Word> added;
    for (const auto& u : set) {
        if (u.size() >= k) continue;
        auto ua = u;
        ua.push_back(a);
        added.push_back(std::move(ua));
    }
    set.insert(added.begin(), added.end());
}

SubkSet to_subk(const WordSet& set, std::size_t k) { return SubkSet{k, std::vector<Word>(set.begin(), set.end())}; }

} // namespace

bool SubkSet::contains(const Word& u) const {
    return std::binary_search(words.begin(), words.end(), u, ShortlexLess{});
}

bool is_subsequence(const Word& u, const Word& w) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < w.size() && i < u.size(); ++j)
        if (w[j] == u[i]) ++i;
    return i == u.size();
}

SubkSet sub_k(const Word& w, std::size_t k) {
    WordSet set{Word{}};
    for (const auto& a : w) extend_by(set, a, k);
    return to_subk(set, k);
}

bool sim_k_equivalent(const Word& u, const Word& v, std::size_t k) { return sub_k(u, k) == sub_k(v, k); }

SubkSet canonical_step(const SubkSet& s, const Letter& a) {
    WordSet set(s.words.begin(), s.words.end());
    extend_by(set, a, s.k);
    return to_subk(set, s.k);
}

// Canonical automaton -----------------------------------------------------------

CanonicalAutomaton::CanonicalAutomaton(std::size_t num_letters, std::size_t k, std::size_t max_bits)
    : num_letters_(num_letters), k_(k) {
    if (num_letters == 0) throw PreconditionError("the canonical automaton needs a nonempty alphabet");
    std::size_t level = 1;
    num_words_ = 0;
    for (std::size_t l = 0; l <= k; ++l) {
        if (l == k) last_level_start_ = num_words_;
        num_words_ += level;
        if (num_words_ > max_bits)
            throw ResourceError("the canonical ~_" + std::to_string(k) + " automaton over " +
                                std::to_string(num_letters) + " letters is too large to index");
        if (l < k) level *= num_letters;
    }
    blocks_ = (num_words_ + 63) / 64;
}

CanonicalAutomaton::State CanonicalAutomaton::initial() const {
    State s(blocks_, 0);
    s[0] = 1;
    return s;
}

CanonicalAutomaton::State CanonicalAutomaton::step(const State& s, LetterId a) const {
    State out = s;
    // Walk the set words of length < k in index order; maintain the level.
    std::size_t level_start = 0;
    std::size_t level_size = 1;
    std::size_t next_start = 1;
    for (std::size_t b = 0; b < blocks_; ++b) {
        auto bits = s[b];
        while (bits != 0) {
            std::size_t idx = b * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            if (idx >= last_level_start_) return out;
            while (idx >= next_start) {
                level_start = next_start;
                level_size *= num_letters_;
                next_start = level_start + level_size;
            }
            std::size_t target = next_start + (idx - level_start) * num_letters_ + a;
            out[target >> 6] |= std::uint64_t{1} << (target & 63);
        }
    }
    return out;
}

SubkSet CanonicalAutomaton::decode(const State& s, const std::vector<Letter>& alphabet) const {
    SubkSet out{k_, {}};
    std::size_t level = 0;
    std::size_t level_start = 0;
    std::size_t level_size = 1;
    for (std::size_t idx = 0; idx < num_words_; ++idx) {
        while (idx >= level_start + level_size) {
            level_start += level_size;
            level_size *= num_letters_;
            ++level;
        }
        if (((s[idx >> 6] >> (idx & 63)) & 1U) == 0) continue;
        Word w(level);
        auto rank = idx - level_start;
        for (std::size_t i = level; i-- > 0;) {
            w[i] = alphabet[rank % num_letters_];
            rank /= num_letters_;
        }
        out.words.push_back(std::move(w));
    }
    return out;
}

std::size_t StateHash::operator()(const CanonicalAutomaton::State& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto b : s) {
        h ^= static_cast<std::size_t>(b) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// k-piecewise testability -------------------------------------------------------

namespace {

// Shortest, then lexicographically least, w with exactly one of p·w, q·w accepting.
IndexWord distinguishing_suffix(const Dfa& d, StateId p, StateId q) {
    auto key = [](StateId s, StateId t) { return (std::uint64_t{s} << 32) | t; };
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, LetterId>> parent;
    const auto start = key(p, q);
    parent.emplace(start, std::make_pair(start, LetterId{0}));
    std::deque<std::uint64_t> queue{start};
    while (!queue.empty()) {
        auto k = queue.front();
        queue.pop_front();
        auto s = static_cast<StateId>(k >> 32);
        auto t = static_cast<StateId>(k & 0xffffffffU);
        if (d.is_accepting(s) != d.is_accepting(t)) {
            IndexWord w;
            for (auto c = k; c != start; c = parent.at(c).first) w.push_back(parent.at(c).second);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (LetterId x = 0; x < d.num_letters(); ++x) {
            auto nk = key(d.next(s, x), d.next(t, x));
            if (parent.try_emplace(nk, std::make_pair(k, x)).second) queue.push_back(nk);
        }
    }
    throw InvariantError("distinct states of a minimal DFA are indistinguishable");
}

} // namespace

Verdict decide_k_pt_minimal(const Dfa& minimal, std::size_t k, std::size_t budget) {
    CanonicalAutomaton canon(minimal.num_letters(), k);
    struct Node {
        StateId dfa_state;
        std::size_t parent;
        LetterId letter;
    };
    std::vector<Node> nodes;
    std::vector<CanonicalAutomaton::State> states;
    std::unordered_map<CanonicalAutomaton::State, std::size_t, StateHash> index;

    auto path_to = [&](std::size_t i) {
        IndexWord w;
        for (; i != 0; i = nodes[i].parent) w.push_back(nodes[i].letter);
        std::reverse(w.begin(), w.end());
        return w;
    };

    states.push_back(canon.initial());
    nodes.push_back({minimal.initial_state(), 0, 0});
    index.emplace(states.front(), 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (LetterId x = 0; x < minimal.num_letters(); ++x) {
            auto next = canon.step(states[i], x);
            auto d = minimal.next(nodes[i].dfa_state, x);
            auto it = index.find(next);
            if (it == index.end()) {
                if (nodes.size() >= budget)
                    throw ResourceError("k-piecewise testability search exceeds the product budget of " +
                                        std::to_string(budget) + " states");
                index.emplace(next, nodes.size());
                states.push_back(std::move(next));
                nodes.push_back({d, i, x});
                continue;
            }
            if (nodes[it->second].dfa_state == d) continue;
            auto u = path_to(it->second);
            auto v = path_to(i);
            v.push_back(x);
            auto suffix = distinguishing_suffix(minimal, nodes[it->second].dfa_state, d);
            u.insert(u.end(), suffix.begin(), suffix.end());
            v.insert(v.end(), suffix.begin(), suffix.end());
            return no(KptCounterexample{minimal.word_of(u), minimal.word_of(v), k});
        }
    }
    return yes();
}

Verdict decide_k_pt(const Automaton& a, std::size_t k, std::size_t budget) {
    return decide_k_pt_minimal(minimal_dfa(a, budget), k, budget);
}

std::optional<KptCounterexample> counterexample_pair(const Automaton& a, std::size_t k, std::size_t budget) {
    auto v = decide_k_pt(a, k, budget);
    if (const auto* c = v.witness_as<KptCounterexample>()) return *c;
    return std::nullopt;
}

MinKResult min_k_search(const Automaton& a, const MinKOptions& options) {
    MinKResult result;
    auto minimal = minimal_dfa(a, options.budget);
    if (!is_piecewise_testable_dfa(minimal).answer) return result;
    result.piecewise_testable = true;
    result.upper_bound = depth(minimal);
    if (options.use_ptnfa_depth && is_ptnfa(a).verdict) {
        auto d = depth(a);
        if (d < result.upper_bound) {
            result.upper_bound = d;
            result.bound_from_ptnfa = true;
        }
    }
    for (std::size_t k = 0; k < result.upper_bound; ++k) {
        if (options.max_k && k > *options.max_k) return result;
        if (decide_k_pt_minimal(minimal, k, options.budget).answer) {
            result.k = k;
            return result;
        }
    }
    if (!options.max_k || result.upper_bound <= *options.max_k) result.k = result.upper_bound;
    return result;
}

std::optional<std::size_t> min_k(const Automaton& a) { return min_k_search(a).k; }

namespace {
__extension__ typedef unsigned __int128 u128;
} // namespace

std::uint64_t binomial_depth_bound(std::uint64_t k, std::uint64_t n) {
    // C(n+k, k) built up as C(n+i, i) for i = 1..k; each step stays integral.
    u128 c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * (n + i) / i;
        if (c > static_cast<u128>(UINT64_MAX))
            throw ResourceError("binomial depth bound overflows 64 bits");
    }
    return static_cast<std::uint64_t>(c) - 1;
}

std::uint64_t fixed_alphabet_rep_bound(std::uint64_t k, std::uint64_t c) {
    if (c == 0) throw PreconditionError("the alphabet size must be positive");
    u128 num = 1;
    u128 den = 1;
    const u128 limit = static_cast<u128>(1) << 100;
    for (std::uint64_t i = 0; i < c; ++i) {
        num *= (k + 2 * c - 1);
        den *= c;
        if (num > limit || den > limit) throw ResourceError("representative-length bound overflows");
    }
    auto q = (num + den - 1) / den;
    if (q > static_cast<u128>(UINT64_MAX)) throw ResourceError("representative-length bound overflows");
    return static_cast<std::uint64_t>(q);
}

// Unary alphabets -----------------------------------------------------------------

namespace {

void require_unary(const Automaton& a) {
    if (a.num_letters() != 1) throw PreconditionError("a unary alphabet is required");
}

} // namespace

Verdict unary_decide_k_pt(const Automaton& a, std::size_t k) {
    require_unary(a);
    if (!is_ptnfa(a).verdict) throw PreconditionError("unary k-PT decision requires a ptNFA");
    const auto d = depth(a);
    if (k >= d) return yes();
    auto current = a.initial();
    for (std::size_t i = 0; i < k; ++i) current = a.post(current, 0);
    const bool at_k = current.intersects(a.accepting());
    for (std::size_t l = k + 1; l <= d; ++l) {
        current = a.post(current, 0);
        if (current.intersects(a.accepting()) != at_k) {
            const auto& x = a.letter_name(0);
            return no(KptCounterexample{Word(k, x), Word(l, x), k});
        }
    }
    return yes();
}

bool unary_membership_power(const Automaton& a, std::uint64_t z) {
    require_unary(a);
    const auto n = a.num_states();
    using Matrix = std::vector<StateSet>;
    auto multiply = [n](const Matrix& x, const Matrix& y) {
        Matrix out(n, StateSet(n));
        for (std::size_t i = 0; i < n; ++i) x[i].for_each([&](StateId j) { out[i] |= y[j]; });
        return out;
    };
    Matrix power(n);
    for (StateId q = 0; q < n; ++q) power[q] = a.successors(q, 0);
    StateSet current = a.initial();
    while (z != 0) {
        if ((z & 1U) != 0) {
            StateSet next(n);
            current.for_each([&](StateId q) { next |= power[q]; });
            current = std::move(next);
        }
        z >>= 1U;
        if (z != 0) power = multiply(power, power);
    }
    return current.intersects(a.accepting());
}

Verdict unary_is_pt(const Automaton& a, std::size_t budget) {
    require_unary(a);
    std::vector<StateSet> chain{a.initial()};
    std::unordered_map<StateSet, std::size_t> seen{{a.initial(), 0}};
    std::size_t tail = 0;
    for (;;) {
        auto next = a.post(chain.back(), 0);
        auto it = seen.find(next);
        if (it != seen.end()) {
            tail = it->second;
            break;
        }
        if (chain.size() >= budget) throw ResourceError("unary subset chain exceeds the budget");
        seen.emplace(next, chain.size());
        chain.push_back(std::move(next));
    }
    const auto period = chain.size() - tail;
    const bool base = chain[tail].intersects(a.accepting());
    for (std::size_t j = tail + 1; j < chain.size(); ++j) {
        if (chain[j].intersects(a.accepting()) != base)
            return no(UnaryPattern{tail, j, tail + period});
    }
    return yes();
}

} // namespace ptk
