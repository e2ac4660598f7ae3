#include "ptk/operations.hh"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

#include "ptk/errors.hh"

namespace ptk {

namespace {

std::vector<Letter> union_alphabet(const std::vector<Letter>& x, const std::vector<Letter>& y) {
    std::vector<Letter> out;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

// Copies the states of `a` into `b` with an optional name prefix; returns the id map.
std::vector<StateId> copy_states(const Automaton& a, AutomatonBuilder& b, const std::string& prefix) {
    std::vector<StateId> ids(a.num_states());
    for (StateId q = 0; q < a.num_states(); ++q) ids[q] = b.add_state(prefix + a.state_name(q));
    return ids;
}

void copy_transitions(const Automaton& a, AutomatonBuilder& b, const std::vector<StateId>& ids) {
    for (StateId q = 0; q < a.num_states(); ++q)
        for (LetterId x = 0; x < a.num_letters(); ++x) {
            auto bx = b.letter_id(a.letter_name(x));
            a.successors(q, x).for_each([&](StateId r) { b.add_transition(ids[q], bx, ids[r]); });
        }
}

// Breadth-first search over a DFA from the initial state; returns the
// shortest, then lexicographically least, word reaching a state satisfying `goal`.
std::optional<IndexWord> shortest_word_to(const Dfa& d, const std::function<bool(StateId)>& goal) {
    const auto n = d.num_states();
    std::vector<StateId> parent(n, 0);
    std::vector<LetterId> via(n, 0);
    std::vector<bool> seen(n, false);
    std::deque<StateId> queue{d.initial_state()};
    seen[d.initial_state()] = true;
    while (!queue.empty()) {
        auto q = queue.front();
        queue.pop_front();
        if (goal(q)) {
            IndexWord w;
            for (auto s = q; s != d.initial_state(); s = parent[s]) w.push_back(via[s]);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (LetterId x = 0; x < d.num_letters(); ++x) {
            auto r = d.next(q, x);
            if (!seen[r]) {
                seen[r] = true;
                parent[r] = q;
                via[r] = x;
                queue.push_back(r);
            }
        }
    }
    return std::nullopt;
}

} // namespace

StateSet step(const Automaton& a, const StateSet& s, const IndexWord& w) {
    StateSet cur = s;
    for (auto x : w) cur = a.post(cur, x);
    return cur;
}

StateSet step(const Automaton& a, const StateSet& s, const Word& w) {
    if (s.universe() != a.num_states()) throw InputError("state set does not belong to this automaton");
    return step(a, s, a.index_word(w));
}

std::vector<std::string> step(const Automaton& a, const std::vector<std::string>& s, const Word& w) {
    return a.names_of(step(a, a.state_set(s), w));
}

bool accepts(const Automaton& a, const IndexWord& w) { return step(a, a.initial(), w).intersects(a.accepting()); }

bool accepts(const Automaton& a, const Word& w) { return accepts(a, a.index_word(w)); }

bool is_complete(const Automaton& a) {
    for (StateId q = 0; q < a.num_states(); ++q)
        for (LetterId x = 0; x < a.num_letters(); ++x)
            if (a.successors(q, x).empty()) return false;
    return true;
}

Automaton complete(const Automaton& a, const std::string& sink) {
    if (is_complete(a)) return a;
    if (a.has_state(sink)) throw InputError("completion sink \"" + sink + "\" clashes with an existing state");
    AutomatonBuilder b(a.alphabet());
    auto ids = copy_states(a, b, "");
    for (StateId q = 0; q < a.num_states(); ++q) {
        b.set_initial(ids[q], a.initial().contains(q));
        b.set_accepting(ids[q], a.is_accepting(q));
    }
    copy_transitions(a, b, ids);
    auto s = b.add_state(sink);
    for (LetterId x = 0; x < a.num_letters(); ++x) {
        b.add_transition(s, x, s);
        for (StateId q = 0; q < a.num_states(); ++q)
            if (a.successors(q, x).empty()) b.add_transition(ids[q], x, s);
    }
    return b.build();
}

Automaton reverse(const Automaton& a) {
    AutomatonBuilder b(a.alphabet());
    auto ids = copy_states(a, b, "");
    for (StateId q = 0; q < a.num_states(); ++q) {
        b.set_initial(ids[q], a.is_accepting(q));
        b.set_accepting(ids[q], a.initial().contains(q));
        for (LetterId x = 0; x < a.num_letters(); ++x)
            a.successors(q, x).for_each([&](StateId r) { b.add_transition(ids[r], x, ids[q]); });
    }
    return b.build();
}

Automaton extend_alphabet(const Automaton& a, const std::vector<Letter>& extra) {
    AutomatonBuilder b(union_alphabet(a.alphabet(), [&] {
        auto e = extra;
        std::sort(e.begin(), e.end());
        return e;
    }()));
    auto ids = copy_states(a, b, "");
    for (StateId q = 0; q < a.num_states(); ++q) {
        b.set_initial(ids[q], a.initial().contains(q));
        b.set_accepting(ids[q], a.is_accepting(q));
    }
    copy_transitions(a, b, ids);
    return b.build();
}

Automaton concat_automata(const Automaton& a, const Automaton& b) {
    AutomatonBuilder out(union_alphabet(a.alphabet(), b.alphabet()));
    auto ia = copy_states(a, out, "1:");
    auto ib = copy_states(b, out, "2:");
    copy_transitions(a, out, ia);
    copy_transitions(b, out, ib);
    const bool b_has_epsilon = b.initial().intersects(b.accepting());
    for (StateId q = 0; q < a.num_states(); ++q) {
        out.set_initial(ia[q], a.initial().contains(q));
        out.set_accepting(ia[q], a.is_accepting(q) && b_has_epsilon);
    }
    for (StateId q = 0; q < b.num_states(); ++q) out.set_accepting(ib[q], b.is_accepting(q));
    // Accepting states of `a` also behave like the initial states of `b`.
    a.accepting().for_each([&](StateId f) {
        b.initial().for_each([&](StateId i) {
            for (LetterId x = 0; x < b.num_letters(); ++x) {
                auto ox = out.letter_id(b.letter_name(x));
                b.successors(i, x).for_each([&](StateId r) { out.add_transition(ia[f], ox, ib[r]); });
            }
        });
    });
    return out.build();
}

Automaton union_automata(const Automaton& a, const Automaton& b) {
    AutomatonBuilder out(union_alphabet(a.alphabet(), b.alphabet()));
    auto ia = copy_states(a, out, "1:");
    auto ib = copy_states(b, out, "2:");
    copy_transitions(a, out, ia);
    copy_transitions(b, out, ib);
    for (StateId q = 0; q < a.num_states(); ++q) {
        out.set_initial(ia[q], a.initial().contains(q));
        out.set_accepting(ia[q], a.is_accepting(q));
    }
    for (StateId q = 0; q < b.num_states(); ++q) {
        out.set_initial(ib[q], b.initial().contains(q));
        out.set_accepting(ib[q], b.is_accepting(q));
    }
    return out.build();
}

Automaton inverse_projection(const Automaton& a, const std::vector<Letter>& bigger) {
    for (const auto& x : a.alphabet())
        if (std::find(bigger.begin(), bigger.end(), x) == bigger.end())
            throw InputError("inverse projection: letter \"" + x + "\" is missing from the target alphabet");
    AutomatonBuilder b(bigger);
    auto ids = copy_states(a, b, "");
    for (StateId q = 0; q < a.num_states(); ++q) {
        b.set_initial(ids[q], a.initial().contains(q));
        b.set_accepting(ids[q], a.is_accepting(q));
    }
    copy_transitions(a, b, ids);
    for (const auto& x : b.alphabet()) {
        if (a.has_letter(x)) continue;
        auto bx = b.letter_id(x);
        for (StateId q = 0; q < a.num_states(); ++q) b.add_transition(ids[q], bx, ids[q]);
    }
    return b.build();
}

namespace {

// Accessible product (intersection) of two automata over the same alphabet.
Automaton intersect(const Automaton& x, const Automaton& y, std::size_t budget) {
    AutomatonBuilder b(x.alphabet());
    std::unordered_map<std::uint64_t, StateId> index;
    std::deque<std::pair<StateId, StateId>> queue;
    auto key = [](StateId p, StateId q) { return (std::uint64_t{p} << 32) | q; };
    auto visit = [&](StateId p, StateId q) {
        auto [it, fresh] = index.try_emplace(key(p, q), 0);
        if (fresh) {
            if (index.size() > budget) throw ResourceError("product automaton exceeds the state budget");
            it->second = b.add_state(x.state_name(p) + "|" + y.state_name(q));
            b.set_accepting(it->second, x.is_accepting(p) && y.is_accepting(q));
            queue.emplace_back(p, q);
        }
        return it->second;
    };
    x.initial().for_each([&](StateId p) {
        y.initial().for_each([&](StateId q) { b.set_initial(visit(p, q)); });
    });
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        auto from = index.at(key(p, q));
        for (LetterId a = 0; a < x.num_letters(); ++a) {
            x.successors(p, a).for_each([&](StateId p2) {
                y.successors(q, a).for_each([&](StateId q2) { b.add_transition(from, a, visit(p2, q2)); });
            });
        }
    }
    if (b.num_states() == 0) {
        // No initial pair: the intersection is empty.
        b.add_state("empty");
    }
    return b.build();
}

} // namespace

Automaton parallel_compose(std::span<const Automaton> parts, std::size_t budget) {
    if (parts.empty()) throw InputError("parallel composition needs at least one automaton");
    std::vector<Letter> sigma;
    for (const auto& p : parts) sigma = union_alphabet(sigma, p.alphabet());
    Automaton acc = inverse_projection(parts[0], sigma);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = intersect(acc, inverse_projection(parts[i], sigma), budget);
    return acc;
}

SubsetConstruction subset_construction(const Automaton& a, std::size_t budget) {
    std::vector<StateSet> subsets{a.initial()};
    std::unordered_map<StateSet, StateId> index{{a.initial(), 0}};
    std::vector<StateId> table;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (LetterId x = 0; x < a.num_letters(); ++x) {
            auto next = a.post(subsets[i], x);
            auto [it, fresh] = index.try_emplace(next, static_cast<StateId>(subsets.size()));
            if (fresh) {
                if (subsets.size() >= budget) throw ResourceError("subset construction exceeds the state budget");
                subsets.push_back(std::move(next));
            }
            table.push_back(it->second);
        }
    }
    AutomatonBuilder b(a.alphabet());
    for (std::size_t i = 0; i < subsets.size(); ++i)
        b.add_state(std::to_string(i), i == 0, subsets[i].intersects(a.accepting()));
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (LetterId x = 0; x < a.num_letters(); ++x)
            b.add_transition(static_cast<StateId>(i), x, table[i * a.num_letters() + x]);
    return {Dfa(b.build()), std::move(subsets)};
}

Dfa determinize(const Automaton& a, std::size_t budget) { return subset_construction(a, budget).dfa; }

Dfa minimize(const Dfa& d) {
    const auto n = d.num_states();
    const auto m = d.num_letters();
    // Reachable part.
    std::vector<bool> reach(n, false);
    std::vector<StateId> order{d.initial_state()};
    reach[d.initial_state()] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (LetterId x = 0; x < m; ++x) {
            auto r = d.next(order[i], x);
            if (!reach[r]) {
                reach[r] = true;
                order.push_back(r);
            }
        }
    // Moore refinement on the reachable states.
    std::vector<std::size_t> block(n, 0);
    for (auto q : order) block[q] = d.is_accepting(q) ? 1 : 0;
    std::size_t num_blocks = 0;
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> signatures;
        std::vector<std::size_t> next_block(n, 0);
        for (auto q : order) {
            std::vector<std::size_t> sig{block[q]};
            for (LetterId x = 0; x < m; ++x) sig.push_back(block[d.next(q, x)]);
            auto [it, fresh] = signatures.try_emplace(std::move(sig), signatures.size());
            next_block[q] = it->second;
        }
        block = std::move(next_block);
        if (signatures.size() == num_blocks) break;
        num_blocks = signatures.size();
    }
    // Canonical numbering: breadth-first from the initial block over sorted letters.
    std::vector<StateId> representative;  // canonical id -> original state
    std::vector<std::optional<StateId>> canon(num_blocks);
    canon[block[d.initial_state()]] = 0;
    representative.push_back(d.initial_state());
    for (std::size_t i = 0; i < representative.size(); ++i)
        for (LetterId x = 0; x < m; ++x) {
            auto r = d.next(representative[i], x);
            if (!canon[block[r]]) {
                canon[block[r]] = static_cast<StateId>(representative.size());
                representative.push_back(r);
            }
        }
    AutomatonBuilder b(d.alphabet());
    for (std::size_t i = 0; i < representative.size(); ++i)
        b.add_state(std::to_string(i), i == 0, d.is_accepting(representative[i]));
    for (std::size_t i = 0; i < representative.size(); ++i)
        for (LetterId x = 0; x < m; ++x)
            b.add_transition(static_cast<StateId>(i), x, *canon[block[d.next(representative[i], x)]]);
    return Dfa(b.build());
}

Dfa minimal_dfa(const Automaton& a, std::size_t budget) {
    if (Dfa::is_deterministic_total(a)) return minimize(Dfa(a));
    return minimize(determinize(a, budget));
}

bool is_minimal(const Dfa& d) { return minimize(d).num_states() == d.num_states(); }

Verdict equivalent(const Automaton& a, const Automaton& b, std::size_t budget) {
    auto da = determinize(extend_alphabet(a, b.alphabet()), budget);
    auto db = determinize(extend_alphabet(b, a.alphabet()), budget);
    const auto m = da.num_letters();
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, LetterId>> parent;
    auto key = [](StateId p, StateId q) { return (std::uint64_t{p} << 32) | q; };
    const auto start = key(da.initial_state(), db.initial_state());
    std::deque<std::uint64_t> queue{start};
    parent.emplace(start, std::make_pair(start, LetterId{0}));
    while (!queue.empty()) {
        auto k = queue.front();
        queue.pop_front();
        auto p = static_cast<StateId>(k >> 32);
        auto q = static_cast<StateId>(k & 0xffffffffU);
        if (da.is_accepting(p) != db.is_accepting(q)) {
            IndexWord w;
            for (auto s = k; s != start; s = parent.at(s).first) w.push_back(parent.at(s).second);
            std::reverse(w.begin(), w.end());
            return no(da.word_of(w));
        }
        for (LetterId x = 0; x < m; ++x) {
            auto nk = key(da.next(p, x), db.next(q, x));
            if (parent.try_emplace(nk, std::make_pair(k, x)).second) queue.push_back(nk);
        }
    }
    return yes();
}

Verdict is_empty_language(const Automaton& a) {
    const auto n = a.num_states();
    std::vector<std::optional<std::pair<StateId, LetterId>>> parent(n);
    std::vector<bool> seen(n, false);
    std::deque<StateId> queue;
    a.initial().for_each([&](StateId q) {
        seen[q] = true;
        queue.push_back(q);
    });
    while (!queue.empty()) {
        auto q = queue.front();
        queue.pop_front();
        if (a.is_accepting(q)) {
            IndexWord w;
            for (auto s = q; parent[s]; s = parent[s]->first) w.push_back(parent[s]->second);
            std::reverse(w.begin(), w.end());
            return no(a.word_of(w));
        }
        for (LetterId x = 0; x < a.num_letters(); ++x)
            a.successors(q, x).for_each([&](StateId r) {
                if (!seen[r]) {
                    seen[r] = true;
                    parent[r] = std::make_pair(q, x);
                    queue.push_back(r);
                }
            });
    }
    return yes();
}

Verdict is_universal(const Automaton& a, std::size_t budget) {
    auto d = determinize(a, budget);
    auto w = shortest_word_to(d, [&](StateId q) { return !d.is_accepting(q); });
    if (w) return no(d.word_of(*w));
    return yes();
}

std::vector<std::vector<StateId>> strongly_connected_components(const Automaton& a) {
    // Iterative Tarjan.
    const auto n = a.num_states();
    std::vector<std::vector<StateId>> succ(n);
    for (StateId q = 0; q < n; ++q) {
        StateSet all(n);
        for (LetterId x = 0; x < a.num_letters(); ++x) all |= a.successors(q, x);
        succ[q] = all.members();
    }
    constexpr auto kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<StateId> stack;
    std::vector<std::vector<StateId>> comps;
    std::size_t counter = 0;
    struct Frame {
        StateId q;
        std::size_t next;
    };
    for (StateId root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& f = frames.back();
            if (f.next < succ[f.q].size()) {
                auto r = succ[f.q][f.next++];
                if (index[r] == kUnvisited) {
                    index[r] = low[r] = counter++;
                    stack.push_back(r);
                    on_stack[r] = true;
                    frames.push_back({r, 0});
                } else if (on_stack[r]) {
                    low[f.q] = std::min(low[f.q], index[r]);
                }
                continue;
            }
            auto q = f.q;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().q] = std::min(low[frames.back().q], low[q]);
            if (low[q] == index[q]) {
                std::vector<StateId> comp;
                StateId s = 0;
                do {
                    s = stack.back();
                    stack.pop_back();
                    on_stack[s] = false;
                    comp.push_back(s);
                } while (s != q);
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
        }
    }
    return comps;
}

StateSet reachable_from(const Automaton& a, const StateSet& from) {
    StateSet seen = from;
    std::vector<StateId> work = from.members();
    while (!work.empty()) {
        auto q = work.back();
        work.pop_back();
        for (LetterId x = 0; x < a.num_letters(); ++x)
            a.successors(q, x).for_each([&](StateId r) {
                if (!seen.contains(r)) {
                    seen.insert(r);
                    work.push_back(r);
                }
            });
    }
    return seen;
}

Verdict is_partially_ordered(const Automaton& a) {
    auto comps = strongly_connected_components(a);
    // Report the nontrivial component that contains the smallest state id.
    const std::vector<StateId>* worst = nullptr;
    for (const auto& c : comps)
        if (c.size() > 1 && (worst == nullptr || c.front() < worst->front())) worst = &c;
    if (worst == nullptr) return yes();
    CycleWitness w;
    StateSet members(a.num_states());
    for (auto q : *worst) {
        w.states.push_back(a.state_name(q));
        members.insert(q);
    }
    // Shortest access word from the initial states, if the cycle is reachable.
    std::vector<std::optional<std::pair<StateId, LetterId>>> parent(a.num_states());
    std::vector<bool> seen(a.num_states(), false);
    std::deque<StateId> queue;
    a.initial().for_each([&](StateId q) {
        seen[q] = true;
        queue.push_back(q);
    });
    while (!queue.empty()) {
        auto q = queue.front();
        queue.pop_front();
        if (members.contains(q)) {
            IndexWord word;
            for (auto s = q; parent[s]; s = parent[s]->first) word.push_back(parent[s]->second);
            std::reverse(word.begin(), word.end());
            w.access = a.word_of(word);
            break;
        }
        for (LetterId x = 0; x < a.num_letters(); ++x)
            a.successors(q, x).for_each([&](StateId r) {
                if (!seen[r]) {
                    seen[r] = true;
                    parent[r] = std::make_pair(q, x);
                    queue.push_back(r);
                }
            });
    }
    return no(std::move(w));
}

namespace {

std::size_t longest_simple_path(const std::vector<std::vector<StateId>>& succ, StateId q, std::vector<bool>& on_path) {
    std::size_t best = 0;
    on_path[q] = true;
    for (auto r : succ[q])
        if (!on_path[r]) best = std::max(best, 1 + longest_simple_path(succ, r, on_path));
    on_path[q] = false;
    return best;
}

} // namespace

std::size_t depth(const Automaton& a, std::size_t budget) {
    const auto n = a.num_states();
    std::vector<std::vector<StateId>> succ(n);
    for (StateId q = 0; q < n; ++q) {
        StateSet all(n);
        for (LetterId x = 0; x < a.num_letters(); ++x) all |= a.successors(q, x);
        all.erase(q);
        succ[q] = all.members();
    }
    auto comps = strongly_connected_components(a);
    const bool acyclic = std::all_of(comps.begin(), comps.end(), [](const auto& c) { return c.size() == 1; });
    std::size_t best = 0;
    if (acyclic) {
        // Tarjan emits components sinks first, which is a valid order for the DP.
        std::vector<std::size_t> longest(n, 0);
        for (const auto& c : comps) {
            auto q = c.front();
            for (auto r : succ[q]) longest[q] = std::max(longest[q], 1 + longest[r]);
        }
        a.initial().for_each([&](StateId q) { best = std::max(best, longest[q]); });
        return best;
    }
    if (n > budget)
        throw ResourceError("depth of a cyclic automaton with " + std::to_string(n) +
                            " states exceeds the exhaustive-search budget of " + std::to_string(budget));
    std::vector<bool> on_path(n, false);
    a.initial().for_each([&](StateId q) { best = std::max(best, longest_simple_path(succ, q, on_path)); });
    return best;
}

Automaton sub_automaton(const Automaton& a, const std::string& state) {
    auto p = a.state_id(state);
    StateSet start(a.num_states());
    start.insert(p);
    auto reach = reachable_from(a, start);
    AutomatonBuilder b(a.alphabet());
    std::vector<StateId> ids(a.num_states(), 0);
    reach.for_each([&](StateId q) { ids[q] = b.add_state(a.state_name(q), q == p, a.is_accepting(q)); });
    reach.for_each([&](StateId q) {
        for (LetterId x = 0; x < a.num_letters(); ++x)
            a.successors(q, x).for_each([&](StateId r) { b.add_transition(ids[q], x, ids[r]); });
    });
    return b.build();
}

} // namespace ptk
