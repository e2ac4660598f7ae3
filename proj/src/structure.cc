#include "ptk/structure.hh"

#include <algorithm>
#include <deque>
#include <set>

#include "ptk/errors.hh"
#include "ptk/operations.hh"

namespace ptk {

std::vector<LetterId> self_loop_letters(const Automaton& a, StateId p) {
    std::vector<LetterId> out;
    for (LetterId x = 0; x < a.num_letters(); ++x)
        if (a.successors(p, x).contains(p)) out.push_back(x);
    return out;
}

std::vector<Letter> self_loop_alphabet(const Automaton& a, const std::string& state) {
    std::vector<Letter> out;
    for (auto x : self_loop_letters(a, a.state_id(state))) out.push_back(a.letter_name(x));
    return out;
}

bool LetterGraph::has_edge(StateId p, StateId q) const {
    return std::binary_search(out[p].begin(), out[p].end(), q);
}

std::size_t LetterGraph::num_edges() const {
    std::size_t n = 0;
    for (const auto& v : out) n += v.size();
    return n;
}

LetterGraph letter_graph(const Automaton& a, const std::vector<LetterId>& gamma) {
    LetterGraph g;
    g.out.resize(a.num_states());
    for (StateId p = 0; p < a.num_states(); ++p) {
        StateSet targets(a.num_states());
        for (auto x : gamma) targets |= a.successors(p, x);
        g.out[p] = targets.members();
    }
    return g;
}

LetterGraph letter_graph(const Automaton& a, const std::vector<Letter>& gamma) {
    std::vector<LetterId> ids;
    for (const auto& x : gamma) ids.push_back(a.letter_id(x));
    return letter_graph(a, ids);
}

namespace {

struct UmsCheck {
    bool holds = true;
    StateSet component;
    StateSet maximal;
};

UmsCheck check_ums_at(const Automaton& a, StateId p) {
    const auto n = a.num_states();
    UmsCheck result{true, StateSet(n), StateSet(n)};
    auto gamma = self_loop_letters(a, p);
    auto g = letter_graph(a, gamma);
    std::vector<std::vector<StateId>> in(n);
    for (StateId q = 0; q < n; ++q)
        for (auto r : g.out[q]) in[r].push_back(q);

    // Weak component of p.
    std::vector<StateId> work{p};
    result.component.insert(p);
    while (!work.empty()) {
        auto q = work.back();
        work.pop_back();
        auto visit = [&](StateId r) {
            if (!result.component.contains(r)) {
                result.component.insert(r);
                work.push_back(r);
            }
        };
        for (auto r : g.out[q]) visit(r);
        for (auto r : in[q]) visit(r);
    }
    // States reaching p inside the subgraph.
    StateSet reaches(n);
    reaches.insert(p);
    work = {p};
    while (!work.empty()) {
        auto q = work.back();
        work.pop_back();
        for (auto r : in[q])
            if (!reaches.contains(r)) {
                reaches.insert(r);
                work.push_back(r);
            }
    }
    result.holds = result.component.is_subset_of(reaches);
    result.component.for_each([&](StateId q) {
        bool maximal = std::all_of(g.out[q].begin(), g.out[q].end(), [&](StateId r) { return r == q; });
        if (maximal) result.maximal.insert(q);
    });
    if (n <= 64) {
        StateSet only_p(n);
        only_p.insert(p);
        if ((result.maximal == only_p) != result.holds)
            throw InvariantError("UMS reachability and unique-maximum formulations disagree at state \"" +
                                 a.state_name(p) + "\"");
    }
    return result;
}

void require_partial_order(const Automaton& a, const char* what) {
    if (!is_partially_ordered(a).answer)
        throw PreconditionError(std::string(what) + " is only defined for partially ordered automata");
}

Dfa require_total_dfa(const Automaton& a, const char* what) {
    if (!Dfa::is_deterministic_total(a)) throw PreconditionError(std::string(what) + " requires a total DFA");
    return Dfa(a);
}

} // namespace

std::vector<UmsViolation> ums_violations(const Automaton& a, UmsOptions options) {
    require_partial_order(a, "the UMS property");
    StateSet scope(a.num_states());
    if (options.reachable_only) {
        scope = reachable_from(a, a.initial());
    } else {
        for (StateId q = 0; q < a.num_states(); ++q) scope.insert(q);
    }
    std::vector<UmsViolation> out;
    scope.for_each([&](StateId p) {
        auto check = check_ums_at(a, p);
        if (!check.holds) out.push_back({a.state_name(p), a.names_of(check.component), a.names_of(check.maximal)});
    });
    return out;
}

Verdict has_ums_property(const Automaton& a, UmsOptions options) {
    auto v = ums_violations(a, options);
    if (v.empty()) return yes();
    return no(std::move(v));
}

Verdict is_confluent_dfa(const Automaton& automaton) {
    auto d = require_total_dfa(automaton, "confluence");
    const auto n = d.num_states();
    for (StateId q = 0; q < n; ++q) {
        for (LetterId x = 0; x < d.num_letters(); ++x) {
            for (LetterId y = x + 1; y < d.num_letters(); ++y) {
                std::set<std::pair<StateId, StateId>> seen;
                auto norm = [](StateId s, StateId t) { return std::make_pair(std::min(s, t), std::max(s, t)); };
                std::deque<std::pair<StateId, StateId>> queue{norm(d.next(q, x), d.next(q, y))};
                seen.insert(queue.front());
                bool joined = false;
                while (!queue.empty() && !joined) {
                    auto [s, t] = queue.front();
                    queue.pop_front();
                    if (s == t) {
                        joined = true;
                        break;
                    }
                    for (auto z : {x, y}) {
                        auto nxt = norm(d.next(s, z), d.next(t, z));
                        if (seen.insert(nxt).second) queue.push_back(nxt);
                    }
                }
                if (!joined) return no(ConfluenceFailure{d.state_name(q), d.letter_name(x), d.letter_name(y)});
            }
        }
    }
    return yes();
}

PtReport is_ptnfa(const Automaton& a) {
    PtReport r;
    auto po = is_partially_ordered(a);
    r.partially_ordered = po.answer;
    if (const auto* c = po.witness_as<CycleWitness>()) r.cycle = *c;
    r.complete = is_complete(a);
    if (r.partially_ordered) {
        r.violations = ums_violations(a);
        r.ums = r.violations.empty();
    }
    r.verdict = r.partially_ordered && r.complete && r.ums.value_or(false);
    return r;
}

Verdict is_piecewise_testable_dfa(const Dfa& d) {
    auto md = minimize(d);
    auto po = is_partially_ordered(md);
    auto confluent = is_confluent_dfa(md);
    bool ums = po.answer && ums_violations(md).empty();
    bool route_confluence = po.answer && confluent.answer;
    bool route_ums = po.answer && ums;
    if (route_confluence != route_ums)
        throw InvariantError("minimal DFA: confluence and UMS characterizations disagree");
    if (route_confluence) return yes();
    if (!po.answer) return po;
    return confluent;
}

Verdict is_piecewise_testable_nfa(const Automaton& a) {
    if (is_ptnfa(a).verdict) return yes();
    return is_piecewise_testable_dfa(minimal_dfa(a));
}

Automaton ptnfa_witness(const Automaton& a) {
    auto md = minimal_dfa(a);
    auto v = is_piecewise_testable_dfa(md);
    if (!v.answer) {
        std::string detail;
        if (const auto* c = v.witness_as<CycleWitness>()) {
            detail = " (its minimal DFA has a cycle through " + std::to_string(c->states.size()) + " states)";
        } else if (const auto* f = v.witness_as<ConfluenceFailure>()) {
            detail = " (its minimal DFA is not confluent at state " + f->state + " for letters " + f->first + ", " +
                     f->second + ")";
        }
        throw DomainError("the language is not piecewise testable" + detail);
    }
    return md;
}

Verdict is_one_pt_dfa(const Dfa& d) {
    if (!is_minimal(d)) throw PreconditionError("the 1-PT characterization requires a minimal DFA");
    for (StateId p = 0; p < d.num_states(); ++p) {
        for (LetterId x = 0; x < d.num_letters(); ++x) {
            auto px = d.next(p, x);
            if (d.next(px, x) != px) return no(IdentityFailure{"paa=pa", d.state_name(p), d.letter_name(x), {}});
            for (LetterId y = x + 1; y < d.num_letters(); ++y)
                if (d.next(px, y) != d.next(d.next(p, y), x))
                    return no(IdentityFailure{"pab=pba", d.state_name(p), d.letter_name(x), d.letter_name(y)});
        }
    }
    return yes();
}

Verdict one_pt_sufficient_nfa(const Automaton& a) {
    if (!is_complete(a)) throw PreconditionError("the sufficient 1-PT condition requires a complete automaton");
    for (StateId p = 0; p < a.num_states(); ++p) {
        StateSet single(a.num_states());
        single.insert(p);
        for (LetterId x = 0; x < a.num_letters(); ++x) {
            auto px = a.post(single, x);
            if (a.post(px, x) != px) {
                Verdict v = no(IdentityFailure{"paa=pa", a.state_name(p), a.letter_name(x), {}});
                v.conclusive = false;
                return v;
            }
            for (LetterId y = x + 1; y < a.num_letters(); ++y) {
                if (a.post(px, y) != a.post(a.post(single, y), x)) {
                    Verdict v = no(IdentityFailure{"pab=pba", a.state_name(p), a.letter_name(x), a.letter_name(y)});
                    v.conclusive = false;
                    return v;
                }
            }
        }
    }
    return yes();
}

namespace {

// States s with s ∈ I·w for some w containing `x` at least once.
StateSet reachable_after_letter(const Automaton& a, LetterId x) {
    auto reach = reachable_from(a, a.initial());
    auto after = a.post(reach, x);
    return reachable_from(a, after);
}

// Checks s·ba = s·aba for b ∈ Σ ∪ {ε} over every s in R_a.
Verdict two_pt_condition(const Automaton& a) {
    for (LetterId x = 0; x < a.num_letters(); ++x) {
        auto region = reachable_after_letter(a, x);
        std::optional<Verdict> failure;
        region.for_each([&](StateId s) {
            if (failure) return;
            StateSet single(a.num_states());
            single.insert(s);
            auto sx = a.post(single, x);
            if (sx != a.post(sx, x)) {
                failure = no(IdentityFailure{"sba=saba", a.state_name(s), a.letter_name(x), {}});
                return;
            }
            for (LetterId y = 0; y < a.num_letters(); ++y) {
                auto lhs = a.post(a.post(single, y), x);
                auto rhs = a.post(a.post(sx, y), x);
                if (lhs != rhs) {
                    failure = no(IdentityFailure{"sba=saba", a.state_name(s), a.letter_name(x), a.letter_name(y)});
                    return;
                }
            }
        });
        if (failure) return *failure;
    }
    return yes();
}

} // namespace

Verdict is_two_pt_dfa(const Dfa& d) {
    if (!is_minimal(d)) throw PreconditionError("the 2-PT characterization requires a minimal DFA");
    if (!is_partially_ordered(d).answer || !is_confluent_dfa(d).answer)
        throw PreconditionError("the 2-PT characterization requires a partially ordered confluent DFA");
    return two_pt_condition(d);
}

Verdict two_pt_sufficient_nfa(const Automaton& a) {
    if (!is_ptnfa(a).verdict) throw PreconditionError("the sufficient 2-PT condition requires a ptNFA");
    auto v = two_pt_condition(a);
    if (!v.answer) v.conclusive = false;
    return v;
}

std::optional<std::size_t> depth_upper_bound_k(const Automaton& a) {
    if (is_ptnfa(a).verdict) return depth(a);
    if (Dfa::is_deterministic_total(a) && is_partially_ordered(a).answer && is_confluent_dfa(a).answer)
        return depth(a);
    return std::nullopt;
}

} // namespace ptk
