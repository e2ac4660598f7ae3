// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hh"
#include "ptk/errors.hh"
#include "ptk/families.hh"
#include "ptk/io.hh"
#include "ptk/operations.hh"
#include "ptk/simon.hh"
#include "ptk/structure.hh"

using namespace ptk;

namespace {

/// Collects failed expectations of one criterion.
struct Check {
    std::vector<std::string> failures;
    std::ostringstream notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

std::string str(std::size_t n) { return std::to_string(n); }

std::size_t pow2(std::size_t e) { return std::size_t{1} << e; }

Word letters_of(const std::string& s) {
    Word w;
    for (char c : s) w.emplace_back(1, c);
    return w;
}

Word prefix(const Word& w, std::size_t n) { return Word(w.begin(), w.begin() + static_cast<long>(n)); }

// 1 -------------------------------------------------------------------------------------
void criterion_ai(Check& c) {
    for (std::size_t i = 1; i <= 3; ++i) {
        const auto tag = "A_" + str(i) + ": ";
        auto a = complete(gen_ai(i), "s");
        c.expect(is_ptnfa(a).verdict, tag + "completion is not a ptNFA");
        c.expect(depth(a) == i + 1, tag + "depth " + str(depth(a)) + " != " + str(i + 1));
        c.expect(oracle::depth(a) == i + 1, tag + "oracle depth differs");
        auto k = min_k(a);
        c.expect(k == i + 1, tag + "minK " + (k ? str(*k) : "none") + " != " + str(i + 1));
        c.expect(!decide_k_pt(a, i).answer, tag + "reported i-PT");
        // At k = 4 over four letters the product exceeds the budget; depth already bounds k there.
        if (i < 3) c.expect(decide_k_pt(a, i + 1).answer, tag + "not (i+1)-PT");
        auto md_full = minimize(determinize(a));
        auto md_raw = minimize(determinize(gen_ai(i)));
        c.expect(depth(md_full) == pow2(i + 1) - 1,
                 tag + "minimal DFA depth " + str(depth(md_full)) + " != " + str(pow2(i + 1) - 1));
        c.expect(depth(md_raw) == pow2(i + 1) - 1, tag + "minimal DFA depth of the uncompleted NFA differs");
        c.notes << "A" << i << ": depth " << depth(a) << ", minK " << (k ? str(*k) : "-") << ", DFA depth "
                << depth(md_full) << "; ";
    }
}

// 2 -------------------------------------------------------------------------------------
void criterion_bi(Check& c) {
    for (std::size_t i = 1; i <= 2; ++i) {
        const auto tag = "B_" + str(i) + ": ";
        auto b = gen_bi(i);
        auto bc = complete(b, "s");
        c.expect(equivalent(b, reverse(b)).answer, tag + "L(B) != L(B)^R");
        c.expect(is_ptnfa(bc).verdict, tag + "completion is not a ptNFA");
        auto k = min_k(bc);
        c.expect(k == 2 * i + 1, tag + "minK " + (k ? str(*k) : "none") + " != " + str(2 * i + 1));
        // Lower bound by a concrete ~_{2i} pair: w'a0w'^R vs w'w'^R with w_i = w'a0.
        auto w = gen_wi(i);
        Word wp(w.begin(), w.end() - 1);
        Word wr(wp.rbegin(), wp.rend());
        Word u = wp;
        u.push_back("a0");
        u.insert(u.end(), wr.begin(), wr.end());
        Word v = wp;
        v.insert(v.end(), wr.begin(), wr.end());
        c.expect(oracle::sim_k(u, v, 2 * i), tag + "w'a0w'^R pair is not ~_2i-equivalent");
        c.expect(oracle::accepts(b, u) != oracle::accepts(b, v), tag + "w'a0w'^R pair does not split the language");
        auto md = minimal_dfa(b);
        c.expect(depth(md) >= pow2(i + 1) - 1, tag + "minimal DFA depth " + str(depth(md)) + " too small");
        c.expect(w.size() == pow2(i + 1) - 1, tag + "|w_i| wrong");
        for (std::size_t n = 0; n <= w.size(); ++n) {
            const bool expected = n % 2 == 0;
            const auto p = prefix(w, n);
            c.expect(accepts(b, p) == expected && oracle::accepts(b, p) == expected,
                     tag + "prefix of length " + str(n) + " has the wrong membership");
        }
        c.notes << "B" << i << ": minK " << (k ? str(*k) : "-") << ", DFA depth " << depth(md) << "; ";
    }
}

// 3 -------------------------------------------------------------------------------------
void criterion_cycles(Check& c) {
    for (std::size_t i = 1; i <= 4; ++i) {
        const auto tag = "cycle " + str(i) + ": ";
        auto a = gen_cycle_nfa(i);
        c.expect(depth(a) == i && oracle::depth(a) == i, tag + "depth " + str(depth(a)) + " != " + str(i));
        auto k = min_k(a);
        c.expect(k == 2 * i + 1, tag + "minK " + (k ? str(*k) : "none") + " != " + str(2 * i + 1));
        c.expect(decide_k_pt(a, 2 * i + 1).answer && !decide_k_pt(a, 2 * i).answer, tag + "probes around 2i+1 wrong");
        auto d = gen_cycle_min_dfa(i);
        c.expect(equivalent(a, d).answer, tag + "NFA and chain DFA differ");
        c.expect(oracle::agree_up_to(a, d, 4 * i + 4), tag + "oracle finds a word separating NFA and chain DFA");
    }
    c.notes << "minK 3,5,7,9 at depth 1..4";
}

// 4 -------------------------------------------------------------------------------------
void criterion_fig1(Check& c) {
    auto a = gen_fig1();
    c.expect(parse_automaton(read_file(PTK_FIXTURE_DIR "/fig1.json")) == a, "pinned fixture differs from gen_fig1");
    c.expect(is_partially_ordered(a).answer, "not partially ordered");
    auto v = ums_violations(a);
    c.expect(v.size() == 1 && v[0].state == "0", "UMS violation set is not exactly {0}");
    if (!v.empty()) {
        c.expect(v[0].component == std::vector<std::string>{"0", "1", "2"}, "component of 0 is not {0,1,2}");
        c.expect(v[0].maximal_states == std::vector<std::string>{"2"}, "maximal states are not {2}");
    }
    c.expect(!oracle::ums_unique_maximal(a), "oracle UMS reading holds on fig1");
    c.expect(!is_piecewise_testable_nfa(a).answer, "reported piecewise testable");
    const bool expected[] = {true, false, true, false};
    const char* words[] = {"a", "ab", "aba", "abab"};
    for (int j = 0; j < 4; ++j) {
        auto w = letters_of(words[j]);
        c.expect(accepts(a, w) == expected[j] && oracle::accepts(a, w) == expected[j],
                 std::string("membership of ") + words[j]);
    }
}

// 5 -------------------------------------------------------------------------------------
void criterion_llr(Check& c) {
    auto l = gen_example_l();
    auto k = min_k(l);
    c.expect(k == 2, "minK(L) = " + (k ? str(*k) : std::string("none")));
    auto llr = concat_automata(l, reverse(l));
    auto v = is_piecewise_testable_nfa(llr);
    c.expect(!v.answer, "L.L^R reported piecewise testable");
    const auto* cyc = v.witness_as<CycleWitness>();
    c.expect(cyc != nullptr, "no cycle witness");
    if (cyc != nullptr) {
        auto md = minimal_dfa(llr);
        auto target = md.state_name(md.run(md.initial_state(), md.index_word(letters_of("ca"))));
        bool in_cycle = std::find(cyc->states.begin(), cyc->states.end(), target) != cyc->states.end();
        c.expect(in_cycle, "state reached by ca is not on the witness cycle");
        c.notes << "cycle {";
        for (const auto& s : cyc->states) c.notes << s << (s == cyc->states.back() ? "" : ",");
        c.notes << "} contains the state reached by ca; ";
    }
    const char* words[] = {"ca", "cab", "caba", "cabab", "cababa"};
    for (int j = 0; j < 5; ++j)
        c.expect(oracle::accepts(llr, letters_of(words[j])) == (j % 2 == 0), std::string("membership of ") + words[j]);
}

// 6 -------------------------------------------------------------------------------------
void criterion_reductions(Check& c) {
    oracle::Rng rng(20240601);
    std::size_t unsat = 0;
    for (int t = 0; t < 20; ++t) {
        auto phi = oracle::random_cnf(rng, 4, 4);
        auto m = cnf_to_ptnfa(phi);
        const bool sat = oracle::satisfiable(phi.num_vars, phi.clauses);
        unsat += sat ? 0 : 1;
        c.expect(is_ptnfa(m).verdict, "(a) output " + str(t) + " is not a ptNFA");
        c.expect(is_universal(m).answer == !sat, "(a) universality disagrees with SAT on instance " + str(t));
        if (!sat) c.expect(min_k(m) == 0, "(a) unsatisfiable instance " + str(t) + " has minK != 0");
    }
    c.notes << "(a) 20 CNFs, " << unsat << " unsat; ";

    // (b) seeds with minK 0, 1, 1, 2, 2.
    std::vector<std::pair<std::string, Automaton>> seeds;
    seeds.emplace_back("universal", Automaton({"0"}, {"a", "b"}, {"0"}, {"0"}, {{"0", "a", "0"}, {"0", "b", "0"}}));
    seeds.emplace_back("contains-a", Automaton({"0", "1"}, {"a", "b"}, {"0"}, {"1"},
                                               {{"0", "a", "1"}, {"0", "b", "0"}, {"1", "a", "1"}, {"1", "b", "1"}}));
    seeds.emplace_back("all-letters", all_letters_language_nfa({"a", "b"}));
    seeds.emplace_back("A1", complete(gen_ai(1), "s"));
    seeds.emplace_back("example-L", ptnfa_witness(gen_example_l()));
    for (const auto& [name, m] : seeds) {
        auto before = min_k(m);
        auto lifted = lift_k(m);
        auto after = min_k(lifted);
        c.expect(is_ptnfa(lifted).verdict, "(b) lift of " + name + " is not a ptNFA");
        c.expect(lifted.num_states() == m.num_states() + m.initial().size(), "(b) state count of lifted " + name);
        c.expect(before && after && *after == *before + 1,
                 "(b) " + name + ": minK " + (before ? str(*before) : "-") + " -> " + (after ? str(*after) : "-"));
        c.notes << name << " " << (before ? str(*before) : "-") << "->" << (after ? str(*after) : "-") << " ";
    }
    c.notes << "; ";

    // (c) a 0-PT seed and a non-0-PT seed.
    const auto& zero = seeds[0].second;
    auto nonzero = cnf_to_ptnfa(ptk::CnfFormula{2, {{1, 2}}});
    c.expect(decide_k_pt(zero, 0).answer && !decide_k_pt(nonzero, 0).answer, "(c) seeds have the wrong 0-PT status");
    for (std::size_t k = 1; k <= 3; ++k) {
        for (const auto* seed : std::vector<const Automaton*>{&zero, &nonzero}) {
            auto mk = lift_k_fixed(*seed, k);
            const bool zero_pt = decide_k_pt(*seed, 0).answer;
            c.expect(is_ptnfa(mk).verdict, "(c) output is not a ptNFA for k=" + str(k));
            c.expect(mk.num_letters() == seed->num_letters() + 1, "(c) alphabet grew by more than one letter");
            c.expect(decide_k_pt(mk, k).answer == zero_pt, "(c) k-PT of output differs from 0-PT of seed, k=" + str(k));
            if (zero_pt) c.expect(min_k(mk) == k, "(c) minK of lifted 0-PT seed != k=" + str(k));
        }
    }

    // (d) every 3CNF over x1,x2,x3 built from the 8 full clauses.
    std::vector<std::vector<int>> full;
    for (int s = 0; s < 8; ++s) full.push_back({(s & 1) ? -1 : 1, (s & 2) ? -2 : 2, (s & 4) ? -3 : 3});
    std::size_t agree = 0;
    for (int subset = 0; subset < 256; ++subset) {
        ThreeCnfFormula phi;
        phi.num_vars = 3;
        for (int s = 0; s < 8; ++s)
            if ((subset >> s) & 1) phi.clauses.push_back(full[s]);
        auto e = cnf3_to_unary_nfa(phi);
        const bool sat = oracle::satisfiable(3, phi.clauses);
        const bool universal = is_universal(e).answer;
        agree += universal == !sat ? 1 : 0;
        c.expect(universal == !sat, "(d) universality disagrees with SAT for clause set " + str(subset));
        if (sat) c.expect(!unary_is_pt(e).answer, "(d) satisfiable formula gives a PT language, set " + str(subset));
    }
    c.notes << "(d) " << agree << "/256 agree";
}

// 7 -------------------------------------------------------------------------------------
void criterion_oracle(Check& c) {
    oracle::Rng rng(77);
    std::size_t positives = 0;
    std::size_t pairs = 0;
    for (int t = 0; t < 50; ++t) {
        std::uniform_int_distribution<std::size_t> ns(1, 5), nl(1, 3), nk(0, 3);
        const auto states = ns(rng);
        const auto letters = nl(rng);
        const auto k = nk(rng);
        auto a = t % 2 == 0 ? oracle::random_nfa(rng, states, letters) : oracle::random_ptnfa(rng, states, letters);
        const auto tag = "instance " + str(t) + " (k=" + str(k) + "): ";
        auto lib = decide_k_pt(a, k);
        auto ref = oracle::congruence_check(a, k);
        pairs += ref.explored;
        positives += lib.answer ? 1 : 0;
        c.expect(lib.answer == ref.k_pt, tag + "decideKPt " + (lib.answer ? "true" : "false") + ", oracle " +
                                             (ref.k_pt ? "true" : "false"));
        if (const auto* ce = lib.witness_as<KptCounterexample>()) {
            c.expect(oracle::sim_k(ce->u, ce->v, k), tag + "counterexample words are not ~_k-equivalent");
            c.expect(oracle::accepts(a, ce->u) != oracle::accepts(a, ce->v), tag + "counterexample does not split");
        }
        if (lib.answer) c.expect(oracle::no_short_clash(a, k, 7 - letters), tag + "short words clash");
    }
    c.notes << "50 instances, " << positives << " k-PT, " << pairs << " oracle pairs";
}

// 8 -------------------------------------------------------------------------------------
void criterion_structure(Check& c) {
    oracle::Rng rng(8);
    std::size_t redrawn = 0;
    std::size_t evaluated = 0;
    std::size_t one_suff = 0;
    std::size_t two_suff = 0;
    std::vector<std::size_t> mink_hist(8, 0);
    while (evaluated < 200) {
        std::uniform_int_distribution<std::size_t> ns(1, 7), nl(1, 3);
        auto a = oracle::random_ptnfa(rng, ns(rng), nl(rng));
        // Keep a quarter of the trivial (empty or universal) languages.
        const bool trivial = is_empty_language(a).answer || is_universal(a).answer;
        if (trivial && std::bernoulli_distribution(0.75)(rng)) continue;
        const auto tag = "ptNFA " + str(evaluated) + ": ";
        const auto d = depth(a);
        std::optional<std::size_t> k;
        try {
            for (std::size_t j = 0; j <= d && !k; ++j)
                if (decide_k_pt(a, j).answer) k = j;
        } catch (const ResourceError&) {
            ++redrawn;
            continue;
        }
        ++evaluated;
        c.expect(k.has_value(), tag + "not depth-PT (depth " + str(d) + ")");
        if (k) ++mink_hist[std::min<std::size_t>(*k, 7)];

        auto md = minimal_dfa(a);
        const bool po = is_partially_ordered(md).answer;
        const bool conf = is_confluent_dfa(md).answer;
        const bool ums = po && has_ums_property(md).answer;
        c.expect((po && conf) == (po && ums), tag + "confluence and UMS routes disagree");
        c.expect(po == !oracle::has_cycle(md), tag + "partial order differs from oracle");
        if (po) c.expect(ums == oracle::ums_unique_maximal(md), tag + "UMS differs from the unique-maximal oracle");
        c.expect(po && conf, tag + "minimal DFA of a ptNFA is not partially ordered and confluent");

        std::optional<Automaton> joined;
        bool subs_ok = true;
        a.initial().for_each([&](StateId i) {
            auto s = sub_automaton(a, a.state_name(i));
            subs_ok = subs_ok && is_ptnfa(s).verdict;
            joined = joined ? union_automata(*joined, s) : s;
        });
        c.expect(subs_ok, tag + "a sub-automaton is not a ptNFA");
        c.expect(equivalent(*joined, a).answer, tag + "union of sub-automata differs");

        if (one_pt_sufficient_nfa(a).answer) {
            ++one_suff;
            c.expect(decide_k_pt(a, 1).answer, tag + "1-PT sufficient condition holds but not 1-PT");
        }
        if (two_pt_sufficient_nfa(a).answer) {
            ++two_suff;
            c.expect(decide_k_pt(a, 2).answer, tag + "2-PT sufficient condition holds but not 2-PT");
        }
    }
    c.notes << "200 ptNFAs (" << redrawn << " redrawn over budget), minK histogram";
    for (std::size_t j = 0; j < mink_hist.size(); ++j)
        if (mink_hist[j] != 0) c.notes << " " << j << ":" << mink_hist[j];
    c.notes << ", 1-PT condition held " << one_suff << "x, 2-PT " << two_suff << "x";
}

// 9 -------------------------------------------------------------------------------------
void criterion_bounds(Check& c) {
    c.expect(binomial_depth_bound(1, 2) == 2, "(1,2)");
    c.expect(binomial_depth_bound(2, 1) == 2, "(2,1)");
    for (std::uint64_t n = 0; n <= 10; ++n) c.expect(binomial_depth_bound(0, n) == 0, "(0," + std::to_string(n) + ")");
    for (std::size_t m = 2; m <= 3; ++m) {
        auto sigma = oracle::letters(m);
        auto a = all_letters_language_nfa(sigma);
        auto md = minimal_dfa(a);
        c.expect(depth(md) == m, "minimal DFA depth for |Sigma|=" + str(m));
        c.expect(depth(md) == binomial_depth_bound(1, m), "bound not attained for |Sigma|=" + str(m));
        c.expect(determinize(a).num_states() == pow2(m), "determinization size for |Sigma|=" + str(m));
        c.expect(min_k(a) == 1, "minK != 1 for |Sigma|=" + str(m));
    }
}

// 10 ------------------------------------------------------------------------------------
void criterion_unary(Check& c) {
    oracle::Rng rng(10);
    std::size_t probes = 0;
    for (int t = 0; t < 60; ++t) {
        std::uniform_int_distribution<std::size_t> ns(1, 8);
        auto a = oracle::random_ptnfa(rng, ns(rng), 1);
        for (std::size_t k = 0; k <= 8; ++k) {
            ++probes;
            c.expect(unary_decide_k_pt(a, k).answer == decide_k_pt(a, k).answer,
                     "unary k-PT differs from decideKPt, instance " + str(t) + ", k=" + str(k));
        }
    }
    std::size_t sims = 0;
    for (int t = 0; t < 40; ++t) {
        std::uniform_int_distribution<std::size_t> ns(1, 10);
        auto a = oracle::random_nfa(rng, ns(rng), 1, 0.25);
        auto delta = a.transitions();
        std::set<std::string> current = oracle::reach_names(a, {});
        std::set<std::string> final_states;
        for (const auto& q : a.names_of(a.accepting())) final_states.insert(q);
        for (std::uint64_t z = 0; z <= 1024; ++z) {
            bool direct = std::any_of(current.begin(), current.end(),
                                      [&](const std::string& q) { return final_states.contains(q); });
            ++sims;
            if (unary_membership_power(a, z) != direct) {
                c.expect(false, "membership of a^" + std::to_string(z) + " differs, instance " + str(t));
                break;
            }
            std::set<std::string> next;
            for (const auto& tr : delta)
                if (current.contains(tr.from)) next.insert(tr.to);
            current = std::move(next);
        }
    }
    std::size_t pt = 0;
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<std::size_t> ns(1, 8);
        auto a = oracle::random_nfa(rng, ns(rng), 1, 0.25);
        const auto verdict = unary_is_pt(a);
        const bool u = verdict.answer;
        pt += u ? 1 : 0;
        c.expect(u == is_piecewise_testable_nfa(a).answer, "unary PT differs, instance " + str(t));
        if (!u) {
            const auto* p = verdict.witness_as<UnaryPattern>();
            c.expect(p != nullptr && accepts(a, Word(p->l1, "a")) != accepts(a, Word(p->l2, "a")) &&
                         accepts(a, Word(p->l1, "a")) == accepts(a, Word(p->l3, "a")),
                     "unary witness does not re-validate, instance " + str(t));
        }
    }
    c.notes << probes << " k-PT probes, " << sims << " power checks, 200 PT checks (" << pt << " PT)";
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<void(Check&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "A_i family", criterion_ai},
        {2, "B_i family", criterion_bi},
        {3, "cycle family", criterion_cycles},
        {4, "fig1", criterion_fig1},
        {5, "L.L^R example", criterion_llr},
        {6, "reduction suite", criterion_reductions},
        {7, "decideKPt vs congruence oracle", criterion_oracle},
        {8, "structural consistency on fuzzed ptNFAs", criterion_structure},
        {9, "depth bounds", criterion_bounds},
        {10, "unary suite", criterion_unary},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check c;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = c.failures.empty();
        failed += pass ? 0 : 1;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " [" << std::fixed
                  << std::setprecision(2) << secs << " s]";
        if (!c.notes.str().empty()) std::cout << " " << c.notes.str();
        std::cout << "\n";
        for (std::size_t j = 0; j < c.failures.size() && j < 10; ++j) std::cout << "    - " << c.failures[j] << "\n";
        if (c.failures.size() > 10) std::cout << "    ... " << c.failures.size() - 10 << " more\n";
    }
    return failed == 0 ? 0 : 1;
}
