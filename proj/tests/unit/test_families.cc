#include <catch2/catch_amalgamated.hpp>

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

Word w(const std::string& s) {
    Word out;
    for (char c : s) out.emplace_back(1, c);
    return out;
}

Automaton fixture(const std::string& name) { return parse_automaton(read_file(std::string(PTK_FIXTURE_DIR) + "/" + name)); }

std::vector<Transition> sorted(std::vector<Transition> t) {
    std::sort(t.begin(), t.end());
    return t;
}

} // namespace

TEST_CASE("A_i") {
    auto a3 = gen_ai(3);
    CHECK(a3 == fixture("ai3.json"));
    CHECK(complete(a3, "s") == fixture("ai3-completed.json"));
    CHECK(a3.num_states() == 4);
    CHECK(a3.alphabet() == std::vector<Letter>{"a0", "a1", "a2", "a3"});
    // ℓ·a_j = ℓ for ℓ > j and ℓ·a_ℓ = {0..ℓ−1}, nothing else.
    std::vector<Transition> expected;
    for (int l = 0; l <= 3; ++l)
        for (int j = 0; j <= 3; ++j) {
            const auto from = std::to_string(l);
            const auto x = "a" + std::to_string(j);
            if (l > j) expected.push_back({from, x, from});
            if (l == j)
                for (int m = 0; m < l; ++m) expected.push_back({from, x, std::to_string(m)});
        }
    CHECK(a3.transitions() == sorted(expected));
    for (std::size_t i = 1; i <= 3; ++i) {
        CHECK(min_k(complete(gen_ai(i), "s")) == i + 1);
        CHECK(depth(minimal_dfa(gen_ai(i))) == (std::size_t{1} << (i + 1)) - 1);
    }
    CHECK(gen_ai(0).num_states() == 1);
}

TEST_CASE("B_i") {
    auto b2 = gen_bi(2);
    CHECK(b2 == fixture("bi2.json"));
    CHECK(b2.num_states() == 5);
    CHECK(b2.names_of(b2.initial()) == std::vector<std::string>{"0", "1", "2"});
    for (std::size_t i = 1; i <= 2; ++i) {
        auto b = gen_bi(i);
        auto a = gen_ai(i);
        CHECK(equivalent(b, concat_automata(a, reverse(a))).answer);
        CHECK(is_ptnfa(complete(b, "s")).verdict);
    }
}

TEST_CASE("w_i") {
    CHECK(gen_wi(0) == Word{"a0"});
    CHECK(gen_wi(1) == Word{"a0", "a1", "a0"});
    for (std::size_t i = 0; i <= 4; ++i) CHECK(gen_wi(i).size() == (std::size_t{1} << (i + 1)) - 1);
    for (std::size_t i = 1; i <= 2; ++i) {
        auto b = gen_bi(i);
        auto x = gen_wi(i);
        for (std::size_t n = 0; n <= x.size(); ++n)
            CHECK(oracle::accepts(b, Word(x.begin(), x.begin() + static_cast<long>(n))) == (n % 2 == 0));
    }
}

TEST_CASE("a ~2i pair split by B_i") {
    for (std::size_t i = 1; i <= 2; ++i) {
        auto x = gen_wi(i);
        Word p(x.begin(), x.end() - 1);
        Word pr(p.rbegin(), p.rend());
        Word u = p, v = p;
        u.push_back("a0");
        u.insert(u.end(), pr.begin(), pr.end());
        v.insert(v.end(), pr.begin(), pr.end());
        CHECK(sim_k_equivalent(u, v, 2 * i));
        CHECK(accepts(gen_bi(i), u) != accepts(gen_bi(i), v));
    }
}

TEST_CASE("cycle family") {
    CHECK(gen_cycle_nfa(2) == fixture("cycle2.json"));
    CHECK_THROWS_AS(gen_cycle_nfa(0), PreconditionError);
    for (std::size_t i = 1; i <= 4; ++i) {
        auto c = gen_cycle_nfa(i);
        auto d = gen_cycle_min_dfa(i);
        CHECK(c.num_states() == 2 * i + 1);
        CHECK(d.num_states() == 2 * i + 2);
        CHECK(equivalent(c, d).answer);
        CHECK(depth(c) == i);
        CHECK(min_k(c) == 2 * i + 1);
        // a^i + a^{2i+1} a*.
        Word x;
        for (std::size_t n = 0; n <= 4 * i + 3; ++n) {
            CHECK(oracle::accepts(c, x) == (n == i || n >= 2 * i + 1));
            x.push_back("a");
        }
    }
}

TEST_CASE("fig1 and example L") {
    auto f = gen_fig1();
    CHECK(f == fixture("fig1.json"));
    CHECK(f.transitions() == sorted({{"0", "a", "0"},
                                     {"0", "a", "1"},
                                     {"0", "b", "0"},
                                     {"1", "a", "1"},
                                     {"1", "b", "2"},
                                     {"2", "a", "2"},
                                     {"2", "b", "2"}}));
    auto l = gen_example_l();
    CHECK(accepts(l, w("a")));
    CHECK(accepts(l, w("abb")));
    CHECK(accepts(l, w("cba")));
    CHECK_FALSE(accepts(l, w("ba")));
    CHECK_FALSE(accepts(l, Word{}));
    // ab* + c(a+b)* by the definition.
    for (const auto& x : oracle::words_up_to(l.alphabet(), 5)) {
        bool in = false;
        if (!x.empty() && x[0] == "a")
            in = std::all_of(x.begin() + 1, x.end(), [](const Letter& y) { return y == "b"; });
        if (!x.empty() && x[0] == "c")
            in = std::all_of(x.begin() + 1, x.end(), [](const Letter& y) { return y != "c"; });
        REQUIRE(oracle::accepts(l, x) == in);
    }
    CHECK(min_k(l) == 2);
    CHECK_FALSE(is_piecewise_testable_nfa(concat_automata(l, reverse(l))).answer);
}

TEST_CASE("all-letters language") {
    for (std::size_t m = 1; m <= 4; ++m) {
        auto sigma = oracle::letters(m);
        auto a = all_letters_language_nfa(sigma);
        CHECK(a.num_states() == (std::size_t{1} << m));
        for (const auto& x : oracle::words_up_to(sigma, 5)) {
            bool all = std::all_of(sigma.begin(), sigma.end(),
                                   [&](const Letter& y) { return std::find(x.begin(), x.end(), y) != x.end(); });
            REQUIRE(oracle::accepts(a, x) == all);
        }
        CHECK(depth(minimal_dfa(a)) == m);
        CHECK(min_k(a) == 1);
    }
    CHECK_THROWS_AS(all_letters_language_nfa({}), PreconditionError);
    CHECK_THROWS_AS(all_letters_language_nfa(oracle::letters(11)), ResourceError);
}

TEST_CASE("formula validation") {
    CHECK_THROWS_AS((CnfFormula{2, {{1, -1}}}.validate()), InputError);
    CHECK_THROWS_AS((CnfFormula{2, {{3}}}.validate()), InputError);
    CHECK_THROWS_AS((CnfFormula{2, {{0}}}.validate()), InputError);
    CHECK_NOTHROW((CnfFormula{2, {{1, -2}}}.validate()));
    ThreeCnfFormula bad;
    bad.num_vars = 3;
    bad.clauses = {{1, 2}};
    CHECK_THROWS_AS(bad.validate(), InputError);
    bad.clauses = {{1, 1, 2}};
    CHECK_THROWS_AS(bad.validate(), InputError);
    bad.clauses = {{1, -2, 3}};
    CHECK_NOTHROW(bad.validate());
    CHECK(CnfFormula{1, {{1}}}.satisfiable());
    CHECK_FALSE((CnfFormula{1, {{1}, {-1}}}.satisfiable()));
}

TEST_CASE("CNF to ptNFA") {
    oracle::Rng rng(51);
    std::size_t unsat = 0;
    for (int t = 0; t < 40; ++t) {
        auto phi = oracle::random_cnf(rng, 4, 4);
        auto m = cnf_to_ptnfa(phi);
        CHECK(is_ptnfa(m).verdict);
        const bool sat = oracle::satisfiable(phi.num_vars, phi.clauses);
        unsat += sat ? 0 : 1;
        CHECK(is_universal(m).answer == !sat);
        if (!sat) CHECK(min_k(m) == 0);
        // Words of length n are accepted iff they falsify a clause; all others are accepted.
        const auto n = phi.num_vars;
        for (const auto& x : oracle::words_up_to({"0", "1"}, n + 2)) {
            bool expected = x.size() != n;
            if (x.size() == n) {
                std::vector<bool> assignment(n);
                for (std::size_t j = 0; j < n; ++j) assignment[j] = x[j] == "1";
                expected = !phi.satisfied_by(assignment);
            }
            REQUIRE(oracle::accepts(m, x) == expected);
        }
    }
    CHECK(unsat > 0);
    CHECK(unsat < 40);
}

TEST_CASE("lift by one") {
    auto a1 = complete(gen_ai(1), "s");
    auto l = lift_k(a1);
    CHECK(l.num_letters() == a1.num_letters() + 1);
    CHECK(l.num_states() == a1.num_states() + a1.initial().size());
    CHECK(is_ptnfa(l).verdict);
    CHECK(min_k(l) == 3);
    CHECK_THROWS_AS(lift_k(gen_fig1()), PreconditionError);
    CHECK_THROWS_AS(lift_k(a1, "a0"), InputError);
    oracle::Rng rng(52);
    for (int t = 0; t < 30; ++t) {
        auto m = oracle::random_ptnfa(rng, 1 + t % 4, 1 + t % 2);
        auto k = min_k(m);
        auto lifted = lift_k(m);
        CHECK(is_ptnfa(lifted).verdict);
        // The empty language lifts to itself.
        if (is_empty_language(m).answer)
            CHECK(min_k(lifted) == 0);
        else
            CHECK(min_k(lifted) == *k + 1);
    }
}

TEST_CASE("fixed-alphabet lift") {
    Automaton universal({"0"}, {"a"}, {"0"}, {"0"}, {{"0", "a", "0"}});
    Automaton only_empty({"0", "1"}, {"a"}, {"0"}, {"0"}, {{"0", "a", "1"}, {"1", "a", "1"}});
    CHECK_THROWS_AS(lift_k_fixed(universal, 0), PreconditionError);
    CHECK_THROWS_AS(lift_k_fixed(gen_fig1(), 1), PreconditionError);
    for (std::size_t k = 1; k <= 3; ++k) {
        auto u = lift_k_fixed(universal, k);
        auto e = lift_k_fixed(only_empty, k);
        CHECK(u.num_letters() == 2);
        CHECK(e.num_letters() == 2);
        CHECK(is_ptnfa(u).verdict);
        CHECK(is_ptnfa(e).verdict);
        CHECK(min_k(u) == k);
        CHECK_FALSE(decide_k_pt(e, k).answer);
    }
}

TEST_CASE("CRT offsets") {
    CHECK(crt_offset({{2, 0}, {3, 1}, {5, 0}}) == 10);
    CHECK(crt_offset({{2, 0}}) == 0);
    CHECK(crt_offset({{2, 1}, {3, 2}}) == 5);
    CHECK_THROWS_AS(crt_offset({{2, 0}, {4, 1}}), InputError);
    CHECK_THROWS_AS(crt_offset({{3, 3}}), InputError);
    CHECK_THROWS_AS(crt_offset({{0, 0}}), InputError);
    for (std::uint64_t r2 = 0; r2 < 2; ++r2)
        for (std::uint64_t r3 = 0; r3 < 3; ++r3)
            for (std::uint64_t r7 = 0; r7 < 7; ++r7) {
                auto z = crt_offset({{2, r2}, {3, r3}, {7, r7}});
                CHECK(z < 42);
                CHECK(z % 2 == r2);
                CHECK(z % 3 == r3);
                CHECK(z % 7 == r7);
            }
}

TEST_CASE("3CNF to unary NFA") {
    ThreeCnfFormula phi;
    phi.num_vars = 3;
    phi.clauses = {{1, 2, 3}};
    auto e = cnf3_to_unary_nfa(phi);
    CHECK(e.alphabet() == std::vector<Letter>{"0"});
    CHECK_FALSE(is_universal(e).answer);
    CHECK_FALSE(unary_is_pt(e).answer);

    // All eight sign patterns: unsatisfiable, hence universal and 0-PT.
    phi.clauses.clear();
    for (int s = 0; s < 8; ++s) phi.clauses.push_back({(s & 1) ? -1 : 1, (s & 2) ? -2 : 2, (s & 4) ? -3 : 3});
    auto all = cnf3_to_unary_nfa(phi);
    CHECK(is_universal(all).answer);
    CHECK(min_k(all) == 0);

    // a^z is accepted iff z does not encode a satisfying assignment (z mod p_r in {0, 1}).
    phi.clauses = {{1, -2, 3}, {-1, 2, -3}};
    auto two = cnf3_to_unary_nfa(phi);
    const std::uint64_t primes[] = {2, 3, 5};
    for (std::uint64_t z = 0; z < 60; ++z) {
        bool encodes = true;
        std::vector<bool> assignment(3);
        for (int r = 0; r < 3; ++r) {
            const auto m = z % primes[r];
            encodes = encodes && m <= 1;
            assignment[r] = m == 1;
        }
        const bool expected = !encodes || !phi.satisfied_by(assignment);
        CHECK(unary_membership_power(two, z) == expected);
    }

    ThreeCnfFormula wide;
    wide.num_vars = 5;
    wide.clauses = {{1, 2, 5}};
    CHECK_THROWS_AS(cnf3_to_unary_nfa(wide), ResourceError);
}
