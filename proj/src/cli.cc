#include "ptk/cli.hh"

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptk/errors.hh"
#include "ptk/families.hh"
#include "ptk/io.hh"
#include "ptk/operations.hh"
#include "ptk/simon.hh"
#include "ptk/structure.hh"

namespace ptk {

namespace {

using Report = nlohmann::ordered_json;

nlohmann::json word_json(const Word& w) { return nlohmann::json(w); }

Report witness_json(const Witness& w) {
    Report r;
    r["kind"] = std::string(witness_kind(w));
    std::visit(
        [&r](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Word>) {
                r["word"] = word_json(x);
            } else if constexpr (std::is_same_v<T, CycleWitness>) {
                r["states"] = x.states;
                if (x.access) r["access"] = word_json(*x.access);
            } else if constexpr (std::is_same_v<T, std::vector<UmsViolation>>) {
                r["violations"] = Report::array();
                for (const auto& v : x)
                    r["violations"].push_back(
                        Report{{"state", v.state}, {"component", v.component}, {"maximal_states", v.maximal_states}});
            } else if constexpr (std::is_same_v<T, ConfluenceFailure>) {
                r["state"] = x.state;
                r["letters"] = {x.first, x.second};
            } else if constexpr (std::is_same_v<T, IdentityFailure>) {
                r["identity"] = x.identity;
                r["state"] = x.state;
                r["letters"] = nlohmann::json::array({x.first});
                if (x.second) r["letters"].push_back(*x.second);
            } else if constexpr (std::is_same_v<T, KptCounterexample>) {
                r["k"] = x.k;
                r["u"] = word_json(x.u);
                r["v"] = word_json(x.v);
            } else if constexpr (std::is_same_v<T, UnaryPattern>) {
                r["l1"] = x.l1;
                r["l2"] = x.l2;
                r["l3"] = x.l3;
            }
        },
        w);
    return r;
}

void put_verdict(Report& r, const Verdict& v) {
    r["answer"] = v.answer;
    if (!v.conclusive) r["conclusive"] = false;
    if (v.witness) r["witness"] = witness_json(*v.witness);
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool json = false;
    bool timing = false;
    std::size_t budget = kDefaultProductBudget;
    std::size_t depth_budget = kDefaultDepthBudget;
};

Automaton load(const std::string& path, Context& ctx) {
    std::vector<std::string> warnings;
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        text = read_file(path);
    }
    try {
        auto a = parse_automaton(text, &warnings);
        for (const auto& w : warnings) ctx.err << "warning: " << path << ": " << w << "\n";
        return a;
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void emit_report(Context& ctx, const Report& r) {
    if (ctx.json) {
        ctx.out << r.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : r.items()) {
        ctx.out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

void emit_automaton(Context& ctx, const Automaton& a, const std::string& output, bool dot) {
    const auto text = dot ? to_dot(a) : serialize_automaton(a);
    if (output.empty()) {
        ctx.out << text;
    } else {
        write_file(output, text);
    }
}

int exit_for(bool answer) { return answer ? kExitYes : kExitNo; }

// check -------------------------------------------------------------------------

struct CheckArgs {
    std::string file;
    bool po = false, complete = false, ums = false, confluent = false, ptnfa = false, pt = false, one = false,
         two = false;
    bool reachable_only = false;
};

int run_check(Context& ctx, const CheckArgs& args) {
    const int chosen = args.po + args.complete + args.ums + args.confluent + args.ptnfa + args.pt + args.one + args.two;
    if (chosen != 1)
        throw InputError("check needs exactly one of --po, --complete, --ums, --confluent, --ptnfa, --pt, --1pt, --2pt");
    auto a = load(args.file, ctx);
    Report r;
    r["command"] = "check";
    r["file"] = args.file;
    Verdict v;
    if (args.po) {
        r["property"] = "partially-ordered";
        v = is_partially_ordered(a);
    } else if (args.complete) {
        r["property"] = "complete";
        v = is_complete(a) ? yes() : Verdict{false, std::nullopt, true};
        for (StateId q = 0; q < a.num_states() && !v.answer && !r.contains("missing"); ++q)
            for (LetterId x = 0; x < a.num_letters(); ++x)
                if (a.successors(q, x).empty()) {
                    r["missing"] = {a.state_name(q), a.letter_name(x)};
                    break;
                }
    } else if (args.ums) {
        r["property"] = "ums";
        v = has_ums_property(a, UmsOptions{args.reachable_only});
    } else if (args.confluent) {
        r["property"] = "confluent";
        v = is_confluent_dfa(a);
    } else if (args.ptnfa) {
        r["property"] = "ptnfa";
        auto rep = is_ptnfa(a);
        r["partially_ordered"] = rep.partially_ordered;
        r["complete"] = rep.complete;
        if (rep.ums) r["ums"] = *rep.ums;
        v.answer = rep.verdict;
        if (rep.cycle) {
            v.witness = Witness{*rep.cycle};
        } else if (!rep.violations.empty()) {
            v.witness = Witness{rep.violations};
        }
    } else if (args.pt) {
        r["property"] = "piecewise-testable";
        v = is_piecewise_testable_nfa(a);
    } else if (args.one) {
        r["property"] = "1-piecewise-testable";
        v = is_one_pt_dfa(minimal_dfa(a, ctx.budget));
    } else {
        r["property"] = "2-piecewise-testable";
        auto md = minimal_dfa(a, ctx.budget);
        v = is_piecewise_testable_dfa(md);
        if (v.answer) v = is_two_pt_dfa(md);
    }
    put_verdict(r, v);
    emit_report(ctx, r);
    return exit_for(v.answer);
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx{out, err};
    CLI::App app{"Piecewise testability toolkit", "ptk"};
    app.require_subcommand(1);
    app.add_flag("--json", ctx.json, "Machine-readable JSON report");
    app.add_flag("--timing", ctx.timing, "Add elapsed wall time to reports");
    app.add_option("--budget", ctx.budget, "Product/subset state budget")->capture_default_str();
    app.add_option("--depth-budget", ctx.depth_budget, "State budget for depth on cyclic automata")
        ->capture_default_str();

    std::function<int()> action;
    auto sub = [&app](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->fallthrough();
        return s;
    };

    CheckArgs check;
    auto* c = sub("check", "Structural and language property checks");
    c->add_option("file", check.file, "Automaton document")->required();
    c->add_flag("--po", check.po, "Partially ordered");
    c->add_flag("--complete", check.complete, "Complete");
    c->add_flag("--ums", check.ums, "UMS property (partially ordered input)");
    c->add_flag("--reachable-only", check.reachable_only, "UMS: inspect reachable states only");
    c->add_flag("--confluent", check.confluent, "Confluence (total DFA input)");
    c->add_flag("--ptnfa", check.ptnfa, "ptNFA recognition");
    c->add_flag("--pt", check.pt, "Piecewise testable language");
    c->add_flag("--1pt", check.one, "1-piecewise testable language");
    c->add_flag("--2pt", check.two, "2-piecewise testable language");
    c->callback([&] { action = [&] { return run_check(ctx, check); }; });

    std::string file;
    std::string file2;
    std::size_t k = 0;
    auto* dk = sub("decide-k", "Is the language k-piecewise testable?");
    dk->add_option("file", file)->required();
    dk->add_option("-k", k, "k")->required();
    dk->callback([&] {
        action = [&] {
            auto a = load(file, ctx);
            Report r{{"command", "decide-k"}, {"file", file}, {"k", k}};
            auto v = decide_k_pt(a, k, ctx.budget);
            put_verdict(r, v);
            emit_report(ctx, r);
            return exit_for(v.answer);
        };
    });

    std::optional<std::size_t> max_k;
    auto* mk = sub("mink", "Least k for which the language is k-piecewise testable");
    mk->add_option("file", file)->required();
    mk->add_option("--max", max_k, "Give up above this k");
    mk->callback([&] {
        action = [&] {
            auto a = load(file, ctx);
            MinKOptions opts;
            opts.max_k = max_k;
            opts.budget = ctx.budget;
            auto res = min_k_search(a, opts);
            Report r{{"command", "mink"}, {"file", file}, {"piecewise_testable", res.piecewise_testable}};
            if (res.piecewise_testable) {
                r["min_k"] = res.k ? nlohmann::json(*res.k) : nlohmann::json(nullptr);
                r["upper_bound"] = res.upper_bound;
                r["bound_source"] = res.bound_from_ptnfa ? "ptnfa-depth" : "minimal-dfa-depth";
            } else {
                r["witness"] = witness_json(*is_piecewise_testable_nfa(a).witness);
            }
            emit_report(ctx, r);
            return exit_for(res.k.has_value());
        };
    });

    auto* dp = sub("depth", "Depth of the automaton");
    dp->add_option("file", file)->required();
    dp->callback([&] {
        action = [&] {
            auto a = load(file, ctx);
            Report r{{"command", "depth"}, {"file", file}, {"depth", depth(a, ctx.depth_budget)}};
            emit_report(ctx, r);
            return int{kExitYes};
        };
    });

    std::string word_text;
    auto* mb = sub("member", "Word membership");
    mb->add_option("file", file)->required();
    mb->add_option("-w,--word", word_text, "Word (comma-separated if letters are multi-character)")->required();
    mb->callback([&] {
        action = [&] {
            auto a = load(file, ctx);
            auto w = parse_word(word_text, a.alphabet());
            bool ok = accepts(a, w);
            Report r{{"command", "member"}, {"file", file}, {"word", word_json(w)}, {"answer", ok}};
            emit_report(ctx, r);
            return exit_for(ok);
        };
    });

    auto* eq = sub("eq", "Language equivalence");
    eq->add_option("file1", file)->required();
    eq->add_option("file2", file2)->required();
    eq->callback([&] {
        action = [&] {
            auto a = load(file, ctx);
            auto b = load(file2, ctx);
            auto v = equivalent(a, b, ctx.budget);
            Report r{{"command", "eq"}, {"files", {file, file2}}};
            put_verdict(r, v);
            if (const auto* w = v.witness_as<Word>()) r["accepted_by"] = accepts(a, *w) ? file : file2;
            emit_report(ctx, r);
            return exit_for(v.answer);
        };
    });

    std::string op_name;
    std::vector<std::string> op_files;
    std::string output;
    std::string sink = "s";
    std::string state;
    bool dot = false;
    auto* op = sub("op", "Automaton constructions");
    op->add_option("operation", op_name)
        ->required()
        ->check(CLI::IsMember(
            {"determinize", "minimize", "reverse", "complete", "concat", "union", "parallel", "subautomaton"}));
    op->add_option("files", op_files)->required();
    op->add_option("-o,--output", output, "Write the result here instead of stdout");
    op->add_option("--sink", sink, "Sink name for complete")->capture_default_str();
    op->add_option("--state", state, "Root state for subautomaton");
    op->add_flag("--dot", dot, "Emit Graphviz instead of the document format");
    op->callback([&] {
        action = [&] {
            std::vector<Automaton> in;
            for (const auto& f : op_files) in.push_back(load(f, ctx));
            auto arity = [&](std::size_t n) {
                if (in.size() != n)
                    throw InputError("op " + op_name + " takes " + std::to_string(n) + " file(s), got " +
                                     std::to_string(in.size()));
            };
            std::optional<Automaton> res;
            if (op_name == "determinize") {
                arity(1);
                res = determinize(in[0], ctx.budget);
            } else if (op_name == "minimize") {
                arity(1);
                res = minimal_dfa(in[0], ctx.budget);
            } else if (op_name == "reverse") {
                arity(1);
                res = reverse(in[0]);
            } else if (op_name == "complete") {
                arity(1);
                res = complete(in[0], sink);
            } else if (op_name == "concat") {
                arity(2);
                res = concat_automata(in[0], in[1]);
            } else if (op_name == "union") {
                arity(2);
                res = union_automata(in[0], in[1]);
            } else if (op_name == "parallel") {
                res = parallel_compose(in, ctx.budget);
            } else {
                arity(1);
                if (state.empty()) throw InputError("op subautomaton needs --state");
                res = sub_automaton(in[0], state);
            }
            emit_automaton(ctx, *res, output, dot);
            return int{kExitYes};
        };
    });

    std::string family;
    std::optional<std::size_t> gen_i;
    std::optional<std::size_t> gen_k;
    std::string cnf_file;
    std::string input_file;
    std::string letters;
    std::string fresh = "z";
    std::size_t var_cap = kDefaultUnaryVarCap;
    bool gen_complete = false;
    auto* gen = sub("gen", "Generate an automaton family member or reduction");
    gen->add_option("family", family)
        ->required()
        ->check(CLI::IsMember({"ai", "bi", "wi", "cycles", "cycles-dfa", "fig1", "example-llr", "all-letters", "cnf",
                               "cnf-unary", "lift-k", "lift-k-fixed"}));
    gen->add_option("-i", gen_i, "Family index (all-letters: alphabet size)");
    gen->add_option("-k", gen_k, "Chain length for lift-k-fixed");
    gen->add_option("--cnf", cnf_file, "DIMACS input for cnf and cnf-unary");
    gen->add_option("--input", input_file, "ptNFA input for lift-k and lift-k-fixed");
    gen->add_option("--letters", letters, "Comma-separated alphabet for all-letters");
    gen->add_option("--letter", fresh, "Fresh letter for the lift constructions")->capture_default_str();
    gen->add_option("--var-cap", var_cap, "Variable cap for cnf-unary")->capture_default_str();
    gen->add_flag("--complete", gen_complete, "Complete the result");
    gen->add_option("--sink", sink, "Sink name for --complete")->capture_default_str();
    gen->add_option("-o,--output", output, "Write the result here instead of stdout");
    gen->add_flag("--dot", dot, "Emit Graphviz instead of the document format");
    gen->callback([&] {
        action = [&] {
            auto need_i = [&] {
                if (!gen_i) throw InputError("gen " + family + " needs -i");
                return *gen_i;
            };
            auto need = [&](const std::string& v, const char* flag) {
                if (v.empty()) throw InputError("gen " + family + " needs " + flag);
                return v;
            };
            if (family == "wi") {
                auto w = gen_wi(need_i());
                Report r{{"command", "gen"}, {"family", "wi"}, {"i", *gen_i}, {"word", word_json(w)}};
                if (!ctx.json && output.empty()) {
                    ctx.out << format_word(w, std::vector<Letter>{"a0", "a1"}) << "\n";
                } else if (!output.empty()) {
                    write_file(output, r.dump(2) + "\n");
                } else {
                    emit_report(ctx, r);
                }
                return int{kExitYes};
            }
            std::optional<Automaton> res;
            if (family == "ai") {
                res = gen_ai(need_i());
            } else if (family == "bi") {
                res = gen_bi(need_i());
            } else if (family == "cycles") {
                res = gen_cycle_nfa(need_i());
            } else if (family == "cycles-dfa") {
                res = gen_cycle_min_dfa(need_i());
            } else if (family == "fig1") {
                res = gen_fig1();
            } else if (family == "example-llr") {
                res = gen_example_l();
            } else if (family == "all-letters") {
                std::vector<Letter> sigma;
                if (!letters.empty()) {
                    std::istringstream in(letters);
                    for (std::string x; std::getline(in, x, ',');) sigma.push_back(x);
                } else {
                    auto n = need_i();
                    if (n > 26) throw InputError("-i above 26 needs explicit --letters");
                    for (std::size_t j = 0; j < n; ++j) sigma.push_back(std::string(1, static_cast<char>('a' + j)));
                }
                res = all_letters_language_nfa(sigma);
            } else if (family == "cnf") {
                res = cnf_to_ptnfa(parse_dimacs(read_file(need(cnf_file, "--cnf"))));
            } else if (family == "cnf-unary") {
                auto phi = parse_dimacs(read_file(need(cnf_file, "--cnf")));
                ThreeCnfFormula three;
                three.num_vars = phi.num_vars;
                three.clauses = phi.clauses;
                res = cnf3_to_unary_nfa(three, var_cap);
            } else if (family == "lift-k") {
                res = lift_k(load(need(input_file, "--input"), ctx), fresh);
            } else {
                if (!gen_k) throw InputError("gen lift-k-fixed needs -k");
                res = lift_k_fixed(load(need(input_file, "--input"), ctx), *gen_k, fresh);
            }
            if (gen_complete) res = complete(*res, sink);
            emit_automaton(ctx, *res, output, dot);
            return int{kExitYes};
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitYes;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitError;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        int code = action();
        if (ctx.timing) {
            auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            err << "elapsed_ms: " << ms << "\n";
        }
        return code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

} // namespace ptk
