#include "ptk/io.hh"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ptk/errors.hh"

namespace ptk {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

std::vector<std::string> string_list(const json& doc, const char* field, bool required = true) {
    auto it = doc.find(field);
    if (it == doc.end()) {
        if (required) throw InputError(std::string("missing field \"") + field + "\"");
        return {};
    }
    if (!it->is_array()) throw InputError(std::string("field \"") + field + "\" must be a list");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < it->size(); ++i) {
        const auto& v = (*it)[i];
        if (!v.is_string())
            throw InputError(std::string(field) + "[" + std::to_string(i) + "]: expected a string, got " +
                             v.dump());
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::optional<long long> as_integer(const std::string& s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

std::string json_quote(const std::string& s) { return json(s).dump(); }

std::string quoted_list(std::vector<std::string> items, bool states) {
    if (states) {
        std::sort(items.begin(), items.end(), state_name_less);
    } else {
        std::sort(items.begin(), items.end());
    }
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i != 0) out += ", ";
        out += json_quote(items[i]);
    }
    return out + "]";
}

} // namespace

bool state_name_less(const std::string& x, const std::string& y) {
    auto ix = as_integer(x);
    auto iy = as_integer(y);
    if (ix && iy) return *ix != *iy ? *ix < *iy : x < y;
    if (ix.has_value() != iy.has_value()) return ix.has_value();
    return x < y;
}

Automaton parse_automaton(std::string_view text, std::vector<std::string>* warnings) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string what = e.what();
        if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
        throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
    }
    if (!doc.is_object()) throw InputError("the automaton document must be a JSON object");
    static const std::set<std::string> known{"alphabet", "states", "initial", "accepting", "transitions"};
    for (const auto& [key, value] : doc.items()) {
        if (!known.contains(key) && warnings != nullptr) warnings->push_back("ignoring unknown field \"" + key + "\"");
    }

    auto alphabet = string_list(doc, "alphabet");
    auto states = string_list(doc, "states");
    auto initial = string_list(doc, "initial");
    auto accepting = string_list(doc, "accepting", false);
    if (alphabet.empty()) throw InputError("field \"alphabet\" must not be empty");
    if (states.empty()) throw InputError("field \"states\" must not be empty");

    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        try {
            validate_letter(alphabet[i]);
        } catch (const InputError& e) {
            throw InputError("alphabet[" + std::to_string(i) + "]: " + e.what());
        }
    }
    if (std::set<std::string>(alphabet.begin(), alphabet.end()).size() != alphabet.size())
        throw InputError("field \"alphabet\" lists a letter twice");

    AutomatonBuilder b(alphabet);
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (b.has_state(states[i]))
            throw InputError("states[" + std::to_string(i) + "]: duplicate state " + json_quote(states[i]));
        try {
            b.add_state(states[i]);
        } catch (const InputError& e) {
            throw InputError("states[" + std::to_string(i) + "]: " + e.what());
        }
    }
    auto mark = [&](const std::vector<std::string>& names, const char* field, bool is_initial) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (!b.has_state(names[i]))
                throw InputError(std::string(field) + "[" + std::to_string(i) + "]: unknown state " +
                                 json_quote(names[i]));
            if (is_initial) {
                b.set_initial(b.state_id(names[i]));
            } else {
                b.set_accepting(b.state_id(names[i]));
            }
        }
    };
    mark(initial, "initial", true);
    mark(accepting, "accepting", false);

    auto it = doc.find("transitions");
    if (it != doc.end()) {
        if (!it->is_array()) throw InputError("field \"transitions\" must be a list");
        std::set<std::array<std::string, 3>> seen;
        for (std::size_t i = 0; i < it->size(); ++i) {
            const auto& t = (*it)[i];
            const auto where = "transitions[" + std::to_string(i) + "]";
            if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() || !t[2].is_string())
                throw InputError(where + ": expected [from, letter, to], got " + t.dump());
            std::array<std::string, 3> triple{t[0].get<std::string>(), t[1].get<std::string>(),
                                              t[2].get<std::string>()};
            if (!seen.insert(triple).second) {
                if (warnings != nullptr) warnings->push_back(where + ": duplicate transition " + t.dump() + " ignored");
                continue;
            }
            try {
                b.add_transition(triple[0], triple[1], triple[2]);
            } catch (const InputError& e) {
                throw InputError(where + ": " + e.what());
            }
        }
    }
    return b.build();
}

std::string serialize_automaton(const Automaton& a) {
    auto transitions = a.transitions();
    std::sort(transitions.begin(), transitions.end(), [](const Transition& x, const Transition& y) {
        if (x.from != y.from) return state_name_less(x.from, y.from);
        if (x.letter != y.letter) return x.letter < y.letter;
        return state_name_less(x.to, y.to);
    });
    std::ostringstream out;
    out << "{\n";
    out << "  \"alphabet\": " << quoted_list(a.alphabet(), false) << ",\n";
    out << "  \"states\": " << quoted_list(a.state_names(), true) << ",\n";
    out << "  \"initial\": " << quoted_list(a.names_of(a.initial()), true) << ",\n";
    out << "  \"accepting\": " << quoted_list(a.names_of(a.accepting()), true) << ",\n";
    out << "  \"transitions\": [";
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        const auto& t = transitions[i];
        out << (i == 0 ? "\n" : ",\n") << "    [" << json_quote(t.from) << ", " << json_quote(t.letter) << ", "
            << json_quote(t.to) << "]";
    }
    out << (transitions.empty() ? "]\n" : "\n  ]\n");
    out << "}\n";
    return out.str();
}

std::string to_dot(const Automaton& a) {
    std::ostringstream out;
    out << "digraph automaton {\n  rankdir=LR;\n";
    for (StateId q = 0; q < a.num_states(); ++q) {
        out << "  " << json_quote(a.state_name(q)) << " [shape=" << (a.is_accepting(q) ? "doublecircle" : "circle")
            << "];\n";
    }
    a.initial().for_each([&](StateId q) {
        out << "  " << json_quote("__init_" + a.state_name(q)) << " [shape=point];\n";
        out << "  " << json_quote("__init_" + a.state_name(q)) << " -> " << json_quote(a.state_name(q)) << ";\n";
    });
    // One edge per state pair, labelled with all its letters.
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> edges;
    for (const auto& t : a.transitions()) edges[{t.from, t.to}].push_back(t.letter);
    for (const auto& [ends, letters] : edges) {
        std::string label;
        for (const auto& x : letters) label += (label.empty() ? "" : ",") + x;
        out << "  " << json_quote(ends.first) << " -> " << json_quote(ends.second) << " [label=" << json_quote(label) << "];\n";
    }
    out << "}\n";
    return out.str();
}

CnfFormula parse_dimacs(std::string_view text) {
    CnfFormula phi;
    std::optional<std::size_t> declared_clauses;
    std::vector<int> current;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first) || first == "c") continue;
        if (first == "%") break;
        if (first == "p") {
            std::string format;
            long long vars = -1;
            long long clauses = -1;
            if (declared_clauses) throw InputError(where() + "second problem line");
            if (!(tokens >> format >> vars >> clauses) || format != "cnf" || vars <= 0 || clauses < 0)
                throw InputError(where() + "expected \"p cnf <vars> <clauses>\"");
            phi.num_vars = static_cast<std::size_t>(vars);
            declared_clauses = static_cast<std::size_t>(clauses);
            continue;
        }
        if (!declared_clauses) throw InputError(where() + "clause before the problem line");
        std::istringstream body(line);
        std::string token;
        while (body >> token) {
            int lit = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), lit);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw InputError(where() + "invalid literal \"" + token + "\"");
            if (lit == 0) {
                phi.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (static_cast<std::size_t>(std::abs(lit)) > phi.num_vars)
                throw InputError(where() + "literal " + token + " exceeds the declared " +
                                 std::to_string(phi.num_vars) + " variables");
            current.push_back(lit);
        }
    }
    if (!declared_clauses) throw InputError("missing \"p cnf\" problem line");
    if (!current.empty()) phi.clauses.push_back(std::move(current));
    if (phi.clauses.size() != *declared_clauses)
        throw InputError("problem line declares " + std::to_string(*declared_clauses) + " clauses, found " +
                         std::to_string(phi.clauses.size()));
    phi.validate();
    return phi;
}

namespace {

bool multi_character(const std::vector<Letter>& alphabet) {
    return std::any_of(alphabet.begin(), alphabet.end(), [](const Letter& x) { return x.size() > 1; });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
    return s;
}

} // namespace

Word parse_word(std::string_view text, const std::vector<Letter>& alphabet) {
    Word w;
    text = trim(text);
    if (text.empty()) return w;
    std::set<Letter> known(alphabet.begin(), alphabet.end());
    auto push = [&](std::string_view symbol) {
        Letter x(trim(symbol));
        if (!known.contains(x)) throw InputError("unknown letter \"" + x + "\" in word");
        w.push_back(std::move(x));
    };
    if (multi_character(alphabet)) {
        std::size_t start = 0;
        for (;;) {
            auto comma = text.find(',', start);
            push(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else {
        for (std::size_t i = 0; i < text.size(); ++i) push(text.substr(i, 1));
    }
    return w;
}

std::string format_word(const Word& w, const std::vector<Letter>& alphabet) {
    const bool commas = multi_character(alphabet);
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (commas && i != 0) out += ',';
        out += w[i];
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write \"" + path + "\"");
    out << content;
}

} // namespace ptk
