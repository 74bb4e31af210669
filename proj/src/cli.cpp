#include "katop/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "katop/automata.hpp"
#include "katop/closure.hpp"
#include "katop/decide.hpp"
#include "katop/errors.hpp"
#include "katop/graphs.hpp"
#include "katop/gstring.hpp"
#include "katop/relmodel.hpp"
#include "katop/syntax.hpp"

namespace katop {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string letters;
    std::string atoms;
    std::string tests;
    std::string theory = "katf";
    bool json_output = false;
    std::size_t cap = std::size_t{1} << 20;
    std::uint64_t seed = 1;
    std::size_t samples = 0;

    std::string first, second, third;
    std::size_t steps = 1;
    std::size_t max_length = 8;
    std::string mode = "F";
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

// `@path` names a file when the whole argument is a path to an existing file;
// otherwise the text is taken literally (it may be an atom constant).
std::string read_input(const std::string& arg) {
    if (arg.size() < 2 || arg[0] != '@' || arg.find_first_of(" \t\n") != std::string::npos) return arg;
    const std::filesystem::path path(arg.substr(1));
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) return arg;
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    return text;
}

Alphabet expression_alphabet(const Options& o, const std::vector<std::string>& texts) {
    std::vector<std::string> letters;
    if (!o.letters.empty()) {
        letters = split_list(o.letters);
    } else {
        std::set<std::string> found;
        for (const auto& t : texts)
            for (auto& l : infer_letters(t)) found.insert(l);
        letters.assign(found.begin(), found.end());
    }
    if (!o.tests.empty()) return Alphabet::with_tests(letters, split_list(o.tests));
    if (!o.atoms.empty()) return Alphabet::make(letters, split_list(o.atoms));
    return Alphabet::single_atom(letters);
}

// For commands that only take guarded strings: undeclared atoms and letters
// are read off the alternation atom, symbol, atom, ….
Alphabet string_alphabet(const Options& o, const std::vector<std::string>& texts) {
    std::vector<std::string> letters = split_list(o.letters);
    std::vector<std::string> atoms = split_list(o.atoms);
    if (!o.tests.empty()) return Alphabet::with_tests(letters, split_list(o.tests));
    if (!atoms.empty() && !letters.empty()) return Alphabet::make(letters, atoms);
    std::set<std::string> declared(letters.begin(), letters.end());
    std::vector<std::string> found_atoms = atoms, found_letters = letters;
    auto add = [](std::vector<std::string>& v, const std::string& s) {
        if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
    };
    for (const auto& t : texts) {
        std::istringstream in(t);
        std::size_t i = 0;
        for (std::string tok; in >> tok; ++i) {
            if (tok == "T" || tok == "top") continue;
            if (!letters.empty()) {
                if (!declared.contains(tok)) add(found_atoms, tok);
            } else if (!atoms.empty()) {
                if (std::find(atoms.begin(), atoms.end(), tok) == atoms.end()) add(found_letters, tok);
            } else {
                add(i % 2 == 0 ? found_atoms : found_letters, tok);
            }
        }
    }
    if (found_atoms.empty()) found_atoms.push_back("alpha");
    return Alphabet::make(found_letters, found_atoms);
}

Theory theory_of(const Options& o) {
    auto th = parse_theory(o.theory);
    if (!th) throw Error("unknown theory '" + o.theory + "' (expected kat, katt or katf)");
    return *th;
}

json certificate_json(const Certificate& c, const Alphabet& alphabet) {
    json model;
    model["kind"] = c.relational ? "relational" : "language";
    model["carrier"] = c.model.carrier;
    json atoms = json::array();
    for (auto a : c.model.atom_of) atoms.push_back(alphabet.atom_name(a));
    model["atoms"] = atoms;
    auto pairs = [&](const Relation& r) {
        json p = json::array();
        for (std::size_t i = 0; i < c.model.carrier; ++i)
            for (std::size_t j = 0; j < c.model.carrier; ++j)
                if (r.get(i, j)) p.push_back({i, j});
        return p;
    };
    json rels = json::object();
    for (std::size_t l = 0; l < c.model.valuation.size(); ++l) rels[alphabet.letters()[l]] = pairs(c.model.valuation[l]);
    if (c.model.top_letter) rels["T"] = pairs(*c.model.top_letter);
    model["relations"] = rels;
    model["pair"] = {c.source, c.target};
    model["left_contains_pair"] = c.left_holds;
    model["right_contains_pair"] = c.right_holds;
    return model;
}

int report_verdict(const Verdict& v, Theory th, bool inequation, const Alphabet& alphabet, const Options& o,
                   std::ostream& out) {
    const char* verdict = inequation ? (v.equal ? "holds" : "fails") : (v.equal ? "equal" : "not_equal");
    if (o.json_output) {
        json j;
        j["verdict"] = verdict;
        j["theory"] = to_string(th);
        if (v.witness) {
            j["witness"] = to_string(*v.witness, alphabet);
            j["holder"] = v.holder == Side::Left ? "left" : "right";
        }
        if (v.countermodel) j["countermodel"] = certificate_json(*v.countermodel, alphabet);
        j["stats"] = {{"visited", v.stats.visited}, {"millis", v.stats.millis}};
        out << j.dump(2) << '\n';
    } else {
        out << "theory: " << to_string(th) << '\n';
        out << "verdict: " << verdict << '\n';
        if (v.witness) {
            out << "witness: " << to_string(*v.witness, alphabet) << " (only in the "
                << (v.holder == Side::Left ? "left" : "right") << " side)\n";
        }
        if (v.countermodel) {
            const auto& c = *v.countermodel;
            out << (c.relational ? "countermodel" : "language word model") << ", pair (" << c.source << ","
                << c.target << "): left " << (c.left_holds ? "contains" : "misses") << " it, right "
                << (c.right_holds ? "contains" : "misses") << " it\n";
            out << c.model.dump(alphabet);
        }
        out << "visited: " << v.stats.visited << " configurations in " << v.stats.millis << " ms\n";
    }
    return v.equal ? kExitHolds : kExitFails;
}

int report_bool(bool value, const char* what, const Options& o, std::ostream& out) {
    if (o.json_output) {
        json j;
        j["verdict"] = value;
        j["query"] = what;
        out << j.dump(2) << '\n';
    } else {
        out << (value ? "true" : "false") << '\n';
    }
    return value ? kExitHolds : kExitFails;
}

// Checks an Equal verdict against sampled relational models.
void sample_check(const Expr& e, const Expr& f, const Alphabet& alphabet, const Options& o, std::ostream& out) {
    if (o.samples == 0) return;
    std::size_t agreed = 0;
    for (const auto& m : sample_models(alphabet, 4, o.samples, o.seed))
        if (eval(e, m, alphabet) == eval(f, m, alphabet)) ++agreed;
    if (!o.json_output) out << "sampled models: " << agreed << "/" << o.samples << " agree\n";
}

int cmd_compare(const Options& o, bool inequation, std::ostream& out) {
    const std::string lhs = read_input(o.first), rhs = read_input(o.second);
    const Alphabet alphabet = expression_alphabet(o, {lhs, rhs});
    const Expr e = parse(lhs, alphabet), f = parse(rhs, alphabet);
    const Theory th = theory_of(o);
    const Verdict v = inequation ? leq(e, f, th, alphabet, {o.cap}) : decide(e, f, th, alphabet, {o.cap});
    const int status = report_verdict(v, th, inequation, alphabet, o, out);
    if (v.equal && th == Theory::KAT_F) sample_check(inequation ? Expr::plus(e, f) : e, f, alphabet, o, out);
    return status;
}

int cmd_member(const Options& o, std::ostream& out) {
    const std::string text = read_input(o.first);
    const Alphabet alphabet = expression_alphabet(o, {text});
    const Expr e = parse(text, alphabet);
    const GuardedString u = parse_guarded_string(read_input(o.second), alphabet);
    return report_bool(member(e, u, theory_of(o), alphabet), "member", o, out);
}

int cmd_hom(const Options& o, std::ostream& out) {
    const std::string a = read_input(o.first), b = read_input(o.second);
    const Alphabet alphabet = string_alphabet(o, {a, b});
    const GuardedString u = parse_guarded_string(a, alphabet);
    const GuardedString v = parse_guarded_string(b, alphabet);
    return report_bool(dominated(u, v), "hom", o, out);
}

int cmd_closure(const Options& o, std::ostream& out) {
    const std::string text = read_input(o.first);
    const Alphabet alphabet = string_alphabet(o, {text});
    const GuardedString u = parse_guarded_string(text, alphabet);
    const bool f_steps = o.mode != "T" && o.mode != "t";
    std::set<GuardedString> reached{u};
    std::set<GuardedString> frontier{u};
    for (std::size_t step = 0; step < o.steps; ++step) {
        std::set<GuardedString> next;
        for (const auto& w : frontier)
            for (auto& v : f_steps ? rewrites_F(w) : rewrites_T(w))
                if (v.length() <= o.max_length && !reached.contains(v)) next.insert(v);
        reached.insert(next.begin(), next.end());
        frontier = std::move(next);
    }
    if (o.json_output) {
        json j;
        j["mode"] = f_steps ? "F" : "T";
        j["steps"] = o.steps;
        json list = json::array();
        for (const auto& v : reached) list.push_back(to_string(v, alphabet));
        j["strings"] = list;
        out << j.dump(2) << '\n';
    } else {
        for (const auto& v : reached) out << to_string(v, alphabet) << '\n';
    }
    return kExitHolds;
}

std::string strip_brackets(std::string s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return s;
    s = s.substr(b, e - b + 1);
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    return s;
}

// [α] e [β] holds iff β ≤ ⊤·α·e under KAT_F.
int cmd_triple(const Options& o, std::ostream& out) {
    if (o.atoms.empty() && o.tests.empty()) throw Error("triple needs --atoms or --tests");
    const std::string body = read_input(o.second);
    const Alphabet alphabet = expression_alphabet(o, {body});
    const Expr pre = parse_guard(strip_brackets(read_input(o.first)), alphabet);
    const Expr prog = parse(body, alphabet);
    const Expr post = parse_guard(strip_brackets(read_input(o.third)), alphabet);
    const Expr rhs = Expr::dot(Expr::dot(Expr::top(), pre), prog);
    const Theory th = theory_of(o);
    if (!o.json_output) out << "inequation: " << print(post) << " <= " << print(rhs) << '\n';
    const Verdict v = leq(post, rhs, th, alphabet, {o.cap});
    return report_verdict(v, th, true, alphabet, o, out);
}

int cmd_nfa(const Options& o, std::ostream& out) {
    const std::string text = read_input(o.first);
    const Alphabet alphabet = expression_alphabet(o, {text});
    const Expr e = parse(text, alphabet);
    const Theory th = theory_of(o);
    out << build_nfa(th == Theory::KAT ? e : reduce_top(e, alphabet), alphabet).to_text(alphabet);
    return kExitHolds;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decide equations of Kleene algebra with tests and top", "katop"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--letters", o.letters, "Letters, comma separated (default: inferred)");
    auto* atoms = app.add_option("--atoms", o.atoms, "Atoms, comma separated (default: alpha)");
    app.add_option("--tests", o.tests, "Test variables, comma separated")->excludes(atoms);
    app.add_option("--theory", o.theory, "kat, katt or katf")->capture_default_str();
    app.add_flag("--json", o.json_output, "JSON output");
    app.add_option("--cap", o.cap, "Visited-configuration cap")->capture_default_str();
    app.add_option("--seed", o.seed, "Seed for sampled models")->capture_default_str();
    app.add_option("--samples", o.samples, "Cross-check equal verdicts on this many random models");

    auto* eq = app.add_subcommand("eq", "Decide e = f");
    eq->add_option("e", o.first, "Expression or @file")->required();
    eq->add_option("f", o.second, "Expression or @file")->required();
    auto* le = app.add_subcommand("leq", "Decide e <= f");
    le->add_option("e", o.first, "Expression or @file")->required();
    le->add_option("f", o.second, "Expression or @file")->required();
    auto* mem = app.add_subcommand("member", "Membership of a guarded string in the closed language of e");
    mem->add_option("e", o.first, "Expression or @file")->required();
    mem->add_option("u", o.second, "Guarded string, e.g. 'alpha a alpha T alpha'")->required();
    auto* clo = app.add_subcommand("closure", "Enumerate rewrites of a guarded string");
    clo->add_option("u", o.first, "Guarded string")->required();
    clo->add_option("--steps", o.steps, "Rewrite depth")->capture_default_str();
    clo->add_option("--max-length", o.max_length, "Longest string kept")->capture_default_str();
    clo->add_option("--mode", o.mode, "T or F")->capture_default_str();
    auto* hom = app.add_subcommand("hom", "Whether g(u) ◁ g(v)");
    hom->add_option("u", o.first, "Guarded string")->required();
    hom->add_option("v", o.second, "Guarded string")->required();
    auto* tri = app.add_subcommand("triple", "Incorrectness triple [a] e [b], as b <= top;a;e");
    tri->add_option("pre", o.first, "Test or atom sum")->required();
    tri->add_option("e", o.second, "Expression or @file")->required();
    tri->add_option("post", o.third, "Test or atom sum")->required();
    auto* nfa = app.add_subcommand("nfa", "Print the automaton used for e");
    nfa->add_option("e", o.first, "Expression or @file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitHolds : kExitError;
    }

    try {
        if (*eq) return cmd_compare(o, false, out);
        if (*le) return cmd_compare(o, true, out);
        if (*mem) return cmd_member(o, out);
        if (*clo) return cmd_closure(o, out);
        if (*hom) return cmd_hom(o, out);
        if (*tri) return cmd_triple(o, out);
        if (*nfa) return cmd_nfa(o, out);
    } catch (const ResourceLimit& e) {
        err << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace katop
