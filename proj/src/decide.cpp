#include "katop/decide.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <unordered_set>
#include <vector>

#include "katop/errors.hpp"
#include "katop/recogniser.hpp"

namespace katop {

std::string to_string(Theory th) {
    switch (th) {
    case Theory::KAT: return "kat";
    case Theory::KAT_T: return "katt";
    case Theory::KAT_F: return "katf";
    }
    return "?";
}

std::optional<Theory> parse_theory(std::string_view name) {
    std::string lower;
    for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "kat") return Theory::KAT;
    if (lower == "katt" || lower == "kat_t") return Theory::KAT_T;
    if (lower == "katf" || lower == "kat_f") return Theory::KAT_F;
    return std::nullopt;
}

namespace {

Recogniser recogniser_for(const Expr& e, Theory th, const Alphabet& alphabet) {
    switch (th) {
    case Theory::KAT: return Recogniser::make_base(e, alphabet);
    case Theory::KAT_T: return Recogniser::make_base(reduce_top(e, alphabet), alphabet);
    case Theory::KAT_F: return Recogniser::make_eclosed(reduce_top(e, alphabet), alphabet);
    }
    throw Error("unknown theory");
}

struct Config {
    BoolMatrix x;
    BoolMatrix y;
    std::size_t parent;
    AtomId atom;
    SymbolId symbol;
};

constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

}  // namespace

Certificate certify(const Expr& e, const Expr& f, const GuardedString& witness, Theory th,
                    const Alphabet& alphabet) {
    Certificate c;
    c.relational = th == Theory::KAT_F;
    const auto wm = word_model(witness, alphabet, !c.relational);
    const Expr lhs = th == Theory::KAT_T ? reduce_top(e, alphabet) : e;
    const Expr rhs = th == Theory::KAT_T ? reduce_top(f, alphabet) : f;
    c.model = wm.model;
    c.source = wm.source;
    c.target = wm.target;
    c.left_holds = eval(lhs, wm.model, alphabet).get(wm.source, wm.target);
    c.right_holds = eval(rhs, wm.model, alphabet).get(wm.source, wm.target);
    return c;
}

Verdict decide(const Expr& e, const Expr& f, Theory th, const Alphabet& alphabet, const Limits& limits) {
    const auto started = std::chrono::steady_clock::now();
    check_alphabet(e, alphabet);
    check_alphabet(f, alphabet);
    const Recogniser left = recogniser_for(e, th, alphabet);
    const Recogniser right = recogniser_for(f, th, alphabet);

    std::vector<Config> nodes;
    auto hash = [&](std::size_t i) { return nodes[i].x.hash() * 31 + nodes[i].y.hash(); };
    auto same = [&](std::size_t i, std::size_t j) { return nodes[i].x == nodes[j].x && nodes[i].y == nodes[j].y; };
    std::unordered_set<std::size_t, decltype(hash), decltype(same)> visited(1024, hash, same);

    nodes.push_back({left.identity(), right.identity(), kRoot, 0, 0});
    visited.insert(0);

    const auto symbols = alphabet.symbols();
    Verdict verdict;
    for (std::size_t cur = 0; cur < nodes.size(); ++cur) {
        for (AtomId a = 0; a < alphabet.num_atoms(); ++a) {
            const bool p = left.accept(nodes[cur].x, a);
            const bool q = right.accept(nodes[cur].y, a);
            if (p == q) continue;
            GuardedString w;
            for (std::size_t n = cur; nodes[n].parent != kRoot; n = nodes[n].parent)
                w.pairs.emplace_back(nodes[n].atom, nodes[n].symbol);
            std::reverse(w.pairs.begin(), w.pairs.end());
            w.last = a;
            verdict.equal = false;
            verdict.witness = w;
            verdict.holder = p ? Side::Left : Side::Right;
            break;
        }
        if (!verdict.equal) break;
        for (AtomId a = 0; a < alphabet.num_atoms(); ++a) {
            for (SymbolId s : symbols) {
                nodes.push_back({left.step(nodes[cur].x, a, s), right.step(nodes[cur].y, a, s), cur, a, s});
                if (!visited.insert(nodes.size() - 1).second) {
                    nodes.pop_back();
                } else if (nodes.size() > limits.visited_cap) {
                    throw ResourceLimit(nodes.size(), limits.visited_cap);
                }
            }
        }
    }
    verdict.stats.visited = nodes.size();

    if (!verdict.equal) {
        Certificate c = certify(e, f, *verdict.witness, th, alphabet);
        const bool expected_left = verdict.holder == Side::Left;
        if (c.left_holds != expected_left || c.right_holds == expected_left)
            throw VerificationFailure("witness " + to_string(*verdict.witness, alphabet) +
                                      " is not separated by its word model");
        verdict.countermodel = std::move(c);
    }
    verdict.stats.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return verdict;
}

Verdict leq(const Expr& e, const Expr& f, Theory th, const Alphabet& alphabet, const Limits& limits) {
    return decide(Expr::plus(e, f), f, th, alphabet, limits);
}

bool member(const Expr& e, const GuardedString& u, Theory th, const Alphabet& alphabet) {
    check_alphabet(e, alphabet);
    return recogniser_for(e, th, alphabet).accepts(u);
}

}  // namespace katop
