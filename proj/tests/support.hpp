#pragma once

// Shared fixtures and independent oracles for the test suites.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "katop/alphabet.hpp"
#include "katop/gstring.hpp"
#include "katop/syntax.hpp"

namespace katop::testing {

inline GuardedString gs(const std::string& text, const Alphabet& alphabet) {
    return parse_guarded_string(text, alphabet);
}

inline Expr ex(const std::string& text, const Alphabet& alphabet) { return parse(text, alphabet); }

// End positions reachable after matching e against word[from..]. Works on
// the raw word language, with atoms and ⊤ as ordinary symbols.
inline std::set<std::size_t> match_ends(const Expr& e, const Word& word, std::size_t from,
                                        const Alphabet& alphabet) {
    using K = Expr::Kind;
    auto symbol_at = [&](WordSymbol s) { return from < word.size() && word[from] == s; };
    switch (e.kind()) {
        case K::Zero: return {};
        case K::One: return {from};
        case K::Top:
            if (symbol_at(alphabet.word_symbol(kTop))) return {from + 1};
            return {};
        case K::Atom:
            if (symbol_at(alphabet.word_atom(*alphabet.find_atom(e.name())))) return {from + 1};
            return {};
        case K::Letter:
            if (symbol_at(alphabet.word_symbol(*alphabet.find_letter(e.name())))) return {from + 1};
            return {};
        case K::Plus: {
            auto l = match_ends(e.left(), word, from, alphabet);
            auto r = match_ends(e.right(), word, from, alphabet);
            l.insert(r.begin(), r.end());
            return l;
        }
        case K::Dot: {
            std::set<std::size_t> out;
            for (auto mid : match_ends(e.left(), word, from, alphabet)) {
                auto r = match_ends(e.right(), word, mid, alphabet);
                out.insert(r.begin(), r.end());
            }
            return out;
        }
        case K::Star: {
            std::set<std::size_t> out{from};
            std::vector<std::size_t> todo{from};
            while (!todo.empty()) {
                auto p = todo.back();
                todo.pop_back();
                for (auto q : match_ends(e.left(), word, p, alphabet))
                    if (out.insert(q).second) todo.push_back(q);
            }
            return out;
        }
    }
    return {};
}

inline bool word_in_lang(const Expr& e, const Word& word, const Alphabet& alphabet) {
    return match_ends(e, word, 0, alphabet).contains(word.size());
}

// Every word over Atom ∪ Σ⊤ of length ≤ n.
inline std::vector<Word> all_words(const Alphabet& alphabet, std::size_t n) {
    std::vector<Word> out{{}};
    std::vector<Word> layer{{}};
    for (std::size_t len = 1; len <= n; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (int s = 0; s < alphabet.num_word_symbols(); ++s) {
                auto v = w;
                v.push_back(s);
                next.push_back(v);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

// Random expression with roughly `size` nodes.
class ExprGen {
public:
    ExprGen(std::uint64_t seed, Alphabet alphabet, bool with_top, bool with_atoms = true)
        : rng_(seed), alphabet_(std::move(alphabet)), with_top_(with_top), with_atoms_(with_atoms) {}

    Expr operator()(int size) {
        if (size <= 1) return leaf();
        std::uniform_int_distribution<int> pick(0, 3);
        switch (pick(rng_)) {
            case 0: return Expr::star(operator()(size - 1));
            case 1: {
                int l = split(size - 1);
                return Expr::plus(operator()(l), operator()(size - 1 - l));
            }
            default: {
                int l = split(size - 1);
                return Expr::dot(operator()(l), operator()(size - 1 - l));
            }
        }
    }

    std::mt19937_64& rng() { return rng_; }

private:
    int split(int n) { return std::uniform_int_distribution<int>(std::min(1, n), std::max(1, n - 1))(rng_); }

    Expr leaf() {
        std::vector<Expr> choices{Expr::zero(), Expr::one()};
        for (const auto& l : alphabet_.letters()) {
            choices.push_back(Expr::letter(l));
            choices.push_back(Expr::letter(l));
        }
        if (with_top_) {
            choices.push_back(Expr::top());
            choices.push_back(Expr::top());
        }
        if (with_atoms_ && alphabet_.num_atoms() > 1)
            for (const auto& a : alphabet_.atoms()) choices.push_back(Expr::atom(a));
        std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
        return choices[pick(rng_)];
    }

    std::mt19937_64 rng_;
    Alphabet alphabet_;
    bool with_top_;
    bool with_atoms_;
};

// Expressions over letters a, b and the single atom alpha.
inline const std::vector<std::string>& corpus() {
    static const std::vector<std::string> texts{
        "0",
        "1",
        "a",
        "top",
        "a;b",
        "a+b",
        "a*",
        "(a;b)*",
        "(aaa)*",
        "(aa)*;a",
        "a;top;a",
        "top;a;top",
        "top;a;top;b;top",
        "top;b;top;a;top",
        "a + a;top;a",
        "(a+b)*",
        "(a*;b)*;a*",
        "(aaa)*;top;(aa)* + (aa)*;a;top;(aaa)*",
        "a;top + top;b",
        "(a;top)*",
        "(top;a)*;b",
        "@alpha;a;@alpha",
        "a*;top;b*",
        "(a+top)*",
        "b;(a+1);top;(1+a);b",
    };
    return texts;
}

inline Alphabet corpus_alphabet() { return Alphabet::single_atom({"a", "b"}); }

// Whether the word of w occurs as a factor of the word of u, atoms included.
inline bool is_factor(const GuardedString& w, const GuardedString& u) {
    if (w.length() > u.length()) return false;
    for (std::size_t i = 0; i + w.length() <= u.length(); ++i)
        if (u.slice(i, i + w.length()) == w) return true;
    return false;
}

}  // namespace katop::testing
