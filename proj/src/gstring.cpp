#include "katop/gstring.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>

#include "katop/errors.hpp"

namespace katop {

namespace {

// ⊤ sorts after every letter.
int symbol_rank(SymbolId s) { return s == kTop ? INT_MAX : s; }

}  // namespace

std::size_t GuardedString::count_top() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return p.second == kTop; }));
}

GuardedString GuardedString::slice(std::size_t i, std::size_t j) const {
    if (i > j || j > length()) throw Error("guarded string slice out of range");
    GuardedString out;
    out.pairs.assign(pairs.begin() + static_cast<std::ptrdiff_t>(i), pairs.begin() + static_cast<std::ptrdiff_t>(j));
    out.last = atom_at(j);
    return out;
}

std::strong_ordering operator<=>(const GuardedString& a, const GuardedString& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (auto c = a.pairs[i].first <=> b.pairs[i].first; c != 0) return c;
        if (auto c = symbol_rank(a.pairs[i].second) <=> symbol_rank(b.pairs[i].second); c != 0) return c;
    }
    return a.last <=> b.last;
}

std::optional<GuardedString> coalesce(const GuardedString& u, const GuardedString& v) {
    if (u.last != v.first()) return std::nullopt;
    GuardedString out = u;
    out.pairs.insert(out.pairs.end(), v.pairs.begin(), v.pairs.end());
    out.last = v.last;
    return out;
}

GuardedString join_with_top(const GuardedString& u, const GuardedString& v) {
    GuardedString out = u;
    out.pairs.emplace_back(u.last, kTop);
    out.pairs.insert(out.pairs.end(), v.pairs.begin(), v.pairs.end());
    out.last = v.last;
    return out;
}

GuardedString top_power(const GuardedString& u, std::size_t n) {
    GuardedString out = u;
    for (std::size_t i = 0; i < n; ++i) out = join_with_top(out, u);
    return out;
}

std::string to_string(const GuardedString& u, const Alphabet& alphabet) {
    std::string out;
    for (const auto& [a, s] : u.pairs) {
        out += alphabet.atom_name(a);
        out += ' ';
        out += alphabet.symbol_name(s);
        out += ' ';
    }
    out += alphabet.atom_name(u.last);
    return out;
}

GuardedString parse_guarded_string(std::string_view text, const Alphabet& alphabet) {
    std::vector<std::string> tokens;
    {
        std::istringstream in{std::string(text)};
        for (std::string tok; in >> tok;) tokens.push_back(tok);
    }
    auto symbol_of = [&](const std::string& tok) -> std::optional<SymbolId> {
        if (tok == "T" || tok == "top") return kTop;
        return alphabet.find_letter(tok);
    };
    const bool implicit_atoms = alphabet.num_atoms() == 1;
    GuardedString out;
    std::optional<AtomId> pending;
    for (const auto& tok : tokens) {
        if (auto a = alphabet.find_atom(tok)) {
            if (pending) throw Error("guarded string has two consecutive atoms near '" + tok + "'");
            pending = *a;
            continue;
        }
        auto s = symbol_of(tok);
        if (!s) throw UnknownIdentifier(tok, "neither an atom nor a letter");
        if (!pending) {
            if (!implicit_atoms) throw Error("guarded string is missing an atom before '" + tok + "'");
            pending = 0;
        }
        out.pairs.emplace_back(*pending, *s);
        pending.reset();
    }
    if (!pending) {
        if (!implicit_atoms) throw Error("guarded string must end with an atom");
        pending = 0;
    }
    out.last = *pending;
    return out;
}

bool gs_matches(const Word& word, const GuardedString& u, const Alphabet& alphabet) {
    std::size_t k = 0;  // current atom position in u
    for (WordSymbol w : word) {
        if (alphabet.is_atom_symbol(w)) {
            if (w != alphabet.word_atom(u.atom_at(k))) return false;
        } else {
            if (k == u.length() || w != alphabet.word_symbol(u.symbol_at(k))) return false;
            ++k;
        }
    }
    return k == u.length();
}

GsLang GsLang::truncate(std::size_t b) const {
    GsLang out;
    out.bound = std::min(b, bound);
    for (const auto& u : elems)
        if (u.length() <= out.bound) out.elems.insert(u);
    return out;
}

namespace {

using Lang = std::set<GuardedString>;

Lang product(const Lang& l, const Lang& k, std::size_t bound) {
    std::map<AtomId, std::vector<const GuardedString*>> by_first;
    for (const auto& v : k) by_first[v.first()].push_back(&v);
    Lang out;
    for (const auto& u : l) {
        auto it = by_first.find(u.last);
        if (it == by_first.end()) continue;
        for (const auto* v : it->second)
            if (u.length() + v->length() <= bound) out.insert(*coalesce(u, *v));
    }
    return out;
}

Lang all_atoms(const Alphabet& alphabet) {
    Lang out;
    for (AtomId a = 0; a < alphabet.num_atoms(); ++a) out.insert(GuardedString::atom(a));
    return out;
}

Lang denote(const Expr& e, std::size_t bound, const Alphabet& alphabet) {
    switch (e.kind()) {
    case Expr::Kind::Zero: return {};
    case Expr::Kind::One: return all_atoms(alphabet);
    case Expr::Kind::Atom: {
        auto a = alphabet.find_atom(e.name());
        if (!a) throw AlphabetError("atom '" + e.name() + "' is not in the alphabet");
        return {GuardedString::atom(*a)};
    }
    case Expr::Kind::Top:
    case Expr::Kind::Letter: {
        SymbolId s = kTop;
        if (e.kind() == Expr::Kind::Letter) {
            auto l = alphabet.find_letter(e.name());
            if (!l) throw AlphabetError("letter '" + e.name() + "' is not in the alphabet");
            s = *l;
        }
        Lang out;
        if (bound == 0) return out;
        for (AtomId a = 0; a < alphabet.num_atoms(); ++a)
            for (AtomId b = 0; b < alphabet.num_atoms(); ++b) out.insert(GuardedString{{{a, s}}, b});
        return out;
    }
    case Expr::Kind::Plus: {
        Lang out = denote(e.left(), bound, alphabet);
        out.merge(denote(e.right(), bound, alphabet));
        return out;
    }
    case Expr::Kind::Dot:
        return product(denote(e.left(), bound, alphabet), denote(e.right(), bound, alphabet), bound);
    case Expr::Kind::Star: {
        const Lang body = denote(e.left(), bound, alphabet);
        Lang acc = all_atoms(alphabet);
        Lang frontier = acc;
        while (!frontier.empty()) {
            Lang next;
            for (auto& u : product(frontier, body, bound))
                if (!acc.contains(u)) next.insert(u);
            acc.insert(next.begin(), next.end());
            frontier = std::move(next);
        }
        return acc;
    }
    }
    return {};
}

}  // namespace

GsLang denote_bounded(const Expr& e, std::size_t bound, const Alphabet& alphabet) {
    return GsLang{denote(e, bound, alphabet), bound};
}

std::vector<GuardedString> all_guarded_strings(const Alphabet& alphabet, std::size_t max_length, bool with_top) {
    std::vector<SymbolId> symbols;
    for (int i = 0; i < alphabet.num_letters(); ++i) symbols.push_back(i);
    if (with_top) symbols.push_back(kTop);

    std::vector<GuardedString> level;
    for (AtomId a = 0; a < alphabet.num_atoms(); ++a) level.push_back(GuardedString::atom(a));
    std::vector<GuardedString> out = level;
    for (std::size_t len = 1; len <= max_length; ++len) {
        std::vector<GuardedString> next;
        for (const auto& u : level)
            for (SymbolId s : symbols)
                for (AtomId a = 0; a < alphabet.num_atoms(); ++a) {
                    GuardedString v = u;
                    v.pairs.emplace_back(v.last, s);
                    v.last = a;
                    next.push_back(std::move(v));
                }
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

}  // namespace katop
