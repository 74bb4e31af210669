#include "katop/automata.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "katop/errors.hpp"

namespace katop {

Nfa::Nfa(std::size_t num_states, int num_symbols)
    : num_states_(num_states),
      final_mask_((num_states + 63) / 64, 0),
      delta_(static_cast<std::size_t>(num_symbols), BoolMatrix(num_states)) {}

void Nfa::add_initial(std::size_t s) {
    if (std::find(initial_.begin(), initial_.end(), s) == initial_.end()) initial_.push_back(s);
}

void Nfa::add_final(std::size_t s) {
    if (std::find(final_.begin(), final_.end(), s) == final_.end()) final_.push_back(s);
    final_mask_[s / 64] |= BoolMatrix::Word{1} << (s % 64);
}

void Nfa::add_transition(std::size_t src, WordSymbol x, std::size_t dst) {
    delta_.at(static_cast<std::size_t>(x)).set(src, dst);
}

bool Nfa::accepts_word(const Word& word) const {
    BoolMatrix r = BoolMatrix::identity(num_states_);
    for (WordSymbol x : word) r = r * delta(x);
    return accepting(r);
}

std::string Nfa::to_text(const Alphabet& alphabet) const {
    auto name = [&](WordSymbol x) {
        if (alphabet.is_atom_symbol(x)) return "@" + alphabet.atom_name(x);
        const int idx = x - alphabet.num_atoms();
        return idx == alphabet.num_letters() ? std::string("top") : alphabet.letters()[static_cast<std::size_t>(idx)];
    };
    std::string out;
    for (int x = 0; x < num_symbols(); ++x)
        for (std::size_t i = 0; i < num_states_; ++i)
            for (std::size_t j = 0; j < num_states_; ++j)
                if (delta(x).get(i, j)) out += std::to_string(i) + ' ' + name(x) + ' ' + std::to_string(j) + '\n';
    out += "initial";
    for (auto s : initial_) out += ' ' + std::to_string(s);
    out += "\nfinal";
    for (auto s : final_) out += ' ' + std::to_string(s);
    out += '\n';
    return out;
}

namespace {

// Derived terms are products t₁·…·tₖ of subterms of the input expression,
// stored as sequences of node ids; the empty sequence is 1.
using Term = std::vector<int>;

struct Flat {
    Expr::Kind kind;
    WordSymbol symbol = -1;
    int left = -1;
    int right = -1;
    bool nullable = false;
};

class Derivatives {
public:
    Derivatives(const Expr& e, const Alphabet& alphabet) : alphabet_(alphabet) { root_ = flatten(e); }

    int root() const { return root_; }

    bool nullable(const Term& t) const {
        return std::all_of(t.begin(), t.end(), [&](int n) { return nodes_[static_cast<std::size_t>(n)].nullable; });
    }

    std::set<Term> derive(const Term& t, WordSymbol x) const {
        std::set<Term> out;
        derive_seq(t, 0, x, out);
        return out;
    }

private:
    int flatten(const Expr& e) {
        Flat f{e.kind()};
        switch (e.kind()) {
        case Expr::Kind::Zero: break;
        case Expr::Kind::One: f.nullable = true; break;
        case Expr::Kind::Top: f.symbol = alphabet_.word_symbol(kTop); break;
        case Expr::Kind::Atom: {
            auto a = alphabet_.find_atom(e.name());
            if (!a) throw AlphabetError("atom '" + e.name() + "' is not in the alphabet");
            f.symbol = alphabet_.word_atom(*a);
            break;
        }
        case Expr::Kind::Letter: {
            auto l = alphabet_.find_letter(e.name());
            if (!l) throw AlphabetError("letter '" + e.name() + "' is not in the alphabet");
            f.symbol = alphabet_.word_symbol(*l);
            break;
        }
        case Expr::Kind::Plus:
        case Expr::Kind::Dot: {
            f.left = flatten(e.left());
            f.right = flatten(e.right());
            const bool l = nodes_[static_cast<std::size_t>(f.left)].nullable;
            const bool r = nodes_[static_cast<std::size_t>(f.right)].nullable;
            f.nullable = e.kind() == Expr::Kind::Plus ? (l || r) : (l && r);
            break;
        }
        case Expr::Kind::Star:
            f.left = flatten(e.left());
            f.nullable = true;
            break;
        }
        nodes_.push_back(f);
        return static_cast<int>(nodes_.size()) - 1;
    }

    // ∂ₓ(t_i · … · t_k)
    void derive_seq(const Term& t, std::size_t i, WordSymbol x, std::set<Term>& out) const {
        if (i == t.size()) return;
        std::set<Term> head;
        derive_node(t[i], x, head);
        for (const auto& h : head) {
            Term d = h;
            d.insert(d.end(), t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end());
            out.insert(std::move(d));
        }
        if (nodes_[static_cast<std::size_t>(t[i])].nullable) derive_seq(t, i + 1, x, out);
    }

    void derive_node(int n, WordSymbol x, std::set<Term>& out) const {
        const Flat& f = nodes_[static_cast<std::size_t>(n)];
        switch (f.kind) {
        case Expr::Kind::Zero:
        case Expr::Kind::One: return;
        case Expr::Kind::Top:
        case Expr::Kind::Atom:
        case Expr::Kind::Letter:
            if (f.symbol == x) out.insert(Term{});
            return;
        case Expr::Kind::Plus:
            derive_node(f.left, x, out);
            derive_node(f.right, x, out);
            return;
        case Expr::Kind::Dot: derive_seq(Term{f.left, f.right}, 0, x, out); return;
        case Expr::Kind::Star: {
            std::set<Term> body;
            derive_node(f.left, x, body);
            for (auto d : body) {
                d.push_back(n);
                out.insert(std::move(d));
            }
            return;
        }
        }
    }

    const Alphabet& alphabet_;
    std::vector<Flat> nodes_;
    int root_ = -1;
};

}  // namespace

Nfa build_nfa(const Expr& e, const Alphabet& alphabet) {
    const Derivatives d(e, alphabet);
    const int num_symbols = alphabet.num_word_symbols();

    std::map<Term, std::size_t> index;
    std::vector<Term> states;
    std::vector<std::tuple<std::size_t, WordSymbol, std::size_t>> edges;
    auto intern = [&](const Term& t) {
        auto [it, fresh] = index.try_emplace(t, states.size());
        if (fresh) states.push_back(t);
        return it->second;
    };

    intern(Term{d.root()});
    for (std::size_t s = 0; s < states.size(); ++s) {
        for (WordSymbol x = 0; x < num_symbols; ++x) {
            for (const auto& t : d.derive(states[s], x)) edges.emplace_back(s, x, intern(t));
        }
    }

    Nfa nfa(states.size(), num_symbols);
    nfa.add_initial(0);
    for (std::size_t s = 0; s < states.size(); ++s)
        if (d.nullable(states[s])) nfa.add_final(s);
    for (const auto& [src, x, dst] : edges) nfa.add_transition(src, x, dst);
    return nfa;
}

}  // namespace katop
