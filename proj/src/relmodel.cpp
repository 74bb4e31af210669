#include "katop/relmodel.hpp"

#include <random>

#include "katop/errors.hpp"

namespace katop {

std::string RelModel::dump(const Alphabet& alphabet) const {
    std::string out = "carrier " + std::to_string(carrier) + "\natoms";
    for (auto a : atom_of) out += ' ' + alphabet.atom_name(a);
    out += '\n';
    auto pairs = [&](const Relation& r) {
        std::string s;
        for (std::size_t i = 0; i < carrier; ++i)
            for (std::size_t j = 0; j < carrier; ++j)
                if (r.get(i, j)) s += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
        return s;
    };
    for (std::size_t l = 0; l < valuation.size(); ++l)
        out += alphabet.letters().at(l) + ":" + pairs(valuation[l]) + '\n';
    if (top_letter) out += "T:" + pairs(*top_letter) + '\n';
    return out;
}

namespace {

// Reflexive-transitive closure by squaring 1 ∪ R until it stabilises.
Relation closure_by_squaring(const Relation& r) {
    Relation s = Relation::identity(r.dim());
    s |= r;
    for (;;) {
        Relation next = s * s;
        if (next == s) return s;
        s = std::move(next);
    }
}

}  // namespace

Relation eval(const Expr& e, const RelModel& model, const Alphabet& alphabet) {
    const std::size_t m = model.carrier;
    switch (e.kind()) {
    case Expr::Kind::Zero: return Relation(m);
    case Expr::Kind::One: return Relation::identity(m);
    case Expr::Kind::Top: return model.top_letter ? *model.top_letter : Relation::full(m);
    case Expr::Kind::Atom: {
        auto a = alphabet.find_atom(e.name());
        if (!a) throw AlphabetError("atom '" + e.name() + "' is not in the alphabet");
        Relation r(m);
        for (std::size_t x = 0; x < m; ++x)
            if (model.atom_of[x] == *a) r.set(x, x);
        return r;
    }
    case Expr::Kind::Letter: {
        auto l = alphabet.find_letter(e.name());
        if (!l || static_cast<std::size_t>(*l) >= model.valuation.size()) throw UninterpretedLetter(e.name());
        return model.valuation[static_cast<std::size_t>(*l)];
    }
    case Expr::Kind::Plus: {
        Relation r = eval(e.left(), model, alphabet);
        r |= eval(e.right(), model, alphabet);
        return r;
    }
    case Expr::Kind::Dot: return eval(e.left(), model, alphabet) * eval(e.right(), model, alphabet);
    case Expr::Kind::Star: return closure_by_squaring(eval(e.left(), model, alphabet));
    }
    return Relation(m);
}

Expr as_expr(const GuardedString& u, const Alphabet& alphabet) {
    Expr e = Expr::atom(alphabet.atom_name(u.first()));
    for (std::size_t i = 0; i < u.length(); ++i) {
        const SymbolId s = u.symbol_at(i);
        e = Expr::dot(e, s == kTop ? Expr::top() : Expr::letter(alphabet.letters().at(static_cast<std::size_t>(s))));
        e = Expr::dot(e, Expr::atom(alphabet.atom_name(u.atom_at(i + 1))));
    }
    return e;
}

WordModel word_model(const GuardedString& u, const Alphabet& alphabet, bool top_as_letter) {
    const std::size_t n = u.length();
    WordModel wm;
    wm.model.carrier = n + 1;
    for (std::size_t i = 0; i <= n; ++i) wm.model.atom_of.push_back(u.atom_at(i));
    wm.model.valuation.assign(static_cast<std::size_t>(alphabet.num_letters()), Relation(n + 1));
    if (top_as_letter) wm.model.top_letter = Relation(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const SymbolId s = u.symbol_at(i);
        if (s != kTop)
            wm.model.valuation[static_cast<std::size_t>(s)].set(i, i + 1);
        else if (top_as_letter)
            wm.model.top_letter->set(i, i + 1);
    }
    wm.source = 0;
    wm.target = n;
    return wm;
}

Graph graph_of_model(const RelModel& model, std::size_t input, std::size_t output) {
    Graph g;
    g.labels = model.atom_of;
    for (std::size_t l = 0; l < model.valuation.size(); ++l)
        for (std::size_t i = 0; i < model.carrier; ++i)
            for (std::size_t j = 0; j < model.carrier; ++j)
                if (model.valuation[l].get(i, j)) g.edges.push_back({i, static_cast<SymbolId>(l), j});
    g.input = input;
    g.output = output;
    return g;
}

bool language_member(const Expr& e, const GuardedString& u, const Alphabet& alphabet) {
    const auto wm = word_model(u, alphabet, true);
    return eval(e, wm.model, alphabet).get(wm.source, wm.target);
}

std::vector<RelModel> sample_models(const Alphabet& alphabet, std::size_t max_carrier, std::size_t count,
                                    std::uint64_t seed) {
    if (max_carrier == 0) throw Error("max_carrier must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> carrier_dist(1, max_carrier);
    std::uniform_int_distribution<int> atom_dist(0, alphabet.num_atoms() - 1);
    std::bernoulli_distribution coin(0.5);
    std::vector<RelModel> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        RelModel m;
        m.carrier = carrier_dist(rng);
        for (std::size_t x = 0; x < m.carrier; ++x) m.atom_of.push_back(atom_dist(rng));
        for (int l = 0; l < alphabet.num_letters(); ++l) {
            Relation r(m.carrier);
            for (std::size_t i = 0; i < m.carrier; ++i)
                for (std::size_t j = 0; j < m.carrier; ++j)
                    if (coin(rng)) r.set(i, j);
            m.valuation.push_back(std::move(r));
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace katop
