#include "katop/recogniser.hpp"

#include "katop/errors.hpp"

namespace katop {

Recogniser Recogniser::make_base(const Expr& e, const Alphabet& alphabet) {
    return Recogniser(build_nfa(e, alphabet), alphabet, RecogniserMode::Base);
}

Recogniser Recogniser::make_eclosed(const Expr& e, const Alphabet& alphabet) {
    return Recogniser(build_nfa(e, alphabet), alphabet, RecogniserMode::EClosed);
}

Recogniser Recogniser::make_sqrt(const Expr& e, const Alphabet& alphabet) {
    if (alphabet.num_atoms() != 1) throw MultipleAtoms(static_cast<std::size_t>(alphabet.num_atoms()));
    return Recogniser(build_nfa(e, alphabet), alphabet, RecogniserMode::Sqrt);
}

Recogniser::Recogniser(Nfa nfa, Alphabet alphabet, RecogniserMode mode)
    : nfa_(std::move(nfa)), alphabet_(std::move(alphabet)), mode_(mode) {
    if (nfa_.num_symbols() != alphabet_.num_word_symbols())
        throw AlphabetError("automaton symbol count does not match the alphabet");
    if (mode_ == RecogniserMode::Sqrt && alphabet_.num_atoms() != 1)
        throw MultipleAtoms(static_cast<std::size_t>(alphabet_.num_atoms()));
    const auto symbols = alphabet_.symbols();
    for (AtomId a = 0; a < alphabet_.num_atoms(); ++a) {
        closure_.push_back(nfa_.delta(alphabet_.word_atom(a)).star());
        for (SymbolId s : symbols) h_.push_back(closure_.back() * nfa_.delta(alphabet_.word_symbol(s)));
    }
}

const BoolMatrix& Recogniser::h(AtomId atom, SymbolId symbol) const {
    const auto stride = static_cast<std::size_t>(alphabet_.num_letters() + 1);
    return h_.at(static_cast<std::size_t>(atom) * stride + static_cast<std::size_t>(alphabet_.symbol_index(symbol)));
}

BoolMatrix Recogniser::step(const BoolMatrix& x, AtomId atom, SymbolId symbol) const { return x * h(atom, symbol); }

bool Recogniser::base_accept(const BoolMatrix& x, AtomId atom) const {
    return nfa_.accepting(x * atom_closure(atom));
}

bool Recogniser::accept(const BoolMatrix& x, AtomId atom) const {
    switch (mode_) {
    case RecogniserMode::Base: return base_accept(x, atom);
    case RecogniserMode::EClosed:
        // (x·Δ(α)*·Δ(⊤))*·x·Δ(α)* ∩ I×F ≠ ∅
        return base_accept((x * top_step(atom)).star() * x, atom);
    case RecogniserMode::Sqrt: return base_accept(x * x, atom);
    }
    return false;
}

BoolMatrix Recogniser::image(const GuardedString& u) const {
    BoolMatrix x = identity();
    for (const auto& [a, s] : u.pairs) x = step(x, a, s);
    return x;
}

}  // namespace katop
