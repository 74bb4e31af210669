#pragma once

#include <vector>

#include "katop/alphabet.hpp"
#include "katop/automata.hpp"
#include "katop/bool_matrix.hpp"
#include "katop/gstring.hpp"
#include "katop/syntax.hpp"

namespace katop {

enum class RecogniserMode {
    Base,     ///< recognises [e]
    EClosed,  ///< recognises E[e] = { w | ∃n, (w⊤)ⁿw ∈ [e] }
    Sqrt,     ///< recognises { w | ww ∈ [e] }, single atom only
};

/// Transition-monoid recogniser ⟨M, h, P⟩ of a guarded-string language. M is
/// the monoid of relations on the states of an automaton for the word
/// language of e, with h(α, a) = Δ(α)*·Δ(a). P depends on the mode.
class Recogniser {
public:
    static Recogniser make_base(const Expr& e, const Alphabet& alphabet);
    static Recogniser make_eclosed(const Expr& e, const Alphabet& alphabet);
    /// Throws MultipleAtoms unless the alphabet has exactly one atom.
    static Recogniser make_sqrt(const Expr& e, const Alphabet& alphabet);

    Recogniser(Nfa nfa, Alphabet alphabet, RecogniserMode mode);

    RecogniserMode mode() const noexcept { return mode_; }
    const Nfa& nfa() const noexcept { return nfa_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t dim() const noexcept { return nfa_.num_states(); }

    BoolMatrix identity() const { return BoolMatrix::identity(dim()); }
    const BoolMatrix& h(AtomId atom, SymbolId symbol) const;
    /// Δ(α)*.
    const BoolMatrix& atom_closure(AtomId atom) const { return closure_.at(static_cast<std::size_t>(atom)); }
    /// Δ(α)*·Δ(⊤) = h(α, ⊤).
    const BoolMatrix& top_step(AtomId atom) const { return h(atom, kTop); }

    /// x · h(α, a).
    BoolMatrix step(const BoolMatrix& x, AtomId atom, SymbolId symbol) const;
    /// The acceptance predicate P(x, α) of the mode.
    bool accept(const BoolMatrix& x, AtomId atom) const;
    /// Base-mode predicate x·Δ(α)* ∩ I×F ≠ ∅, whatever the mode.
    bool base_accept(const BoolMatrix& x, AtomId atom) const;

    /// h of the pairs of u.
    BoolMatrix image(const GuardedString& u) const;
    bool accepts(const GuardedString& u) const { return accept(image(u), u.last); }

private:
    Nfa nfa_;
    Alphabet alphabet_;
    RecogniserMode mode_;
    std::vector<BoolMatrix> closure_;  // by atom
    std::vector<BoolMatrix> h_;        // by atom × symbol index
};

}  // namespace katop
