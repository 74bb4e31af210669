#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "katop/alphabet.hpp"
#include "katop/bool_matrix.hpp"
#include "katop/gstring.hpp"
#include "katop/syntax.hpp"

namespace katop {

/// ε-free automaton over Atom ∪ Σ⊤ with one transition matrix per symbol.
class Nfa {
public:
    Nfa(std::size_t num_states, int num_symbols);

    std::size_t num_states() const noexcept { return num_states_; }
    int num_symbols() const noexcept { return static_cast<int>(delta_.size()); }

    void add_initial(std::size_t s);
    void add_final(std::size_t s);
    void add_transition(std::size_t src, WordSymbol x, std::size_t dst);

    const std::vector<std::size_t>& initial() const noexcept { return initial_; }
    const std::vector<std::size_t>& final_states() const noexcept { return final_; }
    const std::vector<BoolMatrix::Word>& final_mask() const noexcept { return final_mask_; }
    const BoolMatrix& delta(WordSymbol x) const { return delta_.at(static_cast<std::size_t>(x)); }

    /// R ∩ I×F ≠ ∅.
    bool accepting(const BoolMatrix& r) const { return r.meets(initial_, final_mask_); }
    /// Δ(x₁)·…·Δ(xₙ) ∩ I×F ≠ ∅.
    bool accepts_word(const Word& word) const;

    /// One edge per line (`src symbol dst`), then `initial …` and `final …` lines.
    std::string to_text(const Alphabet& alphabet) const;

private:
    std::size_t num_states_;
    std::vector<std::size_t> initial_;
    std::vector<std::size_t> final_;
    std::vector<BoolMatrix::Word> final_mask_;
    std::vector<BoolMatrix> delta_;
};

/// Partial-derivative automaton for the word language of `e`, with at most
/// (number of leaves of e) + 1 states.
Nfa build_nfa(const Expr& e, const Alphabet& alphabet);

}  // namespace katop
