#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "katop/alphabet.hpp"
#include "katop/syntax.hpp"

namespace katop {

/// Element of (Atom × Σ⊤)* × Atom, i.e. α₀ x₁ α₁ … xₙ αₙ.
struct GuardedString {
    std::vector<std::pair<AtomId, SymbolId>> pairs;
    AtomId last = 0;

    static GuardedString atom(AtomId a) { return GuardedString{{}, a}; }

    std::size_t length() const noexcept { return pairs.size(); }
    AtomId first() const noexcept { return pairs.empty() ? last : pairs.front().first; }
    /// i-th atom, 0 ≤ i ≤ length().
    AtomId atom_at(std::size_t i) const { return i == pairs.size() ? last : pairs.at(i).first; }
    /// Symbol between atoms i and i+1.
    SymbolId symbol_at(std::size_t i) const { return pairs.at(i).second; }
    std::size_t count_top() const noexcept;
    /// Atoms i..j with the symbols between them.
    GuardedString slice(std::size_t i, std::size_t j) const;

    friend bool operator==(const GuardedString&, const GuardedString&) = default;
    /// Shortlex: shorter strings first, then lexicographic on α₀ x₁ α₁ ….
    friend std::strong_ordering operator<=>(const GuardedString& a, const GuardedString& b);
};

/// u ⋄ v, defined when u ends with the atom v starts with.
std::optional<GuardedString> coalesce(const GuardedString& u, const GuardedString& v);

/// u ⊤ v as a word: u's pairs, then (last(u), ⊤), then v.
GuardedString join_with_top(const GuardedString& u, const GuardedString& v);

/// (u⊤)ⁿu.
GuardedString top_power(const GuardedString& u, std::size_t n);

/// `alpha a beta T gamma`. With a single atom, atoms may be left out (`a a T`).
std::string to_string(const GuardedString& u, const Alphabet& alphabet);
GuardedString parse_guarded_string(std::string_view text, const Alphabet& alphabet);

/// Word over Atom ∪ Σ⊤, see Alphabet::word_symbol.
using Word = std::vector<WordSymbol>;

/// True iff `word` is u with each atom αᵢ repeated some iᵢ ≥ 0 times.
bool gs_matches(const Word& word, const GuardedString& u, const Alphabet& alphabet);

/// Finite guarded-string language, complete up to `bound`.
struct GsLang {
    std::set<GuardedString> elems;
    std::size_t bound = 0;

    bool contains(const GuardedString& u) const { return elems.contains(u); }
    std::size_t size() const noexcept { return elems.size(); }
    /// Elements of length ≤ b.
    GsLang truncate(std::size_t b) const;
};

/// { u ∈ [e] : |u| ≤ bound }, computed compositionally from the language operations.
GsLang denote_bounded(const Expr& e, std::size_t bound, const Alphabet& alphabet);

/// Every guarded string of length ≤ max_length over the alphabet, in shortlex
/// order. ⊤ is left out of the symbols when `with_top` is false.
std::vector<GuardedString> all_guarded_strings(const Alphabet& alphabet, std::size_t max_length,
                                               bool with_top = true);

}  // namespace katop
