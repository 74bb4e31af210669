#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace katop {

/// Index into Alphabet::atoms().
using AtomId = int;

/// Element of Σ⊤: a letter index, or kTop.
using SymbolId = int;
inline constexpr SymbolId kTop = -1;

/// Element of Atom ∪ Σ⊤, the input alphabet of the automata.
/// Atoms come first, then letters, then ⊤.
using WordSymbol = int;

/// Letters Σ and atoms of a KAT signature. When built from test variables,
/// the atoms are the 2^|T| valuations in binary counting order (first test is
/// the most significant bit) and are named `at_<bits>`.
class Alphabet {
public:
    static Alphabet make(std::vector<std::string> letters, std::vector<std::string> atoms);
    static Alphabet with_tests(std::vector<std::string> letters, std::vector<std::string> tests);
    /// One atom named `alpha`: plain Kleene algebra with top.
    static Alphabet single_atom(std::vector<std::string> letters);

    const std::vector<std::string>& letters() const noexcept { return letters_; }
    const std::vector<std::string>& atoms() const noexcept { return atoms_; }
    const std::optional<std::vector<std::string>>& tests() const noexcept { return tests_; }

    int num_letters() const noexcept { return static_cast<int>(letters_.size()); }
    int num_atoms() const noexcept { return static_cast<int>(atoms_.size()); }

    std::optional<AtomId> find_atom(std::string_view name) const;
    std::optional<SymbolId> find_letter(std::string_view name) const;
    std::optional<int> find_test(std::string_view name) const;

    /// Truth value of test `test` under the valuation named by atom `atom`.
    bool holds(AtomId atom, int test) const;

    /// Σ⊤ in canonical order: letters as declared, then ⊤.
    std::vector<SymbolId> symbols() const;
    /// Dense index of a Σ⊤ element: letters 0..L-1, ⊤ at L.
    int symbol_index(SymbolId s) const noexcept { return s == kTop ? num_letters() : s; }
    const std::string& atom_name(AtomId a) const { return atoms_.at(static_cast<std::size_t>(a)); }
    /// Letter name, or "T" for ⊤ (the guarded-string rendering).
    std::string symbol_name(SymbolId s) const;

    int num_word_symbols() const noexcept { return num_atoms() + num_letters() + 1; }
    WordSymbol word_atom(AtomId a) const noexcept { return a; }
    WordSymbol word_symbol(SymbolId s) const noexcept { return num_atoms() + symbol_index(s); }
    bool is_atom_symbol(WordSymbol w) const noexcept { return w < num_atoms(); }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    Alphabet() = default;
    void validate() const;

    std::vector<std::string> letters_;
    std::vector<std::string> atoms_;
    std::optional<std::vector<std::string>> tests_;
};

/// True for names usable as letters, atoms or tests: [A-Za-z_][A-Za-z0-9_']*.
bool is_identifier(std::string_view name);

}  // namespace katop
