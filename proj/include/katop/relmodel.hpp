#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "katop/alphabet.hpp"
#include "katop/bool_matrix.hpp"
#include "katop/graphs.hpp"
#include "katop/gstring.hpp"
#include "katop/syntax.hpp"

namespace katop {

/// Binary relation on a carrier {0..m-1}.
using Relation = BoolMatrix;

/// Relations on a finite carrier, with an atom for each element and a
/// relation for each letter.
struct RelModel {
    std::size_t carrier = 0;
    std::vector<AtomId> atom_of;     // size carrier
    std::vector<Relation> valuation;  // by letter index
    /// When set, ⊤ is read as this relation instead of the full one. Models of
    /// this kind decide guarded-string membership rather than REL validity.
    std::optional<Relation> top_letter;

    /// `carrier`, `atoms`, one line per letter with its pairs.
    std::string dump(const Alphabet& alphabet) const;
};

/// σ̂(e). Throws UninterpretedLetter if e uses a letter the model lacks.
Relation eval(const Expr& e, const RelModel& model, const Alphabet& alphabet);

/// A guarded string read as the expression α₀·x₁·α₁·…·xₙ·αₙ.
Expr as_expr(const GuardedString& u, const Alphabet& alphabet);

struct WordModel {
    RelModel model;
    std::size_t source = 0;
    std::size_t target = 0;
};

/// Positions 0..n of u, labelled by its atoms; (i, i+1) ∈ σ(a) when the
/// i-th symbol is the letter a. With `top_as_letter`, ⊤ positions also
/// contribute (i, i+1) to the relation read for ⊤.
WordModel word_model(const GuardedString& u, const Alphabet& alphabet, bool top_as_letter = false);

/// ⟨σ, i, j⟩: the graph of a valuation with chosen input and output.
Graph graph_of_model(const RelModel& model, std::size_t input, std::size_t output);

/// u ∈ [e], decided by evaluating e in the ⊤-as-letter word model of u.
bool language_member(const Expr& e, const GuardedString& u, const Alphabet& alphabet);

/// Deterministic stream of models: carrier uniform in 1..max_carrier, atoms
/// uniform, every pair of every letter relation included with probability 1/2.
std::vector<RelModel> sample_models(const Alphabet& alphabet, std::size_t max_carrier, std::size_t count,
                                    std::uint64_t seed);

}  // namespace katop
