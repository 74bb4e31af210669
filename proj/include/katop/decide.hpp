#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "katop/alphabet.hpp"
#include "katop/gstring.hpp"
#include "katop/relmodel.hpp"
#include "katop/syntax.hpp"

namespace katop {

enum class Theory {
    KAT,    ///< guarded-string languages, ⊤ an ordinary letter
    KAT_T,  ///< ⊤ the greatest element: C_T-closed languages
    KAT_F,  ///< ⊤ the full relation: C_F-closed languages, i.e. binary relations
};

std::string to_string(Theory th);
/// Accepts `kat`, `katt`, `katf` (case-insensitive).
std::optional<Theory> parse_theory(std::string_view name);

enum class Side { Left, Right };

struct Limits {
    std::size_t visited_cap = std::size_t{1} << 20;
};

/// Model separating the two sides at (source, target). For KAT_F it is the
/// relational word model of the witness. For KAT and KAT_T it is the
/// ⊤-as-letter word model, evaluated on the expressions the decision compares
/// (after reduce_top for KAT_T), so it certifies language membership.
struct Certificate {
    RelModel model;
    std::size_t source = 0;
    std::size_t target = 0;
    bool relational = true;
    bool left_holds = false;
    bool right_holds = false;
};

struct SearchStats {
    std::size_t visited = 0;
    double millis = 0;
};

struct Verdict {
    bool equal = true;
    std::optional<GuardedString> witness;
    Side holder = Side::Left;  // side whose closed language contains the witness
    std::optional<Certificate> countermodel;
    SearchStats stats;
};

/// Compares e and f under `th` by breadth-first search over pairs of
/// recogniser states. A NotEqual verdict carries a shortest witness (shortlex
/// among equal lengths) and a certificate that has been checked by model
/// evaluation. Throws ResourceLimit past `limits.visited_cap` configurations.
Verdict decide(const Expr& e, const Expr& f, Theory th, const Alphabet& alphabet, const Limits& limits = {});

/// e ≤ f, i.e. decide(e + f, f).
Verdict leq(const Expr& e, const Expr& f, Theory th, const Alphabet& alphabet, const Limits& limits = {});

/// u ∈ [e], C_T[e] or C_F[e] depending on `th`.
bool member(const Expr& e, const GuardedString& u, Theory th, const Alphabet& alphabet);

/// Certificate check for a witness: evaluates both sides in the witness's word model.
Certificate certify(const Expr& e, const Expr& f, const GuardedString& witness, Theory th, const Alphabet& alphabet);

}  // namespace katop
