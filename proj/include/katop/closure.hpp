#pragma once

#include <cstddef>
#include <set>

#include "katop/gstring.hpp"

namespace katop {

/// One rewrite of a guarded string. A T-step collapses atoms begin..end into
/// a single ⊤; an F-step duplicates that slice w into w⊤w.
struct RewriteStep {
    enum class Kind { TStep, FStep };
    Kind kind;
    std::size_t begin;  // atom position where w starts
    std::size_t end;    // atom position where w ends
    GuardedString source;
    GuardedString target;
};

/// Every v with u →_T v: u = l⋄w⋄r and v = l⊤r.
std::set<GuardedString> rewrites_T(const GuardedString& u);
/// Every v with u →_F v: a T-step, or some slice w of u expanded to w⊤w.
std::set<GuardedString> rewrites_F(const GuardedString& u);
/// Same as rewrites_F, keeping the step data.
std::vector<RewriteStep> rewrite_steps(const GuardedString& u, bool with_f_steps);

/// Whether u is some v ∈ V with each ⊤ replaced by a guarded string whose
/// end atoms match the ⊤'s neighbours (u ∈ C_T(V)).
bool ct_member_lang(const GuardedString& u, const GsLang& V);
bool ct_member(const GuardedString& u, const GuardedString& v);

/// u ∈ E(C_T{v}): some n ≤ #⊤(v) with (u⊤)ⁿu ∈ C_T{v}.
bool e_ct_member(const GuardedString& u, const GuardedString& v);

/// Breadth-first search for u →_F* v with v ∈ V, through strings of length
/// ≤ max_length and at most max_depth steps. True only when a path is found.
bool cf_member_search(const GuardedString& u, const GsLang& V, std::size_t max_length, std::size_t max_depth);

}  // namespace katop
