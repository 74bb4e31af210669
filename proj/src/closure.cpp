#include "katop/closure.hpp"

#include <deque>
#include <map>
#include <vector>

namespace katop {

std::vector<RewriteStep> rewrite_steps(const GuardedString& u, bool with_f_steps) {
    std::vector<RewriteStep> out;
    const std::size_t n = u.length();
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            const GuardedString l = u.slice(0, i);
            const GuardedString w = u.slice(i, j);
            const GuardedString r = u.slice(j, n);
            out.push_back({RewriteStep::Kind::TStep, i, j, u, join_with_top(l, r)});
            if (with_f_steps) {
                const GuardedString ww = join_with_top(w, w);
                out.push_back({RewriteStep::Kind::FStep, i, j, u, *coalesce(*coalesce(l, ww), r)});
            }
        }
    }
    return out;
}

std::set<GuardedString> rewrites_T(const GuardedString& u) {
    std::set<GuardedString> out;
    for (auto& s : rewrite_steps(u, false)) out.insert(std::move(s.target));
    return out;
}

std::set<GuardedString> rewrites_F(const GuardedString& u) {
    std::set<GuardedString> out;
    for (auto& s : rewrite_steps(u, true)) out.insert(std::move(s.target));
    return out;
}

bool ct_member(const GuardedString& u, const GuardedString& v) {
    // Split v at its ⊤s into ⊤-free pieces v₀ ⊤ v₁ … ⊤ vₖ; u must read
    // v₀ ⋄ w₁ ⋄ v₁ ⋄ … ⋄ wₖ ⋄ vₖ for arbitrary guarded strings wᵢ.
    std::vector<GuardedString> pieces;
    std::size_t start = 0;
    for (std::size_t i = 0; i < v.length(); ++i) {
        if (v.symbol_at(i) == kTop) {
            pieces.push_back(v.slice(start, i));
            start = i + 1;
        }
    }
    pieces.push_back(v.slice(start, v.length()));

    const std::size_t n = u.length();
    auto matches_at = [&](const GuardedString& piece, std::size_t at) {
        if (at + piece.length() > n) return false;
        for (std::size_t k = 0; k < piece.length(); ++k)
            if (u.atom_at(at + k) != piece.atom_at(k) || u.symbol_at(at + k) != piece.symbol_at(k)) return false;
        return u.atom_at(at + piece.length()) == piece.last;
    };

    // ends: positions in u where the current piece may end.
    std::vector<bool> ends(n + 1, false);
    if (!matches_at(pieces[0], 0)) return false;
    ends[pieces[0].length()] = true;
    for (std::size_t p = 1; p < pieces.size(); ++p) {
        std::vector<bool> next(n + 1, false);
        bool any = false;
        // The replacement of ⊤ spans u[q..s] for any q ≤ s.
        std::size_t earliest = n + 1;
        for (std::size_t q = 0; q <= n; ++q)
            if (ends[q]) {
                earliest = q;
                break;
            }
        for (std::size_t s = earliest; s <= n; ++s) {
            if (matches_at(pieces[p], s)) {
                next[s + pieces[p].length()] = true;
                any = true;
            }
        }
        if (!any) return false;
        ends = std::move(next);
    }
    return ends[n];
}

bool ct_member_lang(const GuardedString& u, const GsLang& V) {
    for (const auto& v : V.elems)
        if (ct_member(u, v)) return true;
    return false;
}

bool e_ct_member(const GuardedString& u, const GuardedString& v) {
    const std::size_t tops = v.count_top();
    for (std::size_t n = 0; n <= tops; ++n)
        if (ct_member(top_power(u, n), v)) return true;
    return false;
}

bool cf_member_search(const GuardedString& u, const GsLang& V, std::size_t max_length, std::size_t max_depth) {
    if (V.contains(u)) return true;
    std::map<GuardedString, std::size_t> depth{{u, 0}};
    std::deque<GuardedString> queue{u};
    while (!queue.empty()) {
        GuardedString cur = std::move(queue.front());
        queue.pop_front();
        const std::size_t d = depth[cur];
        if (d == max_depth) continue;
        for (auto& next : rewrites_F(cur)) {
            if (next.length() > max_length || depth.contains(next)) continue;
            if (V.contains(next)) return true;
            depth.emplace(next, d + 1);
            queue.push_back(std::move(next));
        }
    }
    return false;
}

}  // namespace katop
