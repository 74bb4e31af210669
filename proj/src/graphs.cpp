#include "katop/graphs.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace katop {

Graph graph_of(const GuardedString& u) {
    Graph g;
    const std::size_t n = u.length();
    for (std::size_t i = 0; i <= n; ++i) g.labels.push_back(u.atom_at(i));
    for (std::size_t i = 0; i < n; ++i)
        if (u.symbol_at(i) != kTop) g.edges.push_back({i, u.symbol_at(i), i + 1});
    g.input = 0;
    g.output = n;
    return g;
}

namespace {

constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

class HomSearch {
public:
    HomSearch(const Graph& g, const Graph& h) : g_(g), h_(h), map_(g.num_vertices(), kUnassigned) {
        out_.resize(g.num_vertices());
        in_.resize(g.num_vertices());
        for (std::size_t k = 0; k < g.edges.size(); ++k) {
            out_[g.edges[k].src].push_back(k);
            in_[g.edges[k].dst].push_back(k);
        }
        for (const auto& e : h.edges) h_edges_[e.letter].push_back({e.src, e.dst});
        for (auto& [letter, list] : h_edges_) std::sort(list.begin(), list.end());
        order_vertices();
    }

    bool run() {
        if (g_.num_vertices() == 0) return true;
        if (h_.num_vertices() == 0) return false;
        if (!assign(g_.input, h_.input)) return false;
        if (map_[g_.output] == kUnassigned) {
            if (!assign(g_.output, h_.output)) return false;
        } else if (map_[g_.output] != h_.output) {
            return false;
        }
        return search(0);
    }

private:
    bool has_h_edge(std::size_t src, SymbolId letter, std::size_t dst) const {
        auto it = h_edges_.find(letter);
        if (it == h_edges_.end()) return false;
        return std::binary_search(it->second.begin(), it->second.end(), std::pair{src, dst});
    }

    // Assign v ↦ w if consistent with the already-mapped neighbours of v.
    bool assign(std::size_t v, std::size_t w) {
        if (g_.labels[v] != h_.labels[w]) return false;
        map_[v] = w;
        for (auto k : out_[v]) {
            const auto& e = g_.edges[k];
            if (map_[e.dst] != kUnassigned && !has_h_edge(w, e.letter, map_[e.dst])) return unassign(v);
        }
        for (auto k : in_[v]) {
            const auto& e = g_.edges[k];
            if (map_[e.src] != kUnassigned && !has_h_edge(map_[e.src], e.letter, w)) return unassign(v);
        }
        return true;
    }

    bool unassign(std::size_t v) {
        map_[v] = kUnassigned;
        return false;
    }

    // Depth-first along edges from the input, so neighbours are mapped early.
    void order_vertices() {
        std::vector<bool> seen(g_.num_vertices(), false);
        auto visit = [&](std::size_t start) {
            std::vector<std::size_t> stack{start};
            while (!stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                if (seen[v]) continue;
                seen[v] = true;
                order_.push_back(v);
                for (auto k : in_[v]) stack.push_back(g_.edges[k].src);
                for (auto k : out_[v]) stack.push_back(g_.edges[k].dst);
            }
        };
        if (g_.num_vertices() > 0) {
            visit(g_.input);
            visit(g_.output);
        }
        for (std::size_t v = 0; v < g_.num_vertices(); ++v)
            if (!seen[v]) visit(v);
    }

    bool search(std::size_t i) {
        while (i < order_.size() && map_[order_[i]] != kUnassigned) ++i;
        if (i == order_.size()) return true;
        const std::size_t v = order_[i];
        for (std::size_t w = 0; w < h_.num_vertices(); ++w) {
            if (!assign(v, w)) continue;
            if (search(i + 1)) return true;
            map_[v] = kUnassigned;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<std::size_t> map_;
    std::vector<std::vector<std::size_t>> out_, in_;
    std::map<SymbolId, std::vector<std::pair<std::size_t, std::size_t>>> h_edges_;
    std::vector<std::size_t> order_;
};

}  // namespace

bool hom_exists(const Graph& g, const Graph& h) { return HomSearch(g, h).run(); }

bool dominated(const GuardedString& u, const GuardedString& v) { return hom_exists(graph_of(v), graph_of(u)); }

}  // namespace katop
