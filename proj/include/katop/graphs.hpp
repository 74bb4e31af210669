#pragma once

#include <cstddef>
#include <vector>

#include "katop/alphabet.hpp"
#include "katop/gstring.hpp"

namespace katop {

/// Vertex-labelled graph with Σ-labelled edges and distinguished input/output.
struct Graph {
    struct Edge {
        std::size_t src;
        SymbolId letter;  // never kTop
        std::size_t dst;
        friend bool operator==(const Edge&, const Edge&) = default;
    };

    std::vector<AtomId> labels;  // one per vertex
    std::vector<Edge> edges;
    std::size_t input = 0;
    std::size_t output = 0;

    std::size_t num_vertices() const noexcept { return labels.size(); }
};

/// g(u): vertices 0..n labelled by the atoms of u, an a-edge i → i+1 for each
/// letter a at position i, nothing for ⊤; input 0, output n.
Graph graph_of(const GuardedString& u);

/// Whether some vertex map G → H preserves labels, edges, input and output
/// (written H ◁ G).
bool hom_exists(const Graph& g, const Graph& h);

/// g(u) ◁ g(v), i.e. a homomorphism from g(v) to g(u).
bool dominated(const GuardedString& u, const GuardedString& v);

}  // namespace katop
