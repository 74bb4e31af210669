#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "katop/graphs.hpp"
#include "support.hpp"

using namespace katop;
using katop::testing::gs;

namespace {
Alphabet abg() { return Alphabet::make({"a", "b", "d", "e"}, {"alpha", "beta", "gamma"}); }
}  // namespace

TEST_CASE("graphs of guarded strings") {
    auto al = abg();
    auto g = graph_of(gs("alpha a beta b gamma", al));
    CHECK(g.num_vertices() == 3);
    CHECK(g.labels == std::vector<AtomId>{0, 1, 2});
    CHECK(g.edges == std::vector<Graph::Edge>{{0, 0, 1}, {1, 1, 2}});
    CHECK(g.input == 0);
    CHECK(g.output == 2);

    auto h = graph_of(gs("alpha d beta T alpha e beta T gamma", al));
    CHECK(h.num_vertices() == 5);
    CHECK(h.edges == std::vector<Graph::Edge>{{0, 2, 1}, {2, 3, 3}});

    auto single = graph_of(gs("alpha", al));
    CHECK(single.num_vertices() == 1);
    CHECK(single.input == single.output);
    CHECK(single.edges.empty());
}

TEST_CASE("homomorphisms between string graphs") {
    auto al = abg();
    CHECK(dominated(gs("alpha a beta b gamma", al), gs("alpha a beta T alpha a beta b gamma T beta b gamma", al)));
    CHECK(hom_exists(graph_of(gs("alpha a beta T alpha a beta b gamma T beta b gamma", al)),
                     graph_of(gs("alpha a beta b gamma", al))));
    CHECK(dominated(gs("gamma T alpha a alpha T beta b beta T gamma", al),
                    gs("gamma T beta b beta T alpha a alpha T gamma", al)));
    CHECK_FALSE(dominated(gs("alpha a beta", al), gs("alpha a beta b gamma", al)));
}

TEST_CASE("top-free strings are only dominated by themselves") {
    auto al = Alphabet::make({"a", "b"}, {"alpha", "beta"});
    auto all = all_guarded_strings(al, 3, false);
    for (const auto& u : all)
        for (const auto& v : all) CHECK(dominated(u, v) == (u == v));
}

TEST_CASE("domination is a preorder") {
    auto al = Alphabet::make({"a"}, {"alpha", "beta"});
    auto all = all_guarded_strings(al, 3);
    for (const auto& u : all) CHECK(dominated(u, u));
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::size_t chained = 0;
    for (int k = 0; k < 20000; ++k) {
        const auto& u = all[pick(rng)];
        const auto& v = all[pick(rng)];
        const auto& w = all[pick(rng)];
        if (dominated(u, v) && dominated(v, w)) {
            ++chained;
            CHECK(dominated(u, w));
        }
    }
    CHECK(chained > 0);
}

TEST_CASE("general graphs") {
    // A two-cycle maps onto a loop but not onto an edge.
    Graph cycle{{0, 0}, {{0, 0, 1}, {1, 0, 0}}, 0, 1};
    Graph loop{{0}, {{0, 0, 0}}, 0, 0};
    Graph edge{{0, 0}, {{0, 0, 1}}, 0, 1};
    CHECK(hom_exists(cycle, loop));
    CHECK_FALSE(hom_exists(cycle, edge));
    CHECK(hom_exists(edge, loop));
    CHECK_FALSE(hom_exists(loop, edge));

    // Isolated vertices map to any vertex with the same label.
    Graph isolated{{0, 1, 0}, {{0, 0, 2}}, 0, 2};
    Graph target{{0, 0, 1}, {{0, 0, 1}}, 0, 1};
    CHECK(hom_exists(isolated, target));
    Graph wrong_label{{0, 0}, {{0, 0, 1}}, 0, 1};
    CHECK_FALSE(hom_exists(isolated, wrong_label));
}
