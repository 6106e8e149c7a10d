#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pgt/analysis.hpp"
#include "pgt/construct.hpp"
#include "pgt/harness.hpp"
#include "pgt/iso.hpp"
#include "test_support.hpp"

using namespace pgt;

namespace {

VertexRelation random_relation(std::mt19937_64& rng, std::size_t universe_size) {
    std::vector<Label> labels;
    for (std::size_t i = 0; i < universe_size; ++i) {
        labels.push_back(static_cast<Label>(rng() % 16));
    }
    return VertexRelation::from_predicate(OrdSet::from_unsorted(labels),
                                          [&](Label, Label) { return (rng() & 3u) == 0; });
}

// Hub adjacent to three leaves; replicating the hub wires the copy to the
// hub and all its neighbors at once.
Graph claw() {
    return Graph::build(OrdSet{0, 1, 2, 3},
                        {EdgePair{0, 3}, EdgePair{1, 3}, EdgePair{2, 3}});
}

} // namespace

TEST_CASE("remove_loops") {
    const OrdSet u{1, 2};
    const VertexRelation all = VertexRelation::from_predicate(u, [](Label, Label) { return true; });
    const VertexRelation r = remove_loops(all);
    CHECK(r.at(1, 2));
    CHECK(r.at(2, 1));
    CHECK_FALSE(r.at(1, 1));
    CHECK_FALSE(r.at(2, 2));

    // already irreflexive: unchanged
    const VertexRelation irefl =
        VertexRelation::from_predicate(u, [](Label x, Label y) { return x < y; });
    CHECK(remove_loops(irefl) == irefl);
}

TEST_CASE("symmetric_closure") {
    const OrdSet u{1, 2};
    VertexRelation oneway(u);
    oneway.set(1, 2);
    const VertexRelation sym = symmetric_closure(oneway);
    CHECK(sym.at(1, 2));
    CHECK(sym.at(2, 1));

    CHECK(symmetric_closure(sym) == sym);
}

TEST_CASE("restrict_to") {
    const OrdSet u{1, 2, 3};
    const VertexRelation all = VertexRelation::from_predicate(u, [](Label, Label) { return true; });
    const VertexRelation none = restrict_to(all, OrdSet{});
    for (Label x : u) {
        for (Label y : u) {
            CHECK_FALSE(none.at(x, y));
        }
    }
    CHECK(restrict_to(all, u) == all);

    const VertexRelation pair = restrict_to(all, OrdSet{1, 2});
    CHECK(pair.at(1, 2));
    CHECK(pair.at(2, 1));
    CHECK(pair.at(1, 1));
    CHECK_FALSE(pair.at(1, 3));
    CHECK_FALSE(pair.at(3, 3));
}

TEST_CASE("normalizers preserve each other's guarantees") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 300; ++round) {
        const VertexRelation r = random_relation(rng, 1 + rng() % 7);
        CHECK(is_irreflexive(remove_loops(r)));
        CHECK(is_symmetric(symmetric_closure(r)));
        CHECK(is_symmetric(remove_loops(symmetric_closure(r))));
        CHECK(is_irreflexive(symmetric_closure(remove_loops(r))));
        // closure never deletes and loop removal only touches the diagonal
        const VertexRelation sym = symmetric_closure(r);
        for (Label x : r.universe()) {
            for (Label y : r.universe()) {
                if (r.at(x, y)) CHECK(sym.at(x, y));
                if (x != y) CHECK(remove_loops(r).at(x, y) == r.at(x, y));
            }
        }
    }
}

TEST_CASE("combinators discharge all three graph invariants") {
    std::mt19937_64 rng(43);
    for (int round = 0; round < 500; ++round) {
        const VertexRelation raw = random_relation(rng, 1 + rng() % 7);
        const OrdSet verts = support::random_subset(rng, raw.universe());
        const VertexRelation normalized = symmetric_closure(remove_loops(restrict_to(raw, verts)));
        const Graph g = graph_from_relation(verts, normalized);
        REQUIRE(g.validate());
    }
}

TEST_CASE("graph_from_relation rejects unnormalized input") {
    const OrdSet u{0, 1};
    const VertexRelation all = VertexRelation::from_predicate(u, [](Label, Label) { return true; });
    CHECK_THROWS_AS(graph_from_relation(u, all), SelfLoopError); // diagonal present
    VertexRelation oneway(u);
    oneway.set(0, 1);
    CHECK_THROWS_AS(graph_from_relation(u, oneway), InvalidEdgeError); // asymmetric
    const VertexRelation ok = symmetric_closure(remove_loops(all));
    CHECK_THROWS_AS(graph_from_relation(OrdSet{0}, ok), InvalidEdgeError); // not confined
}

TEST_CASE("replication_relation implements the three-way match") {
    const Graph g = claw(); // 3 adjacent to 0,1,2
    const Label a = 3, fresh = 4;
    const VertexRelation r = replication_relation(g, a, fresh);
    CHECK(r.at(0, fresh));      // 0 was adjacent to a
    CHECK(r.at(a, fresh));      // the replicated vertex reaches its copy
    CHECK(r.at(0, 3) == g.has_edge(0, 3)); // pairs away from the copy unchanged
    CHECK(r.at(0, 1) == g.has_edge(0, 1));
    CHECK_FALSE(r.at(fresh, 0)); // raw relation is one-directional toward the copy

    CHECK_THROWS_AS(replication_relation(g, 9, fresh), UnknownVertexError);
}

TEST_CASE("replication_relation satisfies its edge lemmas on random inputs") {
    std::mt19937_64 rng(47);
    for (int round = 0; round < 300; ++round) {
        const Graph g = support::random_graph(rng, 1 + rng() % 6);
        const Label a = g.label_at(rng() % g.order());
        const Label fresh = fresh_vertex(g);
        const VertexRelation r = replication_relation(g, a, fresh);
        const OrdSet probe = set_insert(set_insert(g.vertices(), fresh), fresh + 1);
        for (Label x : probe) {
            for (Label y : probe) {
                if (g.has_edge(x, a)) REQUIRE(r.at(x, fresh));
                if (g.has_edge(x, y)) REQUIRE(r.at(x, y));
                if (y != fresh) REQUIRE(r.at(x, y) == g.has_edge(x, y));
            }
        }
    }
}

TEST_CASE("replicate_vertex fixtures") {
    // Pentagon with one vertex repeated keeps a nice coloring.
    const Graph g2 = replicate_vertex(cycle(5), 3, 5);
    CHECK(clique_number(g2).value == 3);
    CHECK(chromatic_number(g2).value == 3);

    // The copy picks up the original and its whole neighborhood.
    const Graph primed = replicate_vertex(claw(), 3, 4);
    CHECK(primed.neighbors(4) == OrdSet{0, 1, 2, 3});
    CHECK(primed.neighbors(4) == set_insert(claw().neighbors(3), 3));

    for (std::size_t n = 1; n <= 5; ++n) {
        const Graph grown = replicate_vertex(complete(n), 0, static_cast<Label>(n));
        CHECK(grown == complete(n + 1));
    }

    CHECK_THROWS_AS(replicate_vertex(cycle(5), 9, 10), UnknownVertexError);
    CHECK_THROWS_AS(replicate_vertex(cycle(5), 0, 4), VertexCollisionError);
}

TEST_CASE("deleting the copy inverts replication") {
    std::mt19937_64 rng(53);
    for (int round = 0; round < 200; ++round) {
        const Graph g = support::random_graph(rng, 1 + rng() % 6);
        const Label a = g.label_at(rng() % g.order());
        const Graph grown = replicate_vertex(g, a, fresh_vertex(g));
        REQUIRE(grown.induced_subgraph(g.vertices()) == g);
        REQUIRE(grown.validate());
    }
}

TEST_CASE("the five replication edge laws hold for the built graph") {
    std::mt19937_64 rng(59);
    for (int round = 0; round < 300; ++round) {
        const Graph g = support::random_graph(rng, 1 + rng() % 6);
        const Label a = g.label_at(rng() % g.order());
        const Label a2 = fresh_vertex(g);
        const Graph g2 = replicate_vertex(g, a, a2);
        const OrdSet probe = set_insert(set_insert(g.vertices(), a2), a2 + 3);
        for (Label x : probe) {
            for (Label y : probe) {
                if (g.has_edge(x, y)) REQUIRE(g2.has_edge(x, y));
                if (g.has_vertex(x) && g.has_vertex(y)) {
                    REQUIRE(g.has_edge(x, y) == g2.has_edge(x, y));
                }
                if (x != a2 && y != a2) REQUIRE(g.has_edge(x, y) == g2.has_edge(x, y));
            }
            if (x != a && x != a2) {
                REQUIRE(g.has_edge(x, a) == g2.has_edge(x, a2));
                REQUIRE(g.has_edge(a, x) == g2.has_edge(a2, x));
            }
        }
    }
}

TEST_CASE("fresh_vertex") {
    CHECK(fresh_vertex(Graph::build(OrdSet{1, 5}, {})) == 6);
    CHECK(fresh_vertex(Graph{}) == 0);
    std::mt19937_64 rng(61);
    for (int round = 0; round < 100; ++round) {
        const Graph g = support::random_graph(rng, rng() % 6);
        REQUIRE_FALSE(g.has_vertex(fresh_vertex(g)));
    }
}

TEST_CASE("clique_expansion fixtures") {
    const Graph c4 = cycle(4);

    SECTION("all multiplicities one is the identity") {
        MultiplicityMap ones;
        for (Label v : c4.vertices()) ones[v] = 1;
        CHECK(clique_expansion(c4, ones) == c4);
    }

    SECTION("square expanded to cliques of sizes 2,3,4,1") {
        const MultiplicityMap m{{0, 2}, {1, 3}, {2, 4}, {3, 1}};
        const Graph g4 = clique_expansion(c4, m);
        CHECK(g4.order() == 10);
        CHECK(g4.induced_subgraph(c4.vertices()) == c4);
        CHECK(is_perfect(g4).verdict); // square is perfect, expansion stays so
    }

    SECTION("one vertex expands to a complete graph") {
        const Graph single = Graph::build(OrdSet{0}, {});
        CHECK(clique_expansion(single, {{0, 4}}) == complete(4));
    }

    SECTION("errors") {
        CHECK_THROWS_AS(clique_expansion(c4, {{0, 1}}), PartialMapError);
        const MultiplicityMap zero{{0, 0}, {1, 1}, {2, 1}, {3, 1}};
        CHECK_THROWS_AS(clique_expansion(c4, zero), ZeroMultiplicityError);
    }
}

TEST_CASE("expansion size and order independence") {
    std::mt19937_64 rng(67);
    for (int round = 0; round < 40; ++round) {
        const Graph g = support::random_graph(rng, 1 + rng() % 4);
        MultiplicityMap m;
        std::size_t expected = 0;
        for (Label v : g.vertices()) {
            m[v] = 1 + rng() % 2; // keep totals within the iso search guard
            expected += m[v];
        }
        const Graph expanded = clique_expansion(g, m);
        REQUIRE(expanded.order() == expected);

        // replicate in reverse vertex order instead, compare up to iso
        Graph alternate = g;
        Label next = fresh_vertex(g);
        for (auto it = g.vertices().elements().rbegin(); it != g.vertices().elements().rend(); ++it) {
            for (unsigned i = 1; i < m[*it]; ++i) alternate = replicate_vertex(alternate, *it, next++);
        }
        REQUIRE(find_isomorphism(expanded, alternate).has_value());
    }
}
