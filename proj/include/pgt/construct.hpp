#pragma once

#include <map>
#include <vector>

#include "pgt/graph.hpp"

namespace pgt {

// Raw binary relation over an explicit finite label universe. Not required
// to be irreflexive or symmetric; the combinators below normalize it into a
// valid edge relation. Pairs outside the universe are false.
class VertexRelation {
public:
    VertexRelation() = default;

    explicit VertexRelation(OrdSet universe)
        : universe_(std::move(universe)), cells_(universe_.size()) {}

    template <typename Pred>
    static VertexRelation from_predicate(OrdSet universe, Pred&& pred) {
        VertexRelation r(std::move(universe));
        const std::size_t n = r.universe_.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (pred(r.universe_[i], r.universe_[j])) r.cells_.set(i, j);
            }
        }
        return r;
    }

    const OrdSet& universe() const { return universe_; }

    bool at(Label x, Label y) const {
        const auto i = universe_.index_of(x);
        const auto j = universe_.index_of(y);
        if (!i || !j) return false;
        return cells_.get(*i, *j);
    }

    void set(Label x, Label y, bool value = true) {
        const auto i = universe_.index_of(x);
        const auto j = universe_.index_of(y);
        if (!i || !j) {
            throw UnknownVertexError("relation pair outside the universe");
        }
        cells_.set(*i, *j, value);
    }

    friend bool operator==(const VertexRelation&, const VertexRelation&) = default;

private:
    OrdSet universe_;
    BitMatrix cells_;
};

// Drops the diagonal, keeps everything else.
inline VertexRelation remove_loops(const VertexRelation& r) {
    return VertexRelation::from_predicate(
        r.universe(), [&](Label x, Label y) { return x != y && r.at(x, y); });
}

// Or-closure: relates (x,y) when either direction did. Monotone, so edges
// are never lost; preserves irreflexivity.
inline VertexRelation symmetric_closure(const VertexRelation& r) {
    return VertexRelation::from_predicate(
        r.universe(), [&](Label x, Label y) { return r.at(x, y) || r.at(y, x); });
}

inline VertexRelation restrict_to(const VertexRelation& r, const OrdSet& s) {
    return VertexRelation::from_predicate(
        r.universe(),
        [&](Label x, Label y) { return s.contains(x) && s.contains(y) && r.at(x, y); });
}

inline bool is_irreflexive(const VertexRelation& r) {
    for (Label x : r.universe()) {
        if (r.at(x, x)) return false;
    }
    return true;
}

inline bool is_symmetric(const VertexRelation& r) {
    for (Label x : r.universe()) {
        for (Label y : r.universe()) {
            if (r.at(x, y) != r.at(y, x)) return false;
        }
    }
    return true;
}

inline bool is_confined_to(const VertexRelation& r, const OrdSet& s) {
    for (Label x : r.universe()) {
        for (Label y : r.universe()) {
            if (r.at(x, y) && !(s.contains(x) && s.contains(y))) return false;
        }
    }
    return true;
}

// Packages a normalized relation as a Graph. The relation must already be
// irreflexive, symmetric, and confined to `vertices`.
inline Graph graph_from_relation(const OrdSet& vertices, const VertexRelation& rel) {
    if (!is_irreflexive(rel)) {
        throw SelfLoopError("relation is not irreflexive");
    }
    if (!is_symmetric(rel)) {
        throw InvalidEdgeError("relation is not symmetric");
    }
    if (!is_confined_to(rel, vertices)) {
        throw InvalidEdgeError("relation has pairs outside the vertex set");
    }
    std::vector<EdgePair> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (rel.at(vertices[i], vertices[j])) {
                edges.push_back({vertices[i], vertices[j]});
            }
        }
    }
    return Graph::build(vertices, edges);
}

// The raw replication relation: pairs not involving the new vertex a2 keep
// the old adjacency, (a, a2) holds, and (x, a2) holds exactly when x was
// adjacent to a. Asymmetric and possibly reflexive by construction; run it
// through the normalizers before building a graph.
inline VertexRelation replication_relation(const Graph& g, Label a, Label a2) {
    if (!g.has_vertex(a)) {
        throw UnknownVertexError("vertex " + std::to_string(a) + " not in graph");
    }
    const OrdSet universe = set_insert(g.vertices(), a2);
    return VertexRelation::from_predicate(universe, [&](Label x, Label y) {
        if (y != a2) return g.has_edge(x, y);
        if (x == a) return true;
        return g.has_edge(x, a);
    });
}

inline Label fresh_vertex(const Graph& g) {
    if (g.order() == 0) return 0;
    return g.vertices()[g.order() - 1] + 1;
}

// Adds a2 adjacent to a and to every neighbor of a.
inline Graph replicate_vertex(const Graph& g, Label a, Label a2) {
    if (!g.has_vertex(a)) {
        throw UnknownVertexError("vertex " + std::to_string(a) + " not in graph");
    }
    if (g.has_vertex(a2)) {
        throw VertexCollisionError("vertex " + std::to_string(a2) + " already in graph");
    }
    const OrdSet new_vertices = set_insert(g.vertices(), a2);
    const VertexRelation rel = symmetric_closure(
        remove_loops(restrict_to(replication_relation(g, a, a2), new_vertices)));
    return graph_from_relation(new_vertices, rel);
}

using MultiplicityMap = std::map<Label, unsigned>;

// Replaces each vertex v by a clique of size m(v); copies of adjacent
// originals are fully interconnected. Implemented by folding replicate_vertex
// with fresh labels handed out in increasing original-vertex order, so the
// original graph survives as the induced subgraph on its own labels.
inline Graph clique_expansion(const Graph& g, const MultiplicityMap& m) {
    for (Label v : g.vertices()) {
        auto it = m.find(v);
        if (it == m.end()) {
            throw PartialMapError("multiplicity missing vertex " + std::to_string(v));
        }
        if (it->second == 0) {
            throw ZeroMultiplicityError("multiplicity 0 at vertex " + std::to_string(v));
        }
    }
    Graph result = g;
    Label next = fresh_vertex(g);
    for (Label v : g.vertices()) {
        const unsigned copies = m.at(v);
        for (unsigned i = 1; i < copies; ++i) {
            result = replicate_vertex(result, v, next++);
        }
    }
    return result;
}

} // namespace pgt
