#pragma once

#include <optional>
#include <utility>

#include "pgt/analysis.hpp"
#include "pgt/construct.hpp"
#include "pgt/guard.hpp"

namespace pgt {

// Replication instance bundle: g2 is always repeat-of-a in g.
struct ReplicationInstance {
    Graph g;
    Label a = 0;
    Label a2 = 0;
    Graph g2;

    static ReplicationInstance make(const Graph& g, Label a) {
        const Label a2 = fresh_vertex(g);
        return {g, a, a2, replicate_vertex(g, a, a2)};
    }
};

// Case split of the constructive coloring extension: Case2A when some
// maximum clique contains the replicated vertex (the clique grows, so does
// the color count), Case2B otherwise (the old clique number survives).
enum class CaseTag { Case2A, Case2B };

struct MaxCliqueMembership {
    bool exists = false;
    std::optional<CliqueWitness> witness;
};

// Is `a` contained in some clique of maximum size? Decided by searching the
// neighborhood of `a` for a clique of size omega(g) - 1.
inline MaxCliqueMembership exists_max_clique_with(const Graph& g, Label a) {
    const std::size_t pa = g.position_of(a);
    const auto dense = detail::densify(g);
    const std::size_t omega = clique_number(g).value;

    const std::uint64_t neighborhood = dense.adj[pa];
    detail::CliqueSearch search(dense, neighborhood);
    if (static_cast<std::size_t>(search.size()) + 1 != omega) {
        return {false, std::nullopt};
    }
    const std::uint64_t clique_mask = search.mask() | (std::uint64_t{1} << pa);
    return {true, CliqueWitness{detail::labels_of_mask(g, clique_mask)}};
}

inline CaseTag classify_replication_case(const Graph& g, Label a) {
    return exists_max_clique_with(g, a).exists ? CaseTag::Case2A : CaseTag::Case2B;
}

// Extends an optimal coloring of g to an optimal coloring of the graph with
// `a` replicated to `a2`. Requires f proper with exactly omega(g) colors;
// optimality of the output additionally needs g perfect, which the caller
// asserts (checking it here would cost an exponential sweep per call).
//
// Case2A: a2 simply receives a color unused by f.
// Case2B: recolor the subgraph on {v : f(v) != f(a)} + {a} optimally with
// colors avoiding f(a), then give color f(a) to everything else, a2 included.
inline Coloring extend_coloring(const Graph& g, const Coloring& f, Label a, Label a2) {
    if (!g.has_vertex(a)) {
        throw UnknownVertexError("vertex " + std::to_string(a) + " not in graph");
    }
    if (g.has_vertex(a2)) {
        throw VertexCollisionError("vertex " + std::to_string(a2) + " already in graph");
    }
    if (!is_proper_coloring(g, f)) {
        throw ImproperInputError("coloring is not proper");
    }
    const std::size_t omega = clique_number(g).value;
    if (colors_used(g, f).size() != omega) {
        throw ImproperInputError("coloring does not use exactly omega colors");
    }

    if (exists_max_clique_with(g, a).exists) {
        // Case 2A: smallest natural number not used by f.
        const OrdSet used = colors_used(g, f);
        unsigned fresh_color = 0;
        while (used.contains(fresh_color)) ++fresh_color;
        Coloring extended = f;
        extended.assign(a2, fresh_color);
        return extended;
    }

    // Case 2B.
    const unsigned color_a = f.at(a);
    std::vector<Label> star_vertices;
    for (Label v : g.vertices()) {
        if (f.at(v) != color_a || v == a) star_vertices.push_back(v);
    }
    const Graph star = g.induced_subgraph(OrdSet::from_sorted_unchecked(std::move(star_vertices)));

    const std::size_t star_omega = clique_number(star).value;
    if (star_omega >= omega) {
        throw Error("internal: restricted subgraph kept a maximum clique in Case 2B");
    }

    const ChromaticNumber star_coloring = chromatic_number(star);
    // Shift the canonical colors {0..k-1} past color_a so it stays free.
    const auto renamed = [&](unsigned c) { return c < color_a ? c : c + 1; };

    Coloring extended;
    for (Label v : g.vertices()) {
        if (star.has_vertex(v)) {
            extended.assign(v, renamed(star_coloring.witness.at(v)));
        } else {
            extended.assign(v, color_a);
        }
    }
    extended.assign(a2, color_a);
    return extended;
}

// The replication lemma at desk scale: a perfect graph stays perfect no
// matter which vertex is replicated. Vacuously true for imperfect inputs.
inline bool check_replication_lemma(const Graph& g) {
    require_within_guard(g.order(), kReplicationGuard, "check_replication_lemma");
    if (!is_perfect(g).verdict) return true;
    for (Label a : g.vertices()) {
        const Graph replicated = replicate_vertex(g, a, fresh_vertex(g));
        if (!is_perfect(replicated).verdict) return false;
    }
    return true;
}

} // namespace pgt
