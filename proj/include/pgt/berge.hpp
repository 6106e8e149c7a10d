#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "pgt/analysis.hpp"
#include "pgt/graph.hpp"
#include "pgt/guard.hpp"

namespace pgt {

enum class HoleKind { OddHole, OddAntihole };

// Witness of SPGT's forbidden structures: the vertex sequence of a chordless
// odd cycle of length >= 5, induced in the graph (OddHole) or in its
// complement (OddAntihole).
struct HoleCertificate {
    HoleKind kind = HoleKind::OddHole;
    std::vector<Label> cycle;
};

namespace detail {

// Is the induced subgraph on `mask` a single chordless cycle? True exactly
// when every vertex of the subset has two neighbors inside it and the
// subset is connected.
inline bool induces_cycle(const DenseGraph& g, std::uint64_t mask) {
    std::uint64_t rest = mask;
    while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (std::popcount(g.adj[v] & mask) != 2) return false;
    }
    const int start = std::countr_zero(mask);
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            const int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.adj[v] & mask & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == mask;
}

// Cycle order starting at the least label, stepping first toward its
// smaller-labeled neighbor inside the hole.
inline std::vector<Label> walk_cycle(const Graph& g, const DenseGraph& dense, std::uint64_t mask) {
    std::vector<Label> cycle;
    const int start = std::countr_zero(mask);
    int prev = -1;
    int cur = start;
    do {
        cycle.push_back(g.label_at(static_cast<std::size_t>(cur)));
        std::uint64_t nbrs = dense.adj[cur] & mask;
        int next = -1;
        while (nbrs) {
            const int w = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            if (w == prev) continue;
            if (next == -1) next = w;
        }
        prev = cur;
        cur = next;
    } while (cur != start);
    return cycle;
}

inline std::optional<std::vector<Label>> find_odd_hole_mask(const Graph& g) {
    const auto dense = densify(g);
    const int n = dense.n;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const int size = std::popcount(mask);
        if (size < 5 || size % 2 == 0) continue;
        if (induces_cycle(dense, mask)) return walk_cycle(g, dense, mask);
    }
    return std::nullopt;
}

} // namespace detail

inline std::optional<HoleCertificate> find_odd_hole(const Graph& g) {
    require_within_guard(g.order(), kHoleSearchGuard, "find_odd_hole");
    if (auto cycle = detail::find_odd_hole_mask(g)) {
        return HoleCertificate{HoleKind::OddHole, std::move(*cycle)};
    }
    return std::nullopt;
}

inline std::optional<HoleCertificate> find_odd_antihole(const Graph& g) {
    require_within_guard(g.order(), kHoleSearchGuard, "find_odd_antihole");
    if (auto cycle = detail::find_odd_hole_mask(g.complement())) {
        return HoleCertificate{HoleKind::OddAntihole, std::move(*cycle)};
    }
    return std::nullopt;
}

struct BergeReport {
    bool verdict = false;
    std::optional<HoleCertificate> certificate;
};

// Berge = no odd hole and no odd anti-hole; the hole search runs first.
inline BergeReport is_berge(const Graph& g) {
    if (auto hole = find_odd_hole(g)) return {false, std::move(hole)};
    if (auto antihole = find_odd_antihole(g)) return {false, std::move(antihole)};
    return {true, std::nullopt};
}

} // namespace pgt
