#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pgt/graph.hpp"
#include "pgt/guard.hpp"

namespace pgt {

// Total assignment of natural-number colors to vertex labels. Totality over a
// particular graph is checked at the point of use.
class Coloring {
public:
    Coloring() = default;

    static Coloring from_map(std::map<Label, unsigned> m) {
        Coloring c;
        c.map_ = std::move(m);
        return c;
    }

    void assign(Label v, unsigned color) { map_[v] = color; }

    bool covers(Label v) const { return map_.find(v) != map_.end(); }

    unsigned at(Label v) const {
        auto it = map_.find(v);
        if (it == map_.end()) {
            throw PartialColoringError("coloring missing vertex " + std::to_string(v));
        }
        return it->second;
    }

    const std::map<Label, unsigned>& entries() const { return map_; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::map<Label, unsigned> map_;
};

struct CliqueWitness {
    OrdSet members;
};

struct StableWitness {
    OrdSet members;
};

struct CliqueNumber {
    std::size_t value = 0;
    CliqueWitness witness;
};

struct StableNumber {
    std::size_t value = 0;
    StableWitness witness;
};

struct ChromaticNumber {
    std::size_t value = 0;
    Coloring witness;
};

struct ImperfectionWitness {
    OrdSet subset;
    std::size_t omega = 0;
    std::size_t chi = 0;
};

struct PerfectnessReport {
    bool verdict = false;
    std::optional<ImperfectionWitness> counterexample;
};

namespace detail {

// Single-word bitset adjacency over vertex positions; the workhorse for the
// exact searches. Graphs beyond 64 vertices are outside desk scale.
struct DenseGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    std::uint64_t universe() const {
        return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }
};

inline DenseGraph densify(const Graph& g) {
    if (g.order() > 64) {
        throw SizeLimitError("exact analysis supports at most 64 vertices, got " +
                             std::to_string(g.order()));
    }
    DenseGraph d;
    d.n = static_cast<int>(g.order());
    d.adj.assign(g.order(), 0);
    for (const EdgePair& e : g.edges()) {
        const std::size_t i = *g.vertices().index_of(e.u);
        const std::size_t j = *g.vertices().index_of(e.v);
        d.adj[i] |= std::uint64_t{1} << j;
        d.adj[j] |= std::uint64_t{1} << i;
    }
    return d;
}

// Branch and bound maximum clique (greedy-coloring upper bound, candidates
// processed in decreasing bound order). Deterministic: first maximum kept.
class CliqueSearch {
public:
    CliqueSearch(const DenseGraph& g, std::uint64_t allowed) : g_(g) {
        expand(0, 0, allowed);
    }

    int size() const { return best_; }
    std::uint64_t mask() const { return best_mask_; }

private:
    void expand(std::uint64_t clique, int clique_size, std::uint64_t cand) {
        if (cand == 0) {
            if (clique_size > best_) {
                best_ = clique_size;
                best_mask_ = clique;
            }
            return;
        }
        int order[64];
        int bound[64];
        int m = 0;
        int color = 0;
        std::uint64_t uncolored = cand;
        while (uncolored) {
            ++color;
            std::uint64_t avail = uncolored;
            while (avail) {
                const int v = std::countr_zero(avail);
                avail &= ~g_.adj[v];
                avail &= ~(std::uint64_t{1} << v);
                uncolored &= ~(std::uint64_t{1} << v);
                order[m] = v;
                bound[m] = color;
                ++m;
            }
        }
        std::uint64_t pool = cand;
        for (int i = m - 1; i >= 0; --i) {
            if (clique_size + bound[i] <= best_) return;
            const std::uint64_t bit = std::uint64_t{1} << order[i];
            expand(clique | bit, clique_size + 1, pool & g_.adj[order[i]]);
            pool &= ~bit;
        }
    }

    const DenseGraph& g_;
    int best_ = 0;
    std::uint64_t best_mask_ = 0;
};

// Can the vertices in `allowed` be properly colored with at most k colors?
// Vertices are processed in increasing position order and a new color class
// is only ever opened at the least unassigned vertex, which breaks color
// permutation symmetry.
class ColorSearch {
public:
    ColorSearch(const DenseGraph& g, std::uint64_t allowed, int k)
        : g_(g), allowed_(allowed), k_(k) {
        std::uint64_t rest = allowed;
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            verts_.push_back(v);
        }
        class_masks_.assign(static_cast<std::size_t>(k < 0 ? 0 : k), 0);
        color_of_.assign(64, -1);
        found_ = verts_.empty() ? true : (k_ > 0 && try_vertex(0, 0));
    }

    bool found() const { return found_; }

    // Colors indexed by vertex position; -1 where not in `allowed`.
    const std::vector<int>& colors() const { return color_of_; }

private:
    bool try_vertex(std::size_t idx, int used) {
        if (idx == verts_.size()) return true;
        const int v = verts_[idx];
        const std::uint64_t row = g_.adj[v] & allowed_;
        for (int c = 0; c < used; ++c) {
            if (class_masks_[c] & row) continue;
            class_masks_[c] |= std::uint64_t{1} << v;
            color_of_[v] = c;
            if (try_vertex(idx + 1, used)) return true;
            class_masks_[c] &= ~(std::uint64_t{1} << v);
        }
        if (used < k_) {
            class_masks_[used] = std::uint64_t{1} << v;
            color_of_[v] = used;
            if (try_vertex(idx + 1, used + 1)) return true;
            class_masks_[used] = 0;
        }
        color_of_[v] = -1;
        return false;
    }

    const DenseGraph& g_;
    std::uint64_t allowed_;
    int k_;
    std::vector<int> verts_;
    std::vector<std::uint64_t> class_masks_;
    std::vector<int> color_of_;
    bool found_ = false;
};

inline int max_clique_size(const DenseGraph& g, std::uint64_t allowed) {
    return CliqueSearch(g, allowed).size();
}

inline bool colorable_with(const DenseGraph& g, std::uint64_t allowed, int k) {
    return ColorSearch(g, allowed, k).found();
}

// Exact chromatic number by iterative deepening from the clique lower bound.
inline int chromatic_from(const DenseGraph& g, std::uint64_t allowed, int lower,
                          std::vector<int>* colors_out = nullptr) {
    const int n_allowed = std::popcount(allowed);
    for (int k = lower;; ++k) {
        ColorSearch search(g, allowed, k);
        if (search.found()) {
            if (colors_out) *colors_out = search.colors();
            return k;
        }
        if (k >= n_allowed) break; // unreachable: n colors always suffice
    }
    return n_allowed;
}

// Clique number of every subset of positions at once, via the recurrence
// w(S) = max(w(S - v), 1 + w(S & N(v))) for the least v in S.
inline std::vector<std::uint8_t> clique_numbers_by_subset(const DenseGraph& g) {
    const std::size_t total = std::size_t{1} << g.n;
    std::vector<std::uint8_t> w(total, 0);
    for (std::uint64_t s = 1; s < total; ++s) {
        const int v = std::countr_zero(s);
        const std::uint64_t rest = s & (s - 1);
        const std::uint8_t without_v = w[rest];
        const std::uint8_t with_v = static_cast<std::uint8_t>(1 + w[rest & g.adj[v]]);
        w[s] = without_v > with_v ? without_v : with_v;
    }
    return w;
}

inline OrdSet labels_of_mask(const Graph& g, std::uint64_t mask) {
    std::vector<Label> out;
    while (mask) {
        const int i = std::countr_zero(mask);
        mask &= mask - 1;
        out.push_back(g.label_at(static_cast<std::size_t>(i)));
    }
    return OrdSet::from_sorted_unchecked(std::move(out));
}

} // namespace detail

inline bool is_clique(const Graph& g, const OrdSet& k) {
    if (!k.is_subset_of(g.vertices())) {
        throw NotASubsetError("is_clique: set is not a subset of the vertices");
    }
    for (std::size_t i = 0; i < k.size(); ++i) {
        for (std::size_t j = i + 1; j < k.size(); ++j) {
            if (!g.has_edge(k[i], k[j])) return false;
        }
    }
    return true;
}

inline bool is_stable(const Graph& g, const OrdSet& s) {
    if (!s.is_subset_of(g.vertices())) {
        throw NotASubsetError("is_stable: set is not a subset of the vertices");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (g.has_edge(s[i], s[j])) return false;
        }
    }
    return true;
}

inline bool is_proper_coloring(const Graph& g, const Coloring& f) {
    for (Label v : g.vertices()) {
        if (!f.covers(v)) {
            throw PartialColoringError("coloring missing vertex " + std::to_string(v));
        }
    }
    for (const EdgePair& e : g.edges()) {
        if (f.at(e.u) == f.at(e.v)) return false;
    }
    return true;
}

inline OrdSet colors_used(const Graph& g, const Coloring& f) {
    std::vector<Label> colors;
    colors.reserve(g.order());
    for (Label v : g.vertices()) {
        if (!f.covers(v)) {
            throw PartialColoringError("coloring missing vertex " + std::to_string(v));
        }
        colors.push_back(f.at(v));
    }
    return OrdSet::from_unsorted(std::move(colors));
}

inline CliqueNumber clique_number(const Graph& g) {
    const auto dense = detail::densify(g);
    detail::CliqueSearch search(dense, dense.universe());
    return {static_cast<std::size_t>(search.size()),
            CliqueWitness{detail::labels_of_mask(g, search.mask())}};
}

inline StableNumber stable_number(const Graph& g) {
    const CliqueNumber c = clique_number(g.complement());
    return {c.value, StableWitness{c.witness.members}};
}

inline ChromaticNumber chromatic_number(const Graph& g) {
    const auto dense = detail::densify(g);
    const int lower = detail::max_clique_size(dense, dense.universe());
    std::vector<int> colors;
    const int chi = detail::chromatic_from(dense, dense.universe(), lower, &colors);

    // Normalize: color classes numbered by first appearance in label order.
    std::map<int, unsigned> rename;
    Coloring witness;
    for (std::size_t i = 0; i < g.order(); ++i) {
        const int raw = colors[i];
        auto it = rename.try_emplace(raw, static_cast<unsigned>(rename.size())).first;
        witness.assign(g.label_at(i), it->second);
    }
    return {static_cast<std::size_t>(chi), witness};
}

inline bool is_nice(const Graph& g) {
    return clique_number(g).value == chromatic_number(g).value;
}

// Sweeps every vertex subset in powerset order and reports the first induced
// subgraph with chi > omega, if any.
inline PerfectnessReport is_perfect(const Graph& g) {
    require_within_guard(g.order(), kPowersetGuard, "is_perfect");
    const auto dense = detail::densify(g);
    const int n = dense.n;

    std::vector<std::uint8_t> omega_table;
    if (n <= 20) omega_table = detail::clique_numbers_by_subset(dense);

    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        const int omega = omega_table.empty()
                              ? detail::max_clique_size(dense, mask)
                              : omega_table[mask];
        if (detail::colorable_with(dense, mask, omega)) continue;
        const int chi = detail::chromatic_from(dense, mask, omega + 1);
        return {false, ImperfectionWitness{detail::labels_of_mask(g, mask),
                                           static_cast<std::size_t>(omega),
                                           static_cast<std::size_t>(chi)}};
    }
    return {true, std::nullopt};
}

} // namespace pgt
