#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pgt/error.hpp"
#include "pgt/ordset.hpp"

namespace pgt {

// Canonical unordered pair of distinct labels, stored with u < v.
struct EdgePair {
    Label u = 0;
    Label v = 0;

    static EdgePair make(Label a, Label b) {
        if (a == b) {
            throw SelfLoopError("self-loop at vertex " + std::to_string(a));
        }
        return a < b ? EdgePair{a, b} : EdgePair{b, a};
    }

    friend bool operator==(const EdgePair&, const EdgePair&) = default;
    friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

// Square bit matrix indexed by vertex position. Cells are set individually,
// so it also serves as storage for raw (not yet symmetric) relations.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n)
        : n_(n), words_(n == 0 ? 0 : (n + 63) / 64), bits_(n_ * words_, 0) {}

    std::size_t dimension() const { return n_; }

    bool get(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }

    void set(std::size_t i, std::size_t j, bool value = true) {
        std::uint64_t& word = bits_[i * words_ + j / 64];
        const std::uint64_t bit = std::uint64_t{1} << (j % 64);
        if (value) {
            word |= bit;
        } else {
            word &= ~bit;
        }
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Finite simple undirected graph. The adjacency relation is irreflexive,
// symmetric, and confined to the vertex set; edge queries outside the graph
// answer false rather than failing.
class Graph {
public:
    Graph() = default;

    static Graph build(OrdSet vertices, const std::vector<EdgePair>& edges) {
        Graph g;
        g.vertices_ = std::move(vertices);
        g.adj_ = BitMatrix(g.vertices_.size());
        for (const EdgePair& e : edges) {
            const auto pu = g.vertices_.index_of(e.u);
            const auto pv = g.vertices_.index_of(e.v);
            if (!pu || !pv) {
                throw InvalidEdgeError("edge (" + std::to_string(e.u) + "," +
                                       std::to_string(e.v) + ") has an endpoint outside the vertex set");
            }
            if (e.u == e.v) {
                throw SelfLoopError("self-loop at vertex " + std::to_string(e.u));
            }
            g.adj_.set(*pu, *pv);
            g.adj_.set(*pv, *pu);
        }
        g.rebuild_edge_list();
        return g;
    }

    const OrdSet& vertices() const { return vertices_; }
    const std::vector<EdgePair>& edges() const { return edges_; }
    std::size_t order() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(Label v) const { return vertices_.contains(v); }

    bool has_edge(Label u, Label v) const {
        if (u == v) return false;
        const auto pu = vertices_.index_of(u);
        const auto pv = vertices_.index_of(v);
        if (!pu || !pv) return false;
        return adj_.get(*pu, *pv);
    }

    std::size_t position_of(Label v) const {
        const auto p = vertices_.index_of(v);
        if (!p) throw UnknownVertexError("vertex " + std::to_string(v) + " not in graph");
        return *p;
    }

    Label label_at(std::size_t pos) const { return vertices_[pos]; }

    bool adjacent_at(std::size_t i, std::size_t j) const { return adj_.get(i, j); }

    OrdSet neighbors(Label v) const {
        const std::size_t pv = position_of(v);
        std::vector<Label> out;
        for (std::size_t i = 0; i < order(); ++i) {
            if (adj_.get(pv, i)) out.push_back(vertices_[i]);
        }
        return OrdSet::from_sorted_unchecked(std::move(out));
    }

    std::size_t degree(Label v) const {
        const std::size_t pv = position_of(v);
        std::size_t d = 0;
        for (std::size_t i = 0; i < order(); ++i) {
            if (adj_.get(pv, i)) ++d;
        }
        return d;
    }

    Graph induced_subgraph(const OrdSet& s) const {
        if (!s.is_subset_of(vertices_)) {
            throw NotASubsetError("induced_subgraph: set is not a subset of the vertices");
        }
        std::vector<EdgePair> kept;
        for (const EdgePair& e : edges_) {
            if (s.contains(e.u) && s.contains(e.v)) kept.push_back(e);
        }
        return build(s, kept);
    }

    Graph complement() const {
        std::vector<EdgePair> anti;
        for (std::size_t i = 0; i < order(); ++i) {
            for (std::size_t j = i + 1; j < order(); ++j) {
                if (!adj_.get(i, j)) anti.push_back({vertices_[i], vertices_[j]});
            }
        }
        return build(vertices_, anti);
    }

    // Debug hook: re-checks the three representation invariants from scratch.
    bool validate() const {
        const std::size_t n = order();
        for (std::size_t i = 0; i < n; ++i) {
            if (adj_.get(i, i)) return false;
            for (std::size_t j = 0; j < n; ++j) {
                if (adj_.get(i, j) != adj_.get(j, i)) return false;
            }
        }
        std::vector<EdgePair> expected;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (adj_.get(i, j)) expected.push_back({vertices_[i], vertices_[j]});
            }
        }
        if (expected != edges_) return false;
        for (std::size_t i = 1; i < n; ++i) {
            if (!(vertices_[i - 1] < vertices_[i])) return false;
        }
        return true;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    void rebuild_edge_list() {
        edges_.clear();
        for (std::size_t i = 0; i < order(); ++i) {
            for (std::size_t j = i + 1; j < order(); ++j) {
                if (adj_.get(i, j)) edges_.push_back({vertices_[i], vertices_[j]});
            }
        }
    }

    OrdSet vertices_;
    std::vector<EdgePair> edges_;
    BitMatrix adj_;
};

inline bool is_subgraph(const Graph& h, const Graph& g) {
    if (!h.vertices().is_subset_of(g.vertices())) return false;
    for (const EdgePair& e : h.edges()) {
        if (!g.has_edge(e.u, e.v)) return false;
    }
    return true;
}

inline bool is_induced_subgraph(const Graph& h, const Graph& g) {
    if (!is_subgraph(h, g)) return false;
    for (std::size_t i = 0; i < h.order(); ++i) {
        for (std::size_t j = i + 1; j < h.order(); ++j) {
            const Label u = h.label_at(i);
            const Label v = h.label_at(j);
            if (g.has_edge(u, v) && !h.has_edge(u, v)) return false;
        }
    }
    return true;
}

} // namespace pgt
