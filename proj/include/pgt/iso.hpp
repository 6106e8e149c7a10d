#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "pgt/graph.hpp"
#include "pgt/guard.hpp"

namespace pgt {

// Finite-support vertex mapping, identity off its support. Isomorphism
// witnesses are ideally involutions (self-inverse); a general bijection is
// kept representable because overlapping vertex sets sometimes admit an
// isomorphism but no involutive one (see find_isomorphism).
class IsoMap {
public:
    IsoMap() = default;

    static IsoMap identity() { return IsoMap(); }

    // Builds the involution swapping each listed pair (x,x swaps are fixed
    // points). Pairs must not conflict.
    static IsoMap involution_from_pairs(const std::vector<std::pair<Label, Label>>& pairs) {
        IsoMap f;
        for (const auto& [x, y] : pairs) {
            auto itx = f.fwd_.find(x);
            auto ity = f.fwd_.find(y);
            if ((itx != f.fwd_.end() && itx->second != y) ||
                (ity != f.fwd_.end() && ity->second != x)) {
                throw InputError("conflicting involution pairs");
            }
            f.fwd_[x] = y;
            f.fwd_[y] = x;
        }
        return f;
    }

    // General finite map; must be injective.
    static IsoMap from_mapping(std::map<Label, Label> fwd) {
        std::vector<Label> images;
        images.reserve(fwd.size());
        for (const auto& [k, v] : fwd) images.push_back(v);
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
            throw InputError("mapping is not injective");
        }
        IsoMap f;
        f.fwd_ = std::move(fwd);
        return f;
    }

    Label apply(Label x) const {
        auto it = fwd_.find(x);
        return it == fwd_.end() ? x : it->second;
    }

    OrdSet support() const {
        std::vector<Label> keys;
        keys.reserve(fwd_.size());
        for (const auto& [k, v] : fwd_) keys.push_back(k);
        return OrdSet::from_sorted_unchecked(std::move(keys));
    }

    bool is_involution() const {
        for (const auto& [k, v] : fwd_) {
            if (apply(v) != k) return false;
        }
        return true;
    }

    const std::map<Label, Label>& mapping() const { return fwd_; }

    friend bool operator==(const IsoMap&, const IsoMap&) = default;

private:
    std::map<Label, Label> fwd_;
};

// The strict witness predicate: f is an involution, maps the vertices of g
// exactly onto the vertices of g2, and preserves edges as an equality in
// both directions. All conditions are decided over the finite probe set
// support(f) + V(g) + V(g2); off that set f is the identity and both edge
// relations are false.
inline bool is_isomorphism_witness(const IsoMap& f, const Graph& g, const Graph& g2) {
    const OrdSet probe = set_union(f.support(), set_union(g.vertices(), g2.vertices()));
    for (Label x : probe) {
        if (f.apply(f.apply(x)) != x) return false;
    }
    std::vector<Label> image;
    image.reserve(g.order());
    for (Label x : g.vertices()) image.push_back(f.apply(x));
    if (OrdSet::from_unsorted(std::move(image)) != g2.vertices()) return false;
    for (Label x : probe) {
        for (Label y : probe) {
            if (g.has_edge(x, y) != g2.has_edge(f.apply(x), f.apply(y))) return false;
        }
    }
    return true;
}

namespace detail {

// Backtracking search for an involutive witness over U = V(g) + V(g2):
// assigns vertices in pairs x <-> y, propagating the inverse assignment,
// pruned by degree equality and incremental edge-equality consistency.
class InvolutionSearch {
public:
    InvolutionSearch(const Graph& g, const Graph& g2)
        : g_(g), g2_(g2), universe_(set_union(g.vertices(), g2.vertices())) {
        const std::size_t n = universe_.size();
        in_g_.resize(n);
        in_g2_.resize(n);
        deg_g_.assign(n, -1);
        deg_g2_.assign(n, -1);
        partner_.assign(n, kUnset);
        for (std::size_t i = 0; i < n; ++i) {
            const Label v = universe_[i];
            in_g_[i] = g.has_vertex(v);
            in_g2_[i] = g2.has_vertex(v);
            if (in_g_[i]) deg_g_[i] = static_cast<int>(g.degree(v));
            if (in_g2_[i]) deg_g2_[i] = static_cast<int>(g2.degree(v));
        }
        // Decreasing degree, then ascending label.
        order_.resize(n);
        for (std::size_t i = 0; i < n; ++i) order_[i] = i;
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            return key_degree(a) > key_degree(b);
        });
        found_ = assign_next(0);
    }

    bool found() const { return found_; }

    std::vector<std::pair<Label, Label>> pairs() const {
        std::vector<std::pair<Label, Label>> out;
        for (std::size_t i = 0; i < universe_.size(); ++i) {
            if (partner_[i] != kUnset && i <= partner_[i]) {
                out.emplace_back(universe_[i], universe_[partner_[i]]);
            }
        }
        return out;
    }

private:
    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    int key_degree(std::size_t i) const { return std::max(deg_g_[i], deg_g2_[i]); }

    bool candidate_ok(std::size_t x, std::size_t y) const {
        if (in_g_[x] && (!in_g2_[y] || deg_g_[x] != deg_g2_[y])) return false;
        if (in_g2_[x] && (!in_g_[y] || deg_g2_[x] != deg_g_[y])) return false;
        if (in_g_[y] && (!in_g2_[x] || deg_g_[y] != deg_g2_[x])) return false;
        if (in_g2_[y] && (!in_g_[x] || deg_g2_[y] != deg_g_[x])) return false;
        return true;
    }

    bool edges_consistent(std::size_t x, std::size_t y) const {
        const Label lx = universe_[x];
        const Label ly = universe_[y];
        if (g_.has_edge(lx, ly) != g2_.has_edge(ly, lx)) return false;
        for (std::size_t u = 0; u < universe_.size(); ++u) {
            if (partner_[u] == kUnset || u == x || u == y) continue;
            const Label lu = universe_[u];
            const Label lw = universe_[partner_[u]];
            if (g_.has_edge(lx, lu) != g2_.has_edge(ly, lw)) return false;
            if (g_.has_edge(ly, lu) != g2_.has_edge(lx, lw)) return false;
        }
        return true;
    }

    bool assign_next(std::size_t order_idx) {
        while (order_idx < order_.size() && partner_[order_[order_idx]] != kUnset) {
            ++order_idx;
        }
        if (order_idx == order_.size()) return true;
        const std::size_t x = order_[order_idx];
        for (std::size_t y = 0; y < universe_.size(); ++y) {
            if (partner_[y] != kUnset && y != x) continue;
            if (!candidate_ok(x, y)) continue;
            partner_[x] = y;
            partner_[y] = x;
            if (edges_consistent(x, y) && assign_next(order_idx + 1)) return true;
            partner_[x] = kUnset;
            partner_[y] = kUnset;
        }
        return false;
    }

    const Graph& g_;
    const Graph& g2_;
    OrdSet universe_;
    std::vector<char> in_g_, in_g2_;
    std::vector<int> deg_g_, deg_g2_;
    std::vector<std::size_t> partner_;
    std::vector<std::size_t> order_;
    bool found_ = false;
};

// Plain bijection search V(g) -> V(g2), degree-pruned.
class BijectionSearch {
public:
    BijectionSearch(const Graph& g, const Graph& g2) : g_(g), g2_(g2) {
        const std::size_t n = g.order();
        map_.assign(n, kUnset);
        used_.assign(n, false);
        order_.resize(n);
        for (std::size_t i = 0; i < n; ++i) order_[i] = i;
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            return g.degree(g.label_at(a)) > g.degree(g.label_at(b));
        });
        found_ = n == 0 ? true : assign(0);
    }

    bool found() const { return found_; }

    std::map<Label, Label> mapping() const {
        std::map<Label, Label> out;
        for (std::size_t i = 0; i < map_.size(); ++i) {
            out[g_.label_at(i)] = g2_.label_at(map_[i]);
        }
        return out;
    }

private:
    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    bool assign(std::size_t idx) {
        if (idx == order_.size()) return true;
        const std::size_t x = order_[idx];
        const Label lx = g_.label_at(x);
        for (std::size_t y = 0; y < g2_.order(); ++y) {
            if (used_[y]) continue;
            if (g_.degree(lx) != g2_.degree(g2_.label_at(y))) continue;
            bool ok = true;
            for (std::size_t j = 0; j < idx && ok; ++j) {
                const std::size_t u = order_[j];
                ok = g_.adjacent_at(x, u) == g2_.adjacent_at(y, map_[u]);
            }
            if (!ok) continue;
            map_[x] = y;
            used_[y] = true;
            if (assign(idx + 1)) return true;
            map_[x] = kUnset;
            used_[y] = false;
        }
        return false;
    }

    const Graph& g_;
    const Graph& g2_;
    std::vector<std::size_t> map_;
    std::vector<char> used_;
    std::vector<std::size_t> order_;
    bool found_ = false;
};

} // namespace detail

// Decides isomorphism and produces a witness. An involutive witness is
// returned whenever one exists (always, when the vertex sets are disjoint).
// Overlapping vertex sets can be isomorphic with no involutive witness at
// all -- the pentagon and its same-label complement are such a pair -- in
// which case the witness is the plain bijection; it still transfers vertices
// and edges but is_isomorphism_witness rejects it, so callers that need the
// strict form should check is_involution().
inline std::optional<IsoMap> find_isomorphism(const Graph& g, const Graph& g2) {
    require_within_guard(std::max(g.order(), g2.order()), kIsoSearchGuard, "find_isomorphism");
    if (g.order() != g2.order() || g.edge_count() != g2.edge_count()) return std::nullopt;

    std::vector<std::size_t> deg_a, deg_b;
    for (Label v : g.vertices()) deg_a.push_back(g.degree(v));
    for (Label v : g2.vertices()) deg_b.push_back(g2.degree(v));
    std::sort(deg_a.begin(), deg_a.end());
    std::sort(deg_b.begin(), deg_b.end());
    if (deg_a != deg_b) return std::nullopt;

    detail::InvolutionSearch involutive(g, g2);
    if (involutive.found()) {
        return IsoMap::involution_from_pairs(involutive.pairs());
    }
    if (set_intersection(g.vertices(), g2.vertices()).empty()) {
        return std::nullopt; // pair search is exhaustive for disjoint sets
    }
    detail::BijectionSearch plain(g, g2);
    if (plain.found()) {
        return IsoMap::from_mapping(plain.mapping());
    }
    return std::nullopt;
}

// Image of a graph under a vertex map (must be injective on the vertices).
inline Graph map_graph(const IsoMap& f, const Graph& g) {
    std::vector<Label> image;
    image.reserve(g.order());
    for (Label v : g.vertices()) image.push_back(f.apply(v));
    OrdSet new_vertices = OrdSet::from_unsorted(std::move(image));
    if (new_vertices.size() != g.order()) {
        throw InputError("map is not injective on the vertex set");
    }
    std::vector<EdgePair> edges;
    edges.reserve(g.edge_count());
    for (const EdgePair& e : g.edges()) {
        edges.push_back(EdgePair::make(f.apply(e.u), f.apply(e.v)));
    }
    return Graph::build(std::move(new_vertices), edges);
}

} // namespace pgt
