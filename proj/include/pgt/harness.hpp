#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pgt/analysis.hpp"
#include "pgt/berge.hpp"
#include "pgt/certificate.hpp"
#include "pgt/construct.hpp"
#include "pgt/graph.hpp"
#include "pgt/guard.hpp"
#include "pgt/lovasz.hpp"

namespace pgt {

// ---------------------------------------------------------------------------
// Standard fixtures on labels 0..n-1.
// ---------------------------------------------------------------------------

inline Graph cycle(std::size_t n) {
    std::vector<Label> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Label>(i);
    std::vector<EdgePair> edges;
    if (n == 2) {
        edges.push_back({0, 1});
    } else if (n >= 3) {
        for (std::size_t i = 0; i < n; ++i) {
            edges.push_back(EdgePair::make(static_cast<Label>(i), static_cast<Label>((i + 1) % n)));
        }
    }
    return Graph::build(OrdSet::from_sorted_unchecked(std::move(labels)), edges);
}

inline Graph complete(std::size_t n) {
    std::vector<Label> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Label>(i);
    std::vector<EdgePair> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            edges.push_back({static_cast<Label>(i), static_cast<Label>(j)});
        }
    }
    return Graph::build(OrdSet::from_sorted_unchecked(std::move(labels)), edges);
}

inline Graph path(std::size_t n) {
    std::vector<Label> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Label>(i);
    std::vector<EdgePair> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.push_back({static_cast<Label>(i), static_cast<Label>(i + 1)});
    }
    return Graph::build(OrdSet::from_sorted_unchecked(std::move(labels)), edges);
}

// k disjoint pentagons joined by every possible edge between distinct
// copies. Pushes the gap between chromatic and clique number to 3k vs 2k.
inline Graph pentagon_blowup(std::size_t k) {
    if (k < 1) throw InputError("pentagon_blowup requires k >= 1");
    if (k > 3) throw SizeLimitError("pentagon_blowup limited to k <= 3");
    std::vector<Label> labels(5 * k);
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<Label>(i);
    std::vector<EdgePair> edges;
    for (std::size_t c = 0; c < k; ++c) {
        const Label base = static_cast<Label>(5 * c);
        for (Label i = 0; i < 5; ++i) {
            edges.push_back(EdgePair::make(base + i, base + (i + 1) % 5));
        }
    }
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t d = c + 1; d < k; ++d) {
            for (Label i = 0; i < 5; ++i) {
                for (Label j = 0; j < 5; ++j) {
                    edges.push_back({static_cast<Label>(5 * c + i), static_cast<Label>(5 * d + j)});
                }
            }
        }
    }
    return Graph::build(OrdSet::from_sorted_unchecked(std::move(labels)), edges);
}

// Mycielskian: one shadow vertex per original (adjacent to the original's
// neighbors), plus a hub adjacent to every shadow. Raises the chromatic
// number by one while adding no triangle.
inline Graph mycielski(const Graph& g) {
    const std::size_t n = g.order();
    const Label base = fresh_vertex(g);
    const Label hub = base + static_cast<Label>(n);
    const auto shadow = [&](Label v) { return base + static_cast<Label>(g.position_of(v)); };

    std::vector<Label> labels(g.vertices().begin(), g.vertices().end());
    for (std::size_t i = 0; i <= n; ++i) labels.push_back(base + static_cast<Label>(i));

    std::vector<EdgePair> edges = g.edges();
    for (const EdgePair& e : g.edges()) {
        edges.push_back(EdgePair::make(shadow(e.u), e.v));
        edges.push_back(EdgePair::make(shadow(e.v), e.u));
    }
    for (Label v : g.vertices()) {
        edges.push_back(EdgePair::make(shadow(v), hub));
    }
    return Graph::build(OrdSet::from_sorted_unchecked(std::move(labels)), edges);
}

// Pentagon with its fourth vertex replicated: still nicely colorable
// (chi = omega = 3).
inline Graph replicated_pentagon() {
    return replicate_vertex(cycle(5), 3, 5);
}

// One more replication (second vertex) breaks niceness: chi exceeds omega.
inline Graph twice_replicated_pentagon() {
    return replicate_vertex(replicated_pentagon(), 1, 6);
}

// ---------------------------------------------------------------------------
// Exhaustive labeled-graph enumeration.
// ---------------------------------------------------------------------------

// Pair (i,j), i < j, occupies bit position sum(1..j-1) + i: column-major over
// the upper triangle, the same ordering graph6 uses.
inline Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask) {
    std::vector<Label> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Label>(i);
    std::vector<EdgePair> edges;
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            if (mask & (std::uint64_t{1} << bit)) {
                edges.push_back({static_cast<Label>(i), static_cast<Label>(j)});
            }
        }
    }
    return Graph::build(OrdSet::from_sorted_unchecked(std::move(labels)), edges);
}

// Streams all 2^C(n,2) labeled graphs on 0..n-1 in edge-bitmask order.
class LabeledGraphEnumerator {
public:
    explicit LabeledGraphEnumerator(std::size_t n) : n_(n) {
        require_within_guard(n, kEnumerationGuard, "enumerate_labeled");
        if (n > 11) {
            throw SizeLimitError("enumeration mask exceeds 64 bits past 11 vertices");
        }
        const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
        total_ = std::uint64_t{1} << pairs;
    }

    std::uint64_t total() const { return total_; }

    std::optional<Graph> next() {
        if (cursor_ == total_) return std::nullopt;
        return graph_from_edge_mask(n_, cursor_++);
    }

private:
    std::size_t n_;
    std::uint64_t total_ = 0;
    std::uint64_t cursor_ = 0;
};

// ---------------------------------------------------------------------------
// Theorem batteries.
// ---------------------------------------------------------------------------

enum class Theorem { WPGT, SPGT, Replication };

inline const char* theorem_name(Theorem t) {
    switch (t) {
        case Theorem::WPGT: return "wpgt";
        case Theorem::SPGT: return "spgt";
        case Theorem::Replication: return "replication";
    }
    return "?";
}

struct BatteryFailure {
    Graph graph;
    Certificate certificate;
};

struct BatteryReport {
    Theorem theorem = Theorem::WPGT;
    std::size_t n_max = 0;
    std::uint64_t graphs_checked = 0;
    std::vector<BatteryFailure> failures;
};

namespace detail {

inline void check_wpgt(const Graph& g, std::vector<BatteryFailure>& failures) {
    const PerfectnessReport direct = is_perfect(g);
    const PerfectnessReport complemented = is_perfect(g.complement());
    if (direct.verdict == complemented.verdict) return;
    const ImperfectionWitness witness =
        direct.counterexample ? *direct.counterexample : *complemented.counterexample;
    failures.push_back({g, Certificate{witness}});
}

inline void check_spgt(const Graph& g, std::vector<BatteryFailure>& failures) {
    const PerfectnessReport perfect = is_perfect(g);
    const BergeReport berge = is_berge(g);
    if (perfect.verdict == berge.verdict) return;
    if (berge.certificate) {
        failures.push_back({g, Certificate{*berge.certificate}});
    } else {
        failures.push_back({g, Certificate{*perfect.counterexample}});
    }
}

inline void check_replication(const Graph& g, std::vector<BatteryFailure>& failures) {
    if (!is_perfect(g).verdict) return; // lemma is vacuous here
    const std::size_t omega_before = clique_number(g).value;
    const Coloring optimal = chromatic_number(g).witness;
    for (Label a : g.vertices()) {
        const ReplicationInstance inst = ReplicationInstance::make(g, a);
        const PerfectnessReport after = is_perfect(inst.g2);
        if (!after.verdict) {
            failures.push_back({inst.g2, Certificate{*after.counterexample}});
            continue;
        }
        const CliqueNumber omega_after = clique_number(inst.g2);
        const Coloring extended = extend_coloring(g, optimal, a, inst.a2);
        if (!is_proper_coloring(inst.g2, extended) ||
            colors_used(inst.g2, extended).size() != omega_after.value) {
            failures.push_back({inst.g2, Certificate{extended}});
            continue;
        }
        const CaseTag tag = classify_replication_case(g, a);
        const std::size_t expected_growth = tag == CaseTag::Case2A ? 1 : 0;
        if (omega_after.value != omega_before + expected_growth) {
            failures.push_back({inst.g2, Certificate{omega_after.witness}});
        }
    }
}

inline void check_one(Theorem theorem, const Graph& g, std::vector<BatteryFailure>& failures) {
    switch (theorem) {
        case Theorem::WPGT: check_wpgt(g, failures); break;
        case Theorem::SPGT: check_spgt(g, failures); break;
        case Theorem::Replication: check_replication(g, failures); break;
    }
}

} // namespace detail

// Sweeps every labeled graph on 0..n_max vertices (all sizes up to and
// including n_max) and records violations. Workers partition the edge-mask
// range; chunk results are concatenated in order, keeping reports
// deterministic regardless of the job count.
inline BatteryReport run_battery(Theorem theorem, std::size_t n_max, unsigned jobs = 1) {
    require_within_guard(n_max, kEnumerationGuard, "run_battery");
    if (jobs == 0) jobs = 1;

    BatteryReport report;
    report.theorem = theorem;
    report.n_max = n_max;

    for (std::size_t n = 0; n <= n_max; ++n) {
        const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
        const std::uint64_t total = std::uint64_t{1} << pairs;
        report.graphs_checked += total;

        const unsigned workers = static_cast<unsigned>(
            std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(total, 1)));
        std::vector<std::vector<BatteryFailure>> chunk_failures(workers);
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w]() {
                const std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
                const std::uint64_t len = total / workers + (w < total % workers ? 1 : 0);
                for (std::uint64_t mask = lo; mask < lo + len; ++mask) {
                    detail::check_one(theorem, graph_from_edge_mask(n, mask), chunk_failures[w]);
                }
            });
        }
        for (auto& t : threads) t.join();
        for (auto& chunk : chunk_failures) {
            for (auto& failure : chunk) report.failures.push_back(std::move(failure));
        }
    }
    return report;
}

} // namespace pgt
