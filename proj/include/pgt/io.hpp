#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pgt/analysis.hpp"
#include "pgt/berge.hpp"
#include "pgt/certificate.hpp"
#include "pgt/graph.hpp"
#include "pgt/harness.hpp"
#include "pgt/iso.hpp"

namespace pgt {

// ---------------------------------------------------------------------------
// DIMACS edge format. Vertices are written by position as 1..n, so graphs
// whose labels are not 0..n-1 round-trip onto relabeled copies.
// ---------------------------------------------------------------------------

inline std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (const EdgePair& e : g.edges()) {
        out << "e " << (*g.vertices().index_of(e.u) + 1) << ' '
            << (*g.vertices().index_of(e.v) + 1) << '\n';
    }
    return out.str();
}

// Grammar: optional `c ...` comment lines, one `p edge <n> <m>` header, then
// edge lines `e <u> <v>` with 1 <= u,v <= n and u != v. Duplicate edge lines
// collapse; the declared m must equal the distinct-edge count.
inline Graph parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::set<EdgePair> edges;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw SyntaxError(line_no, "duplicate header");
            std::string format;
            std::string extra;
            if (!(ls >> format >> n >> m) || format != "edge" || n < 0 || m < 0 || (ls >> extra)) {
                throw SyntaxError(line_no, "malformed header, expected 'p edge <n> <m>'");
            }
            have_header = true;
            continue;
        }
        if (tag == "e") {
            if (!have_header) throw SyntaxError(line_no, "edge before header");
            long long u = 0, v = 0;
            std::string extra;
            if (!(ls >> u >> v) || (ls >> extra)) {
                throw SyntaxError(line_no, "malformed edge, expected 'e <u> <v>'");
            }
            if (u < 1 || u > n || v < 1 || v > n) {
                throw InvalidEdgeError("line " + std::to_string(line_no) + ": endpoint outside 1.." +
                                       std::to_string(n));
            }
            if (u == v) {
                throw SelfLoopError("line " + std::to_string(line_no) + ": self-loop at " +
                                    std::to_string(u));
            }
            edges.insert(EdgePair::make(static_cast<Label>(u - 1), static_cast<Label>(v - 1)));
            continue;
        }
        throw SyntaxError(line_no, "unknown line type '" + tag + "'");
    }
    if (!have_header) throw SyntaxError(line_no, "missing 'p edge' header");
    if (static_cast<long long>(edges.size()) != m) {
        throw SyntaxError(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                       std::to_string(edges.size()) + " distinct");
    }
    std::vector<Label> labels(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<Label>(i);
    return Graph::build(OrdSet::from_sorted_unchecked(std::move(labels)),
                        std::vector<EdgePair>(edges.begin(), edges.end()));
}

// ---------------------------------------------------------------------------
// graph6 ingestion (read-only interoperability with standard graph corpora).
// ---------------------------------------------------------------------------

inline Graph parse_graph6(std::string_view text) {
    // Strip the optional format header and surrounding whitespace.
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
        text.remove_suffix(1);
    }
    if (text.empty()) throw InputError("graph6: empty input");

    std::size_t pos = 0;
    const auto take = [&]() -> unsigned {
        if (pos >= text.size()) throw InputError("graph6: truncated input");
        const unsigned char c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw InputError("graph6: byte out of range at offset " + std::to_string(pos - 1));
        return c - 63;
    };

    std::uint64_t n = take();
    if (n == 63) { // long form
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | take();
        if (n == ((63ull << 12) | (63ull << 6) | 63ull)) {
            throw InputError("graph6: 36-bit orders not supported");
        }
    }
    if (n > 4096) throw InputError("graph6: order too large for this toolkit");

    const std::uint64_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::vector<bool> bits;
    bits.reserve(bit_count + 6);
    while (bits.size() < bit_count) {
        const unsigned chunk = take();
        for (int b = 5; b >= 0; --b) bits.push_back((chunk >> b) & 1u);
    }
    if (pos != text.size()) throw InputError("graph6: trailing bytes");

    std::vector<Label> labels(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<Label>(i);
    std::vector<EdgePair> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            if (bits[k]) edges.push_back({static_cast<Label>(i), static_cast<Label>(j)});
        }
    }
    return Graph::build(OrdSet::from_sorted_unchecked(std::move(labels)), edges);
}

// ---------------------------------------------------------------------------
// JSON payloads. Vertices are numbered externally as positions 1..n within
// the graph the payload refers to, matching the DIMACS convention.
// ---------------------------------------------------------------------------

inline unsigned external_number(const Graph& g, Label v) {
    return static_cast<unsigned>(g.position_of(v)) + 1;
}

inline nlohmann::json vertex_array_json(const Graph& g, const OrdSet& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (Label v : s) arr.push_back(external_number(g, v));
    return arr;
}

inline nlohmann::json cycle_json(const Graph& g, const std::vector<Label>& cycle) {
    nlohmann::json arr = nlohmann::json::array();
    for (Label v : cycle) arr.push_back(external_number(g, v));
    return arr;
}

inline nlohmann::json coloring_json(const Graph& g, const Coloring& f) {
    nlohmann::json obj = nlohmann::json::object();
    for (Label v : g.vertices()) {
        obj[std::to_string(external_number(g, v))] = f.at(v);
    }
    return obj;
}

inline nlohmann::json clique_number_json(const Graph& g, const CliqueNumber& r) {
    return {{"value", r.value}, {"witness", vertex_array_json(g, r.witness.members)}};
}

inline nlohmann::json chromatic_number_json(const Graph& g, const ChromaticNumber& r) {
    return {{"value", r.value}, {"witness", coloring_json(g, r.witness)}};
}

inline nlohmann::json perfectness_json(const Graph& g, const PerfectnessReport& r) {
    nlohmann::json obj{{"verdict", r.verdict}};
    if (r.counterexample) {
        obj["counterexample"] = {{"vertices", vertex_array_json(g, r.counterexample->subset)},
                                 {"omega", r.counterexample->omega},
                                 {"chi", r.counterexample->chi}};
    }
    return obj;
}

inline nlohmann::json hole_json(const Graph& g, const HoleCertificate& c) {
    return {{"kind", c.kind == HoleKind::OddHole ? "odd-hole" : "odd-antihole"},
            {"cycle", cycle_json(g, c.cycle)}};
}

inline nlohmann::json berge_json(const Graph& g, const BergeReport& r) {
    nlohmann::json obj{{"verdict", r.verdict}};
    if (r.certificate) obj["certificate"] = hole_json(g, *r.certificate);
    return obj;
}

inline nlohmann::json iso_json(const Graph& g, const Graph& g2, const std::optional<IsoMap>& f) {
    if (!f) return {{"isomorphic", false}};
    nlohmann::json map = nlohmann::json::object();
    for (Label v : g.vertices()) {
        map[std::to_string(external_number(g, v))] = external_number(g2, f->apply(v));
    }
    return {{"isomorphic", true}, {"map", map}};
}

inline nlohmann::json certificate_json(const Graph& g, const Certificate& c) {
    return std::visit(
        [&](const auto& value) -> nlohmann::json {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, CliqueWitness>) {
                return {{"kind", "clique"}, {"vertices", vertex_array_json(g, value.members)}};
            } else if constexpr (std::is_same_v<T, StableWitness>) {
                return {{"kind", "stable"}, {"vertices", vertex_array_json(g, value.members)}};
            } else if constexpr (std::is_same_v<T, Coloring>) {
                return {{"kind", "coloring"}, {"assignment", coloring_json(g, value)}};
            } else if constexpr (std::is_same_v<T, HoleCertificate>) {
                nlohmann::json h = hole_json(g, value);
                h["kind"] = value.kind == HoleKind::OddHole ? "odd-hole" : "odd-antihole";
                return h;
            } else {
                return {{"kind", "imperfect-subgraph"},
                        {"vertices", vertex_array_json(g, value.subset)},
                        {"omega", value.omega},
                        {"chi", value.chi}};
            }
        },
        c);
}

inline nlohmann::json battery_json(const BatteryReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const BatteryFailure& f : r.failures) {
        failures.push_back({{"graph", to_dimacs(f.graph)},
                            {"certificate", certificate_json(f.graph, f.certificate)}});
    }
    return {{"theorem", theorem_name(r.theorem)},
            {"n_max", r.n_max},
            {"graphs_checked", r.graphs_checked},
            {"failures", failures}};
}

} // namespace pgt
