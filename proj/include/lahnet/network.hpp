#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lahnet/bigint.hpp"
#include "lahnet/errors.hpp"
#include "lahnet/exact_matrix.hpp"

namespace lahnet {

struct Edge {
    std::size_t tail;
    std::size_t head;
    BigInt weight;
};

// Vertex sequence from a source to a sink, stored as vertex ids.
using Path = std::vector<std::size_t>;

// Acyclic weighted directed graph with ordered sources a_1..a_n and sinks
// b_1..b_n. Validated at construction: a topological order exists, sources
// have in-degree 0, sinks have out-degree 0, all edge weights >= 1.
// Immutable afterwards.
//
// The layered builders below produce planar embeddings by construction;
// planarity itself is a builder guarantee, not a checked invariant.
class Network {
public:
    Network(std::vector<std::string> labels, std::vector<Edge> edges,
            std::vector<std::size_t> sources, std::vector<std::size_t> sinks)
        : labels_(std::move(labels)),
          edges_(std::move(edges)),
          sources_(std::move(sources)),
          sinks_(std::move(sinks)) {
        validate();
    }

    std::size_t n() const { return sources_.size(); }
    std::size_t vertex_count() const { return labels_.size(); }

    const std::string& label(std::size_t v) const { return labels_[v]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
    const std::vector<std::size_t>& sources() const { return sources_; }
    const std::vector<std::size_t>& sinks() const { return sinks_; }
    const std::vector<std::size_t>& topological_order() const { return topo_; }

    // 1-based, matching a_i / b_j.
    std::size_t source(std::size_t i) const {
        if (i < 1 || i > sources_.size()) {
            throw IndexError("source index " + std::to_string(i) + " out of range, n = " +
                             std::to_string(sources_.size()));
        }
        return sources_[i - 1];
    }

    std::size_t sink(std::size_t j) const {
        if (j < 1 || j > sinks_.size()) {
            throw IndexError("sink index " + std::to_string(j) + " out of range, n = " +
                             std::to_string(sinks_.size()));
        }
        return sinks_[j - 1];
    }

    std::optional<std::size_t> find_vertex(std::string_view label) const {
        for (std::size_t v = 0; v < labels_.size(); ++v)
            if (labels_[v] == label) return v;
        return std::nullopt;
    }

    std::optional<std::size_t> find_edge(std::size_t tail, std::size_t head) const {
        for (std::size_t e : out_[tail])
            if (edges_[e].head == head) return e;
        return std::nullopt;
    }

private:
    void validate() {
        const std::size_t v_count = labels_.size();
        out_.assign(v_count, {});
        std::vector<std::size_t> in_degree(v_count, 0);
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            const Edge& edge = edges_[e];
            if (edge.tail >= v_count || edge.head >= v_count) {
                throw InvariantViolation("edge " + std::to_string(e) +
                                         " references a vertex that does not exist");
            }
            if (edge.weight < 1) {
                throw InvariantViolation("edge " + labels_[edge.tail] + " -> " +
                                         labels_[edge.head] + " has weight " +
                                         edge.weight.str() + "; weights must be >= 1");
            }
            if (find_edge(edge.tail, edge.head)) {
                throw InvariantViolation("duplicate edge " + labels_[edge.tail] + " -> " +
                                         labels_[edge.head]);
            }
            out_[edge.tail].push_back(e);
            ++in_degree[edge.head];
        }

        if (sources_.size() != sinks_.size()) {
            throw InvariantViolation("network has " + std::to_string(sources_.size()) +
                                     " sources but " + std::to_string(sinks_.size()) + " sinks");
        }
        check_endpoint_list(sources_, in_degree, true);
        check_endpoint_list(sinks_, in_degree, false);

        // Kahn's algorithm; a leftover vertex means a cycle.
        topo_.clear();
        topo_.reserve(v_count);
        std::vector<std::size_t> degree = in_degree;
        std::vector<std::size_t> ready;
        for (std::size_t v = 0; v < v_count; ++v)
            if (degree[v] == 0) ready.push_back(v);
        for (std::size_t next = 0; next < ready.size(); ++next) {
            const std::size_t v = ready[next];
            topo_.push_back(v);
            for (std::size_t e : out_[v])
                if (--degree[edges_[e].head] == 0) ready.push_back(edges_[e].head);
        }
        if (topo_.size() != v_count) {
            throw InvariantViolation("network contains a directed cycle");
        }
    }

    void check_endpoint_list(const std::vector<std::size_t>& list,
                             const std::vector<std::size_t>& in_degree, bool is_source) {
        const char* kind = is_source ? "source" : "sink";
        for (std::size_t t = 0; t < list.size(); ++t) {
            const std::size_t v = list[t];
            if (v >= labels_.size()) {
                throw InvariantViolation(std::string(kind) + " list entry " +
                                         std::to_string(t + 1) + " is not a vertex");
            }
            for (std::size_t s = 0; s < t; ++s) {
                if (list[s] == v) {
                    throw InvariantViolation(std::string(kind) + " list repeats vertex " +
                                             labels_[v]);
                }
            }
            if (is_source && in_degree[v] != 0) {
                throw InvariantViolation("source " + labels_[v] + " has incoming edges");
            }
            if (!is_source && !out_[v].empty()) {
                throw InvariantViolation("sink " + labels_[v] + " has outgoing edges");
            }
        }
    }

    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> sources_;
    std::vector<std::size_t> sinks_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::size_t> topo_;
};

namespace detail {

// Layered triangular network: row r holds grid vertices u_{r,1}..u_{r,r}
// with u_{r,r} = b_r; a_r feeds the row through a single weight-1 stub.
// Horizontal edges carry weight 1; the diagonals leaving row r carry
// lah_weights ? r : 1.
inline Network build_layered_network(std::size_t n, bool lah_weights) {
    if (n == 0) throw DimensionError("network order must be >= 1");

    std::vector<std::string> labels;
    std::vector<std::size_t> sources, sinks;
    // sources first, then the grid row by row
    for (std::size_t r = 1; r <= n; ++r) {
        labels.push_back("a" + std::to_string(r));
        sources.push_back(r - 1);
    }
    std::vector<std::vector<std::size_t>> grid(n + 1);  // grid[r][c-1] = vertex id of u_{r,c}
    for (std::size_t r = 1; r <= n; ++r) {
        grid[r].resize(r);
        for (std::size_t c = 1; c <= r; ++c) {
            grid[r][c - 1] = labels.size();
            labels.push_back(c == r ? "b" + std::to_string(r)
                                    : "u[" + std::to_string(r) + "," + std::to_string(c) + "]");
        }
        sinks.push_back(grid[r][r - 1]);
    }

    std::vector<Edge> edges;
    for (std::size_t r = 1; r <= n; ++r) {
        edges.push_back({r - 1, grid[r][0], BigInt(1)});  // a_r -> u_{r,1}
        for (std::size_t c = 1; c < r; ++c)
            edges.push_back({grid[r][c - 1], grid[r][c], BigInt(1)});
        for (std::size_t c = 1; c < r; ++c)
            edges.push_back({grid[r][c - 1], grid[r - 1][c - 1],
                             lah_weights ? BigInt(r) : BigInt(1)});
    }

    return Network(std::move(labels), std::move(edges), std::move(sources), std::move(sinks));
}

// Sum of path weights from every vertex to the given sink; one backward
// accumulation over reverse topological order. With unit = true the edge
// weights are ignored, giving plain path counts.
inline std::vector<BigInt> weights_to_sink(const Network& net, std::size_t sink, bool unit) {
    std::vector<BigInt> acc(net.vertex_count(), BigInt(0));
    acc[sink] = 1;
    const auto& topo = net.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const std::size_t v = *it;
        if (v == sink) continue;
        BigInt total = 0;
        for (std::size_t e : net.out_edges(v)) {
            const Edge& edge = net.edges()[e];
            if (acc[edge.head] == 0) continue;
            total += unit ? acc[edge.head] : edge.weight * acc[edge.head];
        }
        acc[v] = total;
    }
    return acc;
}

}  // namespace detail

// The Lah network N_n: weighted paths a_m -> b_k use diagonals of weights
// m, m-1, ..., k+1 and k-1 interior horizontal edges.
inline Network lah_network(std::size_t n) { return detail::build_layered_network(n, true); }

// Same topology with every weight 1; its weight matrix is the Pascal
// triangle binom(i-1, j-1).
inline Network unit_network(std::size_t n) { return detail::build_layered_network(n, false); }

// w_{i,j} = sum over paths a_i -> b_j of the product of edge weights along
// the path. Dynamic programming, one backward pass per sink; never by path
// enumeration.
inline ExactMatrix weight_matrix(const Network& net) {
    const std::size_t n = net.n();
    std::vector<BigInt> entries(n * n, BigInt(0));
    for (std::size_t j = 1; j <= n; ++j) {
        const auto acc = detail::weights_to_sink(net, net.sink(j), false);
        for (std::size_t i = 1; i <= n; ++i) entries[(i - 1) * n + (j - 1)] = acc[net.source(i)];
    }
    return ExactMatrix(n, n, std::move(entries));
}

// Number of directed paths a_i -> b_j.
inline BigInt count_paths(const Network& net, std::size_t i, std::size_t j) {
    return detail::weights_to_sink(net, net.sink(j), true)[net.source(i)];
}

inline constexpr std::size_t kPathEnumerationGuard = 1'000'000;

// All simple directed paths a_i -> b_j in depth-first order following edge
// insertion order; deterministic. Refuses when the path count exceeds the
// guard.
inline std::vector<Path> enumerate_paths(const Network& net, std::size_t i, std::size_t j,
                                         std::size_t guard = kPathEnumerationGuard) {
    const std::size_t src = net.source(i);
    const std::size_t dst = net.sink(j);
    const auto counts = detail::weights_to_sink(net, dst, true);
    if (counts[src] > guard) {
        throw GuardError("enumerate_paths: " + counts[src].str() + " paths from a" +
                         std::to_string(i) + " to b" + std::to_string(j) + " exceed the guard " +
                         std::to_string(guard) + "; weight_matrix computes totals without " +
                         "enumeration");
    }
    std::vector<Path> paths;
    Path current;
    auto dfs = [&](auto&& self, std::size_t v) -> void {
        if (counts[v] == 0) return;  // no continuation reaches dst
        current.push_back(v);
        if (v == dst) {
            paths.push_back(current);
        } else {
            for (std::size_t e : net.out_edges(v)) self(self, net.edges()[e].head);
        }
        current.pop_back();
    };
    dfs(dfs, src);
    return paths;
}

// Product of edge weights along p.
inline BigInt path_weight(const Network& net, const Path& p) {
    BigInt product = 1;
    for (std::size_t t = 0; t + 1 < p.size(); ++t) {
        const auto e = net.find_edge(p[t], p[t + 1]);
        if (!e) {
            throw IndexError("path_weight: no edge " + net.label(p[t]) + " -> " +
                             net.label(p[t + 1]) + " in the network");
        }
        product *= net.edges()[*e].weight;
    }
    return product;
}

// Copy of the network with the weight of one edge (addressed by labels)
// replaced.
inline Network with_edge_weight(const Network& net, std::string_view tail_label,
                                std::string_view head_label, BigInt weight) {
    const auto tail = net.find_vertex(tail_label);
    if (!tail) throw IndexError("no vertex labeled " + std::string(tail_label));
    const auto head = net.find_vertex(head_label);
    if (!head) throw IndexError("no vertex labeled " + std::string(head_label));
    const auto e = net.find_edge(*tail, *head);
    if (!e) {
        throw IndexError("no edge " + std::string(tail_label) + " -> " +
                         std::string(head_label) + " in the network");
    }
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < net.vertex_count(); ++v) labels.push_back(net.label(v));
    std::vector<Edge> edges = net.edges();
    edges[*e].weight = std::move(weight);
    return Network(std::move(labels), std::move(edges), net.sources(), net.sinks());
}

// Deterministic DOT rendering; byte-identical across runs for the same
// network.
inline std::string to_dot(const Network& net) {
    std::string out = "digraph network {\n  rankdir=LR;\n";
    out += "  { rank=source;";
    for (std::size_t v : net.sources()) out += " \"" + net.label(v) + "\";";
    out += " }\n  { rank=sink;";
    for (std::size_t v : net.sinks()) out += " \"" + net.label(v) + "\";";
    out += " }\n";
    for (std::size_t v = 0; v < net.vertex_count(); ++v) out += "  \"" + net.label(v) + "\";\n";
    for (const Edge& e : net.edges()) {
        out += "  \"" + net.label(e.tail) + "\" -> \"" + net.label(e.head) + "\" [label=\"" +
               e.weight.str() + "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace lahnet
