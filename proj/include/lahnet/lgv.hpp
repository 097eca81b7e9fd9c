#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lahnet/bigint.hpp"
#include "lahnet/errors.hpp"
#include "lahnet/exact_matrix.hpp"
#include "lahnet/network.hpp"

namespace lahnet {

// One path per selected source, pairing a_{I[t]} with b_{J[t]}.
struct PathFamily {
    std::vector<Path> paths;
};

inline constexpr std::size_t kFamilyEnumerationGuard = 10'000'000;

namespace detail {

// Backtracking enumeration of vertex-disjoint path families connecting
// a_{I[t]} -> b_{J[t]} for every t. Paths are grown one at a time; the
// occupied set makes each extension O(1) to test. Pruning: a vertex with no
// remaining route to the current sink is never entered.
template <typename Visitor>
void visit_disjoint_families(const Network& net, const IndexSet& I, const IndexSet& J,
                             Visitor&& visit) {
    const std::size_t p = I.size();
    std::vector<std::vector<BigInt>> reach(p);  // reach[t][v] = #paths v -> b_{J[t]}
    for (std::size_t t = 0; t < p; ++t)
        reach[t] = detail::weights_to_sink(net, net.sink(J[t]), true);

    std::vector<Path> family(p);
    std::vector<char> occupied(net.vertex_count(), 0);

    auto extend = [&](auto&& self, std::size_t t, std::size_t v) -> void {
        family[t].push_back(v);
        occupied[v] = 1;
        if (v == net.sink(J[t])) {
            if (t + 1 == p) {
                visit(family);
            } else {
                const std::size_t next_src = net.source(I[t + 1]);
                if (!occupied[next_src] && reach[t + 1][next_src] != 0)
                    self(self, t + 1, next_src);
            }
        } else {
            for (std::size_t e : net.out_edges(v)) {
                const std::size_t head = net.edges()[e].head;
                if (!occupied[head] && reach[t][head] != 0) self(self, t, head);
            }
        }
        occupied[v] = 0;
        family[t].pop_back();
    };

    if (p == 0) {
        std::vector<Path> empty;
        visit(empty);
        return;
    }
    const std::size_t first = net.source(I[0]);
    if (reach[0][first] != 0) extend(extend, 0, first);
}

// Product over pairs of the unconstrained path counts; cheap upper-bound
// estimate for the enumeration guard.
inline BigInt family_count_estimate(const Network& net, const IndexSet& I, const IndexSet& J) {
    BigInt estimate = 1;
    for (std::size_t t = 0; t < I.size(); ++t) estimate *= count_paths(net, I[t], J[t]);
    return estimate;
}

inline void check_family_guard(const Network& net, const IndexSet& I, const IndexSet& J,
                               std::size_t guard) {
    const BigInt estimate = family_count_estimate(net, I, J);
    if (estimate > guard) {
        throw GuardError("disjoint-family enumeration: path-count product " + estimate.str() +
                         " for I = " + I.to_string() + ", J = " + J.to_string() +
                         " exceeds the guard " + std::to_string(guard));
    }
}

inline void check_index_pair(const Network& net, const IndexSet& I, const IndexSet& J) {
    if (I.size() != J.size()) {
        throw DimensionError("index sets differ in size: " + I.to_string() + " vs " +
                             J.to_string());
    }
    if (!I.empty() && (I.max() > net.n() || J.max() > net.n())) {
        throw IndexError("index sets " + I.to_string() + ", " + J.to_string() +
                         " exceed the network order " + std::to_string(net.n()));
    }
}

}  // namespace detail

// All vertex-disjoint path families joining a_{I[t]} to b_{J[t]} under the
// identity pairing, in depth-first order. Intended for small instances; the
// guard bounds the search by the product of per-pair path counts.
inline std::vector<PathFamily> enumerate_disjoint_families(
    const Network& net, const IndexSet& I, const IndexSet& J,
    std::size_t guard = kFamilyEnumerationGuard) {
    detail::check_index_pair(net, I, J);
    detail::check_family_guard(net, I, J, guard);
    std::vector<PathFamily> families;
    detail::visit_disjoint_families(net, I, J,
                                    [&](const std::vector<Path>& f) { families.push_back({f}); });
    return families;
}

// Weight of one family: product of the member path weights.
inline BigInt family_weight(const Network& net, const PathFamily& family) {
    BigInt product = 1;
    for (const Path& p : family.paths) product *= path_weight(net, p);
    return product;
}

// Sum of family weights over all vertex-disjoint families, without
// materializing them.
inline BigInt family_weight_sum(const Network& net, const IndexSet& I, const IndexSet& J,
                                std::size_t guard = kFamilyEnumerationGuard) {
    detail::check_index_pair(net, I, J);
    detail::check_family_guard(net, I, J, guard);
    BigInt sum = 0;
    detail::visit_disjoint_families(net, I, J, [&](const std::vector<Path>& f) {
        BigInt w = 1;
        for (const Path& p : f) w *= path_weight(net, p);
        sum += w;
    });
    return sum;
}

struct LindstromReport {
    IndexSet I;
    IndexSet J;
    BigInt minor;
    BigInt family_sum;
    bool equal;
    BigInt family_count;
};

// Compares the minor det(W[I, J]) of the weight matrix against the
// brute-force sum over vertex-disjoint path families. Disagreement is a
// finding about the network, reported rather than thrown.
inline LindstromReport verify_lindstrom(const Network& net, const IndexSet& I, const IndexSet& J,
                                        std::size_t guard = kFamilyEnumerationGuard) {
    detail::check_index_pair(net, I, J);
    detail::check_family_guard(net, I, J, guard);
    const ExactMatrix W = weight_matrix(net);
    const BigInt minor = minor_value(W, I, J);

    BigInt sum = 0;
    BigInt count = 0;
    detail::visit_disjoint_families(net, I, J, [&](const std::vector<Path>& f) {
        BigInt w = 1;
        for (const Path& p : f) w *= path_weight(net, p);
        sum += w;
        ++count;
    });
    return LindstromReport{I, J, minor, sum, minor == sum, count};
}

}  // namespace lahnet
