// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dvrbody/graph.hpp"
#include "dvrbody/polyhedron.hpp"

namespace dvrbody {

// L(lambda) = {phi : laplacian(phi) + lambda >= 0}; L+ adds phi >= 0.
struct LinearSystemSpec {
    Graph graph;
    Divisor lambda;
    bool effective = true;
};

// Pairs (phi, u) with phi in L+(lambda) and 0 <= u <= laplacian(phi)(v) + lambda(v).
struct EnrichedSystemSpec {
    LinearSystemSpec base;
    std::string vertex;
};

// Coordinates follow the graph's vertex order. Row v is the laplacian
// constraint at v; with `effective`, rows |V| + v are phi(v) >= 0.
[[nodiscard]] HPolyhedron build_system(const LinearSystemSpec& spec);

[[nodiscard]] bool member(const LinearSystemSpec& spec, const GraphFunction& phi);

[[nodiscard]] GraphFunction pointwise_min(const GraphFunction& a, const GraphFunction& b);

// Coordinatewise minimum over L+(lambda), or nullopt when the system is empty.
// Requires spec.effective (InvalidArgument otherwise).
[[nodiscard]] std::optional<GraphFunction> minimal_element(const LinearSystemSpec& spec);

struct ZariskiShift {
    Divisor lambda;        // lambda + laplacian(minimal)
    GraphFunction minimal;
};

// phi is in L+(shift.lambda) iff phi + shift.minimal is in L+(lambda), and the
// shifted system has minimal element 0. Throws EmptySystem.
[[nodiscard]] ZariskiShift zariski_shift(const LinearSystemSpec& spec);

// Dimension |V| + 1: build_system rows, then u >= 0, then laplacian(phi)(v) + lambda(v) - u >= 0.
[[nodiscard]] HPolyhedron enriched_system(const EnrichedSystemSpec& spec);

// The q-reduced divisor linearly equivalent to an integral d: nonnegative away
// from q, and no nonempty set avoiding q can fire without going negative.
// Throws NonIntegerDivisor.
[[nodiscard]] Divisor reduced_divisor(const Graph& g, const Divisor& d, std::size_t q);

// Some integer phi >= 0 with laplacian(phi) + lambda >= 0 exists.
[[nodiscard]] bool has_nonnegative_rank(const Graph& g, const Divisor& lambda);

// Exhaustive integer search for phi in the box 0 <= phi <= deg(lambda+) * diam.
// nullopt when the box holds more than `max_candidates` functions.
[[nodiscard]] std::optional<bool> has_nonnegative_rank_by_search(const Graph& g, const Divisor& lambda,
                                                                 std::size_t max_candidates = 2'000'000);

// Random members of a nonempty system with exact rational coordinates.
// Effective systems are sampled inside the box phi <= minimal + bound; members
// of L(lambda) are members of L+(lambda) shifted by a random constant.
[[nodiscard]] std::vector<GraphFunction> sample_members(const LinearSystemSpec& spec, std::size_t count,
                                                        std::mt19937_64& rng);

} // namespace dvrbody
