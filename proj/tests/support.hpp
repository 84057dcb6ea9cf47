// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dvrbody/graph.hpp"
#include "dvrbody/rational.hpp"

namespace dvrbody::testing {

// Uniform over {k/d : lo <= k/d <= hi} for a random denominator d <= max_den.
inline Rational rand_q(std::mt19937_64& rng, long lo, long hi, long max_den = 4) {
    const long d = std::uniform_int_distribution<long>(1, max_den)(rng);
    const long k = std::uniform_int_distribution<long>(lo * d, hi * d)(rng);
    Rational q(k, d);
    q.canonicalize();
    return q;
}

inline long random_int(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Connected multigraph: random spanning tree plus `extra` random edges (no loops).
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, std::size_t extra) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("v" + std::to_string(i));
    }
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        edges.emplace_back(static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(i) - 1)), i);
    }
    for (std::size_t k = 0; n > 1 && k < extra; ++k) {
        const auto a = static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(n) - 1));
        auto b = static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(n) - 2));
        if (b >= a) {
            ++b;
        }
        edges.emplace_back(a, b);
    }
    return Graph(std::move(names), std::move(edges));
}

// Quartic dual graph: P, Q1, Q2, P' with PQ1 x2, PQ2 x2, Q1P', Q2P'.
inline Graph quartic_graph() {
    return Graph({"P", "Q1", "Q2", "P'"},
                 std::vector<std::pair<std::string, std::string>>{
                     {"P", "Q1"}, {"P", "Q1"}, {"P", "Q2"}, {"P", "Q2"}, {"Q1", "P'"}, {"Q2", "P'"}});
}

inline Graph path_graph(std::size_t n) {
    std::vector<std::string> names;
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::string(1, static_cast<char>('a' + i)));
        if (i > 0) {
            edges.emplace_back(i - 1, i);
        }
    }
    return Graph(std::move(names), std::move(edges));
}

inline Vector vec(std::initializer_list<Rational> xs) { return Vector(xs); }

} // namespace dvrbody::testing
