// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "dvrbody/polyhedron.hpp"

namespace dvrbody {

// Uniform rational k/den with lo <= k/den <= hi for a random den in [1, max_den].
[[nodiscard]] Rational random_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi,
                                       long max_den = 8);

// Exact random points of a nonempty bounded polyhedron: an LP optimum for a
// random objective, moved by a few hit-and-run steps whose lengths are drawn
// from the exact feasible chord. Throws InvalidArgument if p is empty or unbounded.
[[nodiscard]] std::vector<Vector> sample_points(const HPolyhedron& p, std::size_t count, std::mt19937_64& rng,
                                                std::size_t steps = 3);

} // namespace dvrbody
