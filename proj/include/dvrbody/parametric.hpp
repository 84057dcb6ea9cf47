// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "dvrbody/piecewise_linear.hpp"
#include "dvrbody/polyhedron.hpp"

namespace dvrbody {

struct ParametricResult {
    // Maximal closed subinterval of the requested one where {A x >= b0 + t b1}
    // is nonempty; hi is nullopt when it is unbounded above.
    Rational lo;
    std::optional<Rational> hi;
    // Optimal value over that subinterval. Convex for Minimize, concave for Maximize.
    PiecewiseLinearFunction value;
};

// Value function t -> opt { objective . x : A x >= b0 + t b1 } for t in
// [t0, t1] (t1 = nullopt for +inf). Throws InfeasibleEverywhere when no t in
// the interval is feasible and UnboundedValue when the objective is unbounded
// for the feasible t.
[[nodiscard]] ParametricResult parametric_value_function(const Matrix& a, const Vector& b0, const Vector& b1,
                                                         const Vector& objective, Sense sense, const Rational& t0,
                                                         const std::optional<Rational>& t1);

} // namespace dvrbody
