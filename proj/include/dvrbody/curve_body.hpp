// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dvrbody/graph.hpp"
#include "dvrbody/piecewise_linear.hpp"
#include "dvrbody/polyhedron.hpp"

namespace dvrbody {

// Y1 horizontal with specialization y1 (effective, positive degree); the flag
// point lies on the component of `vertex`.
struct TropicalFlag {
    Divisor y1;
    std::string vertex;
};

// Y1 is the component of `vertex`.
struct ArakelovFlag {
    std::string vertex;
};

struct CurveBodyJob {
    Graph graph;
    Divisor lambda;
    std::variant<TropicalFlag, ArakelovFlag> flag;
};

enum class BodyKind { Overgraph, Band };

// Overgraph: {(t, y) : t in dom(boundary), y >= boundary(t)}, recession (0, 1).
// Band: {(t, y) : t in dom(boundary), 0 <= y <= boundary(t)}, recession (1, 0).
struct NOBody2D {
    BodyKind kind = BodyKind::Overgraph;
    PiecewiseLinearFunction boundary{{{0, 0}}, std::nullopt, Shape::Convex};
    Vector recession;
    // Band only: abscissa after which the boundary is constant.
    std::optional<Rational> stabilization;
    std::vector<std::string> warnings;

    [[nodiscard]] HPolyhedron to_hpolyhedron() const;
    [[nodiscard]] bool contains(const Vector& point) const;
};

// Overgraph of t -> min phi(v) over L+(lambda - t y1) on [0, deg lambda / deg y1].
// Throws NonPositiveDegree, InvalidFlag, EmptyAtZero.
[[nodiscard]] NOBody2D tropical_body(const CurveBodyJob& job);

// Band under b(t) = lambda(v) + max laplacian(phi)(v) over phi in L+(lambda)
// with phi(v) = t, for t from the minimal element at v upward. Throws EmptySystem.
[[nodiscard]] NOBody2D arakelov_body(const CurveBodyJob& job);

// Dispatches on the flag type.
[[nodiscard]] NOBody2D curve_body(const CurveBodyJob& job);

// The same boundary functions computed independently by Fourier-Motzkin
// projection of the lifted systems onto the body plane.
[[nodiscard]] PiecewiseLinearFunction tropical_boundary_by_projection(const CurveBodyJob& job);
[[nodiscard]] PiecewiseLinearFunction arakelov_boundary_by_projection(const CurveBodyJob& job);

struct VerificationReport {
    bool agree = false;
    PiecewiseLinearFunction parametric{{{0, 0}}, std::nullopt, Shape::None};
    PiecewiseLinearFunction projection{{{0, 0}}, std::nullopt, Shape::None};
    // Smallest abscissa where the two disagree (domain ends included).
    std::optional<Rational> first_disagreement;
};

[[nodiscard]] VerificationReport cross_verify(const CurveBodyJob& job);

// Seeded random jobs on connected multigraphs with at most five vertices and
// integer coefficients of absolute value at most four, each with nonempty
// L+(lambda) and positive degree. Flags alternate tropical / Arakelov.
[[nodiscard]] std::vector<CurveBodyJob> random_curve_jobs(std::size_t count, std::uint64_t seed);

} // namespace dvrbody
