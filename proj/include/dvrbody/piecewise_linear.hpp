// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dvrbody/rational.hpp"

namespace dvrbody {

enum class Shape { Convex, Concave, None };

[[nodiscard]] std::string_view to_string(Shape s);

struct Breakpoint {
    Rational t;
    Rational value;

    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Continuous piecewise-linear function of one variable, given by its values at
// strictly increasing abscissae. The domain is [first.t, last.t], or
// [first.t, +inf) when a tail slope is present; the tail continues the last
// breakpoint with that slope.
class PiecewiseLinearFunction {
  public:
    // Validates ordering and the declared shape (InvalidArgument otherwise).
    PiecewiseLinearFunction(std::vector<Breakpoint> points, std::optional<Rational> tail_slope, Shape shape);

    // Shape deduced from the slopes: convex if nondecreasing, concave if
    // nonincreasing (an affine function reports Convex), None otherwise.
    static PiecewiseLinearFunction with_inferred_shape(std::vector<Breakpoint> points,
                                                       std::optional<Rational> tail_slope);

    [[nodiscard]] const std::vector<Breakpoint>& breakpoints() const noexcept { return points_; }
    [[nodiscard]] const std::optional<Rational>& tail_slope() const noexcept { return tail_; }
    [[nodiscard]] Shape shape() const noexcept { return shape_; }

    [[nodiscard]] const Rational& lo() const { return points_.front().t; }
    // nullopt for an unbounded domain.
    [[nodiscard]] std::optional<Rational> hi() const;
    [[nodiscard]] bool in_domain(const Rational& t) const;

    // Slopes of consecutive segments (the tail slope is not included).
    [[nodiscard]] std::vector<Rational> slopes() const;

    // Throws InvalidArgument outside the domain.
    [[nodiscard]] Rational operator()(const Rational& t) const;

    // Same function with breakpoints between collinear segments removed.
    [[nodiscard]] PiecewiseLinearFunction simplified() const;

    [[nodiscard]] bool is_convex() const;
    [[nodiscard]] bool is_concave() const;

    friend bool operator==(const PiecewiseLinearFunction&, const PiecewiseLinearFunction&) = default;

  private:
    std::vector<Breakpoint> points_;
    std::optional<Rational> tail_;
    Shape shape_;
};

} // namespace dvrbody
