// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dvrbody/parametric.hpp"

#include <utility>

#include "dvrbody/error.hpp"
#include "simplex.hpp"

namespace dvrbody {

namespace {

// Range of t for which the (x, t) system is feasible inside [t0, t1].
std::pair<Rational, std::optional<Rational>> feasible_range(const Matrix& a, const Vector& b0, const Vector& b1,
                                                            std::size_t n, const Rational& t0,
                                                            const std::optional<Rational>& t1) {
    HPolyhedron lifted(n + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Vector row = a[i];
        row.push_back(-b1[i]);
        lifted.add(std::move(row), b0[i]);
    }
    Vector e = zeros(n + 1);
    e[n] = 1;
    lifted.add(e, t0);
    if (t1) {
        lifted.add(scaled(e, -1), -*t1);
    }
    const auto lo = solve_lp(lifted, e, Sense::Minimize);
    if (lo.status == LPStatus::Infeasible) {
        fail(ErrorCode::InfeasibleEverywhere, "the parametric system is empty for every t in the interval");
    }
    const auto hi = solve_lp(lifted, e, Sense::Maximize);
    std::optional<Rational> top;
    if (hi.status == LPStatus::Optimal) {
        top = hi.value;
    }
    return {lo.value, top};
}

} // namespace

ParametricResult parametric_value_function(const Matrix& a, const Vector& b0, const Vector& b1,
                                           const Vector& objective, Sense sense, const Rational& t0,
                                           const std::optional<Rational>& t1) {
    const std::size_t m = a.size();
    const std::size_t n = objective.size();
    if (b0.size() != m || b1.size() != m) {
        fail(ErrorCode::DimensionMismatch, "right-hand sides must have one entry per row");
    }
    for (const auto& row : a) {
        if (row.size() != n) {
            fail(ErrorCode::DimensionMismatch, "constraint row length differs from objective length");
        }
    }
    if (t1 && *t1 < t0) {
        fail(ErrorCode::InvalidArgument, "empty parameter interval");
    }
    const auto [lo, hi] = feasible_range(a, b0, b1, n, t0, t1);

    // Dual: v(t) = max { (b0 + t b1) . y : A^T y = c, y >= 0 }, with c the
    // objective (negated for maximization, whose value is then -v).
    const Rational s = sense == Sense::Minimize ? 1 : -1;
    Matrix at(n, zeros(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            at[j][i] = a[i][j];
        }
    }
    detail::Tableau dual(m, at, scaled(objective, s));
    if (!dual.make_feasible()) {
        fail(ErrorCode::UnboundedValue, "objective is unbounded on the feasible parameter range");
    }
    const Vector c0 = scaled(b0, -1);
    const Vector c1 = scaled(b1, -1);
    auto value_at = [&](const Vector& y, const Rational& t) -> Rational { return s * (dot(b0, y) + t * dot(b1, y)); };

    if (hi && *hi == lo) {
        if (dual.minimize(add(c0, scaled(c1, lo))) != detail::SimplexStatus::Optimal) {
            fail(ErrorCode::Internal, "dual unbounded at a feasible parameter");
        }
        const Shape shape = sense == Sense::Minimize ? Shape::Convex : Shape::Concave;
        return {lo, hi, PiecewiseLinearFunction({{lo, value_at(dual.primal(), lo)}}, std::nullopt, shape)};
    }

    std::vector<Breakpoint> points;
    std::optional<Rational> tail;
    Rational t = lo;
    Vector d0;
    Vector d1;
    for (;;) {
        // Optimal just to the right of t; the basis stays optimal up to t_next.
        if (dual.minimize(c0, c1, t) != detail::SimplexStatus::Optimal) {
            fail(ErrorCode::Internal, "dual unbounded at a feasible parameter");
        }
        const Vector y = dual.primal();
        points.push_back({t, value_at(y, t)});
        dual.reduced_costs(c0, c1, d0, d1);
        std::optional<Rational> next;
        for (std::size_t j = 0; j < m; ++j) {
            if (d1[j] < 0) {
                const Rational limit = -d0[j] / d1[j];
                if (limit > t && (!next || limit < *next)) {
                    next = limit;
                }
            }
        }
        if (hi && (!next || *next >= *hi)) {
            points.push_back({*hi, value_at(y, *hi)});
            break;
        }
        if (!next) {
            tail = s * dot(b1, y);
            break;
        }
        t = *next;
    }
    auto f = PiecewiseLinearFunction(std::move(points), tail,
                                     sense == Sense::Minimize ? Shape::Convex : Shape::Concave)
                 .simplified();
    return {lo, hi, std::move(f)};
}

} // namespace dvrbody
