// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dvrbody/piecewise_linear.hpp"

#include <utility>

#include "dvrbody/error.hpp"

namespace dvrbody {

namespace {

std::vector<Rational> all_slopes(const std::vector<Breakpoint>& p, const std::optional<Rational>& tail) {
    std::vector<Rational> s;
    for (std::size_t i = 1; i < p.size(); ++i) {
        s.push_back((p[i].value - p[i - 1].value) / (p[i].t - p[i - 1].t));
    }
    if (tail) {
        s.push_back(*tail);
    }
    return s;
}

bool monotone(const std::vector<Rational>& s, bool increasing) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (increasing ? s[i] < s[i - 1] : s[i] > s[i - 1]) {
            return false;
        }
    }
    return true;
}

} // namespace

std::string_view to_string(Shape s) {
    switch (s) {
    case Shape::Convex:
        return "convex";
    case Shape::Concave:
        return "concave";
    case Shape::None:
        return "none";
    }
    return "none";
}

PiecewiseLinearFunction::PiecewiseLinearFunction(std::vector<Breakpoint> points, std::optional<Rational> tail_slope,
                                                 Shape shape)
    : points_(std::move(points)), tail_(std::move(tail_slope)), shape_(shape) {
    if (points_.empty()) {
        fail(ErrorCode::InvalidArgument, "piecewise-linear function needs at least one breakpoint");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (points_[i].t <= points_[i - 1].t) {
            fail(ErrorCode::InvalidArgument, "breakpoint abscissae must increase strictly");
        }
    }
    if ((shape_ == Shape::Convex && !is_convex()) || (shape_ == Shape::Concave && !is_concave())) {
        fail(ErrorCode::InvalidArgument, "declared shape does not match the slopes");
    }
}

PiecewiseLinearFunction PiecewiseLinearFunction::with_inferred_shape(std::vector<Breakpoint> points,
                                                                     std::optional<Rational> tail_slope) {
    PiecewiseLinearFunction f(std::move(points), std::move(tail_slope), Shape::None);
    if (f.is_convex()) {
        f.shape_ = Shape::Convex;
    } else if (f.is_concave()) {
        f.shape_ = Shape::Concave;
    }
    return f;
}

std::optional<Rational> PiecewiseLinearFunction::hi() const {
    if (tail_) {
        return std::nullopt;
    }
    return points_.back().t;
}

bool PiecewiseLinearFunction::in_domain(const Rational& t) const {
    return t >= points_.front().t && (tail_ || t <= points_.back().t);
}

std::vector<Rational> PiecewiseLinearFunction::slopes() const { return all_slopes(points_, std::nullopt); }

Rational PiecewiseLinearFunction::operator()(const Rational& t) const {
    if (!in_domain(t)) {
        fail(ErrorCode::InvalidArgument, "evaluation at " + to_string(t) + " outside the domain");
    }
    if (t >= points_.back().t) {
        return points_.back().value + (tail_ ? *tail_ : Rational(0)) * (t - points_.back().t);
    }
    std::size_t i = 1;
    while (points_[i].t < t) {
        ++i;
    }
    const auto& a = points_[i - 1];
    const auto& b = points_[i];
    return a.value + (b.value - a.value) * (t - a.t) / (b.t - a.t);
}

PiecewiseLinearFunction PiecewiseLinearFunction::simplified() const {
    const auto s = all_slopes(points_, tail_);
    std::vector<Breakpoint> kept{points_.front()};
    // Point i (i >= 1) separates slope s[i-1] from s[i], when the latter exists.
    for (std::size_t i = 1; i < points_.size(); ++i) {
        const bool last = i + 1 == points_.size();
        if (last && !tail_) {
            kept.push_back(points_[i]);
        } else if (s[i - 1] != s[i]) {
            kept.push_back(points_[i]);
        }
    }
    PiecewiseLinearFunction out(std::move(kept), tail_, Shape::None);
    out.shape_ = shape_;
    return out;
}

bool PiecewiseLinearFunction::is_convex() const { return monotone(all_slopes(points_, tail_), true); }

bool PiecewiseLinearFunction::is_concave() const { return monotone(all_slopes(points_, tail_), false); }

} // namespace dvrbody
