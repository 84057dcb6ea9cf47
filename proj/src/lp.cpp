// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#include <utility>

#include "dvrbody/error.hpp"
#include "dvrbody/polyhedron.hpp"
#include "simplex.hpp"

namespace dvrbody {

HPolyhedron::HPolyhedron(std::size_t dimension, std::vector<Constraint> constraints) : dimension_(dimension) {
    for (auto& c : constraints) {
        add(std::move(c.a), std::move(c.b));
    }
}

HPolyhedron HPolyhedron::empty(std::size_t dimension) {
    HPolyhedron p(dimension);
    p.add(zeros(dimension), 1);
    return p;
}

void HPolyhedron::add(Vector a, Rational b) {
    if (a.size() != dimension_) {
        fail(ErrorCode::DimensionMismatch, "constraint of length " + std::to_string(a.size()) +
                                               " in dimension " + std::to_string(dimension_));
    }
    constraints_.push_back({std::move(a), std::move(b)});
}

bool HPolyhedron::contains(const Vector& x) const {
    if (x.size() != dimension_) {
        fail(ErrorCode::DimensionMismatch, "point has wrong dimension");
    }
    for (const auto& c : constraints_) {
        if (dot(c.a, x) < c.b) {
            return false;
        }
    }
    return true;
}

bool HPolyhedron::is_empty() const {
    return solve_lp(*this, zeros(dimension_), Sense::Minimize).status == LPStatus::Infeasible;
}

HPolyhedron HPolyhedron::slice(std::size_t index, const Rational& value) const {
    if (index >= dimension_) {
        fail(ErrorCode::DimensionMismatch, "slice index out of range");
    }
    HPolyhedron out(dimension_ - 1);
    for (const auto& c : constraints_) {
        Vector a;
        a.reserve(dimension_ - 1);
        for (std::size_t j = 0; j < dimension_; ++j) {
            if (j != index) {
                a.push_back(c.a[j]);
            }
        }
        out.add(std::move(a), c.b - c.a[index] * value);
    }
    return out;
}

bool LPOutcome::verify(const HPolyhedron& p, const Vector& objective, Sense sense) const {
    const auto& rows = p.constraints();
    switch (status) {
    case LPStatus::Optimal:
        return witness.size() == p.dimension() && p.contains(witness) && dot(objective, witness) == value;
    case LPStatus::Infeasible: {
        if (certificate.size() != rows.size()) {
            return false;
        }
        Vector combo = zeros(p.dimension());
        Rational rhs = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (certificate[i] < 0) {
                return false;
            }
            combo = add(combo, scaled(rows[i].a, certificate[i]));
            rhs += certificate[i] * rows[i].b;
        }
        return is_zero(combo) && rhs > 0;
    }
    case LPStatus::Unbounded: {
        if (certificate.size() != p.dimension()) {
            return false;
        }
        for (const auto& c : rows) {
            if (dot(c.a, certificate) < 0) {
                return false;
            }
        }
        const Rational gain = dot(objective, certificate);
        return sense == Sense::Minimize ? gain < 0 : gain > 0;
    }
    }
    return false;
}

LPOutcome solve_lp(const HPolyhedron& p, const Vector& objective, Sense sense) {
    const std::size_t n = p.dimension();
    const std::size_t m = p.size();
    if (objective.size() != n) {
        fail(ErrorCode::DimensionMismatch, "objective has length " + std::to_string(objective.size()) +
                                               " in dimension " + std::to_string(n));
    }
    // x = x+ - x-, A x+ - A x- - s = b with x+, x-, s >= 0.
    const std::size_t cols = 2 * n + m;
    Matrix mat(m, zeros(cols));
    Vector rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = p.constraints()[i];
        for (std::size_t j = 0; j < n; ++j) {
            mat[i][j] = c.a[j];
            mat[i][n + j] = -c.a[j];
        }
        mat[i][2 * n + i] = -1;
        rhs[i] = c.b;
    }
    detail::Tableau tab(cols, mat, rhs);
    LPOutcome out;
    if (!tab.make_feasible()) {
        out.status = LPStatus::Infeasible;
        out.certificate = tab.farkas();
        return out;
    }
    const Rational s = sense == Sense::Minimize ? 1 : -1;
    Vector cost = zeros(cols);
    for (std::size_t j = 0; j < n; ++j) {
        cost[j] = s * objective[j];
        cost[n + j] = -s * objective[j];
    }
    if (tab.minimize(cost) == detail::SimplexStatus::Unbounded) {
        const auto& dir = tab.unbounded_direction();
        out.status = LPStatus::Unbounded;
        out.certificate = zeros(n);
        for (std::size_t j = 0; j < n; ++j) {
            out.certificate[j] = dir[j] - dir[n + j];
        }
        return out;
    }
    const auto z = tab.primal();
    out.status = LPStatus::Optimal;
    out.witness = zeros(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.witness[j] = z[j] - z[n + j];
    }
    out.value = dot(objective, out.witness);
    return out;
}

} // namespace dvrbody
