// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dvrbody/rational.hpp"

namespace dvrbody::detail {

enum class SimplexStatus { Optimal, Unbounded };

// Dense exact tableau for the standard-form system { z >= 0 : M z = q }.
//
// Artificial columns (one per row) are kept for the lifetime of the tableau:
// their columns always hold the current basis inverse, which is how simplex
// multipliers and Farkas vectors are read off. Artificials never re-enter the
// basis once they leave. Pivoting follows Bland's rule throughout.
//
// Costs may be parametric, c(t) = c0 + t * c1, and are then minimized for the
// parameter value t + epsilon: reduced costs compare lexicographically as
// (d0 + t d1, d1). With c1 empty this is plain minimization of c0.
class Tableau {
  public:
    // `columns` is the number of structural columns; every row of m has that length.
    Tableau(std::size_t columns, const Matrix& m, const Vector& q);

    // Phase one. Returns false when the system is infeasible, in which case
    // farkas() is a vector y with y M <= 0 and y q > 0.
    bool make_feasible();

    SimplexStatus minimize(const Vector& c0, const Vector& c1 = {}, const Rational& t = 0);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t columns() const noexcept { return cols_; }

    // Current basic solution restricted to the structural columns.
    [[nodiscard]] Vector primal() const;

    // Multipliers y (one per original row) with reduced cost c_j - y M_j.
    [[nodiscard]] Vector multipliers(const Vector& c0, const Vector& c1 = {}, const Rational& t = 0) const;

    // Reduced costs of the structural columns for c0 and c1 separately.
    void reduced_costs(const Vector& c0, const Vector& c1, Vector& d0, Vector& d1) const;

    [[nodiscard]] const Vector& farkas() const noexcept { return farkas_; }

    // After Unbounded: a direction z >= 0 with M z = 0 and negative cost.
    [[nodiscard]] const Vector& unbounded_direction() const noexcept { return direction_; }

    [[nodiscard]] const std::vector<std::size_t>& basis() const noexcept { return basis_; }

  private:
    void pivot(std::size_t row, std::size_t col);
    SimplexStatus run(const Vector& c0, const Vector& c1, const Rational& t);
    [[nodiscard]] Rational cost_of(const Vector& c, std::size_t j) const;

    std::size_t rows_;
    std::size_t cols_;
    Matrix table_;  // rows_ x (cols_ + rows_)
    Vector rhs_;
    std::vector<int> sign_;
    std::vector<std::size_t> basis_;
    bool phase_one_ = false;
    Vector farkas_;
    Vector direction_;
};

// Some z >= 0 with M z = q, or nullopt.
[[nodiscard]] std::optional<Vector> nonnegative_solution(std::size_t columns, const Matrix& m, const Vector& q);

} // namespace dvrbody::detail
