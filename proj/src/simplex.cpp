// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#include "simplex.hpp"

#include "dvrbody/error.hpp"

namespace dvrbody::detail {

Tableau::Tableau(std::size_t columns, const Matrix& m, const Vector& q)
    : rows_(m.size()), cols_(columns), rhs_(q), sign_(m.size(), 1), basis_(m.size()) {
    if (q.size() != rows_) {
        fail(ErrorCode::DimensionMismatch, "tableau right-hand side has wrong length");
    }
    table_.assign(rows_, zeros(cols_ + rows_));
    for (std::size_t r = 0; r < rows_; ++r) {
        if (m[r].size() != cols_) {
            fail(ErrorCode::DimensionMismatch, "ragged tableau matrix");
        }
        if (rhs_[r] < 0) {
            sign_[r] = -1;
            rhs_[r] = -rhs_[r];
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            table_[r][c] = sign_[r] < 0 ? Rational(-m[r][c]) : m[r][c];
        }
        table_[r][cols_ + r] = 1;
        basis_[r] = cols_ + r;
    }
}

Rational Tableau::cost_of(const Vector& c, std::size_t j) const {
    if (phase_one_) {
        return j >= cols_ ? Rational(1) : Rational(0);
    }
    if (c.empty() || j >= cols_) {
        return 0;
    }
    return c[j];
}

void Tableau::pivot(std::size_t row, std::size_t col) {
    auto& prow = table_[row];
    const Rational inv = 1 / prow[col];
    for (auto& x : prow) {
        if (x != 0) {
            x *= inv;
        }
    }
    rhs_[row] *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || table_[r][col] == 0) {
            continue;
        }
        const Rational f = table_[r][col];
        auto& target = table_[r];
        for (std::size_t c = 0; c < target.size(); ++c) {
            if (prow[c] != 0) {
                target[c] -= f * prow[c];
            }
        }
        rhs_[r] -= f * rhs_[row];
    }
    basis_[row] = col;
}

void Tableau::reduced_costs(const Vector& c0, const Vector& c1, Vector& d0, Vector& d1) const {
    d0.assign(cols_, 0);
    d1.assign(cols_, 0);
    for (std::size_t j = 0; j < cols_; ++j) {
        d0[j] = cost_of(c0, j);
        d1[j] = cost_of(c1, j);
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        const Rational cb0 = cost_of(c0, basis_[r]);
        const Rational cb1 = cost_of(c1, basis_[r]);
        if (cb0 == 0 && cb1 == 0) {
            continue;
        }
        for (std::size_t j = 0; j < cols_; ++j) {
            const auto& a = table_[r][j];
            if (a == 0) {
                continue;
            }
            if (cb0 != 0) {
                d0[j] -= cb0 * a;
            }
            if (cb1 != 0) {
                d1[j] -= cb1 * a;
            }
        }
    }
}

SimplexStatus Tableau::run(const Vector& c0, const Vector& c1, const Rational& t) {
    std::vector<bool> in_basis(cols_ + rows_, false);
    Vector d0;
    Vector d1;
    for (;;) {
        std::fill(in_basis.begin(), in_basis.end(), false);
        for (auto b : basis_) {
            in_basis[b] = true;
        }
        reduced_costs(c0, c1, d0, d1);
        std::size_t entering = cols_;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (in_basis[j]) {
                continue;
            }
            const Rational e = d0[j] + t * d1[j];
            if (e < 0 || (e == 0 && d1[j] < 0)) {
                entering = j;
                break;
            }
        }
        if (entering == cols_) {
            return SimplexStatus::Optimal;
        }
        std::size_t leaving = rows_;
        Rational best;
        for (std::size_t r = 0; r < rows_; ++r) {
            const auto& a = table_[r][entering];
            if (a <= 0) {
                continue;
            }
            const Rational ratio = rhs_[r] / a;
            if (leaving == rows_ || ratio < best || (ratio == best && basis_[r] < basis_[leaving])) {
                leaving = r;
                best = ratio;
            }
        }
        if (leaving == rows_) {
            direction_ = zeros(cols_);
            direction_[entering] = 1;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (basis_[r] < cols_) {
                    direction_[basis_[r]] = -table_[r][entering];
                }
            }
            return SimplexStatus::Unbounded;
        }
        pivot(leaving, entering);
    }
}

bool Tableau::make_feasible() {
    phase_one_ = true;
    run({}, {}, 0);
    phase_one_ = false;
    Rational infeasibility = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (basis_[r] >= cols_) {
            infeasibility += rhs_[r];
        }
    }
    if (infeasibility > 0) {
        // Multipliers of the phase-one cost read from the artificial columns.
        farkas_ = zeros(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Rational pi = 0;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (basis_[r] >= cols_) {
                    pi += table_[r][cols_ + i];
                }
            }
            farkas_[i] = sign_[i] < 0 ? Rational(-pi) : pi;
        }
        return false;
    }
    // Drive zero-level artificials out where a structural column allows it;
    // rows where none does are redundant and keep their artificial at zero.
    for (std::size_t r = 0; r < rows_; ++r) {
        if (basis_[r] < cols_) {
            continue;
        }
        for (std::size_t j = 0; j < cols_; ++j) {
            if (table_[r][j] != 0) {
                pivot(r, j);
                break;
            }
        }
    }
    return true;
}

SimplexStatus Tableau::minimize(const Vector& c0, const Vector& c1, const Rational& t) {
    if (c0.size() != cols_ || (!c1.empty() && c1.size() != cols_)) {
        fail(ErrorCode::DimensionMismatch, "cost vector has wrong length");
    }
    return run(c0, c1, t);
}

Vector Tableau::primal() const {
    Vector z = zeros(cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (basis_[r] < cols_) {
            z[basis_[r]] = rhs_[r];
        }
    }
    return z;
}

Vector Tableau::multipliers(const Vector& c0, const Vector& c1, const Rational& t) const {
    Vector y = zeros(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational pi = 0;
        for (std::size_t r = 0; r < rows_; ++r) {
            const auto b = basis_[r];
            if (b >= cols_) {
                continue;
            }
            Rational cb = c0[b];
            if (!c1.empty()) {
                cb += t * c1[b];
            }
            if (cb != 0) {
                pi += cb * table_[r][cols_ + i];
            }
        }
        y[i] = sign_[i] < 0 ? Rational(-pi) : pi;
    }
    return y;
}

std::optional<Vector> nonnegative_solution(std::size_t columns, const Matrix& m, const Vector& q) {
    Tableau tab(columns, m, q);
    if (!tab.make_feasible()) {
        return std::nullopt;
    }
    return tab.primal();
}

} // namespace dvrbody::detail
