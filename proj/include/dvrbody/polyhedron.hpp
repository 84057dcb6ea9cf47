// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dvrbody/rational.hpp"

namespace dvrbody {

// a . x >= b
struct Constraint {
    Vector a;
    Rational b;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

// Intersection of finitely many closed half-spaces.
class HPolyhedron {
  public:
    explicit HPolyhedron(std::size_t dimension) : dimension_(dimension) {}
    HPolyhedron(std::size_t dimension, std::vector<Constraint> constraints);

    // The canonical empty polyhedron {0 >= 1}.
    static HPolyhedron empty(std::size_t dimension);

    void add(Vector a, Rational b);

    [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
    [[nodiscard]] const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
    [[nodiscard]] std::size_t size() const noexcept { return constraints_.size(); }

    [[nodiscard]] bool contains(const Vector& x) const;

    // Exact emptiness test (one LP).
    [[nodiscard]] bool is_empty() const;

    // Same constraints with coordinate `index` fixed to `value` (dimension - 1).
    [[nodiscard]] HPolyhedron slice(std::size_t index, const Rational& value) const;

    friend bool operator==(const HPolyhedron&, const HPolyhedron&) = default;

  private:
    std::size_t dimension_;
    std::vector<Constraint> constraints_;
};

// conv(vertices) + cone(rays). An empty vertex list means the empty set.
class VPolyhedron {
  public:
    explicit VPolyhedron(std::size_t dimension) : dimension_(dimension) {}
    VPolyhedron(std::size_t dimension, Matrix vertices, Matrix rays);

    [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
    [[nodiscard]] const Matrix& vertices() const noexcept { return vertices_; }
    [[nodiscard]] const Matrix& rays() const noexcept { return rays_; }
    [[nodiscard]] bool is_empty() const noexcept { return vertices_.empty(); }
    [[nodiscard]] bool is_bounded() const noexcept { return rays_.empty(); }

    // Membership by an LP over convex/conic multipliers.
    [[nodiscard]] bool contains(const Vector& x) const;

    // Irredundant generators: rays primitive and deduplicated, generators that
    // are combinations of the others dropped, both lists sorted. Unique for
    // pointed polyhedra, so equality of canonical forms is set equality.
    [[nodiscard]] VPolyhedron canonical() const;

    friend bool operator==(const VPolyhedron&, const VPolyhedron&) = default;

  private:
    std::size_t dimension_;
    Matrix vertices_;
    Matrix rays_;
};

enum class Sense { Minimize, Maximize };

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPOutcome {
    LPStatus status = LPStatus::Infeasible;
    Rational value;       // Optimal
    Vector witness;       // Optimal: feasible point attaining value
    Vector certificate;   // Infeasible: y >= 0, y A = 0, y b > 0. Unbounded: ray r, A r >= 0.

    // Checks the witness or certificate by direct substitution.
    [[nodiscard]] bool verify(const HPolyhedron& p, const Vector& objective, Sense sense) const;
};

// Exact simplex with Bland's rule; deterministic for fixed input.
[[nodiscard]] LPOutcome solve_lp(const HPolyhedron& p, const Vector& objective, Sense sense);

// Projection forgetting coordinate `index`; redundant rows are removed by LP.
[[nodiscard]] HPolyhedron fm_eliminate(const HPolyhedron& p, std::size_t index);

// Projection onto the coordinates in `keep` (in that order), eliminating the
// rest one at a time with LP redundancy removal after every step.
[[nodiscard]] HPolyhedron fm_project(const HPolyhedron& p, const std::vector<std::size_t>& keep);

// Drops every constraint implied by the remaining ones. Empty input yields
// HPolyhedron::empty.
[[nodiscard]] HPolyhedron remove_redundant(const HPolyhedron& p);

inline constexpr std::size_t kMaxEnumerationDimension = 10;

// Vertices and extreme rays by enumeration of constraint bases. Lines, when
// present, are reported as pairs of opposite rays. Throws DimensionTooLarge
// above kMaxEnumerationDimension.
[[nodiscard]] VPolyhedron enumerate_v_rep(const HPolyhedron& p);

// x -> linear x + offset; rays map without the offset.
[[nodiscard]] VPolyhedron affine_image(const VPolyhedron& v, const Matrix& linear, const Vector& offset);

// Inequality description of conv(vertices) + cone(rays), by projection.
[[nodiscard]] HPolyhedron to_h_representation(const VPolyhedron& v);

// Affine image of an H-polyhedron computed by projection of the graph
// {(x, y) : x in p, y = linear x + offset} onto y.
[[nodiscard]] HPolyhedron affine_image(const HPolyhedron& p, const Matrix& linear, const Vector& offset);

// Integer points of a bounded polyhedron of dimension at most 3.
[[nodiscard]] std::vector<Vector> lattice_points(const HPolyhedron& p);

} // namespace dvrbody
