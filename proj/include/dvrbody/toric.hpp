// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "dvrbody/polyhedron.hpp"

namespace dvrbody {

// Integer ray data (u, a): a primitive direction with its divisor coefficient.
struct WeightedRay {
    Vector direction;
    Rational coefficient;

    friend bool operator==(const WeightedRay&, const WeightedRay&) = default;
};

// Toric scheme over a DVR in lattice dimension d. Generic rays u live in Z^d
// and must positively span R^d; vertical vertices v are the points (v, 1) of
// the height-one slice of the fan.
struct ToricModel {
    std::size_t dimension = 0;
    std::vector<WeightedRay> generic_rays;
    std::vector<WeightedRay> vertical_vertices;

    friend bool operator==(const ToricModel&, const ToricModel&) = default;
};

// d + 1 rays w_i in Z^(d+1), each one of (u, 0) or (v, 1) of the model with
// its coefficient, together forming a lattice basis.
struct ToricFlag {
    std::vector<WeightedRay> rays;

    friend bool operator==(const ToricFlag&, const ToricFlag&) = default;
};

// Throws InvalidArgument for malformed data (non-integral or non-primitive
// rays, wrong lengths, no vertical vertex) and UnboundedGenericPolytope when
// the generic rays do not positively span.
void validate_model(const ToricModel& model);

// {m : <m, u> >= -a for every generic ray}.
[[nodiscard]] HPolyhedron build_generic_polytope(const ToricModel& model);

// {(m, h) : <m, u> >= -a_u, <m, v> + h >= -a_v, h >= 0}, coordinates m then h.
[[nodiscard]] HPolyhedron build_model_polyhedron(const ToricModel& model);

// max over vertical vertices of -a_v - <m, v>. Throws OutsideGenericPolytope.
[[nodiscard]] Rational psi_value(const ToricModel& model, const Vector& m);

// True when the polyhedron has an interior point.
[[nodiscard]] bool is_full_dimensional(const HPolyhedron& p);

// Throws NotABasis or FlagRayUnknown; InvalidArgument for wrong sizes.
void validate_flag(const ToricModel& model, const ToricFlag& flag);

// Rows w_i and offsets a_i of (m, h) -> (<(m, h), w_i> + a_i)_i.
[[nodiscard]] Matrix flag_matrix(const ToricFlag& flag);
[[nodiscard]] Vector flag_offset(const ToricFlag& flag);

// Canonical V-representation of the image of the model polyhedron under the
// flag map, from its vertices and rays. Cross-checked against the projection
// route (Internal on disagreement).
[[nodiscard]] VPolyhedron toric_body(const ToricModel& model, const ToricFlag& flag);

// The same image computed by Fourier-Motzkin elimination of the graph of the map.
[[nodiscard]] VPolyhedron toric_body_by_projection(const ToricModel& model, const ToricFlag& flag);

// Valuation vector of the monomial (m, h), or nullopt when it is not a section.
[[nodiscard]] std::optional<Vector> monomial_valuation(const ToricModel& model, const ToricFlag& flag,
                                                       const Vector& m, const Rational& h);

// Every coefficient multiplied by k.
[[nodiscard]] ToricModel scaled(const ToricModel& model, const Rational& k);
[[nodiscard]] ToricFlag scaled(const ToricFlag& flag, const Rational& k);

} // namespace dvrbody
