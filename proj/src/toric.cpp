// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dvrbody/toric.hpp"

#include <algorithm>

#include "dvrbody/error.hpp"

namespace dvrbody {

namespace {

bool integral(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integer(x); });
}

void check_ray(const WeightedRay& r, std::size_t dim, const std::string& what) {
    if (r.direction.size() != dim) {
        fail(ErrorCode::InvalidArgument, what + " has " + std::to_string(r.direction.size()) +
                                             " coordinates, expected " + std::to_string(dim));
    }
    if (!integral(r.direction) || !is_integer(r.coefficient)) {
        fail(ErrorCode::InvalidArgument, what + " must be integral");
    }
}

Vector lift(const Vector& v, const Rational& last) {
    Vector out = v;
    out.push_back(last);
    return out;
}

} // namespace

void validate_model(const ToricModel& model) {
    const std::size_t d = model.dimension;
    if (d == 0) {
        fail(ErrorCode::InvalidArgument, "toric dimension must be positive");
    }
    for (const auto& r : model.generic_rays) {
        check_ray(r, d, "generic ray " + to_string(r.direction));
        if (is_zero(r.direction) || primitive(r.direction) != r.direction) {
            fail(ErrorCode::InvalidArgument, "generic ray " + to_string(r.direction) + " is not primitive");
        }
    }
    if (model.vertical_vertices.empty()) {
        fail(ErrorCode::InvalidArgument, "at least one vertical vertex is required");
    }
    for (const auto& v : model.vertical_vertices) {
        check_ray(v, d, "vertical vertex " + to_string(v.direction));
    }
    // The rays positively span iff {m : <m, u> >= 0} is the origin.
    HPolyhedron cone(d);
    for (const auto& r : model.generic_rays) {
        cone.add(r.direction, 0);
    }
    for (std::size_t j = 0; j < d; ++j) {
        Vector e = zeros(d);
        e[j] = 1;
        for (const int sign : {1, -1}) {
            if (solve_lp(cone, scaled(e, sign), Sense::Maximize).status != LPStatus::Optimal) {
                fail(ErrorCode::UnboundedGenericPolytope, "generic rays do not positively span");
            }
        }
    }
}

HPolyhedron build_generic_polytope(const ToricModel& model) {
    validate_model(model);
    HPolyhedron p(model.dimension);
    for (const auto& r : model.generic_rays) {
        p.add(r.direction, -r.coefficient);
    }
    return p;
}

HPolyhedron build_model_polyhedron(const ToricModel& model) {
    validate_model(model);
    const std::size_t d = model.dimension;
    HPolyhedron p(d + 1);
    for (const auto& r : model.generic_rays) {
        p.add(lift(r.direction, 0), -r.coefficient);
    }
    for (const auto& v : model.vertical_vertices) {
        p.add(lift(v.direction, 1), -v.coefficient);
    }
    Vector h = zeros(d + 1);
    h[d] = 1;
    p.add(h, 0);
    return p;
}

Rational psi_value(const ToricModel& model, const Vector& m) {
    if (m.size() != model.dimension) {
        fail(ErrorCode::DimensionMismatch, "point has the wrong dimension");
    }
    if (!build_generic_polytope(model).contains(m)) {
        fail(ErrorCode::OutsideGenericPolytope, to_string(m) + " is outside the generic polytope");
    }
    Rational best = -model.vertical_vertices.front().coefficient - dot(m, model.vertical_vertices.front().direction);
    for (const auto& v : model.vertical_vertices) {
        best = std::max(best, Rational(-v.coefficient - dot(m, v.direction)));
    }
    return best;
}

bool is_full_dimensional(const HPolyhedron& p) {
    // max s subject to a.x - s |a|_1 >= b, 0 <= s <= 1.
    const std::size_t d = p.dimension();
    HPolyhedron lifted(d + 1);
    for (const auto& c : p.constraints()) {
        Rational norm = 0;
        for (const auto& x : c.a) {
            norm += abs(x);
        }
        if (norm == 0) {
            if (c.b > 0) {
                return false;
            }
            continue;
        }
        lifted.add(lift(c.a, -norm), c.b);
    }
    Vector s = zeros(d + 1);
    s[d] = 1;
    lifted.add(scaled(s, -1), -1);
    const auto lp = solve_lp(lifted, s, Sense::Maximize);
    return lp.status == LPStatus::Optimal && lp.value > 0;
}

void validate_flag(const ToricModel& model, const ToricFlag& flag) {
    validate_model(model);
    const std::size_t d = model.dimension;
    if (flag.rays.size() != d + 1) {
        fail(ErrorCode::InvalidArgument, "flag needs " + std::to_string(d + 1) + " rays");
    }
    Matrix w;
    for (const auto& r : flag.rays) {
        check_ray(r, d + 1, "flag ray " + to_string(r.direction));
        const Vector head(r.direction.begin(), r.direction.end() - 1);
        const Rational& last = r.direction.back();
        const auto& pool = last == 0 ? model.generic_rays : model.vertical_vertices;
        const bool known = (last == 0 || last == 1) &&
                           std::any_of(pool.begin(), pool.end(), [&](const WeightedRay& x) {
                               return x.direction == head && x.coefficient == r.coefficient;
                           });
        if (!known) {
            fail(ErrorCode::FlagRayUnknown, "flag ray " + to_string(r.direction) + " with coefficient " +
                                                to_string(r.coefficient) + " is not a ray of the model");
        }
        w.push_back(r.direction);
    }
    if (abs(determinant(w)) != 1) {
        fail(ErrorCode::NotABasis, "flag rays have determinant " + to_string(determinant(w)));
    }
}

Matrix flag_matrix(const ToricFlag& flag) {
    Matrix w;
    for (const auto& r : flag.rays) {
        w.push_back(r.direction);
    }
    return w;
}

Vector flag_offset(const ToricFlag& flag) {
    Vector a;
    for (const auto& r : flag.rays) {
        a.push_back(r.coefficient);
    }
    return a;
}

VPolyhedron toric_body(const ToricModel& model, const ToricFlag& flag) {
    validate_flag(model, flag);
    const auto v = enumerate_v_rep(build_model_polyhedron(model));
    auto body = affine_image(v, flag_matrix(flag), flag_offset(flag)).canonical();
    if (body != toric_body_by_projection(model, flag)) {
        fail(ErrorCode::Internal, "vertex map and projection disagree on the toric body");
    }
    return body;
}

VPolyhedron toric_body_by_projection(const ToricModel& model, const ToricFlag& flag) {
    validate_flag(model, flag);
    const auto image = affine_image(build_model_polyhedron(model), flag_matrix(flag), flag_offset(flag));
    return enumerate_v_rep(image).canonical();
}

std::optional<Vector> monomial_valuation(const ToricModel& model, const ToricFlag& flag, const Vector& m,
                                         const Rational& h) {
    validate_flag(model, flag);
    if (m.size() != model.dimension) {
        fail(ErrorCode::DimensionMismatch, "monomial has the wrong dimension");
    }
    const Vector point = lift(m, h);
    if (!build_model_polyhedron(model).contains(point)) {
        return std::nullopt;
    }
    return add(multiply(flag_matrix(flag), point), flag_offset(flag));
}

ToricModel scaled(const ToricModel& model, const Rational& k) {
    ToricModel out = model;
    for (auto* list : {&out.generic_rays, &out.vertical_vertices}) {
        for (auto& r : *list) {
            r.coefficient *= k;
        }
    }
    return out;
}

ToricFlag scaled(const ToricFlag& flag, const Rational& k) {
    ToricFlag out = flag;
    for (auto& r : out.rays) {
        r.coefficient *= k;
    }
    return out;
}

} // namespace dvrbody
