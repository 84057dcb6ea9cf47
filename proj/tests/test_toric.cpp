// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dvrbody/error.hpp"
#include "dvrbody/toric.hpp"
#include "support.hpp"

using namespace dvrbody;
using namespace dvrbody::testing;

namespace {

ToricModel line_model() {
    return {1, {{{1}, 0}, {{-1}, 1}}, {{{0}, 0}, {{1}, 0}}};
}

ToricFlag line_flag() { return {{{{1, 0}, 0}, {{1, 1}, 0}}}; }

// Unit square with a corner cut off by the vertical data.
ToricModel square_model() {
    return {2,
            {{{1, 0}, 0}, {{-1, 0}, 1}, {{0, 1}, 0}, {{0, -1}, 1}},
            {{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, -1}}};
}

ToricFlag square_flag() { return {{{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{1, 0, 1}, 0}}}; }

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

Vector random_point(std::mt19937_64& rng, std::size_t dim, long lo, long hi) {
    Vector x(dim);
    for (auto& c : x) {
        c = rand_q(rng, lo, hi, 4);
    }
    return x;
}

// Preimage of y under the (unimodular) flag map.
Vector preimage(const ToricFlag& flag, const Vector& y) {
    return *solve_square(flag_matrix(flag), subtract(y, flag_offset(flag)));
}

} // namespace

TEST_CASE("generic polytope examples") {
    const auto p = build_generic_polytope(line_model());
    CHECK(enumerate_v_rep(p).canonical().vertices() == Matrix{{0}, {1}});

    const ToricModel zero{1, {{{1}, 0}, {{-1}, 0}}, {{{0}, 0}}};
    CHECK(enumerate_v_rep(build_generic_polytope(zero)).canonical().vertices() == Matrix{{0}});
    CHECK_FALSE(is_full_dimensional(build_generic_polytope(zero)));
    CHECK(is_full_dimensional(p));

    const ToricModel square{2, {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}}, {{{0, 0}, 0}}};
    CHECK(enumerate_v_rep(build_generic_polytope(square)).canonical().vertices() ==
          Matrix{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});

    const ToricModel half{1, {{{1}, 0}}, {{{0}, 0}}};
    CHECK(code_of([&] { (void)build_generic_polytope(half); }) == ErrorCode::UnboundedGenericPolytope);
    const ToricModel fat{1, {{{2}, 0}, {{-1}, 0}}, {{{0}, 0}}};
    CHECK(code_of([&] { (void)build_generic_polytope(fat); }) == ErrorCode::InvalidArgument);
    const ToricModel bare{1, {{{1}, 0}, {{-1}, 0}}, {}};
    CHECK(code_of([&] { (void)build_generic_polytope(bare); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("model polyhedron and psi") {
    const auto p = build_model_polyhedron(line_model());
    const HPolyhedron expected(2, {{{1, 0}, 0}, {{-1, 0}, -1}, {{0, 1}, 0}, {{1, 1}, 0}});
    CHECK(enumerate_v_rep(p).canonical() == enumerate_v_rep(expected).canonical());

    CHECK(psi_value(line_model(), {Rational(1, 2)}) == 0);
    const ToricModel two{1, {{{1}, 0}, {{-1}, 1}}, {{{0}, 0}, {{1}, -1}}};
    CHECK(psi_value(two, {0}) == 1);
    CHECK(code_of([] { (void)psi_value(line_model(), {2}); }) == ErrorCode::OutsideGenericPolytope);

    // Single vertex 0 with a = 0: P_D x [0, inf).
    const ToricModel flat{1, {{{1}, 0}, {{-1}, 1}}, {{{0}, 0}}};
    const auto v = enumerate_v_rep(build_model_polyhedron(flat)).canonical();
    CHECK(v.vertices() == Matrix{{0, 0}, {1, 0}});
    CHECK(v.rays() == Matrix{{0, 1}});

    // Very negative a_v lift the polyhedron off h = 0.
    const ToricModel lifted{1, {{{1}, 0}, {{-1}, 1}}, {{{0}, -5}}};
    CHECK(psi_value(lifted, {Rational(1, 3)}) == 5);
    CHECK_FALSE(build_model_polyhedron(lifted).contains({Rational(1, 3), 4}));
}

TEST_CASE("overgraph and projection identities") {
    std::mt19937_64 rng(17);
    for (const auto& model : {line_model(), square_model()}) {
        const auto d = model.dimension;
        const auto pd = build_generic_polytope(model);
        const auto big = build_model_polyhedron(model);
        std::vector<std::size_t> keep(d);
        for (std::size_t i = 0; i < d; ++i) {
            keep[i] = i;
        }
        CHECK(enumerate_v_rep(fm_project(big, keep)).canonical() == enumerate_v_rep(pd).canonical());
        for (int k = 0; k < 500; ++k) {
            const Vector x = random_point(rng, d + 1, -1, 3);
            const Vector m(x.begin(), x.end() - 1);
            const bool expected = pd.contains(m) && x.back() >= std::max(psi_value(model, m), Rational(0));
            CHECK(big.contains(x) == expected);
        }
    }
}

TEST_CASE("toric body examples") {
    const auto body = toric_body(line_model(), line_flag());
    CHECK(body.vertices() == Matrix{{0, 0}, {1, 1}});
    CHECK(body.rays() == Matrix{{0, 1}});
    CHECK(body == toric_body_by_projection(line_model(), line_flag()));

    // P = {0} x [0, inf) under an identity flag.
    const ToricModel point{1, {{{1}, 0}, {{-1}, 0}}, {{{0}, 0}}};
    const ToricFlag identity{{{{1, 0}, 0}, {{0, 1}, 0}}};
    const auto ray = toric_body(point, identity);
    CHECK(ray.vertices() == Matrix{{0, 0}});
    CHECK(ray.rays() == Matrix{{0, 1}});

    CHECK(toric_body(scaled(line_model(), 2), scaled(line_flag(), 2)) ==
          affine_image(body, {{2, 0}, {0, 2}}, {0, 0}).canonical());

    const ToricFlag not_basis{{{{1, 0}, 0}, {{-1, 0}, 1}}};
    CHECK(code_of([&] { (void)toric_body(line_model(), not_basis); }) == ErrorCode::NotABasis);
    const ToricFlag stranger{{{{1, 0}, 0}, {{2, 1}, 0}}};
    CHECK(code_of([&] { (void)toric_body(line_model(), stranger); }) == ErrorCode::FlagRayUnknown);
    const ToricFlag wrong_coefficient{{{{1, 0}, 3}, {{1, 1}, 0}}};
    CHECK(code_of([&] { (void)toric_body(line_model(), wrong_coefficient); }) == ErrorCode::FlagRayUnknown);
}

TEST_CASE("monomial valuations") {
    CHECK(monomial_valuation(line_model(), line_flag(), {1}, 0) == Vector{1, 1});
    CHECK(monomial_valuation(line_model(), line_flag(), {0}, 0) == Vector{0, 0});
    CHECK_FALSE(monomial_valuation(line_model(), line_flag(), {2}, 0));
}

TEST_CASE("toric body membership matches the inverse map") {
    std::mt19937_64 rng(23);
    const std::vector<std::pair<ToricModel, ToricFlag>> cases{{line_model(), line_flag()},
                                                              {square_model(), square_flag()}};
    for (const auto& [model, flag] : cases) {
        const auto body = toric_body(model, flag);
        const auto big = build_model_polyhedron(model);
        const auto d = model.dimension;
        for (const auto& v : body.vertices()) {
            for (const auto& c : v) {
                CHECK(c >= 0);
            }
        }
        int inside = 0;
        for (int k = 0; k < 300; ++k) {
            const Vector y = random_point(rng, d + 1, -1, 4);
            const bool in = big.contains(preimage(flag, y));
            CHECK(body.contains(y) == in);
            inside += in;
        }
        CHECK(inside > 10);

        // Lattice points of k P map into k body.
        for (long k = 1; k <= 3; ++k) {
            const auto scaled_body = toric_body(scaled(model, k), scaled(flag, k));
            HPolyhedron box = build_model_polyhedron(scaled(model, k));
            Vector h = zeros(d + 1);
            h[d] = -1;
            box.add(h, -6);
            for (const auto& x : lattice_points(box)) {
                const Vector m(x.begin(), x.end() - 1);
                const auto val = monomial_valuation(scaled(model, k), scaled(flag, k), m, x.back());
                REQUIRE(val);
                CHECK(scaled_body.contains(*val));
                CHECK(body.contains(scaled(*val, Rational(1, k))));
            }
        }
    }
}

TEST_CASE("generic fiber compatibility on the square model") {
    // The first two flag rays are horizontal: dropping the last body
    // coordinate gives the image of P_D under m -> (m1, m2).
    const auto body = toric_body(square_model(), square_flag());
    const auto dropped = affine_image(body, {{1, 0, 0}, {0, 1, 0}}, {0, 0}).canonical();
    const auto pd = enumerate_v_rep(build_generic_polytope(square_model()));
    CHECK(dropped == affine_image(pd, {{1, 0}, {0, 1}}, {0, 0}).canonical());
}
