// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dvrbody/error.hpp"
#include "dvrbody/parametric.hpp"
#include "support.hpp"

using namespace dvrbody;
using namespace dvrbody::testing;

namespace {

HPolyhedron at(const Matrix& a, const Vector& b0, const Vector& b1, const Rational& t) {
    HPolyhedron p(a.front().size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        p.add(a[i], b0[i] + t * b1[i]);
    }
    return p;
}

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

} // namespace

TEST_CASE("piecewise-linear function basics") {
    const PiecewiseLinearFunction f({{0, 0}, {2, 0}, {4, Rational(1, 2)}}, std::nullopt, Shape::Convex);
    CHECK(f(1) == 0);
    CHECK(f(3) == Rational(1, 4));
    CHECK(f.hi() == Rational(4));
    CHECK_FALSE(f.in_domain(5));
    CHECK_THROWS_AS((void)f(5), Error);
    CHECK(f.is_convex());
    CHECK_FALSE(f.is_concave());

    const PiecewiseLinearFunction g({{0, 2}, {Rational(1, 2), 4}}, Rational(0), Shape::Concave);
    CHECK(g(100) == 4);
    CHECK(g(Rational(1, 4)) == 3);
    CHECK_FALSE(g.hi());

    CHECK_THROWS_AS(PiecewiseLinearFunction({{0, 0}, {1, 1}, {2, 0}}, std::nullopt, Shape::Convex), Error);
    CHECK_THROWS_AS(PiecewiseLinearFunction({{1, 0}, {1, 1}}, std::nullopt, Shape::None), Error);
    CHECK(PiecewiseLinearFunction::with_inferred_shape({{0, 0}, {1, 1}, {2, 0}, {3, 1}}, std::nullopt).shape() == Shape::None);

    const PiecewiseLinearFunction collinear({{0, 0}, {1, 1}, {2, 2}, {3, 2}}, Rational(0), Shape::Concave);
    CHECK(collinear.simplified().breakpoints() == std::vector<Breakpoint>{{0, 0}, {2, 2}});
}

TEST_CASE("parametric path example") {
    // Path a-b: rows are laplacian rows (a, b) then phi >= 0; family 2(a) - t(b).
    const Matrix a{{1, -1}, {-1, 1}, {1, 0}, {0, 1}};
    const Vector b0{-2, 0, 0, 0};
    const Vector b1{0, 1, 0, 0};
    const auto r = parametric_value_function(a, b0, b1, {0, 1}, Sense::Minimize, 0, Rational(2));
    CHECK(r.lo == 0);
    CHECK(r.hi == Rational(2));
    CHECK(r.value.breakpoints() == std::vector<Breakpoint>{{0, 0}, {2, 2}});
    for (const Rational t : {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
        const auto lp = solve_lp(at(a, b0, b1, t), {0, 1}, Sense::Minimize);
        CHECK(lp.value == r.value(t));
    }
}

TEST_CASE("parametric constant and degenerate cases") {
    const Matrix a{{1, 0}, {0, 1}, {-1, -1}};
    const auto r = parametric_value_function(a, {0, 0, -3}, {0, 0, 0}, {1, 2}, Sense::Maximize, 0, std::nullopt);
    CHECK_FALSE(r.hi);
    CHECK(r.value.breakpoints() == std::vector<Breakpoint>{{0, 6}});
    CHECK(r.value.tail_slope() == Rational(0));

    // Feasible only at t = 1.
    const auto single = parametric_value_function({{1}, {-1}, {1}, {-1}}, {0, -1, 1, 0}, {1, 0, 0, -1}, {1},
                                                  Sense::Minimize, 0, Rational(3));
    CHECK(single.lo == 1);
    CHECK(single.hi == Rational(1));
    CHECK(single.value.breakpoints() == std::vector<Breakpoint>{{1, 1}});

    CHECK(code_of([] { (void)parametric_value_function({{1}, {-1}}, {1, 0}, {0, 0}, {1}, Sense::Minimize, 0, Rational(1)); }) ==
          ErrorCode::InfeasibleEverywhere);
    CHECK(code_of([] { (void)parametric_value_function({{1}}, {0}, {1}, {1}, Sense::Maximize, 0, Rational(1)); }) ==
          ErrorCode::UnboundedValue);
    // Truncation of the requested interval.
    const auto cut = parametric_value_function({{1}, {-1}}, {0, -4}, {1, 0}, {1}, Sense::Minimize, 0, std::nullopt);
    CHECK(cut.lo == 0);
    CHECK(cut.hi == Rational(4));
    CHECK(cut.value.breakpoints() == std::vector<Breakpoint>{{0, 0}, {4, 4}});
}

TEST_CASE("parametric value function matches pointwise LPs") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const auto n = static_cast<std::size_t>(random_int(rng, 1, 3));
        const auto m = static_cast<std::size_t>(random_int(rng, n + 1, n + 5));
        Matrix a(m, Vector(n));
        Vector b0(m);
        Vector b1(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (auto& x : a[i]) {
                x = random_int(rng, -3, 3);
            }
            b0[i] = random_int(rng, -4, 2);
            b1[i] = random_int(rng, -2, 2);
        }
        Vector c(n);
        for (auto& x : c) {
            x = random_int(rng, -2, 2);
        }
        const auto sense = trial % 2 ? Sense::Minimize : Sense::Maximize;
        const Rational t0 = random_int(rng, -3, 0);
        const std::optional<Rational> t1 = trial % 3 ? std::optional<Rational>(Rational(random_int(rng, 1, 4))) : std::nullopt;
        ParametricResult* r = nullptr;
        std::optional<ParametricResult> held;
        try {
            held = parametric_value_function(a, b0, b1, c, sense, t0, t1);
            r = &*held;
        } catch (const Error& e) {
            // The error must agree with the pointwise LPs at a few parameters.
            for (int k = 0; k < 5; ++k) {
                const Rational t = t1 ? rand_q(rng, t0.get_num().get_si(), t1->get_num().get_si(), 5)
                                      : rand_q(rng, t0.get_num().get_si(), 6, 5);
                const auto lp = solve_lp(at(a, b0, b1, t), c, sense);
                if (e.code() == ErrorCode::InfeasibleEverywhere) {
                    CHECK(lp.status == LPStatus::Infeasible);
                } else {
                    CHECK(e.code() == ErrorCode::UnboundedValue);
                    CHECK(lp.status != LPStatus::Optimal);
                }
            }
            continue;
        }
        CHECK(r->value.shape() == (sense == Sense::Minimize ? Shape::Convex : Shape::Concave));
        CHECK((sense == Sense::Minimize ? r->value.is_convex() : r->value.is_concave()));
        const Rational top = r->hi ? *r->hi : r->lo + 8;
        for (int k = 0; k < 20; ++k) {
            const Rational t = rand_q(rng, 0, 1, 7) * (top - r->lo) + r->lo;
            const auto lp = solve_lp(at(a, b0, b1, t), c, sense);
            REQUIRE(lp.status == LPStatus::Optimal);
            CHECK(lp.value == r->value(t));
            ++checked;
        }
        // Outside the reported interval the system is empty.
        if (r->lo > t0) {
            CHECK(solve_lp(at(a, b0, b1, r->lo - Rational(1, 97)), c, sense).status == LPStatus::Infeasible);
        }
        if (r->hi && (!t1 || *r->hi < *t1)) {
            CHECK(solve_lp(at(a, b0, b1, *r->hi + Rational(1, 97)), c, sense).status == LPStatus::Infeasible);
        }
    }
    CHECK(checked > 300);
}
