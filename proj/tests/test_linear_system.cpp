// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dvrbody/error.hpp"
#include "dvrbody/linear_system.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace dvrbody;
using namespace dvrbody::testing;

namespace {

LinearSystemSpec path_spec(std::map<std::string, Rational> lambda, bool effective = true) {
    const Graph g = path_graph(2);
    return {g, make_divisor(g, lambda), effective};
}

LinearSystemSpec quartic_spec() {
    const Graph g = quartic_graph();
    return {g, make_divisor(g, {{"P", 2}, {"Q1", 1}, {"Q2", 1}}), true};
}

// Random spec whose effective system is nonempty.
LinearSystemSpec random_nonempty(std::mt19937_64& rng, std::size_t max_vertices, bool effective) {
    for (;;) {
        const auto n = static_cast<std::size_t>(random_int(rng, 1, static_cast<long>(max_vertices)));
        const Graph g = random_graph(rng, n, static_cast<std::size_t>(random_int(rng, 0, 4)));
        Divisor d = Divisor::zero(g);
        for (std::size_t v = 0; v < n; ++v) {
            d[v] = rand_q(rng, -2, 4, 2);
        }
        LinearSystemSpec spec{g, d, true};
        if (minimal_element(spec)) {
            spec.effective = effective;
            return spec;
        }
    }
}

} // namespace

TEST_CASE("build_system and member examples") {
    const auto spec = path_spec({{"a", 2}, {"b", -1}});
    const auto p = build_system(spec);
    REQUIRE(p.size() == 4);
    CHECK(p.constraints()[0] == Constraint{{1, -1}, -2});
    CHECK(p.constraints()[1] == Constraint{{-1, 1}, 1});
    CHECK(p.constraints()[2] == Constraint{{1, 0}, 0});
    CHECK(p.constraints()[3] == Constraint{{0, 1}, 0});
    CHECK(member(spec, GraphFunction({0, 1})));
    CHECK_FALSE(member(spec, GraphFunction({0, 0})));

    const auto q = quartic_spec();
    const auto qp = build_system(q);
    // Row at P: 4 phi(P) - 2 phi(Q1) - 2 phi(Q2) >= -2.
    CHECK(qp.constraints()[0] == Constraint{{4, -2, -2, 0}, -2});
    CHECK(qp.constraints()[1] == Constraint{{-2, 3, 0, -1}, -1});
    CHECK(qp.constraints()[2] == Constraint{{-2, 0, 3, -1}, -1});
    CHECK(qp.constraints()[3] == Constraint{{0, -1, -1, 2}, 0});
    CHECK(member(q, GraphFunction::zero(q.graph)));

    LinearSystemSpec zero{q.graph, Divisor::zero(q.graph), true};
    CHECK(member(zero, GraphFunction::zero(q.graph)));
    CHECK_THROWS_AS((void)member(spec, GraphFunction({0, 1, 2})), Error);
}

TEST_CASE("pointwise minimum") {
    CHECK(pointwise_min(GraphFunction({0, 3}), GraphFunction({2, 1})) == GraphFunction({0, 1}));
    const GraphFunction f({Rational(1, 2), -3});
    CHECK(pointwise_min(f, f) == f);

    std::mt19937_64 rng(5);
    const auto q = quartic_spec();
    const auto members = sample_members(q, 20, rng);
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
        REQUIRE(member(q, members[i]));
        CHECK(member(q, pointwise_min(members[i], members[i + 1])));
    }
}

TEST_CASE("minimal element and shift examples") {
    CHECK(*minimal_element(quartic_spec()) == GraphFunction::zero(quartic_graph()));
    CHECK(*minimal_element(path_spec({{"a", 2}, {"b", -1}})) == GraphFunction({0, 1}));
    CHECK_FALSE(minimal_element(path_spec({{"a", -1}})));
    CHECK_THROWS_AS((void)minimal_element(path_spec({{"a", 1}}, false)), Error);

    // Independent route: coordinate minima by projection onto one coordinate.
    const auto spec = path_spec({{"a", 2}, {"b", -1}});
    const auto proj = fm_project(build_system(spec), {1});
    CHECK(solve_lp(proj, {1}, Sense::Minimize).value == 1);

    const auto shift = zariski_shift(spec);
    CHECK(shift.minimal == GraphFunction({0, 1}));
    CHECK(shift.lambda == spec.lambda + laplacian(spec.graph, shift.minimal));
    CHECK(shift.lambda == make_divisor(spec.graph, {{"a", 1}, {"b", 0}}));
    const LinearSystemSpec shifted{spec.graph, shift.lambda, true};
    CHECK(*minimal_element(shifted) == GraphFunction::zero(spec.graph));

    const auto q = quartic_spec();
    const auto qs = zariski_shift(q);
    CHECK(qs.lambda == q.lambda);
    CHECK(qs.minimal == GraphFunction::zero(q.graph));

    CHECK_THROWS_AS((void)zariski_shift(path_spec({{"a", -1}})), Error);

    std::mt19937_64 rng(11);
    for (const auto& phi : sample_members(shifted, 50, rng)) {
        CHECK(member(spec, phi + shift.minimal));
    }
    for (const auto& psi : sample_members(spec, 50, rng)) {
        CHECK(member(shifted, psi - shift.minimal));
    }
}

TEST_CASE("enriched system") {
    const auto spec = path_spec({{"a", 2}});
    const auto p = enriched_system({spec, "a"});
    REQUIRE(p.size() == 6);
    CHECK(p.constraints()[4] == Constraint{{0, 0, 1}, 0});
    CHECK(p.constraints()[5] == Constraint{{1, -1, -1}, -2});
    // At u = 0 the extra rows read 0 >= 0 and repeat the laplacian row at a.
    const auto slice = p.slice(2, 0);
    const auto base = build_system(spec);
    CHECK(std::vector<Constraint>(slice.constraints().begin(), slice.constraints().begin() + 4) == base.constraints());
    CHECK(slice.constraints()[4] == Constraint{{0, 0}, 0});
    CHECK(slice.constraints()[5] == base.constraints()[0]);

    const auto q = quartic_spec();
    const auto qp = enriched_system({q, "P"});
    CHECK(qp.contains({0, 0, 0, 0, 2}));
    CHECK_FALSE(qp.contains({0, 0, 0, 0, 3}));
    CHECK_THROWS_AS((void)enriched_system({q, "X"}), Error);
}

TEST_CASE("semimodule closure and minimal element on random systems") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        const bool effective = trial % 2 == 0;
        const auto spec = random_nonempty(rng, 6, effective);
        const auto members = sample_members(spec, 6, rng);
        for (std::size_t i = 0; i + 1 < members.size(); ++i) {
            REQUIRE(member(spec, members[i]));
            CHECK(member(spec, pointwise_min(members[i], members[i + 1])));
        }
        LinearSystemSpec plus = spec;
        plus.effective = true;
        const auto w = minimal_element(plus);
        REQUIRE(w);
        CHECK(member(plus, *w));
        for (const auto& phi : sample_members(plus, 5, rng)) {
            for (std::size_t v = 0; v < phi.size(); ++v) {
                CHECK(phi[v] >= (*w)[v]);
            }
        }
        const auto shift = zariski_shift(plus);
        CHECK(*minimal_element({plus.graph, shift.lambda, true}) == GraphFunction::zero(plus.graph));
    }
}

TEST_CASE("epsilon intersection of effective systems") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const auto spec = random_nonempty(rng, 5, true);
        Divisor e = Divisor::zero(spec.graph);
        while (is_zero(e.values())) {
            for (std::size_t v = 0; v < e.size(); ++v) {
                e[v] = random_int(rng, 0, 2);
            }
        }
        const auto base = build_system(spec);
        // Each constraint of L+(lambda + eps E) tends to the matching one of L+(lambda).
        for (int k = 0; k <= 20; ++k) {
            const Rational eps(1, 1L << k);
            const auto perturbed = build_system({spec.graph, spec.lambda + eps * e, true});
            for (std::size_t i = 0; i < base.size(); ++i) {
                CHECK(perturbed.constraints()[i].a == base.constraints()[i].a);
                const Rational gap = base.constraints()[i].b - perturbed.constraints()[i].b;
                CHECK(gap >= 0);
                CHECK(gap <= eps * 2);
            }
        }
        // Members of the limit lie in every perturbed system; points just outside
        // the limit leave the perturbed systems once eps is small enough.
        for (const auto& phi : sample_members(spec, 5, rng)) {
            for (int k = 0; k <= 20; ++k) {
                CHECK(member({spec.graph, spec.lambda + Rational(1, 1L << k) * e, true}, phi));
            }
        }
    }
}

TEST_CASE("diameter bound for pairs of members") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const auto spec = random_nonempty(rng, 5, true);
        const Rational bound = divisor_degree(spec.lambda) * static_cast<long>(graph_diameter(spec.graph));
        auto normalized = [](GraphFunction f) {
            const Rational m = *std::min_element(f.values().begin(), f.values().end());
            return f - GraphFunction(Vector(f.size(), m));
        };
        const auto members = sample_members(spec, 6, rng);
        for (std::size_t i = 0; i + 1 < members.size(); ++i) {
            const auto a = normalized(members[i]);
            const auto b = normalized(members[i + 1]);
            REQUIRE(member(spec, a));
            for (std::size_t v = 0; v < a.size(); ++v) {
                CHECK(abs(a[v] - b[v]) <= bound);
            }
        }
    }
}

TEST_CASE("non-negative rank examples") {
    const auto q = quartic_spec();
    CHECK(has_nonnegative_rank(q.graph, q.lambda));
    CHECK(has_nonnegative_rank(q.graph, Divisor::zero(q.graph)));
    CHECK_FALSE(has_nonnegative_rank(q.graph, make_divisor(q.graph, {{"P", 3}, {"Q1", -4}})));
    CHECK_FALSE(has_nonnegative_rank(path_graph(2), make_divisor(path_graph(2), {{"a", -1}})));
    CHECK_THROWS_AS((void)has_nonnegative_rank(q.graph, make_divisor(q.graph, {{"P", Rational(1, 2)}})), Error);
    CHECK(rank_by_function_search(q.graph, q.lambda, 8));

    // Degree-zero divisor needing phi = (0, k, 2k): a search box of
    // deg(lambda) * diam would only contain phi = 0.
    const Graph abc = path_graph(3);
    for (long k = 1; k <= 3; ++k) {
        const auto d = make_divisor(abc, {{"a", k}, {"c", -k}});
        CHECK(has_nonnegative_rank(abc, d));
        CHECK_FALSE(rank_by_function_search(abc, d, 0));
        CHECK(rank_by_function_search(abc, d, static_cast<long>(positive_degree(d).get_num().get_si()) * 2));
        CHECK(rank_by_divisor_search(abc, d));
    }
}

TEST_CASE("reduced divisors") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(random_int(rng, 1, 6));
        const Graph g = random_graph(rng, n, static_cast<std::size_t>(random_int(rng, 0, 5)));
        Divisor d = Divisor::zero(g);
        for (std::size_t v = 0; v < n; ++v) {
            d[v] = random_int(rng, -4, 4);
        }
        const auto q = static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(n) - 1));
        const auto r = reduced_divisor(g, d, q);
        CHECK(divisor_degree(r) == divisor_degree(d));
        for (std::size_t v = 0; v < n; ++v) {
            if (v != q) {
                CHECK(r[v] >= 0);
            }
        }
        // r - d is a principal divisor laplacian(phi) with integral phi.
        const Matrix lap = g.laplacian_matrix();
        Matrix reduced;
        Vector rhs;
        for (std::size_t i = 1; i < n; ++i) {
            reduced.emplace_back(lap[i].begin() + 1, lap[i].end());
            rhs.push_back(r[i] - d[i]);
        }
        if (n > 1) {
            const auto phi = solve_square(reduced, rhs);
            REQUIRE(phi);
            CHECK(std::all_of(phi->begin(), phi->end(), [](const Rational& x) { return is_integer(x); }));
        }
        // Answer independent of the base vertex.
        bool first = true;
        bool answer = false;
        for (std::size_t base = 0; base < n; ++base) {
            const bool here = divisor_degree(d) >= 0 && reduced_divisor(g, d, base)[base] >= 0;
            if (first) {
                answer = here;
                first = false;
            }
            CHECK(here == answer);
        }
        CHECK(answer == has_nonnegative_rank(g, d));
    }
}

TEST_CASE("Dhar agrees with exhaustive search on three-vertex multigraphs") {
    int cases = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& g : small_multigraphs(n, 4)) {
            const auto diam = static_cast<long>(graph_diameter(g));
            for_each_divisor(g, -2, 2, [&](const Divisor& d) {
                const bool dhar = has_nonnegative_rank(g, d);
                CHECK(dhar == rank_by_divisor_search(g, d));
                if (divisor_degree(d) >= 0) {
                    const long box = positive_degree(d).get_num().get_si() * diam;
                    CHECK(dhar == rank_by_function_search(g, d, box));
                }
                ++cases;
            });
        }
    }
    CHECK(cases > 500);
}
