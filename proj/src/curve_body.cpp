// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dvrbody/curve_body.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "dvrbody/error.hpp"
#include "dvrbody/linear_system.hpp"
#include "dvrbody/parametric.hpp"

namespace dvrbody {

namespace {

const TropicalFlag& tropical_flag(const CurveBodyJob& job) {
    const auto* flag = std::get_if<TropicalFlag>(&job.flag);
    if (flag == nullptr) {
        fail(ErrorCode::InvalidFlag, "job does not carry a tropical flag");
    }
    return *flag;
}

const ArakelovFlag& arakelov_flag(const CurveBodyJob& job) {
    const auto* flag = std::get_if<ArakelovFlag>(&job.flag);
    if (flag == nullptr) {
        fail(ErrorCode::InvalidFlag, "job does not carry an Arakelov flag");
    }
    return *flag;
}

void check_lambda(const CurveBodyJob& job) {
    if (job.lambda.size() != job.graph.vertex_count()) {
        fail(ErrorCode::DimensionMismatch, "lambda has " + std::to_string(job.lambda.size()) +
                                               " coefficients for " + std::to_string(job.graph.vertex_count()) +
                                               " vertices");
    }
}

struct TropicalData {
    std::size_t vertex;
    Rational end;  // deg lambda / deg y1
};

TropicalData validate_tropical(const CurveBodyJob& job) {
    check_lambda(job);
    const auto& flag = tropical_flag(job);
    const std::size_t v = job.graph.index_of(flag.vertex);
    if (flag.y1.size() != job.graph.vertex_count()) {
        fail(ErrorCode::InvalidFlag, "y1 has the wrong number of coefficients");
    }
    if (!is_effective(flag.y1) || divisor_degree(flag.y1) <= 0) {
        fail(ErrorCode::InvalidFlag, "y1 must be effective of positive degree");
    }
    const Rational deg = divisor_degree(job.lambda);
    if (deg <= 0) {
        fail(ErrorCode::NonPositiveDegree, "deg(lambda) = " + to_string(deg) + " is not positive");
    }
    return {v, Rational(deg / divisor_degree(flag.y1))};
}

std::size_t validate_arakelov(const CurveBodyJob& job) {
    check_lambda(job);
    return job.graph.index_of(arakelov_flag(job).vertex);
}

Vector unit(std::size_t n, std::size_t i) {
    Vector e = zeros(n);
    e[i] = 1;
    return e;
}

// Sorted by abscissa; at equal abscissa keeps the largest ordinate when
// `upper`, the smallest otherwise.
std::vector<Breakpoint> extreme_per_abscissa(const Matrix& vertices, bool upper) {
    std::map<Rational, Rational> best;
    for (const auto& x : vertices) {
        auto [it, fresh] = best.emplace(x[0], x[1]);
        if (!fresh) {
            it->second = upper ? std::max(it->second, x[1]) : std::min(it->second, x[1]);
        }
    }
    std::vector<Breakpoint> out;
    for (const auto& [t, y] : best) {
        out.push_back({t, y});
    }
    return out;
}

} // namespace

HPolyhedron NOBody2D::to_hpolyhedron() const {
    HPolyhedron p(2);
    const auto& pts = boundary.breakpoints();
    p.add({1, 0}, boundary.lo());
    if (const auto hi = boundary.hi()) {
        p.add({-1, 0}, -*hi);
    }
    const Rational sign = kind == BodyKind::Overgraph ? 1 : -1;
    // y >= v_i + s (t - t_i) for the overgraph, reversed for the band.
    auto add_line = [&](const Rational& slope, const Breakpoint& at) {
        p.add({Rational(-sign * slope), sign}, Rational(sign * (at.value - slope * at.t)));
    };
    const auto slopes = boundary.slopes();
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        add_line(slopes[i], pts[i]);
    }
    if (boundary.tail_slope()) {
        add_line(*boundary.tail_slope(), pts.back());
    }
    if (slopes.empty() && !boundary.tail_slope()) {
        add_line(0, pts.front());
    }
    if (kind == BodyKind::Band) {
        p.add({0, 1}, 0);
    }
    return p;
}

bool NOBody2D::contains(const Vector& point) const { return to_hpolyhedron().contains(point); }

NOBody2D tropical_body(const CurveBodyJob& job) {
    const auto [v, end] = validate_tropical(job);
    const auto& flag = tropical_flag(job);
    const LinearSystemSpec spec{job.graph, job.lambda, true};
    if (!minimal_element(spec)) {
        fail(ErrorCode::EmptyAtZero, "L+(lambda) is empty");
    }
    const HPolyhedron system = build_system(spec);
    const std::size_t n = job.graph.vertex_count();
    Matrix a;
    Vector b0;
    Vector b1;
    for (std::size_t i = 0; i < system.size(); ++i) {
        a.push_back(system.constraints()[i].a);
        b0.push_back(system.constraints()[i].b);
        b1.push_back(i < n ? flag.y1[i] : Rational(0));
    }
    const auto result = parametric_value_function(a, b0, b1, unit(n, v), Sense::Minimize, 0, end);
    NOBody2D body;
    body.kind = BodyKind::Overgraph;
    body.boundary = result.value;
    body.recession = {0, 1};
    if (result.lo != 0 || !result.hi || *result.hi != end) {
        body.warnings.push_back("domain truncated to the feasible subinterval [" + to_string(result.lo) + ", " +
                                to_string(result.hi ? *result.hi : end) + "] of [0, " + to_string(end) + "]");
    }
    return body;
}

NOBody2D arakelov_body(const CurveBodyJob& job) {
    const std::size_t v = validate_arakelov(job);
    const LinearSystemSpec spec{job.graph, job.lambda, true};
    const auto minimal = minimal_element(spec);
    if (!minimal) {
        fail(ErrorCode::EmptySystem, "L+(lambda) is empty");
    }
    const Rational start = (*minimal)[v];
    const HPolyhedron system = build_system(spec);
    const std::size_t n = job.graph.vertex_count();
    Matrix a;
    Vector b0;
    Vector b1;
    for (const auto& c : system.constraints()) {
        a.push_back(c.a);
        b0.push_back(c.b);
        b1.push_back(0);
    }
    a.push_back(unit(n, v));
    b0.push_back(0);
    b1.push_back(1);
    a.push_back(scaled(unit(n, v), -1));
    b0.push_back(0);
    b1.push_back(-1);
    const Vector objective = job.graph.laplacian_matrix()[v];
    const auto result = parametric_value_function(a, b0, b1, objective, Sense::Maximize, start, std::nullopt);
    if (result.hi || result.value.tail_slope() != Rational(0)) {
        fail(ErrorCode::Internal, "Arakelov boundary is not eventually constant");
    }
    std::vector<Breakpoint> pts = result.value.breakpoints();
    for (auto& p : pts) {
        p.value += job.lambda[v];
    }
    NOBody2D body;
    body.kind = BodyKind::Band;
    body.boundary = PiecewiseLinearFunction(pts, Rational(0), Shape::Concave);
    body.recession = {1, 0};
    body.stabilization = pts.back().t;
    if (start > 0) {
        body.warnings.push_back("domain starts at the minimal value " + to_string(start) + " > 0 at " +
                                job.graph.name(v));
    }
    return body;
}

NOBody2D curve_body(const CurveBodyJob& job) {
    if (std::holds_alternative<TropicalFlag>(job.flag)) {
        return tropical_body(job);
    }
    return arakelov_body(job);
}

PiecewiseLinearFunction tropical_boundary_by_projection(const CurveBodyJob& job) {
    const auto [v, end] = validate_tropical(job);
    const auto& flag = tropical_flag(job);
    const std::size_t n = job.graph.vertex_count();
    // Coordinates (phi, t, y).
    const HPolyhedron system = build_system({job.graph, job.lambda, true});
    HPolyhedron lifted(n + 2);
    for (std::size_t i = 0; i < system.size(); ++i) {
        Vector row = system.constraints()[i].a;
        row.push_back(i < n ? Rational(-flag.y1[i]) : Rational(0));
        row.push_back(0);
        lifted.add(std::move(row), system.constraints()[i].b);
    }
    Vector above = zeros(n + 2);
    above[v] = -1;
    above[n + 1] = 1;
    lifted.add(above, 0);
    lifted.add(unit(n + 2, n), 0);
    lifted.add(scaled(unit(n + 2, n), -1), -end);
    const auto plane = enumerate_v_rep(fm_project(lifted, {n, n + 1})).canonical();
    if (plane.is_empty()) {
        fail(ErrorCode::EmptyAtZero, "projection is empty");
    }
    if (plane.rays() != Matrix{{0, 1}}) {
        fail(ErrorCode::Internal, "projected tropical body has unexpected rays");
    }
    return PiecewiseLinearFunction::with_inferred_shape(extreme_per_abscissa(plane.vertices(), false), std::nullopt);
}

PiecewiseLinearFunction arakelov_boundary_by_projection(const CurveBodyJob& job) {
    const std::size_t v = validate_arakelov(job);
    const std::size_t n = job.graph.vertex_count();
    const HPolyhedron enriched = enriched_system({{job.graph, job.lambda, true}, job.graph.name(v)});
    const Matrix map{unit(n + 1, v), unit(n + 1, n)};
    const auto plane = enumerate_v_rep(affine_image(enriched, map, {0, 0})).canonical();
    if (plane.is_empty()) {
        fail(ErrorCode::EmptySystem, "projection is empty");
    }
    if (plane.rays() != Matrix{{1, 0}}) {
        fail(ErrorCode::Internal, "projected Arakelov body has unexpected rays");
    }
    return PiecewiseLinearFunction::with_inferred_shape(extreme_per_abscissa(plane.vertices(), true), Rational(0));
}

VerificationReport cross_verify(const CurveBodyJob& job) {
    VerificationReport report;
    const bool tropical = std::holds_alternative<TropicalFlag>(job.flag);
    report.parametric = curve_body(job).boundary;
    report.projection = tropical ? tropical_boundary_by_projection(job) : arakelov_boundary_by_projection(job);
    const auto& f = report.parametric;
    const auto& g = report.projection;
    report.agree = f.breakpoints() == g.breakpoints() && f.tail_slope() == g.tail_slope();
    if (report.agree) {
        return report;
    }
    std::set<Rational> abscissae;
    for (const auto* h : {&f, &g}) {
        for (const auto& p : h->breakpoints()) {
            abscissae.insert(p.t);
        }
    }
    for (const auto& t : abscissae) {
        if (!f.in_domain(t) || !g.in_domain(t) || f(t) != g(t)) {
            report.first_disagreement = t;
            return report;
        }
    }
    // Same values at every breakpoint: the tails differ past the last one.
    report.first_disagreement = *abscissae.rbegin() + 1;
    return report;
}

std::vector<CurveBodyJob> random_curve_jobs(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    std::vector<CurveBodyJob> jobs;
    while (jobs.size() < count) {
        const auto n = static_cast<std::size_t>(uniform(2, 5));
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) {
            names.push_back("v" + std::to_string(i));
        }
        std::vector<Graph::Edge> edges;
        for (std::size_t i = 1; i < n; ++i) {
            edges.emplace_back(static_cast<std::size_t>(uniform(0, static_cast<long>(i) - 1)), i);
        }
        const long extra = uniform(0, 3);
        for (long k = 0; k < extra; ++k) {
            const auto a = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
            const auto b = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
            if (a != b) {
                edges.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
        Graph g(names, edges);
        Vector lambda(n);
        for (auto& c : lambda) {
            c = uniform(-2, 4);
        }
        const Divisor d(lambda);
        const auto v = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
        if (divisor_degree(d) <= 0 || !minimal_element({g, d, true})) {
            continue;
        }
        if (jobs.size() % 2 == 0) {
            Vector y1(n);
            for (auto& c : y1) {
                c = uniform(0, 2);
            }
            if (is_zero(y1)) {
                y1[v] = 1;
            }
            jobs.push_back({std::move(g), d, TropicalFlag{Divisor(y1), names[v]}});
        } else {
            jobs.push_back({std::move(g), d, ArakelovFlag{names[v]}});
        }
    }
    return jobs;
}

} // namespace dvrbody
