// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <sstream>

#include "dvrbody/error.hpp"
#include "dvrbody/sampling.hpp"
#include "json_support.hpp"

namespace dvrbody::io {

namespace {

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& why) {
        if (!ok && pass) {
            pass = false;
            detail = why;
        }
    }

    [[nodiscard]] json to_json() const { return {{"name", name}, {"pass", pass}, {"detail", detail}}; }
};

// A failure inside a check is a failed check, never an error.
template <typename F>
Check guarded(const std::string& name, F&& body) {
    Check c{name, true, ""};
    try {
        body(c);
    } catch (const Error& e) {
        c.pass = false;
        c.detail = std::string(to_string(e.code())) + ": " + e.what();
    }
    return c;
}

Vector unit(std::size_t n, std::size_t i) {
    Vector e = zeros(n);
    e[i] = 1;
    return e;
}

// Pointwise LP value of the curve body boundary at t.
std::optional<Rational> boundary_by_lp(const CurveBodyJob& job, const Rational& t) {
    if (const auto* flag = std::get_if<TropicalFlag>(&job.flag)) {
        const auto v = job.graph.index_of(flag->vertex);
        const auto lp = solve_lp(build_system({job.graph, job.lambda - t * flag->y1, true}),
                                 unit(job.graph.vertex_count(), v), Sense::Minimize);
        return lp.status == LPStatus::Optimal ? std::optional<Rational>(lp.value) : std::nullopt;
    }
    const auto v = job.graph.index_of(std::get<ArakelovFlag>(job.flag).vertex);
    HPolyhedron p = build_system({job.graph, job.lambda, true});
    p.add(unit(job.graph.vertex_count(), v), t);
    p.add(scaled(unit(job.graph.vertex_count(), v), -1), -t);
    const auto lp = solve_lp(p, job.graph.laplacian_matrix()[v], Sense::Maximize);
    return lp.status == LPStatus::Optimal ? std::optional<Rational>(job.lambda[v] + lp.value) : std::nullopt;
}

std::vector<Check> curve_checks(const CurveBodyJob& job, std::mt19937_64& rng) {
    std::vector<Check> out;
    out.push_back(guarded("parametric_vs_projection", [&](Check& c) {
        const auto r = cross_verify(job);
        c.require(r.agree, "first disagreement at t = " +
                               (r.first_disagreement ? to_string(*r.first_disagreement) : std::string("?")));
    }));
    const NOBody2D body = curve_body(job);
    const auto& f = body.boundary;
    const Rational top = f.hi() ? *f.hi() : f.lo() + 4;
    out.push_back(guarded("pointwise_lp_sampling", [&](Check& c) {
        for (int k = 0; k < 5; ++k) {
            const Rational t = f.lo() + random_rational(rng, 0, 1, 8) * (top - f.lo());
            c.require(boundary_by_lp(job, t) == f(t), "boundary differs from the LP at t = " + to_string(t));
        }
    }));
    out.push_back(guarded("shape", [&](Check& c) {
        if (body.kind == BodyKind::Overgraph) {
            c.require(f.is_convex(), "tropical boundary is not convex");
            c.require(f.breakpoints().front().value >= 0, "tropical boundary is negative");
        } else {
            c.require(f.is_concave(), "Arakelov boundary is not concave");
            for (const auto& s : f.slopes()) {
                c.require(s >= 0, "Arakelov boundary decreases");
            }
            c.require(f.tail_slope() == Rational(0), "Arakelov boundary is not eventually constant");
            c.require(f.breakpoints().back().value <= divisor_degree(job.lambda), "boundary exceeds deg(lambda)");
        }
    }));
    out.push_back(guarded("recession_closure", [&](Check& c) {
        HPolyhedron window = body.to_hpolyhedron();
        window.add({-1, 0}, -(top + 1));
        window.add({0, -1}, -(f.breakpoints().back().value + 5));
        for (const auto& x : sample_points(window, 20, rng)) {
            c.require(body.contains(add(x, body.recession)), "not closed at " + to_string(x));
        }
    }));
    out.push_back(guarded("bounded_projection", [&](Check& c) {
        const Vector across = body.kind == BodyKind::Overgraph ? Vector{1, 0} : Vector{0, 1};
        const auto p = body.to_hpolyhedron();
        for (const auto sense : {Sense::Minimize, Sense::Maximize}) {
            c.require(solve_lp(p, across, sense).status == LPStatus::Optimal, "projection is unbounded");
        }
    }));
    return out;
}

std::vector<Check> toric_checks(const ToricJob& job, std::mt19937_64& rng) {
    std::vector<Check> out;
    const auto big = build_model_polyhedron(job.model);
    const auto d = job.model.dimension;
    out.push_back(guarded("vertex_map_vs_projection", [&](Check& c) {
        const auto v = affine_image(enumerate_v_rep(big), flag_matrix(job.flag), flag_offset(job.flag)).canonical();
        c.require(v == toric_body_by_projection(job.model, job.flag), "the two images differ");
    }));
    const auto body = toric_body(job.model, job.flag);
    out.push_back(guarded("projection_identity", [&](Check& c) {
        std::vector<std::size_t> keep(d);
        for (std::size_t i = 0; i < d; ++i) {
            keep[i] = i;
        }
        c.require(enumerate_v_rep(fm_project(big, keep)).canonical() ==
                      enumerate_v_rep(build_generic_polytope(job.model)).canonical(),
                  "eliminating h does not give the generic polytope");
    }));
    out.push_back(guarded("overgraph_identity", [&](Check& c) {
        const auto pd = build_generic_polytope(job.model);
        for (int k = 0; k < 200; ++k) {
            Vector x(d + 1);
            for (auto& coord : x) {
                coord = random_rational(rng, -2, 4, 4);
            }
            const Vector m(x.begin(), x.end() - 1);
            const bool expected = pd.contains(m) && x.back() >= std::max(psi_value(job.model, m), Rational(0));
            c.require(big.contains(x) == expected, "mismatch at " + to_string(x));
        }
    }));
    out.push_back(guarded("inverse_map_membership", [&](Check& c) {
        for (int k = 0; k < 200; ++k) {
            Vector y(d + 1);
            for (auto& coord : y) {
                coord = random_rational(rng, -2, 5, 4);
            }
            const auto pre = solve_square(flag_matrix(job.flag), subtract(y, flag_offset(job.flag)));
            c.require(pre && body.contains(y) == big.contains(*pre), "mismatch at " + to_string(y));
        }
    }));
    out.push_back(guarded("nonnegative_vertices", [&](Check& c) {
        for (const auto& v : body.vertices()) {
            for (const auto& x : v) {
                c.require(x >= 0, "negative valuation at vertex " + to_string(v));
            }
        }
    }));
    if (d <= 2) {
        out.push_back(guarded("monomial_valuations", [&](Check& c) {
            HPolyhedron box = big;
            box.add(scaled(unit(d + 1, d), -1), -4);
            for (const auto& x : lattice_points(box)) {
                const Vector m(x.begin(), x.end() - 1);
                const auto val = monomial_valuation(job.model, job.flag, m, x.back());
                c.require(val && body.contains(*val), "monomial " + to_string(x) + " not in the body");
            }
        }));
    }
    return out;
}

std::vector<Check> linsys_checks(const LinsysJob& job, std::mt19937_64& rng) {
    std::vector<Check> out;
    LinearSystemSpec plus = job.spec;
    plus.effective = true;
    const auto minimal = minimal_element(plus);
    if (!minimal) {
        out.push_back(guarded("empty_certificate", [&](Check& c) {
            const auto p = build_system(plus);
            const auto lp = solve_lp(p, zeros(p.dimension()), Sense::Minimize);
            c.require(lp.status == LPStatus::Infeasible && lp.verify(p, zeros(p.dimension()), Sense::Minimize),
                      "no Farkas certificate");
        }));
        return out;
    }
    const auto samples = sample_members(plus, 20, rng);
    out.push_back(guarded("minimal_element", [&](Check& c) {
        c.require(member(plus, *minimal), "minimal element is not a member");
        for (const auto& s : samples) {
            c.require(member(plus, s), "sample is not a member");
            for (std::size_t v = 0; v < s.size(); ++v) {
                c.require((*minimal)[v] <= s[v], "minimal element exceeds a member");
            }
        }
    }));
    out.push_back(guarded("semimodule", [&](Check& c) {
        for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
            c.require(member(plus, pointwise_min(samples[i], samples[i + 1])), "pointwise minimum left the system");
        }
    }));
    out.push_back(guarded("shift_contract", [&](Check& c) {
        const auto shift = zariski_shift(plus);
        const LinearSystemSpec shifted{plus.graph, shift.lambda, true};
        const auto m = minimal_element(shifted);
        c.require(m && is_zero(m->values()), "shifted minimal element is not 0");
        for (const auto& s : samples) {
            c.require(member(shifted, s - shift.minimal), "shift does not translate members");
        }
    }));
    return out;
}

std::vector<Check> rank_checks(const RankJob& job) {
    std::vector<Check> out;
    out.push_back(guarded("dhar_vs_integer_search", [&](Check& c) {
        const bool dhar = has_nonnegative_rank(job.graph, job.lambda);
        const auto search = has_nonnegative_rank_by_search(job.graph, job.lambda);
        c.require(search.has_value(), "search box too large");
        c.require(!search || *search == dhar, "Dhar and the integer search disagree");
    }));
    return out;
}

std::vector<Check> checks_for(const JobFile& job, std::mt19937_64& rng) {
    switch (job.kind) {
    case JobKind::Linsys: return linsys_checks(std::get<LinsysJob>(job.payload), rng);
    case JobKind::Rank: return rank_checks(std::get<RankJob>(job.payload));
    case JobKind::CurveBody: return curve_checks(std::get<CurveBodyJob>(job.payload), rng);
    case JobKind::ToricBody: return toric_checks(std::get<ToricJob>(job.payload), rng);
    case JobKind::Verify: break;
    }
    return {};
}

} // namespace

json verify_checks(const JobFile& job, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto& v = std::get<VerifyJob>(job.payload);
    json out = json::array();
    if (const auto* inner = std::get_if<std::shared_ptr<const JobFile>>(&v.target)) {
        try {
            for (const auto& c : checks_for(**inner, rng)) {
                out.push_back(c.to_json());
            }
        } catch (const Error& e) {
            out.push_back(Check{"run", false, std::string(to_string(e.code())) + ": " + e.what()}.to_json());
        }
        return out;
    }
    // Random batch: one aggregated line per check name, in first-seen order.
    const auto& batch = std::get<RandomCurveJobs>(v.target);
    std::vector<Check> merged;
    const auto jobs = random_curve_jobs(batch.count, batch.seed);
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        std::vector<Check> got;
        try {
            got = curve_checks(jobs[i], rng);
        } catch (const Error& e) {
            got.push_back(Check{"run", false, std::string(to_string(e.code())) + ": " + e.what()});
        }
        for (auto& c : got) {
            auto it = std::find_if(merged.begin(), merged.end(), [&](const Check& m) { return m.name == c.name; });
            if (it == merged.end()) {
                merged.push_back({c.name, true, ""});
                it = merged.end() - 1;
            }
            it->require(c.pass, "job " + std::to_string(i) + ": " + c.detail);
        }
    }
    for (auto& c : merged) {
        if (c.pass) {
            c.detail = std::to_string(jobs.size()) + " jobs";
        }
        out.push_back(c.to_json());
    }
    return out;
}

} // namespace dvrbody::io
