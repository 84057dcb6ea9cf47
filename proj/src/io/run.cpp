// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dvrbody/error.hpp"
#include "dvrbody/svg.hpp"
#include "json_support.hpp"

namespace dvrbody {

namespace io {

json body_json(const NOBody2D& body) {
    const auto& f = body.boundary;
    json points = json::array();
    for (const auto& p : f.breakpoints()) {
        points.push_back({rational_json(p.t), rational_json(p.value)});
    }
    json out = {{"kind", body.kind == BodyKind::Overgraph ? "overgraph" : "band"},
                {"breakpoints", points},
                {"tail_slope", f.tail_slope() ? rational_json(*f.tail_slope()) : json()},
                {"domain", {rational_json(f.lo()), f.hi() ? rational_json(*f.hi()) : json()}},
                {"shape", std::string(to_string(f.shape()))},
                {"recession", vector_json(body.recession)}};
    if (body.stabilization) {
        out["stabilization"] = rational_json(*body.stabilization);
        out["constant_value"] = rational_json(f.breakpoints().back().value);
    }
    return out;
}

json vpolyhedron_json(const VPolyhedron& v) {
    return {{"vertices", matrix_json(v.vertices())}, {"rays", matrix_json(v.rays())}};
}

} // namespace io

namespace {

using io::json;

bool empty_class(ErrorCode code) {
    return code == ErrorCode::EmptySystem || code == ErrorCode::EmptyAtZero ||
           code == ErrorCode::InfeasibleEverywhere;
}

struct Computed {
    json result = json::object();
    std::vector<std::string> warnings;
    ExitStatus status = ExitStatus::Ok;
    std::optional<std::string> svg;
};

Computed run_linsys(const LinsysJob& job) {
    Computed c;
    const auto& g = job.spec.graph;
    switch (job.operation) {
    case LinsysOperation::Min: {
        const auto m = minimal_element(job.spec);
        if (!m) {
            c.status = ExitStatus::Empty;
            c.result["minimal_element"] = nullptr;
            c.warnings.push_back("L+(lambda) is empty");
        } else {
            c.result["minimal_element"] = io::function_json(g, *m);
        }
        break;
    }
    case LinsysOperation::Member:
        c.result["member"] = member(job.spec, *job.phi);
        break;
    case LinsysOperation::Shift: {
        const auto s = zariski_shift(job.spec);
        c.result["lambda"] = io::divisor_json(g, s.lambda);
        c.result["minimal"] = io::function_json(g, s.minimal);
        break;
    }
    }
    return c;
}

Computed run_rank(const RankJob& job) {
    Computed c;
    c.result["nonnegative_rank"] = has_nonnegative_rank(job.graph, job.lambda);
    c.result["reduced_at"] = job.graph.name(0);
    c.result["reduced_divisor"] = io::divisor_json(job.graph, reduced_divisor(job.graph, job.lambda, 0));
    return c;
}

Computed run_curve(const CurveBodyJob& job, const RunOptions& options, const JobOptions& job_options) {
    Computed c;
    const auto body = curve_body(job);
    c.result = io::body_json(body);
    c.result["flag"] = std::holds_alternative<TropicalFlag>(job.flag) ? "tropical" : "arakelov";
    c.warnings = body.warnings;
    if (options.render) {
        const auto window = options.window ? options.window
                                           : job_options.window ? job_options.window
                                                                : std::optional<Window>(default_window(
                                                                      enumerate_v_rep(body.to_hpolyhedron())));
        c.svg = render_svg(body, *window);
    }
    return c;
}

Computed run_toric(const ToricJob& job, const RunOptions& options, const JobOptions& job_options) {
    Computed c;
    const auto pd = build_generic_polytope(job.model);
    const auto body = toric_body(job.model, job.flag);
    c.result["generic_polytope"] = io::vpolyhedron_json(enumerate_v_rep(pd).canonical());
    c.result["model_polyhedron"] = io::vpolyhedron_json(enumerate_v_rep(build_model_polyhedron(job.model)).canonical());
    c.result["body"] = io::vpolyhedron_json(body);
    const bool full = is_full_dimensional(pd);
    c.result["full_dimensional"] = full;
    if (!full) {
        c.warnings.push_back("generic polytope is not full-dimensional");
    }
    json ms = json::array();
    for (const auto& q : job.monomials) {
        const auto val = monomial_valuation(job.model, job.flag, q.m, q.h);
        ms.push_back({{"m", io::vector_json(q.m)},
                      {"h", io::rational_json(q.h)},
                      {"valuation", val ? io::vector_json(*val) : json()},
                      {"status", val ? "section" : "NotASection"}});
    }
    if (!job.monomials.empty()) {
        c.result["monomials"] = ms;
    }
    if (options.render) {
        if (body.dimension() == 2) {
            const auto window = options.window ? options.window
                                               : job_options.window ? job_options.window
                                                                    : std::optional<Window>(default_window(body));
            c.svg = render_svg(body, *window);
        } else {
            c.warnings.push_back("only two-dimensional bodies are rendered");
        }
    }
    return c;
}

Computed run_verify(const JobFile& job, const RunOptions& options) {
    Computed c;
    const json checks = io::verify_checks(job, options.seed.value_or(0));
    bool all = true;
    for (const auto& check : checks) {
        all = all && check.at("pass").get<bool>();
    }
    c.result = {{"checks", checks}, {"all_pass", all}};
    if (!all) {
        c.status = ExitStatus::Error;
    }
    return c;
}

std::string finish(json out) { return out.dump(2) + "\n"; }

} // namespace

RunOutcome run_job(const JobFile& job, const RunOptions& options) {
    json out = {{"job", io::job_json(job)}};
    RunOutcome outcome;
    try {
        Computed c;
        switch (job.kind) {
        case JobKind::Linsys: c = run_linsys(std::get<LinsysJob>(job.payload)); break;
        case JobKind::Rank: c = run_rank(std::get<RankJob>(job.payload)); break;
        case JobKind::CurveBody: c = run_curve(std::get<CurveBodyJob>(job.payload), options, job.options); break;
        case JobKind::ToricBody: c = run_toric(std::get<ToricJob>(job.payload), options, job.options); break;
        case JobKind::Verify: c = run_verify(job, options); break;
        }
        out["status"] = c.status == ExitStatus::Empty ? "empty" : c.status == ExitStatus::Error ? "failed" : "ok";
        out["result"] = c.result;
        out["warnings"] = c.warnings;
        outcome.status = c.status;
        outcome.svg = c.svg;
    } catch (const Error& e) {
        outcome.status = empty_class(e.code()) ? ExitStatus::Empty : ExitStatus::Error;
        out["status"] = outcome.status == ExitStatus::Empty ? "empty" : "error";
        out["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
        if (options.render && outcome.status == ExitStatus::Empty &&
            (job.kind == JobKind::CurveBody || job.kind == JobKind::ToricBody)) {
            outcome.svg = render_svg(HPolyhedron::empty(2), options.window ? *options.window
                                                             : job.options.window ? *job.options.window
                                                                                  : Window{-1, 1, -1, 1});
        }
    }
    outcome.result = finish(std::move(out));
    return outcome;
}

RunOutcome run_job_text(std::string_view text, const RunOptions& options) {
    std::optional<JobFile> job;
    try {
        job = parse_job(text);
    } catch (const Error& e) {
        RunOutcome outcome;
        outcome.status = ExitStatus::Error;
        outcome.result = finish({{"status", "error"},
                                 {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}});
        return outcome;
    }
    return run_job(*job, options);
}

} // namespace dvrbody
