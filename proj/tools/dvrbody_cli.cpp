// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>
#include <chrono>
#include <json.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dvrbody/error.hpp"
#include "dvrbody/job.hpp"

namespace {

using dvrbody::ErrorCode;
using dvrbody::JobKind;

struct Settings {
    std::string input;
    std::string output;
    std::string svg;
    std::string window;
    std::optional<std::uint64_t> seed;
};

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path.empty() || path == "-") {
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) {
        dvrbody::fail(ErrorCode::InvalidArgument, "cannot read " + path);
    }
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        dvrbody::fail(ErrorCode::InvalidArgument, "cannot write " + path);
    }
    out << text;
}

// The subcommand names the kind (and variant) the job must have.
std::optional<std::string> mismatch(const dvrbody::JobFile& job, JobKind kind, const std::string& variant) {
    if (job.kind != kind) {
        return "job kind is " + std::string(dvrbody::to_string(job.kind)) + ", subcommand expects " +
               std::string(dvrbody::to_string(kind));
    }
    if (kind == JobKind::Linsys && std::string(dvrbody::to_string(std::get<dvrbody::LinsysJob>(job.payload).operation)) != variant) {
        return "job operation differs from the subcommand " + variant;
    }
    if (kind == JobKind::CurveBody) {
        const bool tropical = std::holds_alternative<dvrbody::TropicalFlag>(std::get<dvrbody::CurveBodyJob>(job.payload).flag);
        if ((variant == "tropical") != tropical) {
            return "job flag differs from the subcommand " + variant;
        }
    }
    return std::nullopt;
}

int run(const Settings& s, JobKind kind, const std::string& variant) {
    const auto start = std::chrono::steady_clock::now();
    dvrbody::RunOptions options;
    options.render = !s.svg.empty();
    options.seed = s.seed;
    dvrbody::RunOutcome outcome;
    try {
        if (!s.window.empty()) {
            options.window = dvrbody::parse_window(s.window);
        }
        const std::string text = read_input(s.input);
        const auto job = dvrbody::parse_job(text);
        if (const auto why = mismatch(job, kind, variant)) {
            dvrbody::fail(ErrorCode::SchemaError, "$.kind: " + *why);
        }
        outcome = dvrbody::run_job(job, options);
    } catch (const dvrbody::Error& e) {
        const nlohmann::json out = {
            {"status", "error"}, {"error", {{"code", std::string(dvrbody::to_string(e.code()))}, {"message", e.what()}}}};
        outcome.result = out.dump(2) + "\n";
        outcome.status = dvrbody::ExitStatus::Error;
    }
    try {
        write_output(s.output, outcome.result);
        if (outcome.svg) {
            write_output(s.svg, *outcome.svg);
        }
    } catch (const dvrbody::Error& e) {
        std::cerr << "dvrbody: " << e.what() << '\n';
        return static_cast<int>(dvrbody::ExitStatus::Error);
    }
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "dvrbody: " << dvrbody::to_string(kind) << (variant.empty() ? "" : " " + variant) << " finished in "
              << elapsed << " s\n";
    return static_cast<int>(outcome.status);
}

void common(CLI::App* app, Settings& s) {
    app->add_option("--input", s.input, "Job file (default: standard input)");
    app->add_option("--output", s.output, "Result file (default: standard output)");
    app->add_option("--svg", s.svg, "Write an SVG rendering of a planar body");
    app->add_option("--window", s.window, "Rendering window x0,x1,y0,y1 (exact rationals)");
    app->add_option("--seed", s.seed, "Seed for verify sampling");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact linear systems on graphs and Newton-Okounkov bodies over a DVR"};
    app.require_subcommand(1);
    Settings s;
    JobKind kind = JobKind::Linsys;
    std::string variant;

    auto* linsys = app.add_subcommand("linsys", "Linear systems L(lambda) and L+(lambda)");
    linsys->require_subcommand(1);
    for (const char* op : {"min", "member", "shift"}) {
        auto* sub = linsys->add_subcommand(op, std::string("Operation ") + op);
        common(sub, s);
        sub->callback([&, op] {
            kind = JobKind::Linsys;
            variant = op;
        });
    }
    auto* rank = app.add_subcommand("rank", "Non-negative rank by Dhar's burning algorithm");
    common(rank, s);
    rank->callback([&] { kind = JobKind::Rank; });

    auto* curve = app.add_subcommand("curve-body", "Newton-Okounkov body of a semistable curve");
    curve->require_subcommand(1);
    for (const char* flag : {"tropical", "arakelov"}) {
        auto* sub = curve->add_subcommand(flag, std::string("Flag type ") + flag);
        common(sub, s);
        sub->callback([&, flag] {
            kind = JobKind::CurveBody;
            variant = flag;
        });
    }
    auto* toric = app.add_subcommand("toric-body", "Newton-Okounkov body of a toric scheme");
    common(toric, s);
    toric->callback([&] { kind = JobKind::ToricBody; });

    auto* verify = app.add_subcommand("verify", "Run the independent oracles against a job");
    common(verify, s);
    verify->callback([&] { kind = JobKind::Verify; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(dvrbody::ExitStatus::Error);
    }
    return run(s, kind, variant);
}
