// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "dvrbody/error.hpp"
#include "dvrbody/job.hpp"
#include "dvrbody/svg.hpp"

using namespace dvrbody;
using json = nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string job_text(const std::string& name) { return slurp(std::filesystem::path(DVRBODY_JOBS_DIR) / (name + ".json")); }

ErrorCode parse_code(const std::string& text) {
    try {
        (void)parse_job(text);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

json result_of(const std::string& name, const RunOptions& options = {}) {
    return json::parse(run_job_text(job_text(name), options).result);
}

json breakpoints(std::initializer_list<std::pair<json, json>> pts) {
    json out = json::array();
    for (const auto& [t, v] : pts) {
        out.push_back({t, v});
    }
    return out;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(DVRBODY_CLI) + " " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

bool well_formed_svg(const std::string& svg) {
    // Tags balance and the document is a single svg element.
    int depth = 0;
    for (std::size_t i = svg.find("<svg"); i != std::string::npos && i < svg.size(); ++i) {
        if (svg[i] != '<') {
            continue;
        }
        const auto close = svg.find('>', i);
        if (close == std::string::npos) {
            return false;
        }
        if (svg[i + 1] == '/') {
            --depth;
        } else if (svg[close - 1] != '/') {
            ++depth;
        }
        i = close;
    }
    return depth == 0 && svg.rfind("</svg>") != std::string::npos;
}

} // namespace

TEST_CASE("parse_job diagnostics") {
    CHECK(parse_code("") == ErrorCode::SchemaError);
    CHECK(parse_code("{}") == ErrorCode::SchemaError);
    CHECK(parse_code(R"({"kind": "bogus", "payload": {}})") == ErrorCode::SchemaError);
    const std::string base = R"({"kind": "rank", "payload": {"graph": {"vertices": ["a", "b"], "edges": [["a", "b"]]}, "lambda": {"a": LAMBDA}}})";
    auto with = [&](const std::string& lambda) {
        std::string s = base;
        return s.replace(s.find("LAMBDA"), 6, lambda);
    };
    CHECK(parse_code(with("\"1/0\"")) == ErrorCode::BadRational);
    CHECK(parse_code(with("0.5")) == ErrorCode::BadRational);
    CHECK(parse_code(with("\"x\"")) == ErrorCode::BadRational);
    CHECK(parse_code(with("[1]")) == ErrorCode::SchemaError);
    CHECK_NOTHROW((void)parse_job(with("\"-3/6\"")));
    CHECK(parse_code(R"({"kind": "rank", "payload": {"graph": {"vertices": ["a", "b"], "edges": []}, "lambda": {}}})") ==
          ErrorCode::Disconnected);
    CHECK(parse_code(R"({"kind": "rank", "payload": {"graph": {"vertices": ["a"], "edges": []}, "lambda": {"z": 1}}})") ==
          ErrorCode::UnknownVertex);
    try {
        (void)parse_job(R"({"kind": "rank", "payload": {"graph": {"vertices": ["a"], "edges": []}, "lambda": {}, "extra": 1}})");
        FAIL("expected a schema error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("$.payload.extra") != std::string::npos);
    }
    CHECK_NOTHROW((void)parse_job(job_text("quartic-tropical")));
}

TEST_CASE("every shipped job round-trips and runs deterministically") {
    for (const auto& entry : std::filesystem::directory_iterator(DVRBODY_JOBS_DIR)) {
        CAPTURE(entry.path().string());
        const std::string text = slurp(entry.path());
        const auto job = parse_job(text);
        const std::string canonical = serialize_job(job);
        CHECK(serialize_job(parse_job(canonical)) == canonical);
        const auto first = run_job(job);
        const auto second = run_job(parse_job(canonical));
        CHECK(first.result == second.result);
        // The echoed job re-parses to the same job.
        const auto echoed = json::parse(first.result).at("job").dump();
        CHECK(serialize_job(parse_job(echoed)) == canonical);
    }
}

TEST_CASE("run_job results for the quartic, line and rank jobs") {
    const auto trop = result_of("quartic-tropical");
    CHECK(trop.at("status") == "ok");
    CHECK(trop.at("result").at("breakpoints") == breakpoints({{0, 0}, {2, 0}, {4, "1/2"}}));
    CHECK(trop.at("result").at("recession") == json::array({0, 1}));

    const auto ara = result_of("quartic-arakelov");
    CHECK(ara.at("result").at("breakpoints") == breakpoints({{0, 2}, {"1/2", 4}}));
    CHECK(ara.at("result").at("stabilization") == "1/2");
    CHECK(ara.at("result").at("constant_value") == 4);
    CHECK(ara.at("result").at("recession") == json::array({1, 0}));

    const auto rank = result_of("rank-negative");
    CHECK(rank.at("result").at("nonnegative_rank") == false);

    const auto toric = result_of("toric-line");
    CHECK(toric.at("result").at("body").at("vertices") == json::array({{0, 0}, {1, 1}}));
    CHECK(toric.at("result").at("body").at("rays") == json::array({{0, 1}}));
    const auto ms = toric.at("result").at("monomials");
    CHECK(ms[0].at("valuation") == json::array({1, 1}));
    CHECK(ms[1].at("valuation") == json::array({0, 0}));
    CHECK(ms[2].at("status") == "NotASection");
}

TEST_CASE("exit statuses") {
    CHECK(run_job_text(job_text("quartic-tropical")).status == ExitStatus::Ok);
    CHECK(run_job_text(job_text("linsys-min-empty")).status == ExitStatus::Empty);
    CHECK(run_job_text("{").status == ExitStatus::Error);
    const auto bad = run_job_text(R"({"kind": "rank", "payload": {"graph": {"vertices": ["a"], "edges": []}, "lambda": {"a": "1/2"}}})");
    CHECK(bad.status == ExitStatus::Error);
    CHECK(json::parse(bad.result).at("error").at("code") == "NonIntegerDivisor");

    const std::string jobs = DVRBODY_JOBS_DIR;
    CHECK(run_cli("curve-body tropical --input " + jobs + "/quartic-tropical.json") == 0);
    CHECK(run_cli("curve-body arakelov --input " + jobs + "/quartic-tropical.json") == 1);
    CHECK(run_cli("linsys min --input " + jobs + "/linsys-min-empty.json") == 2);
    CHECK(run_cli("rank --input " + jobs + "/rank-negative.json") == 0);
    CHECK(run_cli("rank --input /nonexistent.json") == 1);
    CHECK(run_cli("frobnicate") == 1);
    CHECK(run_cli("verify --seed 5 --input " + jobs + "/verify-toric-line.json") == 0);
}

TEST_CASE("cli writes result and svg files") {
    const auto dir = std::filesystem::temp_directory_path() / "dvrbody_cli_test";
    std::filesystem::create_directories(dir);
    const std::string jobs = DVRBODY_JOBS_DIR;
    const auto out = dir / "result.json";
    const auto svg = dir / "body.svg";
    REQUIRE(run_cli("curve-body tropical --input " + jobs + "/quartic-tropical.json --output " + out.string() +
                    " --svg " + svg.string() + " --window -1,5,-1,4") == 0);
    const auto result = json::parse(slurp(out));
    CHECK(result.at("result").at("breakpoints") == breakpoints({{0, 0}, {2, 0}, {4, "1/2"}}));
    CHECK(result.find("timing") == result.end());
    const std::string text = slurp(svg);
    CHECK(well_formed_svg(text));
    CHECK(text.find("(4, 1/2)") != std::string::npos);
    CHECK(text.find("(2, 0)") != std::string::npos);
    CHECK(run_cli("curve-body tropical --input " + jobs + "/quartic-tropical.json --output " + out.string() +
                  " --svg " + svg.string() + " --window 1,1,0,2") == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("svg rendering") {
    const Window w{-1, 5, -1, 4};
    const auto trop = render_svg(HPolyhedron(2, {{{1, 0}, 0}, {{-1, 0}, -4}, {{0, 1}, 0}, {{-1, 4}, -2}}), w);
    CHECK(well_formed_svg(trop));
    CHECK(trop.find("class=\"truncated\"") != std::string::npos);
    CHECK(trop.find("(2, 0)") != std::string::npos);
    CHECK(trop.find("(4, 1/2)") != std::string::npos);
    // The top edge is the only one cut by the window.
    std::size_t strips = 0;
    for (auto at = trop.find("class=\"truncated\""); at != std::string::npos; at = trop.find("class=\"truncated\"", at + 1)) {
        ++strips;
    }
    CHECK(strips == 1);

    const auto empty = render_svg(HPolyhedron::empty(2), w);
    CHECK(well_formed_svg(empty));
    CHECK(empty.find("<polygon") == std::string::npos);
    CHECK(empty.find("class=\"axis\"") != std::string::npos);

    CHECK_THROWS_AS((void)render_svg(HPolyhedron::empty(2), Window{0, 0, 0, 1}), Error);
    CHECK_THROWS_AS((void)render_svg(HPolyhedron(3), w), Error);

    // Coordinates follow the 20-significant-digit rule: x = 48 + (1/3 + 1) / 6 * 480.
    const auto third = render_svg(HPolyhedron(2, {{{1, 0}, Rational(1, 3)}, {{-1, 0}, -1}, {{0, 1}, 0}, {{0, -1}, -1}}), w);
    CHECK(third.find(to_decimal(Rational(48) + Rational(4, 3) / 6 * 480)) != std::string::npos);
}

TEST_CASE("verify jobs") {
    for (const auto* name : {"verify-quartic-tropical", "verify-quartic-arakelov", "verify-toric-line",
                             "verify-toric-square", "verify-linsys-quartic", "verify-rank-quartic"}) {
        CAPTURE(name);
        const auto r = result_of(name, {false, std::nullopt, 3});
        CHECK(r.at("result").at("all_pass") == true);
        CHECK(r.at("result").at("checks").size() >= 1);
    }
    const auto random = result_of("verify-random-curves");
    CHECK(random.at("result").at("all_pass") == true);
    CHECK(random.at("result").at("checks")[0].at("detail") == "50 jobs");
}
