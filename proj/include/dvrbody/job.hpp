// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dvrbody/curve_body.hpp"
#include "dvrbody/linear_system.hpp"
#include "dvrbody/toric.hpp"

namespace dvrbody {

enum class JobKind { Linsys, Rank, CurveBody, ToricBody, Verify };

[[nodiscard]] std::string_view to_string(JobKind kind);

enum class LinsysOperation { Min, Member, Shift };

[[nodiscard]] std::string_view to_string(LinsysOperation op);

struct LinsysJob {
    LinsysOperation operation = LinsysOperation::Min;
    LinearSystemSpec spec;
    std::optional<GraphFunction> phi;  // member only
};

struct RankJob {
    Graph graph;
    Divisor lambda;
};

struct MonomialQuery {
    Vector m;
    Rational h;
};

struct ToricJob {
    ToricModel model;
    ToricFlag flag;
    std::vector<MonomialQuery> monomials;
};

struct RandomCurveJobs {
    std::size_t count = 0;
    std::uint64_t seed = 0;
};

struct JobFile;

// Either another job to check, or a seeded batch of random curve jobs.
struct VerifyJob {
    std::variant<std::shared_ptr<const JobFile>, RandomCurveJobs> target;
};

// Rendering window x0, x1, y0, y1.
using Window = std::array<Rational, 4>;

struct JobOptions {
    std::optional<Window> window;
};

struct JobFile {
    JobKind kind = JobKind::Linsys;
    std::variant<LinsysJob, RankJob, CurveBodyJob, ToricJob, VerifyJob> payload;
    JobOptions options;
};

// Throws SchemaError naming the offending field, BadRational for numbers that
// are not integers or "p/q" strings, and the graph errors (Disconnected,
// UnknownVertex) for invalid graphs.
[[nodiscard]] JobFile parse_job(std::string_view text);

// Canonical JSON; parse_job(serialize_job(j)) reproduces j.
[[nodiscard]] std::string serialize_job(const JobFile& job);

[[nodiscard]] Window parse_window(std::string_view text);

// Exit status of a run: 0 success, 1 error, 2 empty system.
enum class ExitStatus { Ok = 0, Error = 1, Empty = 2 };

struct RunOutcome {
    ExitStatus status = ExitStatus::Ok;
    std::string result;  // canonical result JSON, newline-terminated
    std::optional<std::string> svg;
};

struct RunOptions {
    bool render = false;
    std::optional<Window> window;   // overrides the job's window
    std::optional<std::uint64_t> seed;  // verify sampling
};

// Never throws for module errors: they become error results.
[[nodiscard]] RunOutcome run_job(const JobFile& job, const RunOptions& options = {});

// Parses and runs; schema errors also become error results.
[[nodiscard]] RunOutcome run_job_text(std::string_view text, const RunOptions& options = {});

} // namespace dvrbody
