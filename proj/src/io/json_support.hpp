// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>
#include <string>

#include "dvrbody/job.hpp"

namespace dvrbody::io {

using json = nlohmann::json;

// Integers that fit in 64 bits become JSON numbers, everything else a "p/q" string.
[[nodiscard]] json rational_json(const Rational& q);
[[nodiscard]] json vector_json(const Vector& v);
[[nodiscard]] json matrix_json(const Matrix& m);

// Name -> value maps in vertex order (keys are sorted by the JSON object).
[[nodiscard]] json divisor_json(const Graph& g, const Divisor& d);
[[nodiscard]] json function_json(const Graph& g, const GraphFunction& f);
[[nodiscard]] json graph_json(const Graph& g);
[[nodiscard]] json job_json(const JobFile& job);
[[nodiscard]] json body_json(const NOBody2D& body);
[[nodiscard]] json vpolyhedron_json(const VPolyhedron& v);

[[nodiscard]] JobFile job_from_json(const json& j, const std::string& path);

// Checks for a verify job; every check is {"name", "pass", "detail"}.
[[nodiscard]] json verify_checks(const JobFile& job, std::uint64_t seed);

} // namespace dvrbody::io
