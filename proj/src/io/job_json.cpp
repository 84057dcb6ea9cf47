// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#include <limits>
#include <set>

#include "dvrbody/error.hpp"
#include "json_support.hpp"

namespace dvrbody {

std::string_view to_string(JobKind kind) {
    switch (kind) {
    case JobKind::Linsys: return "linsys";
    case JobKind::Rank: return "rank";
    case JobKind::CurveBody: return "curve-body";
    case JobKind::ToricBody: return "toric-body";
    case JobKind::Verify: return "verify";
    }
    return "?";
}

std::string_view to_string(LinsysOperation op) {
    switch (op) {
    case LinsysOperation::Min: return "min";
    case LinsysOperation::Member: return "member";
    case LinsysOperation::Shift: return "shift";
    }
    return "?";
}

namespace io {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
    fail(ErrorCode::SchemaError, path + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) {
        schema(path, "expected an object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        schema(path + "." + key, "missing");
    }
    return *it;
}

const json* optional_field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) {
        schema(path, "expected an object");
    }
    const auto it = j.find(key);
    return it == j.end() || it->is_null() ? nullptr : &*it;
}

void only_keys(const json& j, std::set<std::string> allowed, const std::string& path) {
    for (const auto& [key, value] : j.items()) {
        if (allowed.count(key) == 0) {
            schema(path + "." + key, "unknown field");
        }
    }
}

std::string text(const json& j, const std::string& path) {
    if (!j.is_string()) {
        schema(path, "expected a string");
    }
    return j.get<std::string>();
}

Rational rational(const json& j, const std::string& path) {
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Rational(Integer(std::to_string(j.get<std::uint64_t>())))
                                      : Rational(Integer(std::to_string(j.get<std::int64_t>())));
    }
    if (j.is_number_float()) {
        fail(ErrorCode::BadRational, path + ": floating-point numbers are not exact; write \"p/q\"");
    }
    if (!j.is_string()) {
        schema(path, "expected an integer or a \"p/q\" string");
    }
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        fail(ErrorCode::BadRational, path + ": " + e.what());
    }
}

Vector vector(const json& j, const std::string& path) {
    if (!j.is_array()) {
        schema(path, "expected an array");
    }
    Vector v;
    for (std::size_t i = 0; i < j.size(); ++i) {
        v.push_back(rational(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return v;
}

Graph graph(const json& j, const std::string& path) {
    only_keys(j, {"vertices", "edges"}, path);
    const auto& vs = field(j, "vertices", path);
    const auto& es = field(j, "edges", path);
    if (!vs.is_array() || vs.empty()) {
        schema(path + ".vertices", "expected a nonempty array of names");
    }
    if (!es.is_array()) {
        schema(path + ".edges", "expected an array of [name, name] pairs");
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        names.push_back(text(vs[i], path + ".vertices[" + std::to_string(i) + "]"));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < es.size(); ++i) {
        const std::string at = path + ".edges[" + std::to_string(i) + "]";
        if (!es[i].is_array() || es[i].size() != 2) {
            schema(at, "expected a [name, name] pair");
        }
        edges.emplace_back(text(es[i][0], at + "[0]"), text(es[i][1], at + "[1]"));
    }
    return Graph(std::move(names), edges);
}

std::map<std::string, Rational> named_values(const Graph& g, const json& j, const std::string& path) {
    if (!j.is_object()) {
        schema(path, "expected an object mapping vertex names to numbers");
    }
    std::map<std::string, Rational> out;
    for (const auto& [key, value] : j.items()) {
        if (!g.has_vertex(key)) {
            fail(ErrorCode::UnknownVertex, path + "." + key + ": unknown vertex");
        }
        out[key] = rational(value, path + "." + key);
    }
    return out;
}

Divisor divisor(const Graph& g, const json& j, const std::string& path) {
    return make_divisor(g, named_values(g, j, path));
}

GraphFunction function(const Graph& g, const json& j, const std::string& path) {
    const auto values = named_values(g, j, path);
    for (const auto& name : g.vertices()) {
        if (values.count(name) == 0) {
            schema(path + "." + name, "missing value");
        }
    }
    return make_function(g, values);
}

std::string vertex(const Graph& g, const json& j, const std::string& path) {
    const std::string name = text(j, path);
    if (!g.has_vertex(name)) {
        fail(ErrorCode::UnknownVertex, path + ": unknown vertex \"" + name + "\"");
    }
    return name;
}

LinsysJob linsys(const json& j, const std::string& path) {
    only_keys(j, {"operation", "graph", "lambda", "effective", "phi"}, path);
    LinsysOperation operation = LinsysOperation::Min;
    const std::string op = text(field(j, "operation", path), path + ".operation");
    if (op == "min") {
        operation = LinsysOperation::Min;
    } else if (op == "member") {
        operation = LinsysOperation::Member;
    } else if (op == "shift") {
        operation = LinsysOperation::Shift;
    } else {
        schema(path + ".operation", "expected min, member or shift");
    }
    Graph g = graph(field(j, "graph", path), path + ".graph");
    Divisor lambda = divisor(g, field(j, "lambda", path), path + ".lambda");
    bool effective = true;
    if (const auto* e = optional_field(j, "effective", path)) {
        if (!e->is_boolean()) {
            schema(path + ".effective", "expected a boolean");
        }
        effective = e->get<bool>();
    }
    std::optional<GraphFunction> phi;
    if (const auto* f = optional_field(j, "phi", path)) {
        phi = function(g, *f, path + ".phi");
    }
    if (operation == LinsysOperation::Member && !phi) {
        schema(path + ".phi", "missing (required by member)");
    }
    return {operation, {std::move(g), std::move(lambda), effective}, std::move(phi)};
}

RankJob rank(const json& j, const std::string& path) {
    only_keys(j, {"graph", "lambda"}, path);
    Graph g = graph(field(j, "graph", path), path + ".graph");
    Divisor lambda = divisor(g, field(j, "lambda", path), path + ".lambda");
    return {std::move(g), std::move(lambda)};
}

CurveBodyJob curve(const json& j, const std::string& path) {
    only_keys(j, {"graph", "lambda", "flag"}, path);
    Graph g = graph(field(j, "graph", path), path + ".graph");
    Divisor lambda = divisor(g, field(j, "lambda", path), path + ".lambda");
    const std::string fp = path + ".flag";
    const auto& f = field(j, "flag", path);
    const std::string type = text(field(f, "type", fp), fp + ".type");
    const std::string v = vertex(g, field(f, "vertex", fp), fp + ".vertex");
    if (type == "tropical") {
        only_keys(f, {"type", "vertex", "y1"}, fp);
        Divisor y1 = divisor(g, field(f, "y1", fp), fp + ".y1");
        return {std::move(g), std::move(lambda), TropicalFlag{std::move(y1), v}};
    }
    if (type == "arakelov") {
        only_keys(f, {"type", "vertex"}, fp);
        return {std::move(g), std::move(lambda), ArakelovFlag{v}};
    }
    schema(fp + ".type", "expected tropical or arakelov");
}

std::vector<WeightedRay> rays(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_array()) {
        schema(path, "expected an array");
    }
    std::vector<WeightedRay> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = path + "[" + std::to_string(i) + "]";
        only_keys(j[i], {key, "a"}, at);
        out.push_back({vector(field(j[i], key, at), at + "." + key), rational(field(j[i], "a", at), at + ".a")});
    }
    return out;
}

ToricJob toric(const json& j, const std::string& path) {
    only_keys(j, {"model", "flag", "monomials"}, path);
    ToricJob job;
    const std::string mp = path + ".model";
    const auto& m = field(j, "model", path);
    only_keys(m, {"dimension", "generic_rays", "vertical_vertices"}, mp);
    const auto& d = field(m, "dimension", mp);
    if (!d.is_number_integer() || d.get<std::int64_t>() < 1) {
        schema(mp + ".dimension", "expected a positive integer");
    }
    job.model.dimension = d.get<std::size_t>();
    job.model.generic_rays = rays(field(m, "generic_rays", mp), "u", mp + ".generic_rays");
    job.model.vertical_vertices = rays(field(m, "vertical_vertices", mp), "v", mp + ".vertical_vertices");
    job.flag.rays = rays(field(j, "flag", path), "w", path + ".flag");
    if (const auto* ms = optional_field(j, "monomials", path)) {
        if (!ms->is_array()) {
            schema(path + ".monomials", "expected an array");
        }
        for (std::size_t i = 0; i < ms->size(); ++i) {
            const std::string at = path + ".monomials[" + std::to_string(i) + "]";
            only_keys((*ms)[i], {"m", "h"}, at);
            job.monomials.push_back(
                {vector(field((*ms)[i], "m", at), at + ".m"), rational(field((*ms)[i], "h", at), at + ".h")});
        }
    }
    return job;
}

VerifyJob verify(const json& j, const std::string& path) {
    only_keys(j, {"job", "random_curve_jobs"}, path);
    const auto* inner = optional_field(j, "job", path);
    const auto* random = optional_field(j, "random_curve_jobs", path);
    if ((inner == nullptr) == (random == nullptr)) {
        schema(path, "expected exactly one of job, random_curve_jobs");
    }
    if (inner != nullptr) {
        auto target = std::make_shared<const JobFile>(job_from_json(*inner, path + ".job"));
        if (target->kind == JobKind::Verify) {
            schema(path + ".job.kind", "verify jobs cannot be nested");
        }
        return {target};
    }
    const std::string rp = path + ".random_curve_jobs";
    only_keys(*random, {"count", "seed"}, rp);
    const auto& count = field(*random, "count", rp);
    const auto& seed = field(*random, "seed", rp);
    if (!count.is_number_integer() || count.get<std::int64_t>() < 1) {
        schema(rp + ".count", "expected a positive integer");
    }
    if (!seed.is_number_integer() || (!seed.is_number_unsigned() && seed.get<std::int64_t>() < 0)) {
        schema(rp + ".seed", "expected a nonnegative integer");
    }
    return {RandomCurveJobs{count.get<std::size_t>(), seed.get<std::uint64_t>()}};
}

} // namespace

json rational_json(const Rational& q) {
    if (is_integer(q) && q.get_num().fits_slong_p()) {
        return q.get_num().get_si();
    }
    return to_string(q);
}

json vector_json(const Vector& v) {
    json out = json::array();
    for (const auto& x : v) {
        out.push_back(rational_json(x));
    }
    return out;
}

json matrix_json(const Matrix& m) {
    json out = json::array();
    for (const auto& row : m) {
        out.push_back(vector_json(row));
    }
    return out;
}

json divisor_json(const Graph& g, const Divisor& d) {
    json out = json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (d[v] != 0) {
            out[g.name(v)] = rational_json(d[v]);
        }
    }
    return out;
}

json function_json(const Graph& g, const GraphFunction& f) {
    json out = json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        out[g.name(v)] = rational_json(f[v]);
    }
    return out;
}

json graph_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) {
        edges.push_back({g.name(a), g.name(b)});
    }
    return {{"vertices", g.vertices()}, {"edges", edges}};
}

namespace {

json rays_json(const std::vector<WeightedRay>& rays, const std::string& key) {
    json out = json::array();
    for (const auto& r : rays) {
        out.push_back({{key, vector_json(r.direction)}, {"a", rational_json(r.coefficient)}});
    }
    return out;
}

json payload_json(const JobFile& job) {
    return std::visit(
        [](const auto& p) -> json {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, LinsysJob>) {
                json out = {{"operation", to_string(p.operation)},
                            {"graph", graph_json(p.spec.graph)},
                            {"lambda", divisor_json(p.spec.graph, p.spec.lambda)},
                            {"effective", p.spec.effective}};
                if (p.phi) {
                    out["phi"] = function_json(p.spec.graph, *p.phi);
                }
                return out;
            } else if constexpr (std::is_same_v<T, RankJob>) {
                return {{"graph", graph_json(p.graph)}, {"lambda", divisor_json(p.graph, p.lambda)}};
            } else if constexpr (std::is_same_v<T, CurveBodyJob>) {
                json flag;
                if (const auto* t = std::get_if<TropicalFlag>(&p.flag)) {
                    flag = {{"type", "tropical"}, {"vertex", t->vertex}, {"y1", divisor_json(p.graph, t->y1)}};
                } else {
                    flag = {{"type", "arakelov"}, {"vertex", std::get<ArakelovFlag>(p.flag).vertex}};
                }
                return {{"graph", graph_json(p.graph)}, {"lambda", divisor_json(p.graph, p.lambda)}, {"flag", flag}};
            } else if constexpr (std::is_same_v<T, ToricJob>) {
                json out = {{"model",
                             {{"dimension", p.model.dimension},
                              {"generic_rays", rays_json(p.model.generic_rays, "u")},
                              {"vertical_vertices", rays_json(p.model.vertical_vertices, "v")}}},
                            {"flag", rays_json(p.flag.rays, "w")}};
                if (!p.monomials.empty()) {
                    json ms = json::array();
                    for (const auto& q : p.monomials) {
                        ms.push_back({{"m", vector_json(q.m)}, {"h", rational_json(q.h)}});
                    }
                    out["monomials"] = ms;
                }
                return out;
            } else {
                if (const auto* inner = std::get_if<std::shared_ptr<const JobFile>>(&p.target)) {
                    return {{"job", job_json(**inner)}};
                }
                const auto& r = std::get<RandomCurveJobs>(p.target);
                return {{"random_curve_jobs", {{"count", r.count}, {"seed", r.seed}}}};
            }
        },
        job.payload);
}

} // namespace

json job_json(const JobFile& job) {
    json out = {{"kind", to_string(job.kind)}, {"payload", payload_json(job)}};
    if (job.options.window) {
        out["options"] = {{"window", vector_json(Vector(job.options.window->begin(), job.options.window->end()))}};
    }
    return out;
}

JobFile job_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) {
        schema(path, "expected a job object");
    }
    only_keys(j, {"kind", "payload", "options"}, path);
    const std::string kind = text(field(j, "kind", path), path + ".kind");
    const auto& payload = field(j, "payload", path);
    const std::string pp = path + ".payload";
    JobFile job{JobKind::Linsys, VerifyJob{}, {}};
    if (kind == "linsys") {
        job = {JobKind::Linsys, linsys(payload, pp), {}};
    } else if (kind == "rank") {
        job = {JobKind::Rank, rank(payload, pp), {}};
    } else if (kind == "curve-body") {
        job = {JobKind::CurveBody, curve(payload, pp), {}};
    } else if (kind == "toric-body") {
        job = {JobKind::ToricBody, toric(payload, pp), {}};
    } else if (kind == "verify") {
        job = {JobKind::Verify, verify(payload, pp), {}};
    } else {
        schema(path + ".kind", "expected linsys, rank, curve-body, toric-body or verify");
    }
    if (const auto* options = optional_field(j, "options", path)) {
        only_keys(*options, {"window"}, path + ".options");
        if (const auto* w = optional_field(*options, "window", path + ".options")) {
            const Vector v = vector(*w, path + ".options.window");
            if (v.size() != 4) {
                schema(path + ".options.window", "expected [x0, x1, y0, y1]");
            }
            job.options.window = Window{v[0], v[1], v[2], v[3]};
        }
    }
    return job;
}

} // namespace io

JobFile parse_job(std::string_view text) {
    io::json j;
    try {
        j = io::json::parse(text);
    } catch (const io::json::parse_error& e) {
        fail(ErrorCode::SchemaError, std::string("$: not valid JSON: ") + e.what());
    }
    return io::job_from_json(j, "$");
}

std::string serialize_job(const JobFile& job) { return io::job_json(job).dump(2) + "\n"; }

Window parse_window(std::string_view text) {
    Vector v;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        v.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (v.size() != 4) {
        fail(ErrorCode::InvalidArgument, "window must be x0,x1,y0,y1");
    }
    return {v[0], v[1], v[2], v[3]};
}

} // namespace dvrbody
