// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dvrbody/linear_system.hpp"

#include <algorithm>
#include <queue>

#include "dvrbody/error.hpp"
#include "dvrbody/sampling.hpp"

namespace dvrbody {

namespace {

void check_spec(const LinearSystemSpec& spec) {
    if (spec.lambda.size() != spec.graph.vertex_count()) {
        fail(ErrorCode::UnknownVertex, "divisor does not match the graph's vertices");
    }
}

std::vector<Integer> to_integers(const Divisor& d) {
    std::vector<Integer> out;
    for (const auto& x : d.values()) {
        if (!is_integer(x)) {
            fail(ErrorCode::NonIntegerDivisor, "divisor coefficient " + to_string(x) + " is not an integer");
        }
        out.push_back(x.get_num());
    }
    return out;
}

// Fires every vertex of `set`: one chip along each edge leaving the set.
void fire(const Graph& g, std::vector<Integer>& d, const std::vector<bool>& set) {
    for (const auto& [a, b] : g.edges()) {
        if (set[a] == set[b]) {
            continue;
        }
        const auto inside = set[a] ? a : b;
        const auto outside = set[a] ? b : a;
        --d[inside];
        ++d[outside];
    }
}

} // namespace

HPolyhedron build_system(const LinearSystemSpec& spec) {
    check_spec(spec);
    const auto& g = spec.graph;
    const std::size_t n = g.vertex_count();
    const Matrix lap = g.laplacian_matrix();
    HPolyhedron p(n);
    for (std::size_t v = 0; v < n; ++v) {
        p.add(lap[v], -spec.lambda[v]);
    }
    if (spec.effective) {
        for (std::size_t v = 0; v < n; ++v) {
            Vector e = zeros(n);
            e[v] = 1;
            p.add(std::move(e), 0);
        }
    }
    return p;
}

bool member(const LinearSystemSpec& spec, const GraphFunction& phi) {
    check_spec(spec);
    const Divisor total = laplacian(spec.graph, phi) + spec.lambda;
    if (!is_effective(total)) {
        return false;
    }
    if (spec.effective) {
        return std::all_of(phi.values().begin(), phi.values().end(), [](const Rational& x) { return x >= 0; });
    }
    return true;
}

GraphFunction pointwise_min(const GraphFunction& a, const GraphFunction& b) {
    if (a.size() != b.size()) {
        fail(ErrorCode::UnknownVertex, "functions live on different vertex sets");
    }
    GraphFunction out = a;
    for (std::size_t v = 0; v < a.size(); ++v) {
        if (b[v] < out[v]) {
            out[v] = b[v];
        }
    }
    return out;
}

std::optional<GraphFunction> minimal_element(const LinearSystemSpec& spec) {
    if (!spec.effective) {
        fail(ErrorCode::InvalidArgument, "the minimal element is defined for effective systems only");
    }
    const HPolyhedron p = build_system(spec);
    const std::size_t n = p.dimension();
    GraphFunction out = GraphFunction::zero(spec.graph);
    for (std::size_t v = 0; v < n; ++v) {
        Vector e = zeros(n);
        e[v] = 1;
        const auto lp = solve_lp(p, e, Sense::Minimize);
        if (lp.status == LPStatus::Infeasible) {
            return std::nullopt;
        }
        if (lp.status != LPStatus::Optimal) {
            fail(ErrorCode::Internal, "coordinate minimum unbounded on a nonnegative system");
        }
        out[v] = lp.value;
    }
    if (!member(spec, out)) {
        fail(ErrorCode::Internal, "coordinatewise minimum is not a member");
    }
    return out;
}

ZariskiShift zariski_shift(const LinearSystemSpec& spec) {
    const auto minimal = minimal_element(spec);
    if (!minimal) {
        fail(ErrorCode::EmptySystem, "L+(lambda) is empty");
    }
    return {spec.lambda + laplacian(spec.graph, *minimal), *minimal};
}

HPolyhedron enriched_system(const EnrichedSystemSpec& spec) {
    if (!spec.base.effective) {
        fail(ErrorCode::InvalidArgument, "enriched systems extend effective systems");
    }
    const auto& g = spec.base.graph;
    const std::size_t v = g.index_of(spec.vertex);
    const std::size_t n = g.vertex_count();
    const HPolyhedron base = build_system(spec.base);
    HPolyhedron p(n + 1);
    for (const auto& c : base.constraints()) {
        Vector a = c.a;
        a.push_back(0);
        p.add(std::move(a), c.b);
    }
    Vector u = zeros(n + 1);
    u[n] = 1;
    p.add(u, 0);
    Vector row = g.laplacian_matrix()[v];
    row.push_back(-1);
    p.add(std::move(row), -spec.base.lambda[v]);
    return p;
}

Divisor reduced_divisor(const Graph& g, const Divisor& d, std::size_t q) {
    const std::size_t n = g.vertex_count();
    if (d.size() != n) {
        fail(ErrorCode::UnknownVertex, "divisor does not match the graph's vertices");
    }
    if (q >= n) {
        fail(ErrorCode::UnknownVertex, "base vertex out of range");
    }
    auto chips = to_integers(d);

    std::vector<std::size_t> dist(n, n);
    std::queue<std::size_t> queue;
    dist[q] = 0;
    queue.push(q);
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop();
        for (const auto w : g.neighbours(v)) {
            if (dist[w] == n) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
        }
    }
    const std::size_t depth = *std::max_element(dist.begin(), dist.end());

    // Clear debt layer by layer from the outside in. Firing the ball of radius
    // j - 1 raises every vertex at distance j and leaves farther ones alone.
    for (std::size_t j = depth; j >= 1; --j) {
        std::vector<bool> ball(n);
        for (std::size_t v = 0; v < n; ++v) {
            ball[v] = dist[v] <= j - 1;
        }
        for (;;) {
            bool debt = false;
            for (std::size_t v = 0; v < n; ++v) {
                debt = debt || (dist[v] == j && chips[v] < 0);
            }
            if (!debt) {
                break;
            }
            fire(g, chips, ball);
        }
    }

    // Dhar's burning: fire the unburnt set until the fire reaches everything.
    for (;;) {
        std::vector<bool> burnt(n, false);
        burnt[q] = true;
        bool spread = true;
        while (spread) {
            spread = false;
            for (std::size_t v = 0; v < n; ++v) {
                if (burnt[v]) {
                    continue;
                }
                long fire_edges = 0;
                for (std::size_t w = 0; w < n; ++w) {
                    if (burnt[w]) {
                        fire_edges += static_cast<long>(g.multiplicity(v, w));
                    }
                }
                if (chips[v] < fire_edges) {
                    burnt[v] = true;
                    spread = true;
                }
            }
        }
        if (std::all_of(burnt.begin(), burnt.end(), [](bool b) { return b; })) {
            break;
        }
        std::vector<bool> unburnt(n);
        for (std::size_t v = 0; v < n; ++v) {
            unburnt[v] = !burnt[v];
        }
        fire(g, chips, unburnt);
    }
    Divisor out = Divisor::zero(g);
    for (std::size_t v = 0; v < n; ++v) {
        out[v] = Rational(chips[v]);
    }
    return out;
}

bool has_nonnegative_rank(const Graph& g, const Divisor& lambda) {
    (void)to_integers(lambda);
    if (divisor_degree(lambda) < 0) {
        return false;
    }
    return reduced_divisor(g, lambda, 0)[0] >= 0;
}

std::optional<bool> has_nonnegative_rank_by_search(const Graph& g, const Divisor& lambda,
                                                  std::size_t max_candidates) {
    (void)to_integers(lambda);
    if (divisor_degree(lambda) < 0) {
        return false;
    }
    const std::size_t n = g.vertex_count();
    const Rational bound_q = positive_degree(lambda) * static_cast<long>(graph_diameter(g));
    const long bound = bound_q.get_num().get_si();
    double size = 1;
    for (std::size_t i = 0; i < n; ++i) {
        size *= static_cast<double>(bound + 1);
    }
    if (size > static_cast<double>(max_candidates)) {
        return std::nullopt;
    }
    const Matrix lap = g.laplacian_matrix();
    std::vector<long> phi(n, 0);
    for (;;) {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
            Rational value = lambda[v];
            for (std::size_t w = 0; w < n; ++w) {
                value += lap[v][w] * phi[w];
            }
            ok = value >= 0;
        }
        if (ok) {
            return true;
        }
        std::size_t i = 0;
        while (i < n && phi[i] == bound) {
            phi[i++] = 0;
        }
        if (i == n) {
            return false;
        }
        ++phi[i];
    }
}

std::vector<GraphFunction> sample_members(const LinearSystemSpec& spec, std::size_t count, std::mt19937_64& rng) {
    LinearSystemSpec plus = spec;
    plus.effective = true;
    const auto minimal = minimal_element(plus);
    if (!minimal) {
        fail(ErrorCode::EmptySystem, "cannot sample an empty system");
    }
    const std::size_t n = spec.graph.vertex_count();
    const Rational reach = positive_degree(spec.lambda) * static_cast<long>(graph_diameter(spec.graph)) + 1;
    HPolyhedron box = build_system(plus);
    for (std::size_t v = 0; v < n; ++v) {
        Vector e = zeros(n);
        e[v] = -1;
        box.add(std::move(e), -((*minimal)[v] + reach));
    }
    std::vector<GraphFunction> out;
    for (auto& x : sample_points(box, count, rng)) {
        GraphFunction phi(std::move(x));
        if (!spec.effective) {
            const Rational shift = random_rational(rng, -2, 2, 4);
            phi = phi + GraphFunction(Vector(n, shift));
        }
        out.push_back(std::move(phi));
    }
    return out;
}

} // namespace dvrbody
