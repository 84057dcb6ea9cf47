// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dvrbody/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "dvrbody/error.hpp"

namespace dvrbody {

Graph::Graph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges)
    : vertices_(std::move(vertices)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!index_.emplace(vertices_[i], i).second) {
            fail(ErrorCode::InvalidArgument, "duplicate vertex \"" + vertices_[i] + "\"");
        }
    }
    for (const auto& [a, b] : edges) {
        edges_.emplace_back(index_of(a), index_of(b));
    }
    build();
}

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!index_.emplace(vertices_[i], i).second) {
            fail(ErrorCode::InvalidArgument, "duplicate vertex \"" + vertices_[i] + "\"");
        }
    }
    for (const auto& [a, b] : edges_) {
        if (a >= vertices_.size() || b >= vertices_.size()) {
            fail(ErrorCode::UnknownVertex, "edge endpoint out of range");
        }
    }
    build();
}

void Graph::build() {
    const std::size_t n = vertices_.size();
    if (n == 0) {
        fail(ErrorCode::InvalidArgument, "graph has no vertices");
    }
    adjacency_.assign(n, std::vector<std::size_t>(n, 0));
    valence_.assign(n, 0);
    neighbours_.assign(n, {});
    for (const auto& [a, b] : edges_) {
        if (a == b) {
            continue;
        }
        ++adjacency_[a][b];
        ++adjacency_[b][a];
        ++valence_[a];
        ++valence_[b];
    }
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) {
            if (adjacency_[v][w] > 0) {
                neighbours_[v].push_back(w);
            }
        }
    }
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto w : neighbours_[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    if (reached != n) {
        fail(ErrorCode::Disconnected, "graph is not connected");
    }
}

std::size_t Graph::index_of(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) {
        fail(ErrorCode::UnknownVertex, "unknown vertex \"" + name + "\"");
    }
    return it->second;
}

Matrix Graph::laplacian_matrix() const {
    const std::size_t n = vertices_.size();
    Matrix m(n, zeros(n));
    for (std::size_t v = 0; v < n; ++v) {
        m[v][v] = static_cast<long>(valence_[v]);
        for (auto w : neighbours_[v]) {
            m[v][w] = -static_cast<long>(adjacency_[v][w]);
        }
    }
    return m;
}

Divisor make_divisor(const Graph& g, const std::map<std::string, Rational>& coefficients) {
    auto d = Divisor::zero(g);
    for (const auto& [name, value] : coefficients) {
        d[g.index_of(name)] = value;
    }
    return d;
}

GraphFunction make_function(const Graph& g, const std::map<std::string, Rational>& values) {
    auto phi = GraphFunction::zero(g);
    for (const auto& [name, value] : values) {
        phi[g.index_of(name)] = value;
    }
    for (const auto& name : g.vertices()) {
        if (values.count(name) == 0) {
            fail(ErrorCode::UnknownVertex, "function has no value at vertex \"" + name + "\"");
        }
    }
    return phi;
}

Divisor laplacian(const Graph& g, const GraphFunction& phi) {
    if (phi.size() != g.vertex_count()) {
        fail(ErrorCode::UnknownVertex, "function is not defined on every vertex");
    }
    auto d = Divisor::zero(g);
    for (const auto& [v, w] : g.edges()) {
        if (v == w) {
            continue;
        }
        const Rational diff = phi[v] - phi[w];
        d[v] += diff;
        d[w] -= diff;
    }
    return d;
}

Rational divisor_degree(const Divisor& d) {
    Rational s = 0;
    for (const auto& q : d.values()) {
        s += q;
    }
    return s;
}

std::size_t graph_diameter(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::size_t best = 0;
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> dist(n, n);
        dist[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            const auto v = queue.front();
            queue.pop_front();
            for (auto w : g.neighbours(v)) {
                if (dist[w] == n) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (auto d : dist) {
            if (d == n) {
                fail(ErrorCode::Disconnected, "graph is not connected");
            }
            best = std::max(best, d);
        }
    }
    return best;
}

Rational m_statistic(const Divisor& f) {
    Rational pos = 0;
    Rational neg = 0;
    for (const auto& q : f.values()) {
        if (q > 0) {
            pos += q;
        } else {
            neg -= q;
        }
    }
    return std::max(pos, neg);
}

Divisor specialize_vertical(const Graph& g, const GraphFunction& phi) { return -laplacian(g, phi); }

bool is_effective(const Divisor& d) {
    return std::all_of(d.values().begin(), d.values().end(), [](const Rational& q) { return q >= 0; });
}

Rational positive_degree(const Divisor& d) {
    Rational s = 0;
    for (const auto& q : d.values()) {
        if (q > 0) {
            s += q;
        }
    }
    return s;
}

std::string to_string(const Graph& g, const Divisor& d) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t v = 0; v < d.size(); ++v) {
        if (d[v] == 0) {
            continue;
        }
        if (!first) {
            os << (d[v] > 0 ? " + " : " - ");
        } else if (d[v] < 0) {
            os << "-";
        }
        first = false;
        const Rational a = abs(d[v]);
        if (a != 1) {
            os << to_string(a);
        }
        os << '(' << g.name(v) << ')';
    }
    if (first) {
        os << '0';
    }
    return os.str();
}

} // namespace dvrbody
