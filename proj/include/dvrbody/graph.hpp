// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dvrbody/rational.hpp"

namespace dvrbody {

// Finite connected multigraph; loops and parallel edges are allowed.
// Vertex order is declaration order and fixes every coordinate order
// downstream (linear systems, polyhedra, job files).
class Graph {
  public:
    using Edge = std::pair<std::size_t, std::size_t>;

    // Throws UnknownVertex for undeclared endpoints, InvalidArgument for
    // duplicate or missing vertex names and Disconnected when not connected.
    Graph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges);
    Graph(std::vector<std::string> vertices, std::vector<Edge> edges);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] const std::string& name(std::size_t v) const { return vertices_.at(v); }

    [[nodiscard]] std::size_t index_of(const std::string& name) const;
    [[nodiscard]] bool has_vertex(const std::string& name) const { return index_.count(name) != 0; }

    // Number of edges joining v and w (v != w); loops are not counted.
    [[nodiscard]] std::size_t multiplicity(std::size_t v, std::size_t w) const { return adjacency_[v][w]; }

    // Number of non-loop edge ends at v.
    [[nodiscard]] std::size_t valence(std::size_t v) const { return valence_[v]; }

    // Distinct neighbours of v (excluding v itself), ascending.
    [[nodiscard]] const std::vector<std::size_t>& neighbours(std::size_t v) const { return neighbours_[v]; }

    // |E| - |V| + 1.
    [[nodiscard]] long genus() const {
        return static_cast<long>(edges_.size()) - static_cast<long>(vertices_.size()) + 1;
    }

    // Laplacian matrix L with (L phi)(v) = sum over edges vw of phi(v) - phi(w).
    [[nodiscard]] Matrix laplacian_matrix() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

  private:
    void build();

    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<std::size_t> valence_;
    std::vector<std::vector<std::size_t>> neighbours_;
};

// Vertex-indexed exact vector. The tag keeps divisors and functions apart.
template <typename Tag>
class VertexVector {
  public:
    VertexVector() = default;
    explicit VertexVector(Vector values) : values_(std::move(values)) {}

    static VertexVector zero(const Graph& g) { return VertexVector(zeros(g.vertex_count())); }

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] const Vector& values() const noexcept { return values_; }
    [[nodiscard]] const Rational& operator[](std::size_t v) const { return values_.at(v); }
    [[nodiscard]] Rational& operator[](std::size_t v) { return values_.at(v); }

    VertexVector& operator+=(const VertexVector& o) {
        values_ = add(values_, o.values_);
        return *this;
    }
    VertexVector& operator-=(const VertexVector& o) {
        values_ = subtract(values_, o.values_);
        return *this;
    }
    friend VertexVector operator+(VertexVector a, const VertexVector& b) { return a += b; }
    friend VertexVector operator-(VertexVector a, const VertexVector& b) { return a -= b; }
    friend VertexVector operator-(const VertexVector& a) { return VertexVector(scaled(a.values_, -1)); }
    friend VertexVector operator*(const Rational& s, const VertexVector& a) {
        return VertexVector(scaled(a.values_, s));
    }
    friend bool operator==(const VertexVector& a, const VertexVector& b) { return a.values_ == b.values_; }

  private:
    Vector values_;
};

struct DivisorTag {};
struct FunctionTag {};

// Divisor sum a_v (v) with rational chips.
using Divisor = VertexVector<DivisorTag>;
// Function phi: V -> Q.
using GraphFunction = VertexVector<FunctionTag>;

// Builds a divisor from a name -> value map; vertices not listed get 0.
[[nodiscard]] Divisor make_divisor(const Graph& g, const std::map<std::string, Rational>& coefficients);

// Builds a function from a name -> value map that must cover every vertex.
[[nodiscard]] GraphFunction make_function(const Graph& g, const std::map<std::string, Rational>& values);

[[nodiscard]] Divisor laplacian(const Graph& g, const GraphFunction& phi);

[[nodiscard]] Rational divisor_degree(const Divisor& d);

// Longest shortest path, counted in edges.
[[nodiscard]] std::size_t graph_diameter(const Graph& g);

// max over subsets S of |sum_{v in S} f(v)|, in closed form.
[[nodiscard]] Rational m_statistic(const Divisor& f);

// Specialization of the vertical divisor sum phi(v) C_v, which is -laplacian.
[[nodiscard]] Divisor specialize_vertical(const Graph& g, const GraphFunction& phi);

[[nodiscard]] bool is_effective(const Divisor& d);

// Sum of the positive coefficients.
[[nodiscard]] Rational positive_degree(const Divisor& d);

[[nodiscard]] std::string to_string(const Graph& g, const Divisor& d);

} // namespace dvrbody
