// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <set>
#include <utility>

#include "dvrbody/error.hpp"
#include "dvrbody/polyhedron.hpp"
#include "simplex.hpp"

namespace dvrbody {

namespace {

void check_lengths(const Matrix& rows, std::size_t dim, const char* what) {
    for (const auto& r : rows) {
        if (r.size() != dim) {
            fail(ErrorCode::DimensionMismatch, std::string(what) + " of wrong dimension");
        }
    }
}

// Is x in conv(vertices) + cone(rays)? An empty vertex list means a cone test.
bool in_hull(const Matrix& vertices, const Matrix& rays, const Vector& x, bool convex) {
    const std::size_t dim = x.size();
    const std::size_t cols = vertices.size() + rays.size();
    Matrix m(dim + (convex ? 1 : 0), zeros(cols));
    Vector q = x;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t k = 0; k < vertices.size(); ++k) {
            m[i][k] = vertices[k][i];
        }
        for (std::size_t k = 0; k < rays.size(); ++k) {
            m[i][vertices.size() + k] = rays[k][i];
        }
    }
    if (convex) {
        for (std::size_t k = 0; k < vertices.size(); ++k) {
            m[dim][k] = 1;
        }
        q.push_back(1);
    }
    return detail::nonnegative_solution(cols, m, q).has_value();
}

// Calls f on every k-subset of {0, ..., n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) {
        return;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = i;
    }
    for (;;) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

Matrix sorted_unique(Matrix rows) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

} // namespace

VPolyhedron::VPolyhedron(std::size_t dimension, Matrix vertices, Matrix rays)
    : dimension_(dimension), vertices_(std::move(vertices)), rays_(std::move(rays)) {
    check_lengths(vertices_, dimension_, "vertex");
    check_lengths(rays_, dimension_, "ray");
}

bool VPolyhedron::contains(const Vector& x) const {
    if (x.size() != dimension_) {
        fail(ErrorCode::DimensionMismatch, "point has wrong dimension");
    }
    if (vertices_.empty()) {
        return false;
    }
    return in_hull(vertices_, rays_, x, true);
}

VPolyhedron VPolyhedron::canonical() const {
    if (vertices_.empty()) {
        return VPolyhedron(dimension_);
    }
    Matrix rays;
    for (const auto& r : rays_) {
        if (!is_zero(r)) {
            rays.push_back(primitive(r));
        }
    }
    rays = sorted_unique(std::move(rays));
    for (std::size_t i = 0; i < rays.size();) {
        Matrix others = rays;
        others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
        if (in_hull({}, others, rays[i], false)) {
            rays = std::move(others);
        } else {
            ++i;
        }
    }
    Matrix vertices = sorted_unique(vertices_);
    for (std::size_t i = 0; i < vertices.size();) {
        Matrix others = vertices;
        others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
        if (!others.empty() && in_hull(others, rays, vertices[i], true)) {
            vertices = std::move(others);
        } else {
            ++i;
        }
    }
    return VPolyhedron(dimension_, std::move(vertices), std::move(rays));
}

VPolyhedron enumerate_v_rep(const HPolyhedron& p) {
    const std::size_t d = p.dimension();
    if (d > kMaxEnumerationDimension) {
        fail(ErrorCode::DimensionTooLarge, "vertex enumeration limited to dimension " +
                                               std::to_string(kMaxEnumerationDimension));
    }
    if (p.is_empty()) {
        return VPolyhedron(d);
    }
    Matrix a;
    Vector b;
    for (const auto& c : p.constraints()) {
        a.push_back(c.a);
        b.push_back(c.b);
    }
    // Lineality space; the pointed part lives in its orthogonal complement.
    const Matrix lines = nullspace(a, d);
    const std::size_t free_rank = d - lines.size();

    std::set<Vector> vertices;
    for_each_subset(a.size(), free_rank, [&](const std::vector<std::size_t>& s) {
        Matrix sys = lines;
        Vector rhs = zeros(lines.size());
        for (auto i : s) {
            sys.push_back(a[i]);
            rhs.push_back(b[i]);
        }
        auto x = solve_square(sys, rhs);
        if (x && p.contains(*x)) {
            vertices.insert(std::move(*x));
        }
    });

    std::set<Vector> rays;
    if (free_rank > 0) {
        for_each_subset(a.size(), free_rank - 1, [&](const std::vector<std::size_t>& s) {
            Matrix sys = lines;
            for (auto i : s) {
                sys.push_back(a[i]);
            }
            const Matrix kernel = nullspace(sys, d);
            if (kernel.size() != 1) {
                return;
            }
            for (const int sign : {1, -1}) {
                const Vector r = scaled(kernel.front(), Rational(sign));
                bool ok = true;
                for (const auto& row : a) {
                    if (dot(row, r) < 0) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    rays.insert(primitive(r));
                }
            }
        });
    }
    for (const auto& l : lines) {
        rays.insert(primitive(l));
        rays.insert(primitive(scaled(l, -1)));
    }
    return VPolyhedron(d, Matrix(vertices.begin(), vertices.end()), Matrix(rays.begin(), rays.end()));
}

VPolyhedron affine_image(const VPolyhedron& v, const Matrix& linear, const Vector& offset) {
    check_lengths(linear, v.dimension(), "linear map row");
    if (linear.size() != offset.size()) {
        fail(ErrorCode::DimensionMismatch, "offset length differs from image dimension");
    }
    std::set<Vector> vertices;
    for (const auto& x : v.vertices()) {
        vertices.insert(add(multiply(linear, x), offset));
    }
    std::set<Vector> rays;
    for (const auto& r : v.rays()) {
        const Vector image = multiply(linear, r);
        if (!is_zero(image)) {
            rays.insert(primitive(image));
        }
    }
    return VPolyhedron(offset.size(), Matrix(vertices.begin(), vertices.end()), Matrix(rays.begin(), rays.end()));
}

HPolyhedron to_h_representation(const VPolyhedron& v) {
    const std::size_t d = v.dimension();
    if (v.is_empty()) {
        return HPolyhedron::empty(d);
    }
    const std::size_t k = v.vertices().size();
    const std::size_t r = v.rays().size();
    const std::size_t n = d + k + r;
    HPolyhedron lifted(n);
    for (std::size_t i = 0; i < d; ++i) {
        Vector row = zeros(n);
        row[i] = 1;
        for (std::size_t j = 0; j < k; ++j) {
            row[d + j] = -v.vertices()[j][i];
        }
        for (std::size_t j = 0; j < r; ++j) {
            row[d + k + j] = -v.rays()[j][i];
        }
        lifted.add(row, 0);
        lifted.add(scaled(row, -1), 0);
    }
    Vector total = zeros(n);
    for (std::size_t j = 0; j < k; ++j) {
        total[d + j] = 1;
    }
    lifted.add(total, 1);
    lifted.add(scaled(total, -1), -1);
    for (std::size_t j = d; j < n; ++j) {
        Vector row = zeros(n);
        row[j] = 1;
        lifted.add(std::move(row), 0);
    }
    std::vector<std::size_t> keep(d);
    for (std::size_t i = 0; i < d; ++i) {
        keep[i] = i;
    }
    return fm_project(lifted, keep);
}

HPolyhedron affine_image(const HPolyhedron& p, const Matrix& linear, const Vector& offset) {
    check_lengths(linear, p.dimension(), "linear map row");
    if (linear.size() != offset.size()) {
        fail(ErrorCode::DimensionMismatch, "offset length differs from image dimension");
    }
    const std::size_t d = p.dimension();
    const std::size_t e = offset.size();
    HPolyhedron graph(d + e);
    for (const auto& c : p.constraints()) {
        Vector row = c.a;
        row.resize(d + e);
        graph.add(std::move(row), c.b);
    }
    for (std::size_t i = 0; i < e; ++i) {
        Vector row = zeros(d + e);
        for (std::size_t j = 0; j < d; ++j) {
            row[j] = -linear[i][j];
        }
        row[d + i] = 1;
        graph.add(row, offset[i]);
        graph.add(scaled(row, -1), -offset[i]);
    }
    std::vector<std::size_t> keep(e);
    for (std::size_t i = 0; i < e; ++i) {
        keep[i] = d + i;
    }
    return fm_project(graph, keep);
}

std::vector<Vector> lattice_points(const HPolyhedron& p) {
    const std::size_t d = p.dimension();
    if (d > 3) {
        fail(ErrorCode::DimensionTooLarge, "lattice point enumeration limited to dimension 3");
    }
    if (p.is_empty()) {
        return {};
    }
    std::vector<Integer> lo(d);
    std::vector<Integer> hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        Vector e = zeros(d);
        e[i] = 1;
        const auto mn = solve_lp(p, e, Sense::Minimize);
        const auto mx = solve_lp(p, e, Sense::Maximize);
        if (mn.status != LPStatus::Optimal || mx.status != LPStatus::Optimal) {
            fail(ErrorCode::InvalidArgument, "lattice points requested for an unbounded polyhedron");
        }
        mpz_cdiv_q(lo[i].get_mpz_t(), mn.value.get_num_mpz_t(), mn.value.get_den_mpz_t());
        mpz_fdiv_q(hi[i].get_mpz_t(), mx.value.get_num_mpz_t(), mx.value.get_den_mpz_t());
    }
    std::vector<Vector> out;
    Vector x(d);
    auto visit = [&](auto&& self, std::size_t i) -> void {
        if (i == d) {
            if (p.contains(x)) {
                out.push_back(x);
            }
            return;
        }
        for (Integer z = lo[i]; z <= hi[i]; ++z) {
            x[i] = Rational(z);
            self(self, i + 1);
        }
    };
    visit(visit, 0);
    return out;
}

} // namespace dvrbody
