// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#include <map>
#include <utility>

#include "dvrbody/error.hpp"
#include "dvrbody/polyhedron.hpp"

namespace dvrbody {

namespace {

struct Row {
    Vector a;
    Rational b;
};

// Rescales a nonzero row by a positive factor to primitive integer coefficients.
void normalize(Row& r) {
    std::size_t k = 0;
    while (k < r.a.size() && r.a[k] == 0) {
        ++k;
    }
    if (k == r.a.size()) {
        return;
    }
    const Vector p = primitive(r.a);
    const Rational factor = p[k] / r.a[k];
    r.a = p;
    r.b *= factor;
}

// Normalizes, drops trivial rows and keeps the tightest of parallel rows.
// Returns false when a row 0 >= b with b > 0 shows the system is empty.
bool tidy(std::vector<Row>& rows) {
    std::map<Vector, std::size_t> seen;
    std::vector<Row> out;
    for (auto& r : rows) {
        normalize(r);
        if (is_zero(r.a)) {
            if (r.b > 0) {
                return false;
            }
            continue;
        }
        const auto it = seen.find(r.a);
        if (it == seen.end()) {
            seen.emplace(r.a, out.size());
            out.push_back(std::move(r));
            continue;
        }
        auto& kept = out[it->second];
        if (r.b > kept.b) {
            kept = std::move(r);
        }
    }
    rows = std::move(out);
    return true;
}

HPolyhedron to_polyhedron(std::size_t dim, const std::vector<Row>& rows) {
    HPolyhedron p(dim);
    for (const auto& r : rows) {
        p.add(r.a, r.b);
    }
    return p;
}

// Removes rows implied by the others, in order. Returns false if empty.
bool drop_redundant(std::size_t dim, std::vector<Row>& rows) {
    if (!tidy(rows)) {
        return false;
    }
    if (to_polyhedron(dim, rows).is_empty()) {
        return false;
    }
    std::size_t i = 0;
    while (i < rows.size()) {
        HPolyhedron others(dim);
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (j != i) {
                others.add(rows[j].a, rows[j].b);
            }
        }
        const auto lp = solve_lp(others, rows[i].a, Sense::Minimize);
        if (lp.status == LPStatus::Optimal && lp.value >= rows[i].b) {
            rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    return true;
}

// One elimination step on column `col`; the column is removed from every row.
std::vector<Row> eliminate(const std::vector<Row>& rows, std::size_t col) {
    std::vector<Row> out;
    std::vector<const Row*> pos;
    std::vector<const Row*> neg;
    auto drop_column = [col](const Vector& a) {
        Vector v;
        v.reserve(a.size() - 1);
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j != col) {
                v.push_back(a[j]);
            }
        }
        return v;
    };
    for (const auto& r : rows) {
        if (r.a[col] > 0) {
            pos.push_back(&r);
        } else if (r.a[col] < 0) {
            neg.push_back(&r);
        } else {
            out.push_back({drop_column(r.a), r.b});
        }
    }
    for (const auto* p : pos) {
        for (const auto* n : neg) {
            Row combined;
            const Rational sp = -n->a[col];
            const Rational sn = p->a[col];
            combined.a = drop_column(add(scaled(p->a, sp), scaled(n->a, sn)));
            combined.b = sp * p->b + sn * n->b;
            out.push_back(std::move(combined));
        }
    }
    return out;
}

std::vector<Row> initial_rows(const HPolyhedron& p) {
    std::vector<Row> rows;
    const auto& cs = p.constraints();
    for (const auto& c : cs) {
        rows.push_back({c.a, c.b});
    }
    return rows;
}

} // namespace

HPolyhedron remove_redundant(const HPolyhedron& p) {
    auto rows = initial_rows(p);
    if (!drop_redundant(p.dimension(), rows)) {
        return HPolyhedron::empty(p.dimension());
    }
    return to_polyhedron(p.dimension(), rows);
}

HPolyhedron fm_eliminate(const HPolyhedron& p, std::size_t index) {
    if (index >= p.dimension()) {
        fail(ErrorCode::DimensionMismatch, "elimination index out of range");
    }
    auto rows = initial_rows(p);
    if (!tidy(rows)) {
        return HPolyhedron::empty(p.dimension() - 1);
    }
    rows = eliminate(rows, index);
    if (!drop_redundant(p.dimension() - 1, rows)) {
        return HPolyhedron::empty(p.dimension() - 1);
    }
    return to_polyhedron(p.dimension() - 1, rows);
}

HPolyhedron fm_project(const HPolyhedron& p, const std::vector<std::size_t>& keep) {
    const std::size_t dim = p.dimension();
    std::vector<bool> kept(dim, false);
    for (auto k : keep) {
        if (k >= dim || kept[k]) {
            fail(ErrorCode::DimensionMismatch, "projection coordinates out of range or repeated");
        }
        kept[k] = true;
    }
    // columns[i] is the original coordinate held in current column i.
    std::vector<std::size_t> columns(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        columns[i] = i;
    }
    auto rows = initial_rows(p);
    if (!drop_redundant(dim, rows)) {
        return HPolyhedron::empty(keep.size());
    }
    for (;;) {
        // Greedy order: the column producing the fewest new rows.
        std::size_t best = columns.size();
        long best_cost = 0;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (kept[columns[c]]) {
                continue;
            }
            long np = 0;
            long nn = 0;
            for (const auto& r : rows) {
                np += r.a[c] > 0;
                nn += r.a[c] < 0;
            }
            const long cost = np * nn - np - nn;
            if (best == columns.size() || cost < best_cost) {
                best = c;
                best_cost = cost;
            }
        }
        if (best == columns.size()) {
            break;
        }
        rows = eliminate(rows, best);
        columns.erase(columns.begin() + static_cast<std::ptrdiff_t>(best));
        if (!drop_redundant(columns.size(), rows)) {
            return HPolyhedron::empty(keep.size());
        }
    }
    // Reorder the surviving columns as requested.
    std::vector<std::size_t> position(dim, 0);
    for (std::size_t i = 0; i < columns.size(); ++i) {
        position[columns[i]] = i;
    }
    HPolyhedron out(keep.size());
    for (const auto& r : rows) {
        Vector a(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) {
            a[i] = r.a[position[keep[i]]];
        }
        out.add(std::move(a), r.b);
    }
    return out;
}

} // namespace dvrbody
