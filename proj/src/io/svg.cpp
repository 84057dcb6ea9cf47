// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dvrbody/svg.hpp"

#include <algorithm>
#include <sstream>

#include "dvrbody/error.hpp"

namespace dvrbody {

namespace {

constexpr long kWidth = 480;
constexpr long kHeight = 360;
constexpr long kMargin = 48;
constexpr long kStrip = 6;

struct Canvas {
    Window w;

    [[nodiscard]] Rational x(const Rational& t) const { return kMargin + (t - w[0]) / (w[1] - w[0]) * kWidth; }
    [[nodiscard]] Rational y(const Rational& v) const { return kMargin + (w[3] - v) / (w[3] - w[2]) * kHeight; }
};

std::string num(const Rational& q) { return to_decimal(q, 20); }

// Counterclockwise order around the centroid, exact.
Matrix ordered(Matrix pts) {
    if (pts.size() < 3) {
        return pts;
    }
    Vector c = zeros(2);
    for (const auto& p : pts) {
        c = add(c, p);
    }
    c = scaled(c, Rational(1, static_cast<long>(pts.size())));
    auto half = [&](const Vector& p) {
        const Rational dx = p[0] - c[0];
        const Rational dy = p[1] - c[1];
        return dy > 0 || (dy == 0 && dx > 0) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const Vector& a, const Vector& b) {
        const int ha = half(a);
        const int hb = half(b);
        if (ha != hb) {
            return ha < hb;
        }
        const Rational cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
        return cross > 0;
    });
    return pts;
}

// Window sides as (coordinate, is upper end).
struct Side {
    std::size_t axis;
    bool upper;
};

HPolyhedron window_box(const Window& w, std::optional<std::size_t> skip) {
    HPolyhedron box(2);
    const Side sides[] = {{0, false}, {0, true}, {1, false}, {1, true}};
    for (std::size_t i = 0; i < 4; ++i) {
        if (skip && *skip == i) {
            continue;
        }
        Vector a = zeros(2);
        a[sides[i].axis] = sides[i].upper ? -1 : 1;
        const Rational& bound = w[sides[i].axis * 2 + (sides[i].upper ? 1 : 0)];
        box.add(a, sides[i].upper ? Rational(-bound) : bound);
    }
    return box;
}

HPolyhedron intersect(HPolyhedron a, const HPolyhedron& b) {
    for (const auto& c : b.constraints()) {
        a.add(c.a, c.b);
    }
    return a;
}

} // namespace

std::string render_svg(const HPolyhedron& body, const Window& w) {
    if (body.dimension() != 2) {
        fail(ErrorCode::DimensionMismatch, "only planar bodies can be rendered");
    }
    if (w[0] >= w[1] || w[2] >= w[3]) {
        fail(ErrorCode::WindowEmpty, "window has no interior");
    }
    const Canvas cv{w};
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth + 2 * kMargin
        << "\" height=\"" << kHeight + 2 * kMargin << "\" viewBox=\"0 0 " << kWidth + 2 * kMargin << ' '
        << kHeight + 2 * kMargin << "\">\n"
        << "  <defs>\n"
        << "    <pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" "
           "patternTransform=\"rotate(45)\">\n"
        << "      <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#555555\" stroke-width=\"2\"/>\n"
        << "    </pattern>\n"
        << "  </defs>\n"
        << "  <rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\" stroke=\"#cccccc\"/>\n";

    const auto clipped = enumerate_v_rep(intersect(body, window_box(w, std::nullopt))).canonical();
    if (!clipped.is_empty()) {
        const Matrix pts = ordered(clipped.vertices());
        out << "  <polygon class=\"body\" fill=\"#9ecae1\" fill-opacity=\"0.8\" stroke=\"#08519c\" "
               "stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            out << (i ? " " : "") << num(cv.x(pts[i][0])) << ',' << num(cv.y(pts[i][1]));
        }
        out << "\"/>\n";

        // Hatched strips outside the window sides that cut the body.
        const Side sides[] = {{0, false}, {0, true}, {1, false}, {1, true}};
        for (std::size_t i = 0; i < 4; ++i) {
            const auto [axis, upper] = sides[i];
            const Rational bound = w[axis * 2 + (upper ? 1 : 0)];
            Vector dir = zeros(2);
            dir[axis] = upper ? 1 : -1;
            const auto lp = solve_lp(intersect(body, window_box(w, i)), dir, Sense::Maximize);
            const bool beyond = lp.status == LPStatus::Unbounded ||
                                (lp.status == LPStatus::Optimal && lp.value > (upper ? bound : Rational(-bound)));
            std::vector<Rational> along;
            for (const auto& p : pts) {
                if (p[axis] == bound) {
                    along.push_back(p[1 - axis]);
                }
            }
            if (!beyond || along.size() < 2) {
                continue;
            }
            const auto [lo, hi] = std::minmax_element(along.begin(), along.end());
            Rational rx, ry, rw, rh;
            if (axis == 0) {
                rx = cv.x(bound) - (upper ? 0 : kStrip);
                ry = cv.y(*hi);
                rw = kStrip;
                rh = cv.y(*lo) - cv.y(*hi);
            } else {
                rx = cv.x(*lo);
                ry = cv.y(bound) - (upper ? kStrip : 0);
                rw = cv.x(*hi) - cv.x(*lo);
                rh = kStrip;
            }
            out << "  <rect class=\"truncated\" x=\"" << num(rx) << "\" y=\"" << num(ry) << "\" width=\"" << num(rw)
                << "\" height=\"" << num(rh) << "\" fill=\"url(#hatch)\"/>\n";
        }
    }

    // Axes.
    if (w[0] <= 0 && 0 <= w[1]) {
        out << "  <line class=\"axis\" x1=\"" << num(cv.x(0)) << "\" y1=\"" << kMargin << "\" x2=\"" << num(cv.x(0))
            << "\" y2=\"" << kMargin + kHeight << "\" stroke=\"black\"/>\n";
    }
    if (w[2] <= 0 && 0 <= w[3]) {
        out << "  <line class=\"axis\" x1=\"" << kMargin << "\" y1=\"" << num(cv.y(0)) << "\" x2=\""
            << kMargin + kWidth << "\" y2=\"" << num(cv.y(0)) << "\" stroke=\"black\"/>\n";
    }
    out << "  <text x=\"" << kMargin << "\" y=\"" << kMargin + kHeight + 20 << "\" font-size=\"11\">" << to_string(w[0])
        << "</text>\n"
        << "  <text x=\"" << kMargin + kWidth << "\" y=\"" << kMargin + kHeight + 20
        << "\" font-size=\"11\" text-anchor=\"end\">" << to_string(w[1]) << "</text>\n"
        << "  <text x=\"" << kMargin - 6 << "\" y=\"" << kMargin + kHeight << "\" font-size=\"11\" text-anchor=\"end\">"
        << to_string(w[2]) << "</text>\n"
        << "  <text x=\"" << kMargin - 6 << "\" y=\"" << kMargin + 10 << "\" font-size=\"11\" text-anchor=\"end\">"
        << to_string(w[3]) << "</text>\n";

    // Labels at the body's own vertices.
    const auto own = enumerate_v_rep(body).canonical();
    const auto box = window_box(w, std::nullopt);
    for (const auto& p : own.vertices()) {
        if (!box.contains(p)) {
            continue;
        }
        out << "  <circle class=\"vertex\" cx=\"" << num(cv.x(p[0])) << "\" cy=\"" << num(cv.y(p[1]))
            << "\" r=\"3\" fill=\"#08519c\"/>\n"
            << "  <text class=\"label\" x=\"" << num(cv.x(p[0]) + 5) << "\" y=\"" << num(cv.y(p[1]) - 5)
            << "\" font-size=\"12\">(" << to_string(p[0]) << ", " << to_string(p[1]) << ")</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_svg(const NOBody2D& body, const Window& window) {
    return render_svg(body.to_hpolyhedron(), window);
}

std::string render_svg(const VPolyhedron& body, const Window& window) {
    if (body.dimension() != 2) {
        fail(ErrorCode::DimensionMismatch, "only planar bodies can be rendered");
    }
    return render_svg(body.is_empty() ? HPolyhedron::empty(2) : to_h_representation(body), window);
}

Window default_window(const VPolyhedron& body) {
    if (body.is_empty()) {
        return {-1, 1, -1, 1};
    }
    Window w{body.vertices()[0][0], body.vertices()[0][0], body.vertices()[0][1], body.vertices()[0][1]};
    for (const auto& p : body.vertices()) {
        w[0] = std::min(w[0], p[0]);
        w[1] = std::max(w[1], p[0]);
        w[2] = std::min(w[2], p[1]);
        w[3] = std::max(w[3], p[1]);
    }
    w[0] -= 1;
    w[1] += 1;
    w[2] -= 1;
    w[3] += 1;
    for (const auto& r : body.rays()) {
        for (std::size_t axis = 0; axis < 2; ++axis) {
            if (r[axis] > 0) {
                w[axis * 2 + 1] += 2;
            } else if (r[axis] < 0) {
                w[axis * 2] -= 2;
            }
        }
    }
    return w;
}

} // namespace dvrbody
