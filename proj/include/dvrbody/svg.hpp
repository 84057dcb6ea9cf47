// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "dvrbody/curve_body.hpp"
#include "dvrbody/job.hpp"

namespace dvrbody {

// Body clipped to the window, filled; window edges that cut the body are
// hatched; axes through the origin when visible; visible vertices labelled
// with exact "p/q" coordinates. Drawing coordinates are rendered with
// to_decimal at 20 significant digits. Throws WindowEmpty for a degenerate
// window and DimensionMismatch for non-planar input.
[[nodiscard]] std::string render_svg(const HPolyhedron& body, const Window& window);
[[nodiscard]] std::string render_svg(const NOBody2D& body, const Window& window);
[[nodiscard]] std::string render_svg(const VPolyhedron& body, const Window& window);

// Bounding box of the vertices, padded by one and stretched by two along
// the recession directions.
[[nodiscard]] Window default_window(const VPolyhedron& body);

} // namespace dvrbody
