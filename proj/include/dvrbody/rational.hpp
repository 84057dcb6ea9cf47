// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dvrbody {

using Rational = mpq_class;
using Integer = mpz_class;

// Dense exact vectors and row-major matrices.
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

// Parses "n", "-n" or "p/q" with q != 0. Throws Error{BadRational}.
[[nodiscard]] Rational parse_rational(std::string_view text);

// Canonical text form: "n" for integers, "p/q" (q > 0, lowest terms) otherwise.
[[nodiscard]] std::string to_string(const Rational& q);

// Decimal rendering with `digits` significant digits, rounded to nearest with
// ties away from zero; trailing zeros are stripped and no exponent is used.
[[nodiscard]] std::string to_decimal(const Rational& q, int digits = 20);

[[nodiscard]] bool is_integer(const Rational& q);

[[nodiscard]] Rational dot(const Vector& a, const Vector& b);

[[nodiscard]] Vector zeros(std::size_t n);

[[nodiscard]] Vector scaled(const Vector& v, const Rational& s);

[[nodiscard]] Vector add(const Vector& a, const Vector& b);

[[nodiscard]] Vector subtract(const Vector& a, const Vector& b);

[[nodiscard]] Vector multiply(const Matrix& m, const Vector& x);

[[nodiscard]] bool is_zero(const Vector& v);

// Positive rescaling of a nonzero vector to a primitive integer vector.
[[nodiscard]] Vector primitive(const Vector& v);

[[nodiscard]] std::string to_string(const Vector& v);

// Exact Gaussian elimination.
[[nodiscard]] std::size_t rank(Matrix m);

[[nodiscard]] Rational determinant(Matrix m);

// Basis of {x : m x = 0}; `columns` is needed when m has no rows.
[[nodiscard]] Matrix nullspace(Matrix m, std::size_t columns);

// Unique solution of the square system m x = rhs; nullopt when m is singular.
[[nodiscard]] std::optional<Vector> solve_square(Matrix m, Vector rhs);

} // namespace dvrbody
