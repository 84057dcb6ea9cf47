// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dvrbody/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "dvrbody/error.hpp"

namespace dvrbody {

namespace {

bool parse_integer(std::string_view text, Integer& out) {
    if (text.empty()) {
        return false;
    }
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        i = 1;
    }
    if (i == text.size()) {
        return false;
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            return false;
        }
    }
    std::string digits(text.substr(i));
    out.set_str(digits, 10);
    if (text[0] == '-') {
        out = -out;
    }
    return true;
}

Integer pow10(long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

// Largest e with 10^e <= q, for q > 0.
long decimal_exponent(const Rational& q) {
    long e = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 10));
    auto power = [](long k) { return k >= 0 ? Rational(pow10(k)) : Rational(1, 1) / Rational(pow10(-k)); };
    while (power(e) > q) {
        --e;
    }
    while (power(e + 1) <= q) {
        ++e;
    }
    return e;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) {
        trimmed.remove_prefix(1);
    }
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
        trimmed.remove_suffix(1);
    }
    const auto slash = trimmed.find('/');
    Integer num;
    Integer den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer(trimmed, num)) {
            fail(ErrorCode::BadRational, "not a rational: \"" + std::string(text) + "\"");
        }
    } else {
        const auto den_text = trimmed.substr(slash + 1);
        if (!parse_integer(trimmed.substr(0, slash), num) || den_text.empty() || den_text[0] == '-' ||
            den_text[0] == '+' || !parse_integer(den_text, den)) {
            fail(ErrorCode::BadRational, "not a rational: \"" + std::string(text) + "\"");
        }
        if (den == 0) {
            fail(ErrorCode::BadRational, "zero denominator: \"" + std::string(text) + "\"");
        }
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str(10);
}

std::string to_decimal(const Rational& q, int digits) {
    if (q == 0) {
        return "0";
    }
    const bool negative = q < 0;
    const Rational a = abs(q);
    long e = decimal_exponent(a);
    // Scale so that the integer part carries exactly `digits` digits.
    long shift = digits - 1 - e;
    Rational scaled_value = shift >= 0 ? Rational(a * Rational(pow10(shift))) : Rational(a / Rational(pow10(-shift)));
    Integer floor_part = scaled_value.get_num() / scaled_value.get_den();
    Rational frac = scaled_value - Rational(floor_part);
    if (frac >= Rational(1, 2)) {
        ++floor_part;
    }
    if (floor_part == pow10(digits)) {
        floor_part = pow10(digits - 1);
        ++e;
        --shift;
    }
    std::string body = floor_part.get_str(10);
    // body has `digits` digits and represents value * 10^shift.
    std::string out;
    if (shift <= 0) {
        out = body + std::string(static_cast<std::size_t>(-shift), '0');
    } else if (static_cast<std::size_t>(shift) < body.size()) {
        out = body.substr(0, body.size() - shift) + "." + body.substr(body.size() - shift);
    } else {
        out = "0." + std::string(static_cast<std::size_t>(shift) - body.size(), '0') + body;
    }
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') {
            out.pop_back();
        }
        if (out.back() == '.') {
            out.pop_back();
        }
    }
    return negative ? "-" + out : out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        fail(ErrorCode::DimensionMismatch, "dot product of vectors of different lengths");
    }
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) {
            s += a[i] * b[i];
        }
    }
    return s;
}

Vector zeros(std::size_t n) { return Vector(n, Rational(0)); }

Vector scaled(const Vector& v, const Rational& s) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i] * s;
    }
    return out;
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        fail(ErrorCode::DimensionMismatch, "sum of vectors of different lengths");
    }
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

Vector subtract(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        fail(ErrorCode::DimensionMismatch, "difference of vectors of different lengths");
    }
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
    }
    return out;
}

Vector multiply(const Matrix& m, const Vector& x) {
    Vector out;
    out.reserve(m.size());
    for (const auto& row : m) {
        out.push_back(dot(row, x));
    }
    return out;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

Vector primitive(const Vector& v) {
    Integer lcm_den = 1;
    for (const auto& q : v) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
    }
    Integer g = 0;
    for (const auto& q : v) {
        Integer n = q.get_num() * (lcm_den / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) {
        return v;
    }
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = Rational(v[i].get_num() * (lcm_den / v[i].get_den()) / g);
    }
    return out;
}

std::string to_string(const Vector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            os << ", ";
        }
        os << to_string(v[i]);
    }
    os << ')';
    return os.str();
}

namespace {

// Reduces m to row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(Matrix& m, std::size_t columns) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[p], m[row]);
        const Rational inv = 1 / m[row][col];
        for (auto& x : m[row]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) {
                continue;
            }
            const Rational f = m[r][col];
            for (std::size_t c = col; c < m[r].size(); ++c) {
                m[r][c] -= f * m[row][c];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(Matrix m) {
    if (m.empty()) {
        return 0;
    }
    const auto cols = m.front().size();
    return echelon(m, cols).size();
}

Rational determinant(Matrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m[p][col] == 0) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != col) {
            std::swap(m[p], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) {
                continue;
            }
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    return det;
}

Matrix nullspace(Matrix m, std::size_t columns) {
    const auto pivots = echelon(m, columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    Matrix basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vector v = zeros(columns);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve_square(Matrix m, Vector rhs) {
    const std::size_t n = m.size();
    for (std::size_t r = 0; r < n; ++r) {
        m[r].push_back(rhs[r]);
    }
    const auto pivots = echelon(m, n);
    if (pivots.size() < n) {
        return std::nullopt;
    }
    Vector x(n);
    for (std::size_t r = 0; r < n; ++r) {
        x[r] = m[r][n];
    }
    return x;
}

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::InfeasibleEverywhere: return "InfeasibleEverywhere";
    case ErrorCode::UnboundedValue: return "UnboundedValue";
    case ErrorCode::NonIntegerDivisor: return "NonIntegerDivisor";
    case ErrorCode::NonPositiveDegree: return "NonPositiveDegree";
    case ErrorCode::InvalidFlag: return "InvalidFlag";
    case ErrorCode::EmptyAtZero: return "EmptyAtZero";
    case ErrorCode::EmptySystem: return "EmptySystem";
    case ErrorCode::UnboundedGenericPolytope: return "UnboundedGenericPolytope";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::FlagRayUnknown: return "FlagRayUnknown";
    case ErrorCode::OutsideGenericPolytope: return "OutsideGenericPolytope";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::BadRational: return "BadRational";
    case ErrorCode::WindowEmpty: return "WindowEmpty";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace dvrbody
