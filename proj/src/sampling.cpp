// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#include "dvrbody/sampling.hpp"

#include <optional>

#include "dvrbody/error.hpp"

namespace dvrbody {

Rational random_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi, long max_den) {
    if (hi < lo) {
        fail(ErrorCode::InvalidArgument, "random_rational: empty range");
    }
    if (hi == lo) {
        return lo;
    }
    std::uniform_int_distribution<long> den_dist(1, max_den);
    for (int attempt = 0; attempt < 16; ++attempt) {
        const long den = den_dist(rng);
        const Rational a = lo * den;
        const Rational b = hi * den;
        Integer k_lo;
        Integer k_hi;
        mpz_cdiv_q(k_lo.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
        mpz_fdiv_q(k_hi.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
        if (k_lo > k_hi) {
            continue;
        }
        const Integer span = k_hi - k_lo;
        const unsigned long width = span.fits_ulong_p() ? span.get_ui() : 1000000UL;
        const auto offset = std::uniform_int_distribution<unsigned long>(0, width)(rng);
        Rational q(Integer(k_lo + offset), den);
        q.canonicalize();
        return q;
    }
    return (lo + hi) / 2;
}

std::vector<Vector> sample_points(const HPolyhedron& p, std::size_t count, std::mt19937_64& rng, std::size_t steps) {
    const std::size_t n = p.dimension();
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Vector> out;
    while (out.size() < count) {
        Vector objective(n);
        for (auto& c : objective) {
            c = coeff(rng);
        }
        const auto lp = solve_lp(p, objective, Sense::Minimize);
        if (lp.status == LPStatus::Infeasible) {
            fail(ErrorCode::InvalidArgument, "cannot sample an empty polyhedron");
        }
        if (lp.status == LPStatus::Unbounded) {
            fail(ErrorCode::InvalidArgument, "cannot sample an unbounded polyhedron");
        }
        Vector x = lp.witness;
        for (std::size_t s = 0; s < steps && n > 0; ++s) {
            Vector d(n);
            do {
                for (auto& c : d) {
                    c = coeff(rng);
                }
            } while (is_zero(d));
            std::optional<Rational> lo;
            std::optional<Rational> hi;
            for (const auto& c : p.constraints()) {
                const Rational ad = dot(c.a, d);
                if (ad == 0) {
                    continue;
                }
                const Rational bound = (c.b - dot(c.a, x)) / ad;
                if (ad > 0) {
                    if (!lo || bound > *lo) {
                        lo = bound;
                    }
                } else if (!hi || bound < *hi) {
                    hi = bound;
                }
            }
            if (!lo || !hi) {
                fail(ErrorCode::InvalidArgument, "cannot sample an unbounded polyhedron");
            }
            x = add(x, scaled(d, random_rational(rng, *lo, *hi)));
        }
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace dvrbody
