#pragma once

#include <bihcheck/bihcheck.hpp>

#include <random>
#include <vector>

namespace gen {

using bih::MultiPoly;
using bih::Var;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng); }

    bih::BigRat rational(long span = 9, long max_den = 4) {
        long num = integer(-span, span);
        if (num == 0) num = 1;
        return bih::make_rat(num, integer(1, max_den));
    }

    /// Up to `terms` random terms over `vars` with per-variable degree <= max_deg.
    MultiPoly poly(const std::vector<Var> &vars, int max_deg, int terms, bool rational_coeffs = true) {
        std::vector<MultiPoly::Term> raw;
        for (int i = 0; i < terms; ++i) {
            bih::Monomial m;
            for (Var v : vars) m[v] = static_cast<bih::Exponent>(integer(0, max_deg));
            raw.push_back({m, rational_coeffs ? rational() : bih::BigRat(integer(-9, 9))});
        }
        return MultiPoly::from_terms(std::move(raw));
    }

    MultiPoly nonzero_poly(const std::vector<Var> &vars, int max_deg, int terms, bool rational_coeffs = true) {
        for (;;) {
            MultiPoly p = poly(vars, max_deg, terms, rational_coeffs);
            if (!p.is_zero()) return p;
        }
    }

    /// Polynomial in v of exact degree deg with coefficients in the `coeff_vars`.
    MultiPoly poly_in(Var v, int deg, const std::vector<Var> &coeff_vars, int coeff_deg, int coeff_terms) {
        MultiPoly out;
        for (int d = 0; d <= deg; ++d) {
            MultiPoly c = d == deg ? nonzero_poly(coeff_vars, coeff_deg, coeff_terms)
                                   : poly(coeff_vars, coeff_deg, coeff_terms);
            out += c * MultiPoly::var(v, d);
        }
        return out;
    }

    std::vector<long> roots(int n, long lo = -6, long hi = 6) {
        std::vector<long> out;
        for (int i = 0; i < n; ++i) out.push_back(integer(lo, hi));
        return out;
    }
};

}  // namespace gen
