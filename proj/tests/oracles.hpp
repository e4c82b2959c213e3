#pragma once

// Independent reference computations used by the tests.

#include <bihcheck/bihcheck.hpp>

#include <vector>

namespace oracle {

using bih::BigRat;
using bih::MultiPoly;

/// Laplace expansion along the first row.
inline MultiPoly cofactor_det(const bih::Matrix<MultiPoly> &m) {
    const std::size_t n = m.dim();
    if (n == 0) return MultiPoly(1);
    if (n == 1) return m(0, 0);
    MultiPoly acc;
    for (std::size_t col = 0; col < n; ++col) {
        if (m(0, col).is_zero()) continue;
        bih::Matrix<MultiPoly> minor(n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != col) minor(i - 1, jj++) = m(i, j);
        const MultiPoly term = m(0, col) * cofactor_det(minor);
        acc = col % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

/// Term-by-term evaluation with repeated multiplication.
inline BigRat eval(const MultiPoly &p, const bih::Assignment &a) {
    BigRat acc = 0;
    for (const auto &t : p.terms()) {
        BigRat v = t.coeff;
        for (bih::Var x : bih::kAllVars)
            for (bih::Exponent e = 0; e < t.mono[x]; ++e) v *= a.at(x);
        acc += v;
    }
    return acc;
}

/// prod (x - r_i) as a polynomial in v.
inline MultiPoly from_roots(const std::vector<long> &roots, bih::Var v, long lead = 1) {
    MultiPoly p(lead);
    for (long r : roots) p *= MultiPoly::var(v) - MultiPoly(r);
    return p;
}

/// Res(lead_a prod(x - a_i), lead_b prod(x - b_j)) = lead_a^nb lead_b^na prod(a_i - b_j).
inline BigRat resultant_from_roots(const std::vector<long> &a, long lead_a, const std::vector<long> &b,
                                   long lead_b) {
    BigRat acc = bih::pow(BigRat(lead_a), b.size()) * bih::pow(BigRat(lead_b), a.size());
    for (long x : a)
        for (long y : b) acc *= BigRat(x - y);
    return acc;
}

/// Values of a univariate polynomial in v (other variables assigned) at
/// deg + 1 points, interpolated and differentiated at x0: d/dv p at x0.
inline BigRat derivative_at(const MultiPoly &p, bih::Var v, bih::Assignment at) {
    const BigRat x0 = at.at(v);
    const std::size_t n = p.degree(v) + 1;
    std::vector<BigRat> xs, ys;
    for (std::size_t i = 0; i < n; ++i) {
        xs.push_back(x0 + BigRat(static_cast<long>(i)));
        at[v] = xs.back();
        ys.push_back(eval(p, at));
    }
    // Lagrange basis derivative at x0 = xs[0].
    BigRat d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        BigRat lj = 0;
        if (j == 0) {
            for (std::size_t k = 1; k < n; ++k) lj += BigRat(1) / (xs[0] - xs[k]);
        } else {
            BigRat num = 1, den = 1;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                den *= xs[j] - xs[k];
                if (k != 0) num *= xs[0] - xs[k];
            }
            lj = num / den;
        }
        d += ys[j] * lj;
    }
    return d;
}

}  // namespace oracle
