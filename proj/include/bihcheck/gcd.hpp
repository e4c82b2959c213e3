#pragma once

// Multivariate gcd over Q by recursive content extraction and the
// subresultant polynomial remainder sequence.

#include "errors.hpp"
#include "poly.hpp"

#include <optional>

namespace bih {

namespace detail {

inline std::optional<Var> first_variable(const MultiPoly &a, const MultiPoly &b) {
    for (Var v : kAllVars)
        if (a.depends_on(v) || b.depends_on(v)) return v;
    return std::nullopt;
}

inline MultiPoly gcd_rec(const MultiPoly &a, const MultiPoly &b, std::optional<Var> main = std::nullopt);

/// gcd of the coefficients of p viewed as a polynomial in v.
inline MultiPoly content_in(const MultiPoly &p, Var v) {
    MultiPoly g;
    for (const auto &c : coefficients_in(p, v)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? primitive_rational(c) : gcd_rec(g, c);
        if (g.is_constant()) return MultiPoly(1);
    }
    return g;
}

inline MultiPoly exact(const MultiPoly &a, const MultiPoly &b) {
    auto q = a.divide_exact(b);
    if (!q) throw Error("internal: inexact division in gcd");
    return *std::move(q);
}

/// Last nonzero element of the subresultant PRS of primitive a, b in v
/// (deg_v a >= deg_v b >= 1). Returns a constant when they are coprime.
inline MultiPoly subresultant_last(MultiPoly a, MultiPoly b, Var v) {
    MultiPoly g(1), h(1);
    for (;;) {
        const Exponent delta = a.degree(v) - b.degree(v);
        auto r = pseudo_division(a, b, v).remainder;
        if (r.is_zero()) return b;
        if (r.degree(v) == 0) return MultiPoly(1);
        a = std::move(b);
        b = exact(r, g * pow(h, delta));
        g = leading_coeff_in(a, v);
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = exact(pow(g, delta), pow(h, delta - 1));
        }
    }
}

inline MultiPoly gcd_rec(const MultiPoly &a, const MultiPoly &b, std::optional<Var> main) {
    if (a.is_zero()) return primitive_rational(b);
    if (b.is_zero()) return primitive_rational(a);
    auto v = first_variable(a, b);
    if (main && (a.depends_on(*main) || b.depends_on(*main))) v = main;
    if (!v) return MultiPoly(1);
    if (!a.depends_on(*v)) return gcd_rec(a, content_in(b, *v));
    if (!b.depends_on(*v)) return gcd_rec(content_in(a, *v), b);

    const MultiPoly ca = content_in(a, *v), cb = content_in(b, *v);
    const MultiPoly content = gcd_rec(ca, cb);
    MultiPoly pa = exact(a, ca), pb = exact(b, cb);
    if (pa.degree(*v) < pb.degree(*v)) std::swap(pa, pb);
    MultiPoly last = subresultant_last(std::move(pa), std::move(pb), *v);
    if (last.depends_on(*v)) last = exact(last, content_in(last, *v));
    else last = MultiPoly(1);
    return primitive_rational(content * last);
}

}  // namespace detail

/// Greatest common divisor over Q, scaled to coprime integer coefficients
/// with positive leading coefficient. gcd(0, 0) = 0.
inline MultiPoly gcd(const MultiPoly &a, const MultiPoly &b) { return detail::gcd_rec(a, b); }

/// Same gcd, with the remainder sequence run in v and content taken
/// recursively over the remaining variables.
inline MultiPoly gcd_in(const MultiPoly &a, const MultiPoly &b, Var v) { return detail::gcd_rec(a, b, v); }

}  // namespace bih
