#pragma once

// Elimination: Sylvester matrices, fraction-free determinants, resultants by
// determinant and by evaluation/interpolation, and gcds.

#include "errors.hpp"
#include "gcd.hpp"
#include "poly.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bih {

/// Dense square matrix, row-major.
template <typename T>
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
        data_.reserve(n_ * n_);
        for (const auto &row : rows) {
            if (row.size() != n_) throw std::invalid_argument("matrix is not square");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t dim() const noexcept { return n_; }
    T &operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T &operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

  private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

struct SylvesterMatrix {
    Matrix<MultiPoly> entries;
    MultiPoly a;
    MultiPoly b;
    Var var;
};

/// Rows 0..deg_v(B)-1 hold shifted coefficients of A (highest degree first),
/// the remaining deg_v(A) rows those of B.
inline SylvesterMatrix sylvester(const MultiPoly &a, const MultiPoly &b, Var v) {
    if (a.is_zero() || b.is_zero()) throw ZeroInput("sylvester: zero polynomial input");
    const std::size_t da = a.degree(v), db = b.degree(v);
    if (da == 0 && db == 0) throw BothConstant("sylvester: both inputs are free of " + std::string(name(v)));
    const auto ca = coefficients_in(a, v), cb = coefficients_in(b, v);
    SylvesterMatrix out{Matrix<MultiPoly>(da + db), a, b, v};
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j <= da; ++j) out.entries(i, i + j) = ca[da - j];
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j <= db; ++j) out.entries(db + i, i + j) = cb[db - j];
    return out;
}

/// Fraction-free (Bareiss) determinant over an integral domain whose
/// elements support divide_exact. Row swaps on zero pivots.
template <typename C>
Poly<C> bareiss_det_integral(Matrix<Poly<C>> m) {
    const std::size_t n = m.dim();
    if (n == 0) return Poly<C>(C(1));
    bool negate = false;
    Poly<C> prev(C(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return Poly<C>();
            m.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly<C> t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                auto q = t.divide_exact(prev);
                if (!q) throw Error("internal: inexact Bareiss division");
                m(i, j) = *std::move(q);
            }
            m(i, k) = Poly<C>();
        }
        prev = m(k, k);
    }
    Poly<C> det = m(n - 1, n - 1);
    return negate ? -det : det;
}

/// Exact determinant. Each row is scaled to integer coefficients, the
/// integer determinant is taken fraction-free, and the row scales divided out.
inline MultiPoly bareiss_det(const Matrix<MultiPoly> &m) {
    const std::size_t n = m.dim();
    Matrix<IntPoly> im(n);
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row_den = 1;
        for (std::size_t j = 0; j < n; ++j) row_den = lcm(row_den, denominator_lcm(m(i, j)));
        scale *= row_den;
        for (std::size_t j = 0; j < n; ++j) {
            auto [d, ip] = clear_denominators(m(i, j));
            im(i, j) = ip * BigInt(divexact(row_den, d));
        }
    }
    return to_rational(bareiss_det_integral(std::move(im))) * make_rat(BigInt(1), scale);
}

/// Sylvester resultant. Both inputs v-free gives 1; a v-free nonzero a
/// against b of v-degree n gives a^n. Throws ZeroInput on a zero input.
inline MultiPoly resultant(const MultiPoly &a, const MultiPoly &b, Var v) {
    if (a.is_zero() || b.is_zero()) throw ZeroInput("resultant: zero polynomial input");
    const Exponent da = a.degree(v), db = b.degree(v);
    if (da == 0 && db == 0) return MultiPoly(1);
    if (da == 0) return pow(a, db);
    if (db == 0) return pow(b, da);
    return bareiss_det(sylvester(a, b, v).entries);
}

// ---------------------------------------------------------------------------
// Univariate numeric resultants and the evaluation/interpolation path.

/// Dense univariate polynomial over Q, index = degree, no trailing zeros.
using DenseRat = std::vector<BigRat>;

inline void trim(DenseRat &p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Resultant of dense univariate polynomials by the Euclidean algorithm over
/// Q. Agrees with the Sylvester determinant (A rows first), including sign.
inline BigRat resultant_dense(DenseRat a, DenseRat b) {
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) throw ZeroInput("resultant: zero polynomial input");
    BigRat acc = 1;
    for (;;) {
        const std::size_t da = a.size() - 1, db = b.size() - 1;
        if (db == 0) return acc * pow(b[0], da);
        if (da == 0) return acc * pow(a[0], db);
        if (da < db) {
            if ((da * db) % 2 == 1) acc = -acc;
            std::swap(a, b);
            continue;
        }
        // a = q b + rem ; Res(a, b) = (-1)^(da db) lc(b)^(da - drem) Res(b, rem)
        const BigRat lb = b.back();
        for (std::size_t shift = da - db + 1; shift-- > 0;) {
            const BigRat t = a[shift + db] / lb;
            if (t == 0) continue;
            for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= t * b[j];
        }
        a.resize(db);
        trim(a);
        if (a.empty()) return 0;
        const std::size_t dr = a.size() - 1;
        if ((da * db) % 2 == 1) acc = -acc;
        acc *= pow(lb, da - dr);
        std::swap(a, b);
    }
}

namespace detail {

/// Coefficients of p in v, each as a dense polynomial in the spectator.
inline std::vector<DenseRat> dense_coefficients(const MultiPoly &p, Var v, Var spectator) {
    std::vector<DenseRat> out;
    for (const auto &c : coefficients_in(p, v)) {
        DenseRat d(c.degree(spectator) + 1);
        for (const auto &t : c.terms()) d[t.mono[spectator]] = t.coeff;
        trim(d);
        out.push_back(std::move(d));
    }
    return out;
}

inline BigRat horner(const DenseRat &p, const BigRat &x) {
    BigRat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// Newton interpolation through (xs[i], ys[i]); returns monomial coefficients.
inline DenseRat interpolate(const std::vector<BigRat> &xs, std::vector<BigRat> ys) {
    const std::size_t n = xs.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
    DenseRat out(n);
    for (std::size_t i = n; i-- > 0;) {
        // out = out * (x - xs[i]) + ys[i]
        for (std::size_t j = n - 1; j > 0; --j) out[j] = out[j - 1] - xs[i] * out[j];
        out[0] = ys[i] - xs[i] * out[0];
    }
    trim(out);
    return out;
}

}  // namespace detail

/// Resultant of A, B in v where both involve only v and the spectator.
/// Samples the spectator at consecutive integers from 1 (skipping points that
/// kill a leading v-coefficient), takes univariate resultants, interpolates,
/// and checks one further point.
/// With a deadline, throws Timeout once it has passed (checked per sample).
inline MultiPoly resultant_interp(const MultiPoly &a, const MultiPoly &b, Var v, Var spectator,
                                  std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt) {
    if (a.is_zero() || b.is_zero()) throw ZeroInput("resultant: zero polynomial input");
    for (const auto *p : {&a, &b})
        for (Var w : p->variables())
            if (w != v && w != spectator)
                throw std::invalid_argument("resultant_interp: unexpected variable " + std::string(name(w)));
    const Exponent da = a.degree(v), db = b.degree(v);
    if (da == 0 || db == 0) return resultant(a, b, v);

    const auto ca = detail::dense_coefficients(a, v, spectator);
    const auto cb = detail::dense_coefficients(b, v, spectator);
    const std::size_t bound = a.degree(spectator) * db + b.degree(spectator) * da;
    const std::size_t needed = bound + 2;  // interpolation points + consistency guard
    const std::size_t max_tries = needed + (ca.back().size() - 1) + (cb.back().size() - 1);

    std::vector<BigRat> xs, ys;
    DenseRat ua(ca.size()), ub(cb.size());
    for (long x = 1; xs.size() < needed; ++x) {
        if (static_cast<std::size_t>(x) > max_tries)
            throw InsufficientSamples("resultant_interp: ran out of sample points");
        if (deadline && std::chrono::steady_clock::now() > *deadline)
            throw Timeout("resultant_interp: deadline passed");
        const BigRat bx(x);
        if (detail::horner(ca.back(), bx) == 0 || detail::horner(cb.back(), bx) == 0) continue;
        for (std::size_t i = 0; i < ca.size(); ++i) ua[i] = detail::horner(ca[i], bx);
        for (std::size_t i = 0; i < cb.size(); ++i) ub[i] = detail::horner(cb[i], bx);
        xs.push_back(bx);
        ys.push_back(resultant_dense(ua, ub));
    }
    const BigRat guard_x = xs.back(), guard_y = ys.back();
    xs.pop_back();
    ys.pop_back();
    const DenseRat coeffs = detail::interpolate(xs, ys);
    if (detail::horner(coeffs, guard_x) != guard_y)
        throw Error("resultant_interp: degree bound violated at the guard point");

    std::vector<MultiPoly::Term> raw;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) raw.push_back({Monomial::of(spectator, i), coeffs[i]});
    return MultiPoly::from_terms(std::move(raw));
}

struct GcdResult {
    MultiPoly gcd;
    Exponent cofactor_degree_a = 0;
    Exponent cofactor_degree_b = 0;
};

/// gcd of A and B, primitive with positive leading coefficient, computed by
/// the subresultant remainder sequence in v.
inline GcdResult gcd_subresultant(const MultiPoly &a, const MultiPoly &b, Var v) {
    if (a.is_zero() || b.is_zero()) throw ZeroInput("gcd: zero polynomial input");
    GcdResult out;
    out.gcd = gcd_in(a, b, v);
    const Exponent dg = out.gcd.degree(v);
    out.cofactor_degree_a = a.degree(v) - dg;
    out.cofactor_degree_b = b.degree(v) - dg;
    return out;
}

}  // namespace bih
