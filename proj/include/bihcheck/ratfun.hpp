#pragma once

#include "gcd.hpp"
#include "poly.hpp"

namespace bih {

/// Reduced quotient num/den of two polynomials. The denominator is stored
/// primitive (coprime integer coefficients, positive leading coefficient) and
/// gcd(num, den) is constant.
class RatFun {
  public:
    RatFun() : num_(), den_(1) {}
    RatFun(const MultiPoly &p) : num_(p), den_(1) {}
    RatFun(long c) : num_(c), den_(1) {}

    /// Throws ZeroDivisor if den is zero.
    static RatFun make(const MultiPoly &num, const MultiPoly &den) {
        if (den.is_zero()) throw ZeroDivisor("rational function with zero denominator");
        RatFun out;
        if (num.is_zero()) return out;
        const MultiPoly g = gcd(num, den);
        MultiPoly n = num, d = den;
        if (!g.is_constant()) {
            n = *num.divide_exact(g);
            d = *den.divide_exact(g);
        }
        BigRat scale = rational_content(d);
        if (d.leading_coeff() < 0) scale = -scale;
        out.num_ = n * BigRat(1 / scale);
        out.den_ = d * BigRat(1 / scale);
        return out;
    }

    const MultiPoly &num() const noexcept { return num_; }
    const MultiPoly &den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }

    friend bool operator==(const RatFun &a, const RatFun &b) { return a.num_ * b.den_ == b.num_ * a.den_; }

    RatFun operator-() const { return unchecked(-num_, den_); }

    friend RatFun operator+(const RatFun &a, const RatFun &b) {
        if (a.den_ == b.den_) return make(a.num_ + b.num_, a.den_);
        return make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun &a, const RatFun &b) { return a + (-b); }
    friend RatFun operator*(const RatFun &a, const RatFun &b) {
        return make(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun &a, const RatFun &b) {
        if (b.is_zero()) throw ZeroDivisor("division by the zero rational function");
        return make(a.num_ * b.den_, a.den_ * b.num_);
    }

  private:
    static RatFun unchecked(MultiPoly n, MultiPoly d) {
        RatFun out;
        out.num_ = std::move(n);
        out.den_ = std::move(d);
        return out;
    }

    MultiPoly num_;
    MultiPoly den_;
};

inline RatFun ratfun_normalize(const MultiPoly &num, const MultiPoly &den) { return RatFun::make(num, den); }

/// Quotient rule.
inline RatFun derivative(const RatFun &q, Var v) {
    return RatFun::make(derivative(q.num(), v) * q.den() - q.num() * derivative(q.den(), v), q.den() * q.den());
}

inline RatFun substitute(const RatFun &q, Var v, const RatFun &value) {
    // Homogenize: num(v = a/b) = N(a, b) / b^deg, same for den.
    const auto expand = [&](const MultiPoly &p, Exponent deg) {
        const auto coeffs = coefficients_in(p, v);
        MultiPoly out;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            out += coeffs[i] * pow(value.num(), i) * pow(value.den(), deg - i);
        return out;
    };
    const Exponent dn = q.num().degree(v), dd = q.den().degree(v);
    const Exponent top = std::max(dn, dd);
    MultiPoly n = expand(q.num(), dn) * pow(value.den(), top - dn);
    MultiPoly d = expand(q.den(), dd) * pow(value.den(), top - dd);
    return RatFun::make(n, d);
}

}  // namespace bih
