#pragma once

// Sparse multivariate polynomials over an exact coefficient ring.
//
// Poly<BigRat> (alias MultiPoly) is the value type used everywhere; Poly<BigInt>
// is the fraction-free form the elimination code works in. Terms are kept in a
// vector sorted strictly descending in graded-lex order, with no zero
// coefficients, so structural equality is polynomial equality.

#include "errors.hpp"
#include "rational.hpp"
#include "var.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bih {

using Exponent = std::uint64_t;

struct Monomial {
    std::array<Exponent, kNumVars> exp{};

    static Monomial of(Var v, Exponent e = 1) {
        Monomial m;
        m.exp[index(v)] = e;
        return m;
    }

    Exponent operator[](Var v) const noexcept { return exp[index(v)]; }
    Exponent &operator[](Var v) noexcept { return exp[index(v)]; }

    Exponent total_degree() const {
        Exponent d = 0;
        for (Exponent e : exp) d = checked_add(d, e);
        return d;
    }

    bool is_one() const noexcept {
        return std::all_of(exp.begin(), exp.end(), [](Exponent e) { return e == 0; });
    }

    bool divides(const Monomial &other) const noexcept {
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (exp[i] > other.exp[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial &a, const Monomial &b) {
        Monomial out;
        for (std::size_t i = 0; i < kNumVars; ++i) out.exp[i] = checked_add(a.exp[i], b.exp[i]);
        return out;
    }

    /// Requires b.divides(a).
    friend Monomial operator/(const Monomial &a, const Monomial &b) noexcept {
        Monomial out;
        for (std::size_t i = 0; i < kNumVars; ++i) out.exp[i] = a.exp[i] - b.exp[i];
        return out;
    }

    /// Graded lexicographic: total degree first, then exponents in registry order.
    friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b) {
        const Exponent da = a.total_degree(), db = b.total_degree();
        if (da != db) return da <=> db;
        return a.exp <=> b.exp;
    }
    friend bool operator==(const Monomial &, const Monomial &) = default;

    static Exponent checked_add(Exponent a, Exponent b) {
        if (a > std::numeric_limits<Exponent>::max() - b) throw ExponentOverflow("exponent overflow");
        return a + b;
    }
    static Exponent checked_mul(Exponent a, Exponent b) {
        if (a != 0 && b > std::numeric_limits<Exponent>::max() / a)
            throw ExponentOverflow("exponent overflow");
        return a * b;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (Exponent e : m.exp) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ull;
        return h;
    }
};

namespace detail {

inline bool exact_quotient(const BigRat &a, const BigRat &b, BigRat &out) {
    out = a / b;
    return true;
}

inline bool exact_quotient(const BigInt &a, const BigInt &b, BigInt &out) {
    if (mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) == 0) return false;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return true;
}

}  // namespace detail

template <typename Coeff>
class Poly {
  public:
    struct Term {
        Monomial mono;
        Coeff coeff;
        friend bool operator==(const Term &, const Term &) = default;
    };

    Poly() = default;
    Poly(long c) : Poly(Coeff(c)) {}
    Poly(const Coeff &c) {
        if (c != 0) terms_.push_back({Monomial{}, c});
    }
    Poly(const Monomial &m, const Coeff &c) {
        if (c != 0) terms_.push_back({m, c});
    }

    static Poly var(Var v, Exponent e = 1) { return Poly(Monomial::of(v, e), Coeff(1)); }

    /// Builds from arbitrary (monomial, coefficient) pairs, merging duplicates.
    static Poly from_terms(std::vector<Term> raw) {
        std::sort(raw.begin(), raw.end(), [](const Term &a, const Term &b) { return a.mono > b.mono; });
        Poly out;
        for (auto &t : raw) {
            if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
                out.terms_.back().coeff += t.coeff;
                if (out.terms_.back().coeff == 0) out.terms_.pop_back();
            } else if (t.coeff != 0) {
                out.terms_.push_back(std::move(t));
            }
        }
        return out;
    }

    const std::vector<Term> &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
    }
    /// Constant term (zero if absent).
    Coeff constant_value() const {
        if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
        return Coeff(0);
    }

    /// Leading term under graded-lex; requires nonzero.
    const Term &leading() const { return terms_.front(); }
    const Coeff &leading_coeff() const { return terms_.front().coeff; }

    Exponent degree(Var v) const noexcept {
        Exponent d = 0;
        for (const auto &t : terms_) d = std::max(d, t.mono[v]);
        return d;
    }
    Exponent min_degree(Var v) const noexcept {
        if (terms_.empty()) return 0;
        Exponent d = std::numeric_limits<Exponent>::max();
        for (const auto &t : terms_) d = std::min(d, t.mono[v]);
        return d;
    }
    Exponent total_degree() const {
        Exponent d = 0;
        for (const auto &t : terms_) d = std::max(d, t.mono.total_degree());
        return d;
    }
    bool depends_on(Var v) const noexcept { return degree(v) > 0; }

    /// Variables that occur, in registry order.
    std::vector<Var> variables() const {
        std::vector<Var> out;
        for (Var v : kAllVars)
            if (depends_on(v)) out.push_back(v);
        return out;
    }

    friend bool operator==(const Poly &, const Poly &) = default;

    Poly operator-() const {
        Poly out = *this;
        for (auto &t : out.terms_) t.coeff = -t.coeff;
        return out;
    }

    friend Poly operator+(const Poly &a, const Poly &b) { return merge(a, b, false); }
    friend Poly operator-(const Poly &a, const Poly &b) { return merge(a, b, true); }

    friend Poly operator*(const Poly &a, const Poly &b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (b.size() == 1) return a.mul_term(b.terms_.front());
        if (a.size() == 1) return b.mul_term(a.terms_.front());
        std::unordered_map<Monomial, Coeff, MonomialHash> acc;
        acc.reserve(a.size() * b.size());
        Coeff prod;
        for (const auto &ta : a.terms_)
            for (const auto &tb : b.terms_) {
                prod = ta.coeff * tb.coeff;
                auto [it, fresh] = acc.try_emplace(ta.mono * tb.mono, prod);
                if (!fresh) it->second += prod;
            }
        Poly out;
        out.terms_.reserve(acc.size());
        for (auto &[mono, coeff] : acc)
            if (coeff != 0) out.terms_.push_back({mono, std::move(coeff)});
        std::sort(out.terms_.begin(), out.terms_.end(),
                  [](const Term &x, const Term &y) { return x.mono > y.mono; });
        return out;
    }

    friend Poly operator*(const Poly &a, const Coeff &s) {
        if (s == 0) return {};
        Poly out = a;
        for (auto &t : out.terms_) t.coeff *= s;
        return out;
    }
    friend Poly operator*(const Coeff &s, const Poly &a) { return a * s; }
    friend Poly operator*(const Poly &a, long s) { return a * Coeff(s); }
    friend Poly operator*(long s, const Poly &a) { return a * Coeff(s); }

    Poly &operator+=(const Poly &o) { return *this = *this + o; }
    Poly &operator-=(const Poly &o) { return *this = *this - o; }
    Poly &operator*=(const Poly &o) { return *this = *this * o; }

    Poly mul_term(const Term &t) const {
        Poly out;
        out.terms_.reserve(terms_.size());
        for (const auto &x : terms_) out.terms_.push_back({x.mono * t.mono, x.coeff * t.coeff});
        return out;
    }

    /// Exact division; nullopt when the divisor does not divide this exactly.
    /// Throws ZeroDivisor for a zero divisor.
    std::optional<Poly> divide_exact(const Poly &d) const {
        if (d.is_zero()) throw ZeroDivisor("division by the zero polynomial");
        if (d.is_constant()) {
            Poly out;
            out.terms_.reserve(terms_.size());
            const Coeff &c = d.leading_coeff();
            for (const auto &t : terms_) {
                Coeff q;
                if (!detail::exact_quotient(t.coeff, c, q)) return std::nullopt;
                out.terms_.push_back({t.mono, std::move(q)});
            }
            return out;
        }
        std::vector<Term> quot;
        Poly rem = *this;
        const Term &lt = d.leading();
        while (!rem.is_zero()) {
            const Term &head = rem.leading();
            if (!lt.mono.divides(head.mono)) return std::nullopt;
            Term q{head.mono / lt.mono, Coeff()};
            if (!detail::exact_quotient(head.coeff, lt.coeff, q.coeff)) return std::nullopt;
            rem = rem - d.mul_term(q);
            quot.push_back(std::move(q));
        }
        Poly out;
        out.terms_ = std::move(quot);
        return out;
    }

  private:
    static Poly merge(const Poly &a, const Poly &b, bool subtract) {
        Poly out;
        out.terms_.reserve(a.size() + b.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->mono > ib->mono)) {
                out.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->mono > ia->mono) {
                out.terms_.push_back({ib->mono, subtract ? Coeff(-ib->coeff) : ib->coeff});
                ++ib;
            } else {
                Coeff c = subtract ? Coeff(ia->coeff - ib->coeff) : Coeff(ia->coeff + ib->coeff);
                if (c != 0) out.terms_.push_back({ia->mono, std::move(c)});
                ++ia;
                ++ib;
            }
        }
        return out;
    }

    std::vector<Term> terms_;
};

using MultiPoly = Poly<BigRat>;
using IntPoly = Poly<BigInt>;

using Assignment = std::map<Var, BigRat>;

// ---------------------------------------------------------------------------
// Free algebra on polynomials.

template <typename C>
Poly<C> pow(const Poly<C> &base, Exponent e) {
    Poly<C> result(C(1));
    Poly<C> sq = base;
    while (e > 0) {
        if (e & 1u) result *= sq;
        e >>= 1u;
        if (e > 0) sq *= sq;
    }
    return result;
}

/// Coefficient of v^d, with v absent from the result.
template <typename C>
Poly<C> coefficient(const Poly<C> &p, Var v, Exponent d) {
    std::vector<typename Poly<C>::Term> raw;
    for (const auto &t : p.terms())
        if (t.mono[v] == d) {
            auto mono = t.mono;
            mono[v] = 0;
            raw.push_back({mono, t.coeff});
        }
    return Poly<C>::from_terms(std::move(raw));
}

/// Coefficient list in v: out[d] multiplies v^d. Empty for the zero polynomial.
template <typename C>
std::vector<Poly<C>> coefficients_in(const Poly<C> &p, Var v) {
    if (p.is_zero()) return {};
    std::vector<std::vector<typename Poly<C>::Term>> buckets(p.degree(v) + 1);
    for (const auto &t : p.terms()) {
        auto mono = t.mono;
        const auto d = mono[v];
        mono[v] = 0;
        buckets[d].push_back({mono, t.coeff});
    }
    std::vector<Poly<C>> out;
    out.reserve(buckets.size());
    for (auto &b : buckets) out.push_back(Poly<C>::from_terms(std::move(b)));
    return out;
}

/// Inverse of coefficients_in.
template <typename C>
Poly<C> from_coefficients(std::span<const Poly<C>> coeffs, Var v) {
    std::vector<typename Poly<C>::Term> raw;
    for (std::size_t d = 0; d < coeffs.size(); ++d)
        for (const auto &t : coeffs[d].terms()) {
            auto mono = t.mono;
            mono[v] = Monomial::checked_add(mono[v], d);
            raw.push_back({mono, t.coeff});
        }
    return Poly<C>::from_terms(std::move(raw));
}

template <typename C>
Poly<C> leading_coeff_in(const Poly<C> &p, Var v) {
    return coefficient(p, v, p.degree(v));
}

template <typename C>
Poly<C> derivative(const Poly<C> &p, Var v) {
    std::vector<typename Poly<C>::Term> raw;
    for (const auto &t : p.terms()) {
        const auto e = t.mono[v];
        if (e == 0) continue;
        auto mono = t.mono;
        mono[v] = e - 1;
        raw.push_back({mono, t.coeff * C(static_cast<unsigned long>(e))});
    }
    return Poly<C>::from_terms(std::move(raw));
}

/// Replaces every occurrence of v by q and expands.
template <typename C>
Poly<C> substitute(const Poly<C> &p, Var v, const Poly<C> &q) {
    const auto coeffs = coefficients_in(p, v);
    // Horner in q.
    Poly<C> out;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * q + *it;
    return out;
}

/// Binds v to a rational value, leaving other variables symbolic.
inline MultiPoly specialize(const MultiPoly &p, Var v, const BigRat &value) {
    std::vector<MultiPoly::Term> raw;
    raw.reserve(p.size());
    for (const auto &t : p.terms()) {
        auto mono = t.mono;
        const auto e = mono[v];
        mono[v] = 0;
        raw.push_back({mono, e == 0 ? t.coeff : BigRat(t.coeff * bih::pow(value, e))});
    }
    return MultiPoly::from_terms(std::move(raw));
}

inline MultiPoly specialize(MultiPoly p, const Assignment &values) {
    for (const auto &[v, x] : values) p = specialize(p, v, x);
    return p;
}

/// Exact value of p under a full assignment; throws MissingAssignment otherwise.
inline BigRat evaluate(const MultiPoly &p, const Assignment &values) {
    for (Var v : p.variables())
        if (!values.contains(v)) throw MissingAssignment("no value for variable " + std::string(name(v)));
    BigRat sum = 0;
    for (const auto &t : p.terms()) {
        BigRat term = t.coeff;
        for (Var v : kAllVars)
            if (auto e = t.mono[v]; e > 0) term *= bih::pow(values.at(v), e);
        sum += term;
    }
    return sum;
}

template <typename C>
struct PseudoDivision {
    Poly<C> quotient;
    Poly<C> remainder;
    Poly<C> scale;
};

/// scale * a = quotient * b + remainder, deg_v(remainder) < deg_v(b),
/// scale = lc_v(b)^(deg_v(a) - deg_v(b) + 1) (or 1 when deg_v(a) < deg_v(b)).
template <typename C>
PseudoDivision<C> pseudo_division(const Poly<C> &a, const Poly<C> &b, Var v) {
    if (b.is_zero()) throw ZeroDivisor("pseudo-division by the zero polynomial");
    const Exponent db = b.degree(v);
    if (a.is_zero() || a.degree(v) < db) return {Poly<C>(), a, Poly<C>(C(1))};
    const Exponent steps = a.degree(v) - db + 1;
    const auto lc = leading_coeff_in(b, v);
    auto bcoef = coefficients_in(b, v);
    auto rem = coefficients_in(a, v);
    std::vector<Poly<C>> quot(steps);
    for (Exponent i = steps; i-- > 0;) {
        // rem has degree <= db + i; top coefficient is rem[db + i]
        const Poly<C> top = rem[db + i];
        for (auto &q : quot) q *= lc;
        quot[i] += top;
        for (std::size_t j = 0; j < db + i; ++j) rem[j] *= lc;
        rem[db + i] = Poly<C>();
        if (!top.is_zero())
            for (std::size_t j = 0; j < db; ++j) rem[i + j] -= top * bcoef[j];
    }
    rem.resize(db);
    return {from_coefficients<C>(quot, v), from_coefficients<C>(rem, v), pow(lc, steps)};
}

// ---------------------------------------------------------------------------
// Content and conversions between rational and integer coefficients.

/// Smallest positive integer D with D * p integral.
inline BigInt denominator_lcm(const MultiPoly &p) {
    BigInt l = 1;
    for (const auto &t : p.terms()) l = lcm(l, t.coeff.get_den());
    return l;
}

/// Returns (D, D*p) with D = denominator_lcm(p).
inline std::pair<BigInt, IntPoly> clear_denominators(const MultiPoly &p) {
    const BigInt d = denominator_lcm(p);
    std::vector<IntPoly::Term> raw;
    raw.reserve(p.size());
    for (const auto &t : p.terms()) raw.push_back({t.mono, divexact(d, t.coeff.get_den()) * t.coeff.get_num()});
    IntPoly out;
    out = IntPoly::from_terms(std::move(raw));
    return {d, out};
}

inline MultiPoly to_rational(const IntPoly &p) {
    std::vector<MultiPoly::Term> raw;
    raw.reserve(p.size());
    for (const auto &t : p.terms()) raw.push_back({t.mono, BigRat(t.coeff)});
    return MultiPoly::from_terms(std::move(raw));
}

/// Nonnegative gcd of all integer coefficients (0 for the zero polynomial).
inline BigInt integer_content(const IntPoly &p) {
    BigInt g = 0;
    for (const auto &t : p.terms()) {
        g = gcd(g, t.coeff);
        if (g == 1) break;
    }
    return g;
}

/// Rational content: the positive rational q with p / q having coprime
/// integer coefficients. Zero for the zero polynomial.
inline BigRat rational_content(const MultiPoly &p) {
    if (p.is_zero()) return 0;
    auto [d, ip] = clear_denominators(p);
    return make_rat(integer_content(ip), d);
}

/// p scaled to coprime integer coefficients with positive leading coefficient.
inline MultiPoly primitive_rational(const MultiPoly &p) {
    if (p.is_zero()) return p;
    BigRat q = rational_content(p);
    if (p.leading_coeff() < 0) q = -q;
    return p * BigRat(1 / q);
}

}  // namespace bih
