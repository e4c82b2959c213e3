#pragma once

// Randomized engine properties. Each returns the number of instances
// checked and appends a description of the first failure, if any.

#include "oracles.hpp"
#include "random_poly.hpp"

#include <functional>
#include <string>

namespace props {

using namespace bih;

struct Result {
    std::string name;
    int instances = 0;
    int failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
    void record(bool ok, const std::string &what) {
        ++instances;
        if (!ok && failures++ == 0) first_failure = what;
    }
};

inline MultiPoly small_in_k(gen::Rng &rng, int max_deg = 3) {
    return rng.poly_in(Var::k, static_cast<int>(rng.integer(1, max_deg)), {Var::f}, 2, 2);
}

inline Result antisymmetry(int n, std::uint64_t seed = 101) {
    Result res{"resultant antisymmetry"};
    gen::Rng rng(seed);
    for (int i = 0; i < n; ++i) {
        const MultiPoly a = small_in_k(rng), b = small_in_k(rng);
        const bool odd = (a.degree(Var::k) * b.degree(Var::k)) % 2 == 1;
        const MultiPoly rab = resultant(a, b, Var::k), rba = resultant(b, a, Var::k);
        res.record(rab == (odd ? -rba : rba), format(a) + " | " + format(b));
    }
    return res;
}

inline Result multiplicativity(int n, std::uint64_t seed = 102) {
    Result res{"resultant multiplicativity"};
    gen::Rng rng(seed);
    for (int i = 0; i < n; ++i) {
        const MultiPoly a = small_in_k(rng, 2), b = small_in_k(rng, 2), c = small_in_k(rng, 2);
        res.record(resultant(a, b * c, Var::k) == resultant(a, b, Var::k) * resultant(a, c, Var::k),
                   format(a) + " | " + format(b) + " | " + format(c));
    }
    return res;
}

/// Planted common root gives zero; disjoint root sets give a nonzero value.
inline Result planted_root(int n, std::uint64_t seed = 103) {
    Result res{"planted common root"};
    gen::Rng rng(seed);
    for (int i = 0; i < n; ++i) {
        auto ra = rng.roots(static_cast<int>(rng.integer(0, 3)));
        auto rb = rng.roots(static_cast<int>(rng.integer(0, 3)));
        const long common = rng.integer(-6, 6);
        ra.push_back(common);
        rb.push_back(common);
        const MultiPoly a = oracle::from_roots(ra, Var::k, rng.integer(1, 4));
        const MultiPoly b = oracle::from_roots(rb, Var::k, -rng.integer(1, 4));
        res.record(resultant(a, b, Var::k).is_zero(), "planted " + format(a) + " | " + format(b));

        std::vector<long> sa, sb;
        for (int j = 0, na = static_cast<int>(rng.integer(1, 4)); j < na; ++j) sa.push_back(rng.integer(-6, 0));
        for (int j = 0, nb = static_cast<int>(rng.integer(1, 4)); j < nb; ++j) sb.push_back(rng.integer(1, 6));
        const MultiPoly ca = oracle::from_roots(sa, Var::k), cb = oracle::from_roots(sb, Var::k);
        res.record(!resultant(ca, cb, Var::k).is_zero(), "coprime " + format(ca) + " | " + format(cb));
    }
    return res;
}

inline Result path_agreement(int n, std::uint64_t seed = 104) {
    Result res{"bareiss / interpolation agreement"};
    gen::Rng rng(seed);
    for (int i = 0; i < n; ++i) {
        const MultiPoly a = rng.poly_in(Var::k, static_cast<int>(rng.integer(1, 4)), {Var::f}, 3, 2);
        const MultiPoly b = rng.poly_in(Var::k, static_cast<int>(rng.integer(1, 4)), {Var::f}, 3, 2);
        res.record(resultant(a, b, Var::k) == resultant_interp(a, b, Var::k, Var::f),
                   format(a) + " | " + format(b));
    }
    return res;
}

inline Result pseudo_division_identity(int n, std::uint64_t seed = 105) {
    Result res{"pseudo-division identity"};
    gen::Rng rng(seed);
    for (int i = 0; i < n; ++i) {
        const MultiPoly a = rng.poly_in(Var::k, static_cast<int>(rng.integer(0, 5)), {Var::f, Var::c}, 2, 2);
        const MultiPoly b = rng.poly_in(Var::k, static_cast<int>(rng.integer(0, 3)), {Var::f, Var::c}, 2, 2);
        const auto pd = pseudo_division(a, b, Var::k);
        const bool degree_ok = b.degree(Var::k) == 0 ? pd.remainder.is_zero()
                                                     : pd.remainder.degree(Var::k) < b.degree(Var::k);
        res.record(pd.scale * a == pd.quotient * b + pd.remainder && degree_ok, format(a) + " | " + format(b));
    }
    return res;
}

inline Result gcd_divisibility(int n, std::uint64_t seed = 106) {
    Result res{"gcd divisibility"};
    gen::Rng rng(seed);
    for (int i = 0; i < n; ++i) {
        const MultiPoly g = rng.nonzero_poly({Var::f, Var::k}, 1, 2, false);
        const MultiPoly a = g * rng.nonzero_poly({Var::f, Var::k}, 2, 3);
        const MultiPoly b = g * rng.nonzero_poly({Var::f, Var::k}, 2, 3);
        const Var v = a.depends_on(Var::k) || b.depends_on(Var::k) ? Var::k : Var::f;
        const GcdResult r = gcd_subresultant(a, b, v);
        const bool divides = a.divide_exact(r.gcd).has_value() && b.divide_exact(r.gcd).has_value();
        const bool planted = g.is_constant() || r.gcd.divide_exact(g).has_value();
        res.record(divides && planted, format(a) + " | " + format(b));
    }
    return res;
}

inline Result parser_round_trip(int n, std::uint64_t seed = 107) {
    Result res{"parser round trip"};
    gen::Rng rng(seed);
    const std::vector<Var> all(kAllVars.begin(), kAllVars.end());
    for (int i = 0; i < n; ++i) {
        const MultiPoly p = rng.poly(all, 4, static_cast<int>(rng.integer(0, 8)));
        res.record(parse(format(p)) == p, format(p));
    }
    return res;
}

inline std::vector<std::function<Result(int)>> all() {
    return {[](int n) { return antisymmetry(n); },         [](int n) { return multiplicativity(n); },
            [](int n) { return planted_root(n); },         [](int n) { return path_agreement(n); },
            [](int n) { return pseudo_division_identity(n); }, [](int n) { return gcd_divisibility(n); },
            [](int n) { return parser_round_trip(n); }};
}

}  // namespace props
