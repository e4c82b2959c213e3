#pragma once

// Named polynomials of the three-curvature biharmonic problem: the tangent
// relation coefficients P, Q, R, the relations H and K in (f, k), and the
// derived objects used by the checks in checks.hpp.

#include "errors.hpp"
#include "expr.hpp"
#include "manifest_data.hpp"
#include "poly.hpp"
#include "ratfun.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bih {

/// Which of m, r, c are fixed integers. Unset values stay symbolic.
struct CoreParams {
    std::optional<long> m, r, c;

    static CoreParams generic() { return {}; }
    static CoreParams specialized(long m, long r, long c) { return {m, r, c}; }
    static CoreParams symbolic_c(long m, long r) { return {m, r, std::nullopt}; }

    bool fixes_mr() const noexcept { return m.has_value(); }
};

inline void validate(const CoreParams &p) {
    if (p.m.has_value() != p.r.has_value()) throw InvalidParameters("m and r must be fixed together");
    if (p.m) {
        if (*p.m < 4) throw InvalidParameters("m must be at least 4, got " + std::to_string(*p.m));
        if (*p.r < 2 || *p.r > *p.m - 1)
            throw InvalidParameters("r must satisfy 2 <= r <= m - 1, got r = " + std::to_string(*p.r));
    }
    if (p.c && (*p.c < -1 || *p.c > 1)) throw InvalidParameters("c must be -1, 0 or 1");
}

inline Assignment assignment_of(const CoreParams &p) {
    Assignment a;
    if (p.m) a[Var::m] = *p.m;
    if (p.r) a[Var::r] = *p.r;
    if (p.c) a[Var::c] = *p.c;
    return a;
}

/// P, Q, R, H, K for one parameter choice. When m, r are symbolic every
/// (m - r) denominator is cleared once; `clearing` records that factor.
struct Core {
    CoreParams params;
    MultiPoly clearing;  // m - r when generic, 1 otherwise
    MultiPoly P, Q;
    MultiPoly R;  // clearing * R
    MultiPoly H;  // clearing * H
    MultiPoly num_derf, den_derf;
    MultiPoly K;  // clearing * K
};

struct CatalogEntry {
    std::string name;
    std::variant<MultiPoly, RatFun> value;
    std::string source;
    std::string anchor;
};

/// Relation obtained by differentiating h along the curve, where
/// dk/df = num/den: K = dh/df * num + dh/dk * den.
inline MultiPoly along_curve(const MultiPoly &h, const MultiPoly &num, const MultiPoly &den) {
    return derivative(h, Var::f) * num + derivative(h, Var::k) * den;
}

class Catalog {
  public:
    /// Built once per process from the embedded manifest.
    static const Catalog &instance() {
        static const Catalog c(kDefaultManifest);
        return c;
    }

    explicit Catalog(std::string_view manifest_text) : manifest_(load_manifest(manifest_text)) {
        const MultiPoly m = MultiPoly::var(Var::m), r = MultiPoly::var(Var::r);
        generic_.params = CoreParams::generic();
        generic_.clearing = m - r;
        generic_.P = poly("P");
        generic_.Q = poly("Q");
        generic_.R = poly("Rm");
        generic_.H = poly("Hgen");

        // dk/df = DerFNum / DerFDen; cancel the common factor and orient the
        // pair so that the denominator is 2 (m f + 2 k) Q.
        const RatFun derf = RatFun::make(poly("DerFNum"), poly("DerFDen"));
        generic_.num_derf = -derf.num();
        generic_.den_derf = -derf.den();
        generic_.K = along_curve(generic_.H, generic_.num_derf, generic_.den_derf);

        for (const auto &b : manifest_.bindings())
            entries_.push_back({b.name, b.value, b.text, anchor_for(b.name)});
        add_constructed();
    }

    const Manifest &manifest() const noexcept { return manifest_; }
    const std::vector<CatalogEntry> &entries() const noexcept { return entries_; }

    const CatalogEntry &entry(std::string_view name) const {
        for (const auto &e : entries_)
            if (e.name == name) return e;
        throw UnknownName("catalog has no entry '" + std::string(name) + "'");
    }

    const MultiPoly &poly(std::string_view name) const { return manifest_.at(name); }

    const Core &generic() const noexcept { return generic_; }

    /// Specializes the generic core. m and r, when fixed, make every entry
    /// exact (the clearing factor is divided out).
    Core build(const CoreParams &p) const {
        validate(p);
        const Assignment a = assignment_of(p);
        Core out;
        out.params = p;
        const auto sp = [&](const MultiPoly &x) { return specialize(x, a); };
        out.P = sp(generic_.P);
        out.Q = sp(generic_.Q);
        out.num_derf = sp(generic_.num_derf);
        out.den_derf = sp(generic_.den_derf);
        if (p.fixes_mr()) {
            const BigRat inv(make_rat(BigInt(1), BigInt(*p.m - *p.r)));
            out.clearing = MultiPoly(1);
            out.R = sp(generic_.R) * inv;
            out.H = sp(generic_.H) * inv;
            out.K = sp(generic_.K) * inv;
        } else {
            out.clearing = sp(generic_.clearing);
            out.R = sp(generic_.R);
            out.H = sp(generic_.H);
            out.K = sp(generic_.K);
        }
        return out;
    }

  private:
    static std::string anchor_for(std::string_view name) {
        static const std::map<std::string, std::string, std::less<>> anchors = {
            {"P", "tangent relation, coefficient of Omega"},
            {"Q", "tangent relation, coefficient of Theta"},
            {"Rm", "tangent relation, right-hand side"},
            {"W", "Gauss equation c + k2 k3"},
            {"Hgen", "first polynomial relation in (f, k2)"},
            {"DerFNum", "derivative dk2/df, numerator"},
            {"DerFDen", "derivative dk2/df, denominator"},
            {"k1", "principal curvature of E1"},
            {"k3m", "third principal curvature from trace condition"},
            {"Rel1Cubic", "first tangent relation, Omega/Theta-free part"},
            {"delta", "quadric delta of the m = 7, r = 4 case"},
            {"CoefF3", "f^3 coefficient of Res(P, Q, k2)"},
            {"SpecialCase1", "first relation factored at m = 7, r = 4"},
            {"SpecialCase2Bracket", "degree 8 factor of the second relation at m = 7, r = 4"},
            {"SpecialCase2", "second relation factored at m = 7, r = 4"},
            {"Gauss3P1A", "Gauss equation along the curve, first form, s-coefficient"},
            {"Gauss3P1B", "Gauss equation along the curve, first form, right-hand side"},
            {"Gauss3P2A", "Gauss equation along the curve, second form, s-coefficient"},
            {"Gauss3P2B", "Gauss equation along the curve, second form, right-hand side"},
            {"DerFP1S", "differentiated second form, s-coefficient"},
            {"DerFP1Fpp", "differentiated second form, f''-coefficient"},
            {"DerFP1Rhs", "differentiated second form, right-hand side"},
            {"Nonic", "final degree 9 equation in f"},
            {"DominantCoef", "leading z-coefficient of the reduced resultant"},
            {"ResSpecialLeading", "leading z-coefficient on m = 2r - 1"},
        };
        if (auto it = anchors.find(name); it != anchors.end()) return it->second;
        return "user binding";
    }

    void add_constructed() {
        const MultiPoly m = MultiPoly::var(Var::m), r = MultiPoly::var(Var::r);
        entries_.push_back({"NumDerF", generic_.num_derf, "-numerator(reduce(DerFNum / DerFDen))",
                            "derivative dk2/df, reduced numerator"});
        entries_.push_back({"DenDerF", generic_.den_derf, "-denominator(reduce(DerFNum / DerFDen))",
                            "derivative dk2/df, reduced denominator"});
        entries_.push_back({"Kgen", generic_.K, "d/df(Hgen) * NumDerF + d/dk(Hgen) * DenDerF",
                            "second polynomial relation in (f, k2)"});
        entries_.push_back({"R", RatFun::make(poly("Rm"), m - r), "Rm / (m - r)",
                            "tangent relation, right-hand side"});
        entries_.push_back({"k3", RatFun::make(poly("k3m"), m - r), "k3m / (m - r)",
                            "third principal curvature from trace condition"});
    }

    Manifest manifest_;
    Core generic_;
    std::vector<CatalogEntry> entries_;
};

inline Core build_core(const CoreParams &p) { return Catalog::instance().build(p); }

/// Maps each monomial k^i f^j to z^i f^(i + j - drop). Throws DegreeTooLow if
/// some monomial has i + j < drop.
inline MultiPoly reduce_to_z(const MultiPoly &p, Exponent drop) {
    if (p.depends_on(Var::z)) throw std::invalid_argument("reduce_to_z: input already involves z");
    std::vector<MultiPoly::Term> out;
    out.reserve(p.size());
    for (const auto &t : p.terms()) {
        const Exponent i = t.mono[Var::k], j = t.mono[Var::f];
        if (i + j < drop) {
            MultiPoly witness(t.mono, t.coeff);
            throw DegreeTooLow("reduce_to_z: monomial " + format(witness) + " has (f,k)-degree " +
                               std::to_string(i + j) + " < " + std::to_string(drop));
        }
        Monomial mono = t.mono;
        mono[Var::k] = 0;
        mono[Var::z] = i;
        mono[Var::f] = i + j - drop;
        out.push_back({mono, t.coeff});
    }
    return MultiPoly::from_terms(std::move(out));
}

/// Rewrites a polynomial that only has even powers of v in terms of w = v^2,
/// stored in the same variable. Throws std::invalid_argument on an odd power.
inline MultiPoly halve_powers(const MultiPoly &p, Var v) {
    std::vector<MultiPoly::Term> out;
    out.reserve(p.size());
    for (const auto &t : p.terms()) {
        if (t.mono[v] % 2 != 0) throw std::invalid_argument("halve_powers: odd power of " + std::string(name(v)));
        Monomial mono = t.mono;
        mono[v] /= 2;
        out.push_back({mono, t.coeff});
    }
    return MultiPoly::from_terms(std::move(out));
}

}  // namespace bih
