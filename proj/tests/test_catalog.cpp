#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace bih;

namespace {
MultiPoly P(std::string_view s) { return parse(s); }
const Catalog &cat() { return Catalog::instance(); }
}  // namespace

TEST(BuildCore, Validation) {
    EXPECT_THROW(build_core(CoreParams::specialized(3, 2, 1)), InvalidParameters);
    EXPECT_THROW(build_core(CoreParams::specialized(6, 1, 1)), InvalidParameters);
    EXPECT_THROW(build_core(CoreParams::specialized(6, 6, 1)), InvalidParameters);
    EXPECT_THROW(build_core(CoreParams::specialized(6, 3, 2)), InvalidParameters);
    EXPECT_THROW(build_core(CoreParams{6, std::nullopt, 1}), InvalidParameters);
    EXPECT_NO_THROW(build_core(CoreParams::specialized(4, 3, -1)));
}

TEST(BuildCore, GenericTopCoefficients) {
    const MultiPoly &h = cat().generic().H;
    EXPECT_EQ(h.degree(Var::f), 9u);
    EXPECT_EQ(h.degree(Var::k), 8u);
    EXPECT_EQ(cat().generic().K.degree(Var::f), 12u);
    EXPECT_EQ(cat().generic().K.degree(Var::k), 11u);
    const MultiPoly f9 = coefficient(h, Var::f, 9);
    EXPECT_EQ(f9, P("729/32*m^9*(2*m - 2*r + 3)*(3*m - 2*r + 17)*(m - r + 6)"));
    EXPECT_TRUE(coefficient(h, Var::k, 9).is_zero());
    EXPECT_EQ(cat().generic().clearing, P("m - r"));
}

TEST(BuildCore, SpecializationMatchesGeneric) {
    for (long m = 4; m <= 9; ++m)
        for (long r = 2; r < m; ++r)
            for (long c : {-1L, 0L, 1L}) {
                const Core core = build_core(CoreParams::specialized(m, r, c));
                const Assignment at{{Var::m, m}, {Var::r, r}, {Var::c, c}};
                const BigRat inv = make_rat(1, m - r);
                ASSERT_EQ(core.H, specialize(cat().generic().H, at) * inv);
                ASSERT_EQ(core.K, specialize(cat().generic().K, at) * inv);
                ASSERT_EQ(core.K, along_curve(core.H, core.num_derf, core.den_derf));
                ASSERT_EQ(core.clearing, MultiPoly(1));
            }
}

TEST(BuildCore, DenominatorOrientation) {
    const Core &g = cat().generic();
    EXPECT_EQ(g.den_derf, 2 * P("m*f + 2*k") * g.Q);
    EXPECT_EQ(RatFun::make(g.num_derf, g.den_derf), RatFun::make(cat().poly("DerFNum"), cat().poly("DerFDen")));
}

TEST(BuildCore, KAtOnePointAgainstNumericDerivatives) {
    const Core core = build_core(CoreParams::specialized(5, 3, 1));
    const Assignment at{{Var::f, 1}, {Var::k, 1}};
    const BigRat hf = oracle::derivative_at(core.H, Var::f, at);
    const BigRat hk = oracle::derivative_at(core.H, Var::k, at);
    const BigRat expected = hf * oracle::eval(core.num_derf, at) + hk * oracle::eval(core.den_derf, at);
    EXPECT_EQ(evaluate(core.K, at), expected);
}

TEST(BuildCore, HomogeneityDegrees) {
    const std::set<Exponent> h_allowed{3, 5, 7, 9}, k_allowed{4, 6, 8, 10, 12};
    for (const auto &t : cat().generic().H.terms())
        ASSERT_TRUE(h_allowed.contains(t.mono[Var::f] + t.mono[Var::k]));
    for (const auto &t : cat().generic().K.terms())
        ASSERT_TRUE(k_allowed.contains(t.mono[Var::f] + t.mono[Var::k]));
}

TEST(ReduceToZ, Examples) {
    EXPECT_EQ(reduce_to_z(P("k^9"), 3), P("z^9*f^6"));
    EXPECT_EQ(reduce_to_z(P("f^3"), 3), MultiPoly(1));
    EXPECT_EQ(reduce_to_z(P("c*f^2*k"), 3), P("c*z"));
    EXPECT_THROW(reduce_to_z(P("f^3 + c*f"), 3), DegreeTooLow);
    EXPECT_THROW(reduce_to_z(P("z*f^3"), 3), std::invalid_argument);
}

TEST(ReduceToZ, TopBlockOfNewH) {
    const Core core = build_core(CoreParams::specialized(7, 4, 1));
    const MultiPoly newH = reduce_to_z(core.H, 3);
    MultiPoly expected;
    for (Exponent i = 0; i <= 9; ++i) {
        const MultiPoly a = coefficient(coefficient(core.H, Var::k, i), Var::f, 9 - i);
        expected += a * MultiPoly::var(Var::z, i);
    }
    EXPECT_EQ(coefficient(newH, Var::f, 6), expected);
}

TEST(ReduceToZ, InverseIdentities) {
    for (auto [m, r, c] : {std::tuple{5L, 3L, 1L}, {8L, 6L, -1L}, {6L, 2L, 0L}}) {
        const Core core = build_core(CoreParams::specialized(m, r, c));
        EXPECT_EQ(expand_from_z(reduce_to_z(core.H, 3), 3), RatFun(core.H));
        EXPECT_EQ(expand_from_z(reduce_to_z(core.K, 4), 4), RatFun(core.K));
    }
}

TEST(ResPQ, SpecializationConsistency) {
    const Core &g = cat().generic();
    const MultiPoly generic = resultant(g.P, g.Q, Var::k);
    for (auto [m, r, c] : {std::tuple{4L, 2L, 1L}, {7L, 4L, 1L}, {9L, 3L, -1L}, {12L, 11L, 0L}}) {
        const Core core = build_core(CoreParams::specialized(m, r, c));
        ASSERT_FALSE(leading_coeff_in(core.P, Var::k).is_zero());
        ASSERT_FALSE(leading_coeff_in(core.Q, Var::k).is_zero());
        const Assignment at{{Var::m, m}, {Var::r, r}, {Var::c, c}};
        EXPECT_EQ(specialize(generic, at), resultant(core.P, core.Q, Var::k));
        const MultiPoly f3 = coefficient(resultant(core.P * BigRat(4), core.Q * BigRat(4), Var::k), Var::f, 3);
        EXPECT_EQ(f3, specialize(cat().poly("CoefF3"), at));
    }
}

TEST(Catalog, EntriesReconstructFromSource) {
    const Manifest &man = cat().manifest();
    Scope scope;
    for (const auto &b : man.bindings()) {
        const MultiPoly again = parse(cat().entry(b.name).source, scope);
        EXPECT_EQ(again, std::get<MultiPoly>(cat().entry(b.name).value)) << b.name;
        scope.emplace(b.name, again);
    }
    const Core &g = cat().generic();
    EXPECT_EQ(std::get<MultiPoly>(cat().entry("Kgen").value), along_curve(g.H, g.num_derf, g.den_derf));
    for (const auto &e : cat().entries()) EXPECT_FALSE(e.anchor.empty()) << e.name;
    EXPECT_THROW(cat().entry("nope"), UnknownName);
}

TEST(Catalog, ProductParser) {
    const FactoredForm ff = parse_product("-12*c^2*(m - 1)^3*(2 + r)*m");
    EXPECT_EQ(ff.unit, -12);
    EXPECT_EQ(ff.factors.size(), 4u);
    EXPECT_EQ(ff.expand(), P("-12*c^2*(m - 1)^3*(2 + r)*m"));
    EXPECT_THROW(parse_product("m + 1"), SyntaxError);
}

TEST(Catalog, Kappa) {
    EXPECT_EQ(reduced_kappa(6, 3), -make_rat(BigInt(2187), pow(BigInt(2), 35) * pow(BigInt(3), 7)));
}
