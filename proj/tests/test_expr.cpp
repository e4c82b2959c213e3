#include "random_poly.hpp"

#include <gtest/gtest.h>

using namespace bih;

TEST(Parse, SingleMonomial) {
    const MultiPoly p = parse("9/4*m^3*f^3");
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p.terms()[0].coeff, make_rat(9, 4));
    EXPECT_EQ(p.terms()[0].mono[Var::m], 3u);
    EXPECT_EQ(p.terms()[0].mono[Var::f], 3u);
    EXPECT_EQ(p.terms()[0].mono.total_degree(), 6u);
}

TEST(Parse, Products) {
    EXPECT_EQ(parse("(f+k)*(f-k)"), parse("f^2 - k^2"));
    EXPECT_EQ(parse("-f + 2"), MultiPoly(2) - MultiPoly::var(Var::f));
    EXPECT_EQ(parse("  alpha * beta^2 "), MultiPoly::var(Var::alpha) * MultiPoly::var(Var::beta, 2));
    EXPECT_EQ(parse("(k - 2)^0"), MultiPoly(1));
    EXPECT_EQ(parse("0"), MultiPoly());
}

TEST(Parse, ManifestPAtSpecialPoint) {
    const Manifest man = load_manifest(kDefaultManifest);
    const MultiPoly p = specialize(man.at("P"), {{Var::m, 7}, {Var::r, 4}, {Var::c, 1}, {Var::f, 1}, {Var::k, 0}});
    EXPECT_EQ(p, MultiPoly(make_rat(37233, 2)));
}

namespace {

std::size_t error_offset(std::string_view text) {
    try {
        parse(text);
    } catch (const SyntaxError &e) {
        return e.offset();
    }
    return std::string_view::npos;
}

}  // namespace

TEST(Parse, Rejections) {
    EXPECT_THROW(parse("f k"), SyntaxError);
    EXPECT_EQ(error_offset("2 f"), 2u);
    EXPECT_EQ(error_offset("f*(k"), 4u);
    EXPECT_THROW(parse("f^-2"), NegativeExponent);
    EXPECT_EQ(error_offset("f^-2"), 2u);
    EXPECT_THROW(parse("f^1/2"), SyntaxError);
    EXPECT_THROW(parse("f + -k"), SyntaxError);
    EXPECT_THROW(parse("f * +k"), SyntaxError);
    EXPECT_THROW(parse("--f"), SyntaxError);
    EXPECT_THROW(parse("f/k"), SyntaxError);
    EXPECT_THROW(parse("1/0"), SyntaxError);
    EXPECT_THROW(parse("f + q"), UnknownName);
    EXPECT_THROW(parse(""), SyntaxError);
    EXPECT_THROW(parse("f)"), SyntaxError);
}

TEST(Format, Canonical) {
    EXPECT_EQ(format(MultiPoly()), "0");
    EXPECT_EQ(format(parse("k - 9/4*f^3*m^3")), "-9/4*f^3*m^3 + k");
    EXPECT_EQ(format(parse("1 + f")), "f + 1");
    EXPECT_EQ(format(parse("-1")), "-1");
}

TEST(Format, RoundTripRandom) {
    gen::Rng rng(11);
    const std::vector<Var> all(kAllVars.begin(), kAllVars.end());
    for (int i = 0; i < 1000; ++i) {
        const MultiPoly p = rng.poly(all, 4, static_cast<int>(rng.integer(0, 8)));
        ASSERT_EQ(parse(format(p)), p) << format(p);
    }
}

TEST(Format, RoundTripCatalog) {
    for (const auto &e : Catalog::instance().entries()) {
        if (const auto *p = std::get_if<MultiPoly>(&e.value)) {
            EXPECT_EQ(parse(format(*p)), *p) << e.name;
        } else {
            const auto &q = std::get<RatFun>(e.value);
            EXPECT_EQ(parse(format(q.num())), q.num()) << e.name;
            EXPECT_EQ(parse(format(q.den())), q.den()) << e.name;
        }
    }
}

TEST(Manifest, Basics) {
    const Manifest m = load_manifest("a := f\n# note\n\nb := a*a\n");
    EXPECT_EQ(m.size(), 2u);
    EXPECT_EQ(m.at("b"), parse("f^2"));
    EXPECT_THROW(load_manifest("a := b"), ForwardReference);
    EXPECT_THROW(load_manifest("a := f\na := k"), DuplicateName);
    EXPECT_THROW(load_manifest("f := k"), DuplicateName);
    EXPECT_THROW(load_manifest("a = f"), SyntaxError);
    EXPECT_THROW(load_manifest("1a := f"), SyntaxError);
}

TEST(Manifest, ErrorOffsetsAreAbsolute) {
    try {
        load_manifest("a := f\nb := f k\n");
        FAIL();
    } catch (const SyntaxError &e) {
        EXPECT_EQ(e.offset(), 14u);
    }
}

TEST(Manifest, EmbeddedLoadsAndRoundTrips) {
    const Manifest m = load_manifest(kDefaultManifest);
    const Catalog &cat = Catalog::instance();
    EXPECT_EQ(m.size(), cat.manifest().size());
    std::size_t from_manifest = 0;
    for (const auto &e : cat.entries())
        if (m.contains(e.name)) ++from_manifest;
    EXPECT_EQ(from_manifest, m.size());

    const Manifest again = load_manifest(m.text());
    ASSERT_EQ(again.size(), m.size());
    for (const auto &b : m.bindings()) EXPECT_EQ(again.at(b.name), b.value) << b.name;
}
