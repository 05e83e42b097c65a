#include <gtest/gtest.h>

#include "gstar/errors.hpp"
#include "gstar/group.hpp"
#include "gstar/polynomial.hpp"

using namespace gstar;

namespace {

const FiniteAbelianGroup& z2() {
    static const FiniteAbelianGroup g = make_cyclic(2);
    return g;
}

Polynomial P(const char* s) { return parse_polynomial(s, z2()); }

}  // namespace

TEST(Polynomial, ParseCommutator) {
    EXPECT_EQ(P("[y1_1, y2_1]"), P("y1_1 y2_1 - y2_1 y1_1"));
    EXPECT_EQ(P("[y1_1,[y2_1,y3_1]]"), P("y1_1 y2_1 y3_1 - y1_1 y3_1 y2_1 - y2_1 y3_1 y1_1 + y3_1 y2_1 y1_1"));
}

TEST(Polynomial, ParseMonomials) {
    auto p = P("z1_1 z2_1");
    EXPECT_EQ(p.size(), 1u);
    EXPECT_TRUE(p.is_multilinear());
    auto q = P("y1_1^2 y2_g");
    EXPECT_EQ(q.size(), 1u);
    EXPECT_EQ(q.max_degree(), 3u);
    EXPECT_FALSE(q.is_multilinear());
    EXPECT_EQ(q.variables().size(), 2u);
    EXPECT_EQ(monomial_degree(q.terms().begin()->first, z2()), 1u);
    EXPECT_EQ(P("2/3 y1_1 * y2_1 - 1/3 y1_1 y2_1"), P("1/3 y1_1 y2_1"));
    EXPECT_TRUE(P("y1_1 - y1_1").is_zero());
}

TEST(Polynomial, ParseErrorsCarryPositions) {
    for (auto bad : {"y1_1 +", "[y1_1, y2_1", "w1_1", "y1_q", "y1_1^"}) {
        try {
            P(bad);
            ADD_FAILURE() << bad;
        } catch (const SyntaxError& e) {
            EXPECT_EQ(e.kind(), ErrorKind::Syntax);
        }
    }
    EXPECT_THROW(P("x1_1"), Error);  // x needs parse_all
}

TEST(Polynomial, ParseAllExpandsX) {
    auto ps = parse_all("x1_g x2_g", z2());
    ASSERT_EQ(ps.size(), 4u);
    EXPECT_EQ(ps[0], P("y1_g y2_g"));
    EXPECT_EQ(ps[3], P("z1_g z2_g"));
    EXPECT_EQ(parse_all("y1_1", z2()).size(), 1u);
}

TEST(Polynomial, PrintParseRoundTrip) {
    for (auto s : {"[y1_1, z2_g]", "3 y1_1^2 z2_1 - 1/2 z2_1 y1_1", "y1_g y2_g + z1_1"}) {
        auto p = P(s);
        EXPECT_EQ(parse_polynomial(p.str(z2()), z2()), p) << s;
    }
}

TEST(Polynomial, StarIsAnInvolution) {
    auto p = P("y1_1 z2_g y3_1 - 2 z1_1 z2_g");
    EXPECT_EQ(star(star(p)), p);
    EXPECT_EQ(star(P("y1_1 y2_1")), P("y2_1 y1_1"));
    EXPECT_EQ(star(P("y1_1 z2_1")), P("- z2_1 y1_1"));
    EXPECT_EQ(star(P("[y1_1, y2_1]")), P("- [y1_1, y2_1]"));
}

TEST(Polynomial, Multilinearize) {
    EXPECT_EQ(multilinearize(P("y1_1^2")), P("y1_1 y2_1 + y2_1 y1_1"));
    auto ml = P("[y1_1, z2_g]");
    EXPECT_EQ(multilinearize(ml), ml);
    auto cube = multilinearize(P("y1_1^3"));
    EXPECT_EQ(cube.size(), 6u);
    for (const auto& [m, c] : cube.terms()) EXPECT_EQ(c, Rational(1));
    EXPECT_TRUE(cube.is_multilinear());
}

TEST(Polynomial, MultihomogeneousComponents) {
    auto parts = multihomogeneous_components(P("y1_1 y2_1 + y1_1^2 + z1_g"));
    EXPECT_EQ(parts.size(), 3u);
    for (const auto& q : parts) EXPECT_TRUE(q.is_multihomogeneous());
}

TEST(Polynomial, Substitute) {
    Variable z1{VarKind::Z, 1, 0}, y1g{VarKind::Y, 1, 1};
    auto p = P("z1_1 y3_1");
    EXPECT_EQ(substitute(p, {{z1, P("[y1_1, y2_1]")}}, z2()), P("[y1_1, y2_1] y3_1"));
    EXPECT_EQ(substitute(p, {}, z2()), p);
    try {
        substitute(P("y1_g"), {{y1g, P("z1_g")}}, z2());
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IllegalSubstitution);
    }
    EXPECT_THROW(substitute(P("y1_g"), {{y1g, P("y1_1")}}, z2()), Error);  // degree mismatch
}
