#include <gtest/gtest.h>

#include <algorithm>

#include "gstar/errors.hpp"
#include "gstar/group.hpp"

using namespace gstar;

namespace {

std::vector<std::size_t> order_profile(const FiniteAbelianGroup& g) {
    std::vector<std::size_t> o;
    for (Element a = 0; a < g.order(); ++a) o.push_back(g.element_order(a));
    std::sort(o.begin(), o.end());
    return o;
}

void expect_group_axioms(const FiniteAbelianGroup& g) {
    const auto n = g.order();
    for (Element a = 0; a < n; ++a) {
        EXPECT_EQ(g.multiply(a, g.identity()), a);
        EXPECT_EQ(g.multiply(a, g.inverse(a)), g.identity());
        for (Element b = 0; b < n; ++b) {
            EXPECT_EQ(g.multiply(a, b), g.multiply(b, a));
            for (Element c = 0; c < n; ++c)
                EXPECT_EQ(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c)));
        }
    }
}

}  // namespace

TEST(Group, Cyclic) {
    auto t = make_cyclic(1);
    EXPECT_EQ(t.order(), 1u);
    EXPECT_EQ(t.cayley(), (std::vector<std::vector<Element>>{{0}}));
    EXPECT_EQ(make_cyclic(2).element_order(1), 2u);
    auto z4 = make_cyclic(4);
    EXPECT_EQ(z4.element_order(0), 1u);
    EXPECT_EQ(z4.element_order(1), 4u);
    EXPECT_EQ(z4.element_order(2), 2u);
    EXPECT_EQ(z4.power(1, 3), 3u);
    EXPECT_EQ(z4.power(1, -1), 3u);
    expect_group_axioms(z4);
    EXPECT_THROW(make_cyclic(0), Error);
}

TEST(Group, Products) {
    EXPECT_EQ(make_product({make_cyclic(2)}), make_cyclic(2));
    auto k = make_product({make_cyclic(2), make_cyclic(2)});
    EXPECT_EQ(k.order(), 4u);
    EXPECT_EQ(order_profile(k), (std::vector<std::size_t>{1, 2, 2, 2}));
    EXPECT_EQ(k.element_order(3), 2u);
    expect_group_axioms(k);
    EXPECT_EQ(order_profile(make_product({make_cyclic(2), make_cyclic(3)})), order_profile(make_cyclic(6)));
}

TEST(Group, ParseAndNames) {
    EXPECT_EQ(parse_group("Z4"), make_cyclic(4));
    EXPECT_EQ(parse_group("1").order(), 1u);
    EXPECT_EQ(parse_group("Z2xZ2").order(), 4u);
    EXPECT_THROW(parse_group("Q8"), Error);
    auto z3 = make_cyclic(3);
    for (Element a = 0; a < 3; ++a) EXPECT_EQ(z3.parse_element(z3.element_name(a)), a);
    EXPECT_EQ(z3.parse_element("g^2"), 2u);
    EXPECT_EQ(z3.parse_element("1"), 0u);
}

TEST(Group, RejectsBadCayleyTables) {
    EXPECT_THROW(FiniteAbelianGroup({{0, 1}, {0, 1}}), Error);  // not a Latin square
    EXPECT_THROW(FiniteAbelianGroup({{1, 0}, {0, 1}}), Error);  // identity not at 0
    EXPECT_THROW(FiniteAbelianGroup({{0, 1, 2}, {1, 2, 0}}), Error);
}

TEST(Group, JsonRoundTrip) {
    auto k = make_product({make_cyclic(2), make_cyclic(3)});
    EXPECT_EQ(FiniteAbelianGroup::from_json(k.to_json()), k);
}
