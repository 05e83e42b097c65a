#include <gtest/gtest.h>

#include <algorithm>
#include <memory>

#include "gstar/algebra.hpp"
#include "gstar/catalog.hpp"
#include "gstar/errors.hpp"

using namespace gstar;

namespace {

GroupPtr z2() { return std::make_shared<FiniteAbelianGroup>(make_cyclic(2)); }

Vec by_label(const GStarAlgebra& a, const std::string& label) {
    auto it = std::find(a.labels().begin(), a.labels().end(), label);
    if (it == a.labels().end()) throw std::runtime_error("no basis element " + label);
    return a.basis_vector(static_cast<std::size_t>(it - a.labels().begin()));
}

Subspace span_of(const GStarAlgebra& a, std::initializer_list<const char*> labels) {
    std::vector<Vec> v;
    for (auto l : labels) v.push_back(by_label(a, l));
    return Subspace::span(a.dim(), v);
}

}  // namespace

TEST(Algebra, CatalogEntriesSatisfyTheAxioms) {
    for (auto gs : {"Z2", "Z3", "Z4"}) {
        auto g = std::make_shared<FiniteAbelianGroup>(parse_group(gs));
        for (const auto& name : {"I", "M", "K", "linear", "P"}) {
            for (const auto& e : catalog_set(name, g)) {
                auto r = e.algebra.validate();
                EXPECT_TRUE(r.ok) << e.key << "@" << gs << ": " << r.axiom << " " << r.message;
            }
        }
    }
}

TEST(Algebra, StarIsAGradedAntiAutomorphism) {
    auto g = z2();
    for (const auto& e : catalog_set("M", g)) {
        const auto& a = e.algebra;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            auto bi = a.basis_vector(i);
            EXPECT_EQ(a.involute(a.involute(bi)), bi);
            EXPECT_EQ(a.degree_of(a.involute(bi)), a.grading()[i]);
            for (std::size_t j = 0; j < a.dim(); ++j) {
                auto bj = a.basis_vector(j);
                EXPECT_EQ(a.involute(a.multiply(bi, bj)), a.multiply(a.involute(bj), a.involute(bi))) << e.key;
                auto p = a.multiply(bi, bj);
                if (!is_zero(p)) { EXPECT_EQ(a.degree_of(p), g->multiply(a.grading()[i], a.grading()[j])) << e.key; }
            }
        }
    }
}

TEST(Algebra, ValidationCatchesViolations) {
    auto g = z2();
    // x in degree g with x*x = x lands in the wrong component.
    GStarAlgebra bad(g, {"x"}, {{0, 0, 0, Rational(1)}}, {1}, identity_matrix(1));
    auto r = bad.validate();
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.axiom, "grading-compatibility");
    GStarAlgebra nonassoc(g, {"a", "b"}, {{0, 0, 1, Rational(1)}, {1, 0, 0, Rational(1)}}, {0, 0},
                          identity_matrix(2));
    EXPECT_FALSE(nonassoc.validate().ok);
    EXPECT_THROW(GStarAlgebra(g, {"x"}, {}, {5}, identity_matrix(1)), Error);
}

TEST(Algebra, ProductsInMrho) {
    auto a = build_from_spec("Mrho[g]", z2());
    EXPECT_TRUE(is_zero(a.multiply(by_label(a, "e12"), by_label(a, "e34"))));
    ASSERT_TRUE(a.unit());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        EXPECT_EQ(a.multiply(*a.unit(), a.basis_vector(i)), a.basis_vector(i));
        EXPECT_EQ(a.multiply(a.basis_vector(i), *a.unit()), a.basis_vector(i));
    }
}

TEST(Algebra, HomogeneousComponents) {
    auto g = z2();
    EXPECT_TRUE(build_from_spec("Mrho[g]", g).homogeneous_component(0, Sign::Minus).is_zero());
    auto m1 = build_from_spec("Mrho[1]", g);
    auto skew = m1.homogeneous_component(0, Sign::Minus);
    EXPECT_EQ(skew.dim(), 1u);
    EXPECT_TRUE(skew.contains(sub(by_label(m1, "e12"), by_label(m1, "e34"))));
    EXPECT_TRUE(build_from_spec("FC2G[g]", g).homogeneous_component(1, Sign::Plus).is_zero());
}

TEST(Algebra, DirectSum) {
    auto g = z2();
    auto a = build_from_spec("Mrho[g]", g);
    auto b = build_from_spec("G2[psi;g,g]", g);
    auto s = direct_sum({a, b});
    EXPECT_EQ(s.dim(), a.dim() + b.dim());
    EXPECT_TRUE(s.validate().ok);
    auto one = direct_sum({a});
    EXPECT_EQ(one.structure_constants().size(), a.structure_constants().size());
    EXPECT_EQ(one.grading(), a.grading());
}

TEST(Algebra, Radical) {
    auto g = z2();
    auto c3 = build_from_spec("C3[g]", g);
    auto j = c3.radical();
    EXPECT_EQ(j, span_of(c3, {"E1", "E1^2"}));
    EXPECT_EQ(c3.nilpotency_index(j), 3u);
    auto nil = build_from_spec("nilpotent[dim=2]", g);
    EXPECT_EQ(nil.radical().dim(), 2u);
    auto m1 = build_from_spec("Mrho[1]", g);
    EXPECT_EQ(m1.radical(), span_of(m1, {"e12", "e34"}));
    EXPECT_EQ(m1.nilpotency_index(Subspace(m1.dim())), 1u);
    for (std::size_t m = 2; m <= 5; ++m) {
        auto c = build_from_spec("C" + std::to_string(m) + "[g]", g);
        EXPECT_EQ(c.nilpotency_index(c.radical()), m);
    }
    for (auto spec : {"M6[rho;1,g]", "M6[omega1;g,g]", "M7[omega2;1,1]", "M8[1,1]", "M9[g,g]", "M10[1,g]", "M11[g,1]"}) {
        auto m = build_from_spec(spec, g);
        EXPECT_EQ(m.nilpotency_index(m.radical()), 3u) << spec;
    }
}

TEST(Algebra, PeirceDecomposition) {
    auto g = z2();
    auto m6 = build_from_spec("M6[rho;1,1]", g);
    auto one = m6.field_idempotent();
    ASSERT_TRUE(one);
    EXPECT_EQ(*one, by_label(m6, "e11+e44"));
    EXPECT_TRUE(m6.is_field_plus_radical(*one));
    auto p = m6.peirce_decompose(*one);
    EXPECT_EQ(p.j10, span_of(m6, {"e12", "e13"}));
    EXPECT_EQ(p.j01, span_of(m6, {"e24", "e34"}));
    EXPECT_EQ(p.j11, span_of(m6, {"e14"}));
    EXPECT_TRUE(p.j00.is_zero());

    auto m7 = build_from_spec("M7[rho;1,1]", g);
    auto q = m7.peirce_decompose(by_label(m7, "e22+e33"));
    EXPECT_EQ(q.j01, span_of(m7, {"e12", "e13"}));
    EXPECT_EQ(q.j10, span_of(m7, {"e24", "e34"}));
    EXPECT_EQ(q.j00, span_of(m7, {"e14"}));

    auto c = build_from_spec("C3star[1]", g);
    auto r = c.peirce_decompose(by_label(c, "I"));
    EXPECT_EQ(r.j11, c.radical());
    EXPECT_TRUE(r.j00.is_zero() && r.j10.is_zero() && r.j01.is_zero());
}

TEST(Algebra, PeircePiecesAddUpAndStarSwaps) {
    for (const auto& e : catalog_set("I", z2())) {
        const auto& a = e.algebra;
        auto one = a.field_idempotent();
        if (!one || !a.is_field_plus_radical(*one)) continue;
        auto p = a.peirce_decompose(*one);
        auto j = a.radical();
        EXPECT_EQ(p.j00.dim() + p.j10.dim() + p.j01.dim() + p.j11.dim(), j.dim()) << e.key;
        EXPECT_EQ(p.j00.sum(p.j10).sum(p.j01).sum(p.j11), j) << e.key;
        std::vector<Vec> starred;
        for (const auto& v : p.j10.basis()) starred.push_back(a.involute(v));
        EXPECT_EQ(Subspace::span(a.dim(), starred), p.j01) << e.key;
    }
}

TEST(Algebra, Subalgebra) {
    auto g = z2();
    auto m1 = build_from_spec("Mrho[1]", g);
    auto s = subalgebra(m1, span_of(m1, {"e11+e44", "e12", "e34"}));
    EXPECT_EQ(s.dim(), 3u);
    EXPECT_TRUE(s.validate().ok);
    EXPECT_FALSE(s.unit());
    EXPECT_THROW(subalgebra(m1, span_of(m1, {"e11+e44", "e12"})), Error);
    auto whole = subalgebra(m1, Subspace::whole(m1.dim()));
    ASSERT_TRUE(whole.unit());
    EXPECT_EQ(*whole.unit(), *m1.unit());
}

TEST(Algebra, JsonRoundTrip) {
    auto g = z2();
    for (auto spec : {"Mrho[g]", "G2[gamma;g,g]", "M11[g,1]", "C3star[1]+nilpotent[dim=2]"}) {
        auto a = build_from_spec(spec, g);
        auto b = GStarAlgebra::from_json(a.to_json());
        EXPECT_EQ(b.dim(), a.dim());
        EXPECT_EQ(b.grading(), a.grading());
        EXPECT_EQ(b.involution(), a.involution());
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                EXPECT_EQ(b.multiply(b.basis_vector(i), b.basis_vector(j)),
                          a.multiply(a.basis_vector(i), a.basis_vector(j)));
    }
    EXPECT_THROW(GStarAlgebra::from_json("{\"dim\": 2}"), Error);
    EXPECT_THROW(GStarAlgebra::from_json("not json"), Error);
}
