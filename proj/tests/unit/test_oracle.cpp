// Codimensions recomputed the slow way: every word, every substitution from a
// spanning set of each homogeneous component, rank by plain elimination.
#include <gtest/gtest.h>

#include <algorithm>
#include <memory>
#include <numeric>

#include "gstar/catalog.hpp"
#include "gstar/codim.hpp"

using namespace gstar;

namespace {

std::size_t naive_rank(std::vector<Vec> rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

// Spanning sets for each variable type of the given kind.
std::vector<std::vector<Vec>> variable_types(const GStarAlgebra& a, CodimKind kind) {
    const std::size_t d = a.dim(), m = a.group().order();
    auto part = [&](Element g, int sign) {
        std::vector<Vec> out;
        for (std::size_t i = 0; i < d; ++i) {
            if (g != m && a.grading()[i] != g) continue;
            auto b = a.basis_vector(i);
            Vec v = sign == 0 ? b : sign > 0 ? add(b, a.involute(b)) : sub(b, a.involute(b));
            if (!is_zero(v)) out.push_back(v);
        }
        return out;
    };
    std::vector<std::vector<Vec>> types;
    switch (kind) {
    case CodimKind::Full:
        for (Element g = 0; g < m; ++g) {
            types.push_back(part(g, 1));
            types.push_back(part(g, -1));
        }
        break;
    case CodimKind::Star:
        types = {part(m, 1), part(m, -1)};
        break;
    case CodimKind::Graded:
        for (Element g = 0; g < m; ++g) types.push_back(part(g, 0));
        break;
    case CodimKind::Ordinary:
        types = {part(m, 0)};
        break;
    }
    return types;
}

std::uint64_t naive_codim(const GStarAlgebra& a, std::size_t n, CodimKind kind) {
    auto types = variable_types(a, kind);
    const std::size_t t = types.size();
    std::uint64_t total = 0;
    std::vector<std::size_t> assign(n, 0);  // type of each variable
    while (true) {
        // One row per permutation, one column per (substitution, coordinate).
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<Vec> rows;
        bool empty = false;
        for (auto ty : assign) empty = empty || types[ty].empty();
        if (!empty) {
            do {
                Vec row;
                std::vector<std::size_t> pick(n, 0);
                while (true) {
                    Vec w = types[assign[perm[0]]][pick[perm[0]]];
                    for (std::size_t i = 1; i < n; ++i) w = a.multiply(w, types[assign[perm[i]]][pick[perm[i]]]);
                    row.insert(row.end(), w.begin(), w.end());
                    std::size_t i = 0;
                    while (i < n && ++pick[i] == types[assign[i]].size()) pick[i++] = 0;
                    if (i == n) break;
                }
                rows.push_back(std::move(row));
            } while (std::next_permutation(perm.begin(), perm.end()));
            total += naive_rank(rows);
        }
        std::size_t i = 0;
        while (i < n && ++assign[i] == t) assign[i++] = 0;
        if (i == n) break;
    }
    return total;
}

void compare(const GStarAlgebra& a, std::size_t max_n, const std::string& what) {
    for (auto kind : {CodimKind::Full, CodimKind::Star, CodimKind::Graded, CodimKind::Ordinary}) {
        CodimEngine e(a, kind);
        for (std::size_t n = 1; n <= max_n; ++n)
            EXPECT_EQ(e.total(n), naive_codim(a, n, kind)) << what << " n=" << n << " kind=" << static_cast<int>(kind);
    }
}

}  // namespace

TEST(Oracle, CatalogOverZ2) {
    auto g = std::make_shared<FiniteAbelianGroup>(make_cyclic(2));
    for (auto spec : {"A2star", "N3star", "U3star", "Mrho[g]", "Mrho[1]", "FC2star", "FC2G[g]", "G2[gamma;g,g]",
                      "W[nu2;1,g]", "M4[g]", "M6[omega1;1,g]", "M7[rho;g,1]", "M8[1,1]", "M9[g,g]", "M10[1,g]",
                      "M11[g,1]", "C3star[1]+A2[g]", "C4[g]", "nilpotent[dim=2]"})
        compare(build_from_spec(spec, g), 3, spec);
}

TEST(Oracle, CatalogOverZ3) {
    auto g = std::make_shared<FiniteAbelianGroup>(make_cyclic(3));
    for (auto spec : {"Mrho[g]", "FCp[g]", "W[nu1;g,h]", "M11[h,g]", "G2[psi;g,h]"})
        compare(build_from_spec(spec, g), 3, spec);
}

// Independent numbers from a separate script (numpy rank over small integer
// matrices) for the star codimensions of a direct sum.
TEST(Oracle, StarCodimensionsOfASum) {
    auto t = std::make_shared<FiniteAbelianGroup>(make_cyclic(1));
    auto sum = build_from_spec("M8[1,1]+N3star", t);
    EXPECT_EQ(star_codim(sum, 1), 2u);
    EXPECT_EQ(star_codim(sum, 2), 6u);
    EXPECT_EQ(star_codim(sum, 3), 18u);
    auto n3 = build_from_spec("N3star", t);
    EXPECT_EQ(star_codim(n3, 3), 10u);
}
