#ifndef GSTAR_CATALOG_HPP
#define GSTAR_CATALOG_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gstar/algebra.hpp"
#include "gstar/group.hpp"

namespace gstar {

enum class Family {
    MRho,         // M with reflection, e12 and e34 in degree g
    FCp,          // group algebra of <g>, |g| prime, trivial involution
    FC2Star,      // FC_2, trivial grading, g* = -g
    FC2GStar,     // FC_2 graded by <g>, |g| = 2, g* = -g
    AStar, NStar, UStar,
    AGraded, NGraded, UGraded,
    CGraded,      // C_m, trivial involution
    CStarGraded,  // C_m, E_1^i -> (-1)^i E_1^i
    G2, W,
    M4, M5, M6, M7, M8, M9, M10, M11,
    Commutative,  // C_m with trivial grading and involution
    Nilpotent,    // null algebra of the given dimension
};

struct CatalogKey {
    Family family = Family::Commutative;
    std::size_t m = 2;              // matrix parameter for A/N/U/C families
    std::size_t dim = 2;            // Nilpotent only
    std::vector<Element> elements;  // g or (g, h)
    std::string tag;                // involution: rho, omega1, omega2, psi, tau, gamma, nu1, nu2, nu3

    // Canonical text form, e.g. "M6[omega1;g,h]" or "C3star[1]".
    std::string str(const FiniteAbelianGroup& g) const;
};

// Parses one key without the "@group" suffix.
CatalogKey parse_key(std::string_view text, const FiniteAbelianGroup& g);

// Checks the parameter constraints and builds the validated algebra.
GStarAlgebra build(const CatalogKey& key, const GroupPtr& g);

// "family[params]@group", several keys joined by '+' form a direct sum.
// Without "@group" the default group is used (trivial when null).
GStarAlgebra build_from_spec(std::string_view spec, GroupPtr default_group = nullptr);

struct CatalogEntry {
    std::string key;
    GStarAlgebra algebra;
};

// Named sets: I1..I10, I, K, K1, M, L, forbidden, linear, P.
// P lists the direct sums of the at most linear classification with a
// two-dimensional null summand.
std::vector<CatalogEntry> catalog_set(std::string_view name, const GroupPtr& g);
std::vector<std::string> catalog_set_names();

struct FamilyInfo {
    std::string syntax;
    std::string description;
};
std::vector<FamilyInfo> family_listing();

}  // namespace gstar

#endif
