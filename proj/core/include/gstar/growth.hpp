#ifndef GSTAR_GROWTH_HPP
#define GSTAR_GROWTH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gstar/catalog.hpp"
#include "gstar/codim.hpp"
#include "gstar/rational.hpp"

namespace gstar {

struct PolyProfile {
    bool detected = false;
    std::size_t degree = 0;
    Rational leading;
    std::size_t onset = 0;              // 1-based index of the first term of the fitted tail
    std::vector<Rational> coefficients;  // a_0 + a_1 n + ... in the variable n = index
    Rational at(std::size_t n) const;
};

// Smallest k whose k-th finite differences are constant on a tail of length
// at least 2; the onset is the start of the longest such tail.
PolyProfile poly_profile(const std::vector<Rational>& seq);
PolyProfile poly_profile(const std::vector<std::uint64_t>& seq);
std::string growth_label(const PolyProfile& p);

struct Exclusion {
    std::string key;
    bool excluded = false;  // a separating identity of degree <= N exists
    std::optional<Polynomial> separating_identity;
};

std::vector<Exclusion> exclusion_report(const CodimEngine& a, std::string_view set_name, std::size_t max_degree);

struct GrowthReport {
    std::string algebra;
    std::vector<std::uint64_t> codims;  // c_1..c_N
    PolyProfile profile;
    std::size_t radical_nilpotency = 1;
    std::string label;
    std::vector<Exclusion> exclusions;  // against the forbidden set
};

GrowthReport growth_report(const CodimEngine& a, std::size_t n_codim, std::size_t n_ideal);

// Detected degree <= q - 1 on c_1..c_N.
bool radical_bound_check(const CodimEngine& a, std::size_t n_codim);

struct MinimalityVerdict {
    std::string verdict;
    std::optional<std::string> match;  // catalog key
    PolyProfile profile;
};

MinimalityVerdict minimality_report(const CodimEngine& a, std::size_t n_ideal, std::size_t n_codim = 6);

struct IncomparabilityReport {
    std::vector<std::string> keys;
    std::vector<std::vector<bool>> contained;  // [i][j]: Id(keys[i]) inside Id(keys[j]) up to N
    std::vector<std::pair<std::size_t, std::size_t>> unseparated;  // i != j with contained true
};

IncomparabilityReport pairwise_incomparability(std::string_view set_name, const GroupPtr& g, std::size_t max_degree,
                                               EngineOptions options = {});

}  // namespace gstar

#endif
