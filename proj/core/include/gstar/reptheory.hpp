#ifndef GSTAR_REPTHEORY_HPP
#define GSTAR_REPTHEORY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gstar/codim.hpp"
#include "gstar/combinatorics.hpp"
#include "gstar/polynomial.hpp"

namespace gstar {

struct Partition {
    std::vector<std::size_t> parts;  // weakly decreasing, positive

    std::size_t weight() const;
    bool empty() const noexcept { return parts.empty(); }
    std::size_t first() const noexcept { return parts.empty() ? 0 : parts.front(); }
    std::string str() const;  // "(2,1)", "()" for the empty partition

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;
};

using Multipartition = std::vector<Partition>;

// Partitions of n, largest first part first: (n), (n-1,1), (n-2,2), ...
std::vector<Partition> partitions(std::size_t n);
std::vector<Multipartition> multipartitions(const DegreeVector& nv);
Partition conjugate(const Partition& p);
std::uint64_t hook_dim(const Partition& p);
std::uint64_t dim_product(const Multipartition& l);

// Slot-tagged text for the Full slot layout, e.g. "(2)_1+ (1)_g-"; empty
// partitions are omitted.
std::string multipartition_str(const Multipartition& l, const FiniteAbelianGroup& g);

struct Tableau {
    Partition shape;
    std::vector<std::vector<std::size_t>> rows;  // entries, row by row
};
using MultiTableau = std::vector<Tableau>;

bool is_standard(const Tableau& t);
// Every slot standard and the entries across slots are exactly 1..n.
bool is_standard(const MultiTableau& t);
// Standard tableaux of the shape filled with 1..|p|.
std::vector<Tableau> standard_tableaux(const Partition& p);
Tableau column_superstandard(const Partition& p, std::size_t first = 1);
Tableau row_superstandard(const Partition& p, std::size_t first = 1);

// Number of <n> with 2t parts and n_1 > n - q.
std::uint64_t delta_count(std::size_t n, std::size_t q, std::size_t t);
std::uint64_t delta_enumerate(std::size_t n, std::size_t q, std::size_t t);
// (q-1) p(q)^{2t}, the bound on the number of <lambda> with (lambda_1)_1 > n - q.
std::uint64_t tset_bound(std::size_t q, std::size_t t);
std::uint64_t tset_enumerate(const DegreeVector& nv, std::size_t q);
std::uint64_t partition_count(std::size_t n);

enum class TableauChoice { ColumnSuperstandard, RowSuperstandard };

// Multiplicity of the irreducible module <lambda> in P_<n>(A), computed as
// the rank of one Young symmetrizer on the quotient by the identities.
std::size_t multiplicity(const CodimEngine& engine, const Multipartition& lambda,
                         TableauChoice choice = TableauChoice::ColumnSuperstandard);
// Same number from the linearized highest weight vectors of all standard
// multitableaux.
std::size_t multiplicity_hwv(const CodimEngine& engine, const Multipartition& lambda);

struct CocharacterEntry {
    DegreeVector nv;
    Multipartition lambda;
    std::size_t multiplicity = 0;
    std::uint64_t dims = 0;  // product of hook_dim over the slots
};

// All multipartitions of every block of weight n (zero multiplicities
// included).
std::vector<CocharacterEntry> cocharacter(const CodimEngine& engine, std::size_t n);
std::vector<CocharacterEntry> cocharacter_block(const CodimEngine& engine, const DegreeVector& nv);
std::uint64_t colength(const CodimEngine& engine, std::size_t n);
// True when every <lambda> with n - (lambda_1)_1 >= q has multiplicity 0,
// q the nilpotency index of the radical.
bool radical_strip_check(const CodimEngine& engine, std::size_t n);

// Column alternation of the multitableau with the variables of each row
// identified; variables are numbered by row across the slots. Full layout:
// slot 2j is y of degree j, slot 2j+1 is z of degree j.
Polynomial highest_weight_vector(const MultiTableau& t, const FiniteAbelianGroup& g);

}  // namespace gstar

#endif
