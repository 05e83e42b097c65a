#ifndef GSTAR_CODIM_HPP
#define GSTAR_CODIM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gstar/algebra.hpp"
#include "gstar/combinatorics.hpp"
#include "gstar/linalg.hpp"
#include "gstar/polynomial.hpp"

namespace gstar {

// Which variables are distinguished: symmetric/skew and group degree (Full),
// symmetric/skew only (Star), group degree only (Graded), nothing (Ordinary).
enum class CodimKind { Full, Star, Graded, Ordinary };

struct EngineOptions {
    std::size_t cap_monomials = 5040;  // largest admissible n! per block
    std::size_t workers = 1;
};

// Full-kind slot layout: slot 2j holds y-variables of degree j, slot 2j+1
// z-variables of degree j.
inline std::size_t slot_of(VarKind kind, Element degree) {
    return 2 * degree + (kind == VarKind::Z ? 1 : 0);
}

// Variables of the block <n>, numbered 1..n in slot order.
std::vector<Variable> block_variables(const DegreeVector& nv);
Polynomial block_to_polynomial(const DegreeVector& nv, const Vec& coords);
// A multilinear polynomial as a coefficient vector over the n! words of its
// block. Variables are relabelled by (slot, index).
std::pair<DegreeVector, Vec> polynomial_to_block(const Polynomial& multilinear, std::size_t group_order);

/*
 * Evaluation engine for one algebra.
 *
 * For a block <n> the evaluation matrix has one row per word (permutation of
 * the n variables, in lexicographic order) and one column per pair
 * (substitution of basis elements, output coordinate). Only its column span
 * is kept: c_<n> is its dimension, and the identities in the block are its
 * orthogonal complement.
 */
class CodimEngine {
public:
    struct Block {
        DegreeVector nv;
        std::size_t n = 0;
        EchelonBasis span;  // column span inside Q^{n!}
        std::size_t rank() const { return span.rank(); }
    };

    CodimEngine(const GStarAlgebra& algebra, CodimKind kind = CodimKind::Full, EngineOptions options = {});

    const GStarAlgebra& algebra() const noexcept { return algebra_; }
    CodimKind kind() const noexcept { return kind_; }
    const EngineOptions& options() const noexcept { return options_; }
    std::size_t slot_count() const noexcept { return slots_.size(); }
    std::size_t radical_nilpotency() const noexcept { return q_; }
    // Radical-adapted basis of the component addressed by a slot.
    const std::vector<Vec>& slot_basis(std::size_t slot) const { return slots_.at(slot).dense; }

    std::shared_ptr<const Block> block(const DegreeVector& nv) const;
    std::size_t block_codim(const DegreeVector& nv) const { return block(nv)->rank(); }
    std::vector<DegreeVector> degree_vectors(std::size_t n) const { return compositions(n, slot_count()); }
    std::uint64_t total(std::size_t n) const;
    // Blocks of weight n, computed with the configured worker count.
    std::vector<std::shared_ptr<const Block>> blocks(std::size_t n) const;

    // First substitution (one slot-basis element per variable) on which the
    // block polynomial with coefficient vector f is nonzero.
    std::optional<std::vector<Vec>> nonvanishing_substitution(const DegreeVector& nv, const Vec& f) const;

private:
    struct Slot {
        std::vector<Vec> dense;
        std::vector<bool> radical;
        // right[e][i]: b_i * element e as a sparse vector.
        std::vector<std::vector<SparseVec>> right;
    };

    std::shared_ptr<Block> compute(const DegreeVector& nv) const;
    // Calls visit(tuple, columns) for each admissible substitution; stops
    // when visit returns false.
    void for_each_substitution(const DegreeVector& nv,
                               const std::function<bool(const std::vector<std::size_t>&,
                                                        const std::vector<SparseVec>&)>& visit) const;
    void check_capacity(std::size_t n) const;

    GStarAlgebra algebra_;
    CodimKind kind_;
    EngineOptions options_;
    std::vector<Slot> slots_;
    std::size_t q_ = 1;
    mutable std::mutex mutex_;
    mutable std::map<DegreeVector, std::shared_ptr<const Block>> cache_;
};

std::size_t block_codim(const GStarAlgebra& a, const DegreeVector& nv, EngineOptions options = {});
std::uint64_t total_codim(const GStarAlgebra& a, std::size_t n, EngineOptions options = {});
std::uint64_t star_codim(const GStarAlgebra& a, std::size_t n, EngineOptions options = {});
std::uint64_t graded_codim(const GStarAlgebra& a, std::size_t n, EngineOptions options = {});
std::uint64_t ordinary_codim(const GStarAlgebra& a, std::size_t n, EngineOptions options = {});

// Value of p at the given assignment; the empty monomial evaluates to the unit.
Vec evaluate(const GStarAlgebra& a, const Polynomial& p, const std::map<Variable, Vec>& values);

struct IdentityWitness {
    Polynomial multilinear;  // the multilinearized component that fails
    std::vector<std::pair<Variable, Vec>> substitution;
    Vec value;               // value of `multilinear` at the substitution
};

struct IdentityResult {
    bool holds = true;
    std::optional<IdentityWitness> witness;
};

IdentityResult is_identity(const CodimEngine& engine, const Polynomial& p);
IdentityResult is_identity(const GStarAlgebra& a, const Polynomial& p, EngineOptions options = {});

std::vector<Polynomial> kernel_identity_basis(const CodimEngine& engine, const DegreeVector& nv);
// Kernel vectors in the word basis of the block.
std::vector<Vec> kernel_vectors(const CodimEngine& engine, const DegreeVector& nv);

// Multilinear consequences of the generators inside P_<n> (Full slot layout).
Subspace tideal_component(const std::vector<Polynomial>& generators, const DegreeVector& nv,
                          const FiniteAbelianGroup& group, std::size_t cap_monomials = 5040);

struct IdealCheckReport {
    bool equal = true;
    std::size_t blocks_checked = 0;
    std::optional<DegreeVector> discrepancy;
    std::size_t tideal_dim = 0;
    std::size_t kernel_dim = 0;
    std::optional<Polynomial> evidence;  // in one space but not the other
    std::string detail;
};

IdealCheckReport ideal_generated_check(const CodimEngine& engine, const std::vector<Polynomial>& generators,
                                       std::size_t max_degree);

struct ContainmentResult {
    bool contained = true;  // every identity of A up to degree N holds in B
    std::optional<DegreeVector> block;
    std::optional<Polynomial> separating_identity;  // identity of A failing on B
};

ContainmentResult var_contains(const CodimEngine& a, const CodimEngine& b, std::size_t max_degree);
ContainmentResult var_contains(const GStarAlgebra& a, const GStarAlgebra& b, std::size_t max_degree,
                               EngineOptions options = {});
bool t_equivalent(const CodimEngine& a, const CodimEngine& b, std::size_t max_degree);
bool t_equivalent(const GStarAlgebra& a, const GStarAlgebra& b, std::size_t max_degree, EngineOptions options = {});

}  // namespace gstar

#endif
