#ifndef GSTAR_ALGEBRA_HPP
#define GSTAR_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gstar/group.hpp"
#include "gstar/linalg.hpp"

namespace gstar {

enum class Sign { Plus, Minus };

struct ValidationReport {
    bool ok = true;
    std::string axiom;                // empty when ok
    std::vector<std::size_t> witness;  // basis indices of the failing pair/triple
    std::string message;
};

struct PeirceDecomposition {
    Subspace j00, j10, j01, j11;
};

/*
 * Finite-dimensional algebra over Q with a homogeneous basis, a grading by a
 * finite abelian group and a graded involution.
 *
 * involution[i][j] is the coefficient of b_i in (b_j)^*, so involute(x) is the
 * matrix-vector product.
 */
class GStarAlgebra {
public:
    struct Product {
        std::size_t i, j, k;
        Rational coef;
    };

    GStarAlgebra() = default;
    GStarAlgebra(GroupPtr group, std::vector<std::string> labels, const std::vector<Product>& sc,
                 std::vector<Element> grading, Matrix involution, std::optional<Vec> unit = std::nullopt,
                 std::string name = "");

    const FiniteAbelianGroup& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<Element>& grading() const noexcept { return grading_; }
    const Matrix& involution() const noexcept { return involution_; }
    const std::optional<Vec>& unit() const noexcept { return unit_; }
    const std::string& name() const noexcept { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    // b_i b_j as a sparse coordinate vector.
    const SparseVec& basis_product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
    std::vector<Product> structure_constants() const;

    Vec multiply(const Vec& x, const Vec& y) const;
    Vec involute(const Vec& x) const;
    Vec basis_vector(std::size_t i) const { return unit_vec(dim(), i); }
    std::optional<Element> degree_of(const Vec& x) const;  // nullopt for 0 or inhomogeneous x
    std::string format(const Vec& x) const;

    ValidationReport validate() const;

    Subspace component(Element g) const;
    Subspace homogeneous_component(Element g, Sign sign) const;

    // Products span{s t : s in S, t in T}.
    Subspace product_space(const Subspace& s, const Subspace& t) const;

    Subspace radical() const;
    std::size_t nilpotency_index(const Subspace& s) const;

    // Unit of a copy of F complementing J when A/J is one-dimensional; the
    // result is homogeneous of degree 1 and symmetric.
    std::optional<Vec> field_idempotent() const;
    bool is_field_plus_radical(const Vec& one_f) const;
    PeirceDecomposition peirce_decompose(const Vec& one_f) const;

    std::string to_json() const;
    static GStarAlgebra from_json(const std::string& text);

private:
    void check_length(const Vec& x) const;

    GroupPtr group_;
    std::vector<std::string> labels_;
    std::vector<SparseVec> products_;
    std::vector<Element> grading_;
    Matrix involution_;
    std::optional<Vec> unit_;
    std::string name_;
};

GStarAlgebra direct_sum(const std::vector<GStarAlgebra>& as);
// The subspace as an algebra in its own right; it must be graded, closed
// under products and the involution.
GStarAlgebra subalgebra(const GStarAlgebra& a, const Subspace& s, std::string name = "");

}  // namespace gstar

#endif
