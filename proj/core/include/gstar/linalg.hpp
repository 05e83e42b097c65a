#ifndef GSTAR_LINALG_HPP
#define GSTAR_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gstar/rational.hpp"

namespace gstar {

using Vec = std::vector<Rational>;

struct SparseEntry {
    std::uint32_t index;
    Rational value;
};
using SparseVec = std::vector<SparseEntry>;  // sorted by index, no zero values

bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& c);
void axpy(Vec& y, const Rational& c, const Vec& x);  // y += c x
Rational dot(const Vec& a, const Vec& b);
SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t n);

/*
 * Incrementally maintained reduced row echelon form.
 *
 * Rows are stored sparse, every pivot entry is 1 and every pivot column is
 * zero in all other rows, so reduction against the basis is a single pass.
 * Two bases spanning the same space produce identical rows.
 */
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ambient = 0);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    bool full() const noexcept { return rows_.size() == ambient_; }

    // Returns true when v was independent of the current rows.
    bool insert(const Vec& v);
    bool insert(const SparseVec& v);
    bool contains(const Vec& v) const;
    bool contains(const SparseVec& v) const;
    Vec residual(Vec v) const;

    // Rows ordered by ascending pivot.
    std::vector<SparseVec> sorted_rows() const;
    std::vector<Vec> dense_rows() const;
    std::vector<std::uint32_t> pivots() const;

    // Basis of {x : <x, r> = 0 for every row r}, one vector per free column.
    std::vector<Vec> orthogonal_complement() const;

private:
    bool insert_reduced(Vec& scratch, std::vector<std::uint32_t>& touched);
    void reduce_dense(Vec& v) const;

    std::size_t ambient_;
    std::vector<SparseVec> rows_;
    std::vector<std::uint32_t> pivot_;
    std::vector<std::int32_t> row_at_column_;
};

/*
 * A linear subspace of Q^n held in canonical reduced echelon form; equal
 * subspaces compare equal.
 */
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace from_echelon(const EchelonBasis& basis);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    bool is_zero() const noexcept { return basis_.empty(); }
    const std::vector<Vec>& basis() const noexcept { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    Subspace complement() const;  // orthogonal complement

    // Coordinates of v in this basis (v must lie in the subspace).
    Vec coordinates(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
};

using Matrix = std::vector<Vec>;  // row-major

Matrix identity_matrix(std::size_t n);
Vec mat_vec(const Matrix& m, const Vec& v);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m, std::size_t cols);
Subspace kernel(const Matrix& m, std::size_t cols);
std::size_t rank(const Matrix& m, std::size_t cols);
// Coefficients x with sum x_k columns[k] = rhs, or nullopt when rhs is outside
// their span. Free coefficients are set to zero.
std::optional<Vec> solve_combination(const std::vector<Vec>& columns, const Vec& rhs);

}  // namespace gstar

#endif
