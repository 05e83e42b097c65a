#include "gstar/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "gstar/errors.hpp"

namespace gstar {

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = Rational(1);
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Vec& a, const Rational& c) {
    Vec r(a);
    for (auto& x : r) x *= c;
    return r;
}

void axpy(Vec& y, const Rational& c, const Vec& x) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i] += c * x[i];
}

Rational dot(const Vec& a, const Vec& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.push_back({static_cast<std::uint32_t>(i), v[i]});
    return s;
}

Vec to_dense(const SparseVec& v, std::size_t n) {
    Vec d(n);
    for (const auto& e : v) d[e.index] = e.value;
    return d;
}

// ---------------------------------------------------------------------------

EchelonBasis::EchelonBasis(std::size_t ambient)
    : ambient_(ambient), row_at_column_(ambient, -1) {}

void EchelonBasis::reduce_dense(Vec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[pivot_[r]];
        if (c.is_zero()) continue;
        Rational coef = c;
        for (const auto& e : rows_[r]) sub_mul(v[e.index], coef, e.value);
    }
}

bool EchelonBasis::insert(const Vec& v) {
    if (v.size() != ambient_) fail(ErrorKind::MalformedInput, "vector length mismatch in echelon insert");
    Vec scratch(v);
    std::vector<std::uint32_t> touched;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) touched.push_back(static_cast<std::uint32_t>(i));
    return insert_reduced(scratch, touched);
}

bool EchelonBasis::insert(const SparseVec& v) {
    if (v.empty() || rows_.size() == ambient_) return false;
    Vec scratch(ambient_);
    std::vector<std::uint32_t> touched;
    touched.reserve(v.size());
    for (const auto& e : v) {
        scratch[e.index] = e.value;
        touched.push_back(e.index);
    }
    return insert_reduced(scratch, touched);
}

bool EchelonBasis::insert_reduced(Vec& scratch, std::vector<std::uint32_t>& touched) {
    // Reduce: only rows whose pivot is currently touched can act.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = scratch[pivot_[r]];
        if (c.is_zero()) continue;
        Rational coef = c;
        for (const auto& e : rows_[r]) {
            if (scratch[e.index].is_zero()) touched.push_back(e.index);
            sub_mul(scratch[e.index], coef, e.value);
        }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    SparseVec w;
    for (auto i : touched)
        if (!scratch[i].is_zero()) w.push_back({i, scratch[i]});
    if (w.empty()) return false;

    const std::uint32_t p = w.front().index;
    Rational inv = Rational(1) / w.front().value;
    for (auto& e : w) e.value *= inv;

    // Clear column p from the existing rows.
    for (auto& row : rows_) {
        auto it = std::lower_bound(row.begin(), row.end(), p,
                                   [](const SparseEntry& e, std::uint32_t idx) { return e.index < idx; });
        if (it == row.end() || it->index != p) continue;
        Rational c = it->value;
        SparseVec merged;
        merged.reserve(row.size() + w.size());
        std::size_t a = 0;
        std::size_t b = 0;
        while (a < row.size() || b < w.size()) {
            if (b == w.size() || (a < row.size() && row[a].index < w[b].index)) {
                merged.push_back(row[a++]);
            } else if (a == row.size() || w[b].index < row[a].index) {
                Rational val = -(c * w[b].value);
                merged.push_back({w[b].index, std::move(val)});
                ++b;
            } else {
                Rational val = row[a].value;
                sub_mul(val, c, w[b].value);
                if (!val.is_zero()) merged.push_back({row[a].index, std::move(val)});
                ++a;
                ++b;
            }
        }
        row = std::move(merged);
    }
    row_at_column_[p] = static_cast<std::int32_t>(rows_.size());
    pivot_.push_back(p);
    rows_.push_back(std::move(w));
    return true;
}

bool EchelonBasis::contains(const Vec& v) const { return is_zero(residual(v)); }

bool EchelonBasis::contains(const SparseVec& v) const { return contains(to_dense(v, ambient_)); }

Vec EchelonBasis::residual(Vec v) const {
    if (v.size() != ambient_) fail(ErrorKind::MalformedInput, "vector length mismatch in echelon reduce");
    reduce_dense(v);
    return v;
}

std::vector<SparseVec> EchelonBasis::sorted_rows() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_[a] < pivot_[b]; });
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    for (auto i : order) out.push_back(rows_[i]);
    return out;
}

std::vector<Vec> EchelonBasis::dense_rows() const {
    std::vector<Vec> out;
    for (const auto& r : sorted_rows()) out.push_back(to_dense(r, ambient_));
    return out;
}

std::vector<std::uint32_t> EchelonBasis::pivots() const {
    std::vector<std::uint32_t> p(pivot_);
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<Vec> EchelonBasis::orthogonal_complement() const {
    std::vector<Vec> out;
    for (std::size_t f = 0; f < ambient_; ++f) {
        if (row_at_column_[f] >= 0) continue;
        Vec x(ambient_);
        x[f] = Rational(1);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto& row = rows_[r];
            auto it = std::lower_bound(row.begin(), row.end(), static_cast<std::uint32_t>(f),
                                       [](const SparseEntry& e, std::uint32_t idx) { return e.index < idx; });
            if (it != row.end() && it->index == f) x[pivot_[r]] = -it->value;
        }
        out.push_back(std::move(x));
    }
    return out;
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    EchelonBasis e(ambient);
    for (const auto& v : vectors) e.insert(v);
    return from_echelon(e);
}

Subspace Subspace::from_echelon(const EchelonBasis& basis) {
    Subspace s(basis.ambient());
    s.basis_ = basis.dense_rows();
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.basis_.push_back(unit_vec(ambient, i));
    return s;
}

bool Subspace::contains(const Vec& v) const {
    EchelonBasis e(ambient_);
    for (const auto& b : basis_) e.insert(b);
    return e.contains(v);
}

bool Subspace::contains(const Subspace& other) const {
    EchelonBasis e(ambient_);
    for (const auto& b : basis_) e.insert(b);
    for (const auto& v : other.basis_)
        if (!e.contains(v)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    std::vector<Vec> all(basis_);
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
}

Subspace Subspace::complement() const {
    EchelonBasis e(ambient_);
    for (const auto& b : basis_) e.insert(b);
    return span(ambient_, e.orthogonal_complement());
}

Subspace Subspace::intersect(const Subspace& other) const {
    return complement().sum(other.complement()).complement();
}

Vec Subspace::coordinates(const Vec& v) const {
    // Basis is in RREF, so the coordinate on row i is v at that row's pivot.
    Vec coords(basis_.size());
    Vec check(ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::size_t p = 0;
        while (basis_[i][p].is_zero()) ++p;
        coords[i] = v[p];
        axpy(check, coords[i], basis_[i]);
    }
    if (check != v) fail(ErrorKind::InvalidParameter, "vector does not lie in the subspace");
    return coords;
}

// ---------------------------------------------------------------------------

Matrix identity_matrix(std::size_t n) {
    Matrix m(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
    return m;
}

Vec mat_vec(const Matrix& m, const Vec& v) {
    Vec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b[0].size() : 0;
    Matrix r(a.size(), Vec(cols));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            if (!a[i][k].is_zero()) axpy(r[i], a[i][k], b[k]);
    return r;
}

Matrix transpose(const Matrix& m, std::size_t cols) {
    Matrix t(cols, Vec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

Subspace kernel(const Matrix& m, std::size_t cols) {
    EchelonBasis e(cols);
    for (const auto& row : m) e.insert(row);
    return Subspace::span(cols, e.orthogonal_complement());
}

std::size_t rank(const Matrix& m, std::size_t cols) {
    EchelonBasis e(cols);
    for (const auto& row : m) e.insert(row);
    return e.rank();
}

std::optional<Vec> solve_combination(const std::vector<Vec>& columns, const Vec& rhs) {
    const std::size_t k = columns.size();
    const std::size_t n = rhs.size();
    Matrix aug(n, Vec(k + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < k; ++c) aug[r][c] = columns[c].at(r);
        aug[r][k] = rhs[r];
    }
    std::vector<std::size_t> pivot_row(k, n);
    std::size_t row = 0;
    for (std::size_t c = 0; c < k && row < n; ++c) {
        std::size_t p = row;
        while (p < n && aug[p][c].is_zero()) ++p;
        if (p == n) continue;  // free coefficient, left at zero
        std::swap(aug[p], aug[row]);
        Rational inv = Rational(1) / aug[row][c];
        for (auto& x : aug[row]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || aug[r][c].is_zero()) continue;
            Rational f = aug[r][c];
            for (std::size_t j = c; j <= k; ++j) sub_mul(aug[r][j], f, aug[row][j]);
        }
        pivot_row[c] = row++;
    }
    for (std::size_t r = row; r < n; ++r)
        if (!aug[r][k].is_zero()) return std::nullopt;
    Vec x(k);
    for (std::size_t c = 0; c < k; ++c)
        if (pivot_row[c] < n) x[c] = aug[pivot_row[c]][k];
    return x;
}

}  // namespace gstar
