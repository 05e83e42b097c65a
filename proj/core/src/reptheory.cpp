#include "gstar/reptheory.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gstar/errors.hpp"

namespace gstar {

std::size_t Partition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions(std::size_t n) {
    std::vector<Partition> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t rest, std::size_t max) {
        if (rest == 0) {
            out.push_back({cur});
            return;
        }
        for (std::size_t k = std::min(rest, max); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Multipartition> multipartitions(const DegreeVector& nv) {
    std::vector<Multipartition> out{{}};
    for (auto k : nv) {
        auto ps = partitions(k);
        std::vector<Multipartition> next;
        for (const auto& prefix : out)
            for (const auto& p : ps) {
                auto m = prefix;
                m.push_back(p);
                next.push_back(std::move(m));
            }
        out = std::move(next);
    }
    return out;
}

Partition conjugate(const Partition& p) {
    Partition c;
    for (std::size_t j = 0; j < p.first(); ++j) {
        std::size_t h = 0;
        for (auto r : p.parts)
            if (r > j) ++h;
        c.parts.push_back(h);
    }
    return c;
}

std::uint64_t hook_dim(const Partition& p) {
    auto c = conjugate(p);
    // n! / prod hooks, built up multiplicatively to stay exact
    std::uint64_t num = factorial(p.weight());
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (std::size_t j = 0; j < p.parts[i]; ++j) den *= (p.parts[i] - j - 1) + (c.parts[j] - i - 1) + 1;
    return num / den;
}

std::uint64_t dim_product(const Multipartition& l) {
    std::uint64_t d = 1;
    for (const auto& p : l) d *= hook_dim(p);
    return d;
}

std::string multipartition_str(const Multipartition& l, const FiniteAbelianGroup& g) {
    std::string s;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i].empty()) continue;
        if (!s.empty()) s += ' ';
        s += l[i].str() + "_" + g.element_name(i / 2) + (i % 2 ? "-" : "+");
    }
    return s.empty() ? "()" : s;
}

namespace {

bool valid_shape(const Partition& p) {
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i] == 0) return false;
        if (i && p.parts[i] > p.parts[i - 1]) return false;
    }
    return true;
}

bool shape_matches(const Tableau& t) {
    if (!valid_shape(t.shape) || t.rows.size() != t.shape.parts.size()) return false;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.rows[i].size() != t.shape.parts[i]) return false;
    return true;
}

}  // namespace

bool is_standard(const Tableau& t) {
    if (!shape_matches(t)) return false;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
            if (j && t.rows[i][j] <= t.rows[i][j - 1]) return false;
            if (i && t.rows[i][j] <= t.rows[i - 1][j]) return false;
        }
    return true;
}

bool is_standard(const MultiTableau& t) {
    std::vector<std::size_t> all;
    for (const auto& s : t) {
        if (!is_standard(s)) return false;
        for (const auto& r : s.rows) all.insert(all.end(), r.begin(), r.end());
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != i + 1) return false;
    return true;
}

std::vector<Tableau> standard_tableaux(const Partition& p) {
    if (!valid_shape(p)) fail(ErrorKind::InvalidParameter, "not a partition: " + p.str());
    std::vector<Tableau> out;
    Tableau cur{p, std::vector<std::vector<std::size_t>>(p.parts.size())};
    const std::size_t n = p.weight();
    // place 1..n one at a time into a row whose end is a removable corner of the filled part
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k > n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = 0; i < p.parts.size(); ++i) {
            auto len = cur.rows[i].size();
            if (len == p.parts[i]) continue;
            if (i && cur.rows[i - 1].size() <= len) continue;
            cur.rows[i].push_back(k);
            rec(k + 1);
            cur.rows[i].pop_back();
        }
    };
    rec(1);
    return out;
}

Tableau column_superstandard(const Partition& p, std::size_t first) {
    if (!valid_shape(p)) fail(ErrorKind::InvalidParameter, "not a partition: " + p.str());
    Tableau t{p, {}};
    for (auto r : p.parts) t.rows.emplace_back(r);
    auto c = conjugate(p);
    std::size_t k = first;
    for (std::size_t j = 0; j < c.parts.size(); ++j)
        for (std::size_t i = 0; i < c.parts[j]; ++i) t.rows[i][j] = k++;
    return t;
}

Tableau row_superstandard(const Partition& p, std::size_t first) {
    if (!valid_shape(p)) fail(ErrorKind::InvalidParameter, "not a partition: " + p.str());
    Tableau t{p, {}};
    std::size_t k = first;
    for (auto r : p.parts) {
        t.rows.emplace_back();
        for (std::size_t j = 0; j < r; ++j) t.rows.back().push_back(k++);
    }
    return t;
}

std::uint64_t delta_count(std::size_t n, std::size_t q, std::size_t t) {
    if (t == 0) fail(ErrorKind::InvalidParameter, "t must be positive");
    if (q == 0) return 0;
    return binomial(std::min(n, q - 1) + 2 * t - 1, 2 * t - 1);
}

std::uint64_t delta_enumerate(std::size_t n, std::size_t q, std::size_t t) {
    if (t == 0) fail(ErrorKind::InvalidParameter, "t must be positive");
    std::uint64_t count = 0;
    for (const auto& c : compositions(n, 2 * t))
        if (c[0] + q > n) ++count;
    return count;
}

std::uint64_t partition_count(std::size_t n) {
    std::vector<std::uint64_t> p(n + 1, 0);
    p[0] = 1;
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t s = k; s <= n; ++s) p[s] += p[s - k];
    return p[n];
}

std::uint64_t tset_bound(std::size_t q, std::size_t t) {
    if (q == 0) return 0;
    std::uint64_t b = q - 1;
    for (std::size_t i = 0; i < 2 * t; ++i) b *= partition_count(q);
    return b;
}

std::uint64_t tset_enumerate(const DegreeVector& nv, std::size_t q) {
    if (nv.empty()) return 0;
    const std::size_t n = std::accumulate(nv.begin(), nv.end(), std::size_t{0});
    std::uint64_t first = 0;
    for (const auto& p : partitions(nv[0]))
        if (p.first() + q > n) ++first;
    std::uint64_t rest = 1;
    for (std::size_t i = 1; i < nv.size(); ++i) rest *= partition_count(nv[i]);
    return first * rest;
}

namespace {

struct SignedPerm {
    std::vector<std::size_t> map;
    int sign = 1;
};

int perm_sign(const std::vector<std::size_t>& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

// Product of the full symmetric groups on disjoint letter sets.
std::vector<SignedPerm> product_group(const std::vector<std::vector<std::size_t>>& sets, std::size_t n) {
    SignedPerm id;
    id.map.resize(n);
    std::iota(id.map.begin(), id.map.end(), 0);
    std::vector<SignedPerm> out{id};
    for (const auto& s : sets) {
        if (s.size() < 2) continue;
        std::vector<std::size_t> pi(s.size());
        std::iota(pi.begin(), pi.end(), 0);
        std::vector<SignedPerm> next;
        do {
            int sg = perm_sign(pi);
            for (const auto& g : out) {
                SignedPerm h = g;
                for (std::size_t i = 0; i < s.size(); ++i) h.map[s[i]] = s[pi[i]];
                h.sign *= sg;
                next.push_back(std::move(h));
            }
        } while (std::next_permutation(pi.begin(), pi.end()));
        out = std::move(next);
    }
    return out;
}

// Labels of a multitableau on the block variables 0..n-1 (slot order).
struct Labelling {
    std::vector<Tableau> slots;  // entries are variable ids
    std::vector<SignedPerm> rows, cols;
};

Labelling make_labelling(const Multipartition& lambda, const DegreeVector& nv, TableauChoice choice) {
    Labelling l;
    std::size_t offset = 0;
    std::vector<std::vector<std::size_t>> rsets, csets;
    for (std::size_t s = 0; s < lambda.size(); ++s) {
        auto t = choice == TableauChoice::ColumnSuperstandard ? column_superstandard(lambda[s], offset)
                                                              : row_superstandard(lambda[s], offset);
        for (const auto& r : t.rows) rsets.push_back(r);
        auto c = conjugate(lambda[s]);
        for (std::size_t j = 0; j < c.parts.size(); ++j) {
            std::vector<std::size_t> col;
            for (std::size_t i = 0; i < c.parts[j]; ++i) col.push_back(t.rows[i][j]);
            csets.push_back(col);
        }
        offset += nv[s];
        l.slots.push_back(std::move(t));
    }
    l.rows = product_group(rsets, offset);
    l.cols = product_group(csets, offset);
    return l;
}

void check_shape(const CodimEngine& engine, const Multipartition& lambda) {
    if (lambda.size() != engine.slot_count())
        fail(ErrorKind::InvalidParameter, "multipartition has " + std::to_string(lambda.size()) + " parts, expected " +
                                              std::to_string(engine.slot_count()));
    for (const auto& p : lambda)
        if (!valid_shape(p)) fail(ErrorKind::InvalidParameter, "not a partition: " + p.str());
}

DegreeVector weights(const Multipartition& lambda) {
    DegreeVector nv;
    for (const auto& p : lambda) nv.push_back(p.weight());
    return nv;
}

/*
 * Pairing of the block quotient with the column span: a polynomial f maps to
 * (f . c_j)_j over the reduced rows c_j. The kernel of this map is the
 * identities of the block.
 */
class QuotientMap {
public:
    explicit QuotientMap(const CodimEngine::Block& b) : rows_(b.span.dense_rows()), pivots_(b.span.pivots()) {}

    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::uint32_t>& pivots() const { return pivots_; }

    // Image of sum_{r, c} sgn(c) c(r(w)) (row-symmetrize, then column-antisymmetrize).
    Vec symmetrized(const std::vector<std::size_t>& w, const Labelling& l) const {
        Vec out(rows_.size());
        std::vector<std::size_t> rw(w.size()), crw(w.size());
        for (const auto& r : l.rows) {
            for (std::size_t i = 0; i < w.size(); ++i) rw[i] = r.map[w[i]];
            for (const auto& c : l.cols) {
                for (std::size_t i = 0; i < w.size(); ++i) crw[i] = c.map[rw[i]];
                auto k = word_rank(crw);
                for (std::size_t j = 0; j < rows_.size(); ++j) {
                    const auto& x = rows_[j][k];
                    if (x.is_zero()) continue;
                    if (c.sign > 0) out[j] += x;
                    else out[j] -= x;
                }
            }
        }
        return out;
    }

private:
    std::vector<Vec> rows_;
    std::vector<std::uint32_t> pivots_;
};

}  // namespace

std::size_t multiplicity(const CodimEngine& engine, const Multipartition& lambda, TableauChoice choice) {
    check_shape(engine, lambda);
    auto nv = weights(lambda);
    auto block = engine.block(nv);
    if (block->rank() == 0) return 0;
    QuotientMap q(*block);
    auto l = make_labelling(lambda, nv, choice);
    // the pivot words form a basis of the quotient
    EchelonBasis image(q.rank());
    for (auto p : q.pivots()) {
        image.insert(q.symmetrized(word_unrank(p, block->n), l));
        if (image.full()) break;
    }
    return image.rank();
}

std::size_t multiplicity_hwv(const CodimEngine& engine, const Multipartition& lambda) {
    check_shape(engine, lambda);
    auto nv = weights(lambda);
    auto block = engine.block(nv);
    if (block->rank() == 0) return 0;
    QuotientMap q(*block);
    auto l = make_labelling(lambda, nv, TableauChoice::RowSuperstandard);
    const std::size_t n = block->n;

    std::vector<std::vector<Tableau>> standard;
    for (const auto& p : lambda) standard.push_back(standard_tableaux(p));

    EchelonBasis image(q.rank());
    std::vector<std::size_t> owner(n);  // positions 0..n-1 distributed over slots
    std::vector<std::size_t> word(n);
    std::function<bool(std::size_t, std::vector<std::size_t>&)> split;
    std::function<bool(std::size_t, const std::vector<std::vector<std::size_t>>&)> fill;

    // position sets per slot, then a standard tableau per slot relabelled by the set
    fill = [&](std::size_t s, const std::vector<std::vector<std::size_t>>& sets) -> bool {
        if (s == lambda.size()) {
            image.insert(q.symmetrized(word, l));
            return !image.full();
        }
        for (const auto& t : standard[s]) {
            for (std::size_t i = 0; i < t.rows.size(); ++i)
                for (std::size_t j = 0; j < t.rows[i].size(); ++j)
                    word[sets[s][t.rows[i][j] - 1]] = l.slots[s].rows[i][j];
            if (!fill(s + 1, sets)) return false;
        }
        return true;
    };

    std::vector<std::size_t> remaining(n);
    std::iota(remaining.begin(), remaining.end(), 0);
    std::vector<std::vector<std::size_t>> sets(lambda.size());
    std::function<bool(std::size_t, std::vector<std::size_t>)> choose = [&](std::size_t s,
                                                                            std::vector<std::size_t> rest) -> bool {
        if (s + 1 == lambda.size()) {
            sets[s] = rest;
            return fill(0, sets);
        }
        const std::size_t k = nv[s];
        std::vector<bool> mask(rest.size(), false);
        std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            sets[s].clear();
            std::vector<std::size_t> left;
            for (std::size_t i = 0; i < rest.size(); ++i) (mask[i] ? sets[s] : left).push_back(rest[i]);
            if (!choose(s + 1, left)) return false;
        } while (std::prev_permutation(mask.begin(), mask.end()));
        return true;
    };
    choose(0, remaining);
    return image.rank();
}

std::vector<CocharacterEntry> cocharacter_block(const CodimEngine& engine, const DegreeVector& nv) {
    std::vector<CocharacterEntry> out;
    for (auto& l : multipartitions(nv)) {
        CocharacterEntry e;
        e.nv = nv;
        e.dims = dim_product(l);
        e.multiplicity = multiplicity(engine, l);
        e.lambda = std::move(l);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CocharacterEntry> cocharacter(const CodimEngine& engine, std::size_t n) {
    engine.blocks(n);  // warm the cache with the configured workers
    std::vector<CocharacterEntry> out;
    for (const auto& nv : engine.degree_vectors(n)) {
        auto part = cocharacter_block(engine, nv);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

std::uint64_t colength(const CodimEngine& engine, std::size_t n) {
    std::uint64_t l = 0;
    for (const auto& e : cocharacter(engine, n)) l += e.multiplicity;
    return l;
}

bool radical_strip_check(const CodimEngine& engine, std::size_t n) {
    const std::size_t q = engine.radical_nilpotency();
    engine.blocks(n);
    for (const auto& nv : engine.degree_vectors(n)) {
        if (engine.block_codim(nv) == 0) continue;
        for (const auto& l : multipartitions(nv)) {
            if (n - l[0].first() < q) continue;
            if (multiplicity(engine, l) != 0) return false;
        }
    }
    return true;
}

Polynomial highest_weight_vector(const MultiTableau& t, const FiniteAbelianGroup& g) {
    if (!is_standard(t)) fail(ErrorKind::InvalidParameter, "multitableau is not standard");
    if (t.size() != 2 * g.order())
        fail(ErrorKind::InvalidParameter, "multitableau needs " + std::to_string(2 * g.order()) + " slots");
    std::size_t n = 0;
    for (const auto& s : t) n += s.shape.weight();

    // one variable per row, numbered across slots
    std::vector<std::vector<Variable>> row_var(t.size());
    std::uint32_t index = 1;
    for (std::size_t s = 0; s < t.size(); ++s)
        for (std::size_t i = 0; i < t[s].rows.size(); ++i)
            row_var[s].push_back({s % 2 ? VarKind::Z : VarKind::Y, index++, static_cast<Element>(s / 2)});

    struct Column {
        std::size_t slot;
        std::vector<std::size_t> positions;  // top to bottom
    };
    std::vector<Column> columns;
    for (std::size_t s = 0; s < t.size(); ++s) {
        auto c = conjugate(t[s].shape);
        for (std::size_t j = 0; j < c.parts.size(); ++j) {
            Column col{s, {}};
            for (std::size_t i = 0; i < c.parts[j]; ++i) col.positions.push_back(t[s].rows[i][j] - 1);
            columns.push_back(std::move(col));
        }
    }

    Polynomial out;
    Monomial m(n);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int sign) {
        if (k == columns.size()) {
            out.add_term(m, Rational(sign));
            return;
        }
        const auto& col = columns[k];
        std::vector<std::size_t> pi(col.positions.size());
        std::iota(pi.begin(), pi.end(), 0);
        do {
            for (std::size_t i = 0; i < pi.size(); ++i) m[col.positions[i]] = row_var[col.slot][pi[i]];
            rec(k + 1, sign * perm_sign(pi));
        } while (std::next_permutation(pi.begin(), pi.end()));
    };
    rec(0, 1);
    return out;
}

}  // namespace gstar
