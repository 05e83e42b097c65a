#include "gstar/codim.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

#include "gstar/errors.hpp"

namespace gstar {

std::vector<Variable> block_variables(const DegreeVector& nv) {
    std::vector<Variable> vars;
    std::uint32_t idx = 1;
    for (std::size_t s = 0; s < nv.size(); ++s)
        for (std::size_t i = 0; i < nv[s]; ++i)
            vars.push_back(Variable{s % 2 ? VarKind::Z : VarKind::Y, idx++, s / 2});
    return vars;
}

Polynomial block_to_polynomial(const DegreeVector& nv, const Vec& coords) {
    auto vars = block_variables(nv);
    const std::size_t n = vars.size();
    if (coords.size() != factorial(n)) fail(ErrorKind::MalformedInput, "block vector has wrong length");
    Polynomial p;
    for (std::size_t r = 0; r < coords.size(); ++r) {
        if (coords[r].is_zero()) continue;
        auto w = word_unrank(r, n);
        Monomial m;
        for (auto v : w) m.push_back(vars[v]);
        p.add_term(m, coords[r]);
    }
    return p;
}

namespace {

std::vector<Variable> sorted_block_order(const Polynomial& p) {
    auto vars = p.variables();
    std::sort(vars.begin(), vars.end(), [](const Variable& a, const Variable& b) {
        auto sa = slot_of(a.kind, a.degree);
        auto sb = slot_of(b.kind, b.degree);
        if (sa != sb) return sa < sb;
        return a.index < b.index;
    });
    return vars;
}

}  // namespace

std::pair<DegreeVector, Vec> polynomial_to_block(const Polynomial& multilinear, std::size_t group_order) {
    if (!multilinear.is_multilinear()) fail(ErrorKind::MustBeHomogeneous, "polynomial is not multilinear");
    auto vars = sorted_block_order(multilinear);
    DegreeVector nv(2 * group_order);
    std::map<Variable, std::size_t> id;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].degree >= group_order) fail(ErrorKind::InvalidParameter, "variable degree outside the group");
        nv[slot_of(vars[i].kind, vars[i].degree)]++;
        id[vars[i]] = i;
    }
    const std::size_t n = vars.size();
    Vec v(factorial(n));
    for (const auto& [m, c] : multilinear.terms()) {
        std::vector<std::size_t> w;
        for (const auto& x : m) w.push_back(id.at(x));
        v[word_rank(w)] += c;
    }
    return {nv, v};
}

// ---------------------------------------------------------------------------

CodimEngine::CodimEngine(const GStarAlgebra& algebra, CodimKind kind, EngineOptions options)
    : algebra_(algebra), kind_(kind), options_(options) {
    if (options_.workers == 0) options_.workers = 1;
    const std::size_t d = algebra_.dim();
    const std::size_t t = algebra_.group().order();
    Subspace j = algebra_.radical();
    q_ = algebra_.nilpotency_index(j);

    std::vector<Subspace> spaces;
    auto sym_split = [&](const std::vector<Vec>& basis, Sign sign) {
        std::vector<Vec> vs;
        for (const auto& b : basis) {
            Vec s = algebra_.involute(b);
            vs.push_back(sign == Sign::Plus ? add(b, s) : sub(b, s));
        }
        return Subspace::span(d, vs);
    };
    std::vector<Vec> all;
    for (std::size_t i = 0; i < d; ++i) all.push_back(algebra_.basis_vector(i));
    switch (kind_) {
        case CodimKind::Full:
            for (Element g = 0; g < t; ++g) {
                spaces.push_back(algebra_.homogeneous_component(g, Sign::Plus));
                spaces.push_back(algebra_.homogeneous_component(g, Sign::Minus));
            }
            break;
        case CodimKind::Star:
            spaces.push_back(sym_split(all, Sign::Plus));
            spaces.push_back(sym_split(all, Sign::Minus));
            break;
        case CodimKind::Graded:
            for (Element g = 0; g < t; ++g) spaces.push_back(algebra_.component(g));
            break;
        case CodimKind::Ordinary:
            spaces.push_back(Subspace::whole(d));
            break;
    }

    for (const auto& s : spaces) {
        Slot slot;
        Subspace js = s.intersect(j);
        EchelonBasis acc(d);
        for (const auto& v : js.basis()) acc.insert(v);
        for (const auto& v : s.basis())
            if (acc.insert(v)) {
                slot.dense.push_back(v);
                slot.radical.push_back(false);
            }
        for (const auto& v : js.basis()) {
            slot.dense.push_back(v);
            slot.radical.push_back(true);
        }
        for (const auto& e : slot.dense) {
            std::vector<SparseVec> rows(d);
            for (std::size_t i = 0; i < d; ++i) {
                Vec acc_row(d);
                for (std::size_t k = 0; k < d; ++k) {
                    if (e[k].is_zero()) continue;
                    for (const auto& p : algebra_.basis_product(i, k)) acc_row[p.index] += e[k] * p.value;
                }
                rows[i] = to_sparse(acc_row);
            }
            slot.right.push_back(std::move(rows));
        }
        slots_.push_back(std::move(slot));
    }
}

void CodimEngine::check_capacity(std::size_t n) const {
    if (n > 20 || factorial(n) > options_.cap_monomials)
        fail(ErrorKind::Capacity, "block of degree " + std::to_string(n) + " exceeds the monomial cap of " +
                                      std::to_string(options_.cap_monomials));
}

void CodimEngine::for_each_substitution(
    const DegreeVector& nv,
    const std::function<bool(const std::vector<std::size_t>&, const std::vector<SparseVec>&)>& visit) const {
    if (nv.size() != slots_.size()) fail(ErrorKind::InvalidParameter, "degree vector has wrong number of slots");
    const std::size_t n = std::accumulate(nv.begin(), nv.end(), std::size_t{0});
    check_capacity(n);
    std::vector<std::size_t> slot_of_var;
    for (std::size_t s = 0; s < nv.size(); ++s) {
        if (nv[s] > 0 && slots_[s].dense.empty()) return;
        for (std::size_t i = 0; i < nv[s]; ++i) slot_of_var.push_back(s);
    }
    if (n == 0) return;
    const std::size_t d = algebra_.dim();
    const std::size_t max_radical = q_ - 1;

    std::vector<std::size_t> tuple(n);
    std::vector<SparseVec> columns(d);
    std::vector<Vec> stack(n + 1, Vec(d));
    bool keep_going = true;

    // Evaluates every word for the current tuple; words are visited in
    // lexicographic order so column entries arrive sorted.
    std::function<void(std::size_t, std::uint32_t, std::size_t)> words =
        [&](std::size_t depth, std::uint32_t used, std::size_t rank) {
            if (depth == n) {
                const Vec& p = stack[n];
                for (std::size_t k = 0; k < d; ++k)
                    if (!p[k].is_zero()) columns[k].push_back({static_cast<std::uint32_t>(rank), p[k]});
                return;
            }
            std::size_t smaller = 0;
            for (std::size_t v = 0; v < n; ++v) {
                if (used & (1u << v)) continue;
                const Slot& slot = slots_[slot_of_var[v]];
                const std::size_t e = tuple[v];
                Vec& next = stack[depth + 1];
                bool nonzero = false;
                if (depth == 0) {
                    next = slot.dense[e];
                    nonzero = true;
                } else {
                    const Vec& cur = stack[depth];
                    for (auto& x : next) x = Rational();
                    for (std::size_t i = 0; i < d; ++i) {
                        if (cur[i].is_zero()) continue;
                        for (const auto& r : slot.right[e][i]) {
                            next[r.index] += cur[i] * r.value;
                        }
                    }
                    for (const auto& x : next)
                        if (!x.is_zero()) {
                            nonzero = true;
                            break;
                        }
                }
                if (nonzero) words(depth + 1, used | (1u << v), rank * (n - depth) + smaller);
                ++smaller;
            }
        };

    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t v, std::size_t radical_used) {
        if (!keep_going) return;
        if (v == n) {
            for (auto& c : columns) c.clear();
            words(0, 0, 0);
            keep_going = visit(tuple, columns);
            return;
        }
        const Slot& slot = slots_[slot_of_var[v]];
        for (std::size_t e = 0; e < slot.dense.size() && keep_going; ++e) {
            std::size_t r = radical_used + (slot.radical[e] ? 1 : 0);
            if (r > max_radical) continue;
            tuple[v] = e;
            choose(v + 1, r);
        }
    };
    choose(0, 0);
}

std::shared_ptr<CodimEngine::Block> CodimEngine::compute(const DegreeVector& nv) const {
    auto block = std::make_shared<Block>();
    block->nv = nv;
    block->n = std::accumulate(nv.begin(), nv.end(), std::size_t{0});
    check_capacity(block->n);
    block->span = EchelonBasis(factorial(block->n));
    for_each_substitution(nv, [&](const std::vector<std::size_t>&, const std::vector<SparseVec>& cols) {
        for (const auto& c : cols) {
            if (c.empty()) continue;
            block->span.insert(c);
            if (block->span.full()) return false;
        }
        return true;
    });
    return block;
}

std::shared_ptr<const CodimEngine::Block> CodimEngine::block(const DegreeVector& nv) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(nv);
        if (it != cache_.end()) return it->second;
    }
    std::shared_ptr<const Block> b = compute(nv);
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.emplace(nv, b);
    return it->second;
}

std::vector<std::shared_ptr<const CodimEngine::Block>> CodimEngine::blocks(std::size_t n) const {
    auto nvs = degree_vectors(n);
    std::vector<std::shared_ptr<const Block>> out(nvs.size());
    const std::size_t workers = std::min(options_.workers, nvs.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < nvs.size(); ++i) out[i] = block(nvs[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < nvs.size(); i = next++) out[i] = block(nvs[i]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::uint64_t CodimEngine::total(std::size_t n) const {
    if (n == 0) fail(ErrorKind::InvalidParameter, "codimensions start at n = 1");
    std::uint64_t sum = 0;
    for (const auto& b : blocks(n))
        if (b->rank() > 0) sum += multinomial(b->nv) * b->rank();
    return sum;
}

std::optional<std::vector<Vec>> CodimEngine::nonvanishing_substitution(const DegreeVector& nv, const Vec& f) const {
    std::optional<std::vector<std::size_t>> found;
    for_each_substitution(nv, [&](const std::vector<std::size_t>& tuple, const std::vector<SparseVec>& cols) {
        for (const auto& c : cols) {
            Rational s;
            for (const auto& e : c) s += f[e.index] * e.value;
            if (!s.is_zero()) {
                found = tuple;
                return false;
            }
        }
        return true;
    });
    if (!found) return std::nullopt;
    std::vector<Vec> out;
    std::size_t v = 0;
    for (std::size_t s = 0; s < nv.size(); ++s)
        for (std::size_t i = 0; i < nv[s]; ++i, ++v) out.push_back(slots_[s].dense[(*found)[v]]);
    return out;
}

// ---------------------------------------------------------------------------

std::size_t block_codim(const GStarAlgebra& a, const DegreeVector& nv, EngineOptions options) {
    return CodimEngine(a, CodimKind::Full, options).block_codim(nv);
}

std::uint64_t total_codim(const GStarAlgebra& a, std::size_t n, EngineOptions options) {
    return CodimEngine(a, CodimKind::Full, options).total(n);
}

std::uint64_t star_codim(const GStarAlgebra& a, std::size_t n, EngineOptions options) {
    return CodimEngine(a, CodimKind::Star, options).total(n);
}

std::uint64_t graded_codim(const GStarAlgebra& a, std::size_t n, EngineOptions options) {
    return CodimEngine(a, CodimKind::Graded, options).total(n);
}

std::uint64_t ordinary_codim(const GStarAlgebra& a, std::size_t n, EngineOptions options) {
    return CodimEngine(a, CodimKind::Ordinary, options).total(n);
}

namespace {

void require_full(const CodimEngine& e) {
    if (e.kind() != CodimKind::Full) fail(ErrorKind::InvalidParameter, "operation needs a (G,*) engine");
}

bool orthogonal_to_span(const EchelonBasis& span, const Vec& f) {
    for (const auto& row : span.sorted_rows()) {
        Rational s;
        for (const auto& e : row) s += f[e.index] * e.value;
        if (!s.is_zero()) return false;
    }
    return true;
}

}  // namespace

Vec evaluate(const GStarAlgebra& a, const Polynomial& p, const std::map<Variable, Vec>& values) {
    Vec out(a.dim());
    for (const auto& [m, c] : p.terms()) {
        Vec acc;
        if (m.empty()) {
            if (!a.unit()) fail(ErrorKind::InvalidParameter, "constant term in a non-unital algebra");
            acc = *a.unit();
        } else {
            for (std::size_t i = 0; i < m.size(); ++i) {
                auto it = values.find(m[i]);
                if (it == values.end()) fail(ErrorKind::InvalidParameter, "no value for a variable");
                if (it->second.size() != a.dim()) fail(ErrorKind::InvalidParameter, "value of wrong dimension");
                acc = i == 0 ? it->second : a.multiply(acc, it->second);
            }
        }
        axpy(out, c, acc);
    }
    return out;
}

IdentityResult is_identity(const CodimEngine& engine, const Polynomial& p) {
    require_full(engine);
    const auto& g = engine.algebra().group();
    for (const auto& comp : multihomogeneous_components(p)) {
        if (comp.terms().begin()->first.empty())
            fail(ErrorKind::InvalidParameter, "constant terms are not polynomial identities");
        for (const auto& v : comp.variables())
            if (v.degree >= g.order()) fail(ErrorKind::InvalidParameter, "variable degree outside the group");
        Polynomial m = multilinearize(comp);
        auto [nv, vec] = polynomial_to_block(m, g.order());
        auto block = engine.block(nv);
        if (orthogonal_to_span(block->span, vec)) continue;
        IdentityResult r;
        r.holds = false;
        auto sub = engine.nonvanishing_substitution(nv, vec);
        if (sub) {
            IdentityWitness w;
            w.multilinear = m;
            auto order = sorted_block_order(m);
            std::map<Variable, Vec> values;
            for (std::size_t i = 0; i < order.size(); ++i) {
                w.substitution.emplace_back(order[i], (*sub)[i]);
                values[order[i]] = (*sub)[i];
            }
            w.value = evaluate(engine.algebra(), m, values);
            r.witness = std::move(w);
        }
        return r;
    }
    return {};
}

IdentityResult is_identity(const GStarAlgebra& a, const Polynomial& p, EngineOptions options) {
    return is_identity(CodimEngine(a, CodimKind::Full, options), p);
}

std::vector<Vec> kernel_vectors(const CodimEngine& engine, const DegreeVector& nv) {
    return engine.block(nv)->span.orthogonal_complement();
}

std::vector<Polynomial> kernel_identity_basis(const CodimEngine& engine, const DegreeVector& nv) {
    require_full(engine);
    std::vector<Polynomial> out;
    for (const auto& v : kernel_vectors(engine, nv)) out.push_back(block_to_polynomial(nv, v));
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct LinearGenerator {
    std::vector<Variable> vars;
    std::vector<std::pair<std::vector<std::size_t>, Rational>> monomials;  // positions into vars
};

LinearGenerator linear_form(const Polynomial& multilinear) {
    LinearGenerator g;
    g.vars = multilinear.variables();
    std::map<Variable, std::size_t> id;
    for (std::size_t i = 0; i < g.vars.size(); ++i) id[g.vars[i]] = i;
    for (const auto& [m, c] : multilinear.terms()) {
        std::vector<std::size_t> seq;
        for (const auto& v : m) seq.push_back(id.at(v));
        g.monomials.emplace_back(std::move(seq), c);
    }
    return g;
}

}  // namespace

Subspace tideal_component(const std::vector<Polynomial>& generators, const DegreeVector& nv,
                          const FiniteAbelianGroup& group, std::size_t cap_monomials) {
    if (nv.size() != 2 * group.order()) fail(ErrorKind::InvalidParameter, "degree vector has wrong number of slots");
    const auto vars = block_variables(nv);
    const std::size_t n = vars.size();
    if (n > 20 || factorial(n) > cap_monomials) fail(ErrorKind::Capacity, "block exceeds the monomial cap");
    const std::size_t dim = factorial(n);
    EchelonBasis span(dim);
    if (n == 0) return Subspace::from_echelon(span);

    std::vector<LinearGenerator> gens;
    for (const auto& g : generators)
        for (const auto& comp : multihomogeneous_components(g)) {
            if (comp.terms().begin()->first.empty())
                fail(ErrorKind::InvalidParameter, "generators must not have constant terms");
            gens.push_back(linear_form(multilinearize(comp)));
        }

    std::vector<std::size_t> word(n);
    for (const auto& gen : gens) {
        const std::size_t k = gen.vars.size();
        if (k > n || span.full()) continue;
        std::iota(word.begin(), word.end(), 0);
        Vec acc(dim);
        std::vector<std::size_t> touched;

        auto segment_degree = [&](std::size_t a, std::size_t b) {
            Element d = 0;
            for (std::size_t i = a; i < b; ++i) d = group.multiply(d, vars[word[i]].degree);
            return d;
        };
        auto segment_skew = [&](std::size_t a, std::size_t b) {
            std::size_t z = 0;
            for (std::size_t i = a; i < b; ++i) z += vars[word[i]].kind == VarKind::Z;
            return z;
        };

        auto emit = [&](const std::vector<std::size_t>& starts) {
            // starts[0] = |u|; q_i spans [starts[i], starts[i+1]); v = [starts[k+1], n).
            for (std::size_t i = 0; i < k; ++i)
                if (segment_degree(starts[i], starts[i + 1]) != gen.vars[i].degree) return;
            std::vector<int> rev_sign(k);
            for (std::size_t i = 0; i < k; ++i) {
                int eps = gen.vars[i].kind == VarKind::Y ? 1 : -1;
                int z = segment_skew(starts[i], starts[i + 1]) % 2 ? -1 : 1;
                rev_sign[i] = eps * z;
            }
            for (auto t : touched) acc[t] = Rational();
            touched.clear();
            std::vector<std::size_t> out;
            out.reserve(n);
            for (const auto& [seq, coef] : gen.monomials) {
                for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
                    out.clear();
                    for (std::size_t i = 0; i < starts[0]; ++i) out.push_back(word[i]);
                    int sign = 1;
                    for (auto pos : seq) {
                        std::size_t a = starts[pos];
                        std::size_t b = starts[pos + 1];
                        if (mask >> pos & 1) {
                            sign *= rev_sign[pos];
                            for (std::size_t i = b; i-- > a;) out.push_back(word[i]);
                        } else {
                            for (std::size_t i = a; i < b; ++i) out.push_back(word[i]);
                        }
                    }
                    for (std::size_t i = starts[k]; i < n; ++i) out.push_back(word[i]);
                    std::size_t r = word_rank(out);
                    if (acc[r].is_zero()) touched.push_back(r);
                    if (sign > 0) acc[r] += coef;
                    else acc[r] -= coef;
                }
            }
            SparseVec sv;
            std::sort(touched.begin(), touched.end());
            for (auto t : touched)
                if (!acc[t].is_zero()) sv.push_back({static_cast<std::uint32_t>(t), acc[t]});
            if (!sv.empty()) span.insert(sv);
        };

        // The generator segments are contiguous in `word` in the order
        // u, q_1, ..., q_k, v; only the order of the q's inside the
        // generator's monomials differs.
        std::vector<std::size_t> starts(k + 1);
        std::function<void(std::size_t, std::size_t)> split = [&](std::size_t i, std::size_t pos) {
            if (span.full()) return;
            if (i == k) {
                starts[k] = pos;  // start of v
                emit(starts);
                return;
            }
            // q_{i+1} starts at pos and needs at least one letter; leave room
            // for the remaining k - i - 1 segments.
            for (std::size_t end = pos + 1; end + (k - i - 1) <= n; ++end) {
                starts[i + 1] = end;
                split(i + 1, end);
            }
        };
        do {
            for (std::size_t u = 0; u + k <= n && !span.full(); ++u) {
                starts[0] = u;
                split(0, u);
            }
        } while (!span.full() && std::next_permutation(word.begin(), word.end()));
    }
    return Subspace::from_echelon(span);
}

IdealCheckReport ideal_generated_check(const CodimEngine& engine, const std::vector<Polynomial>& generators,
                                       std::size_t max_degree) {
    require_full(engine);
    IdealCheckReport rep;
    const auto& g = engine.algebra().group();
    for (std::size_t n = 1; n <= max_degree; ++n) {
        for (const auto& nv : engine.degree_vectors(n)) {
            auto block = engine.block(nv);
            Subspace tid = tideal_component(generators, nv, g, engine.options().cap_monomials);
            ++rep.blocks_checked;
            const std::size_t kdim = factorial(n) - block->rank();
            for (const auto& v : tid.basis())
                if (!orthogonal_to_span(block->span, v)) {
                    rep.equal = false;
                    rep.discrepancy = nv;
                    rep.tideal_dim = tid.dim();
                    rep.kernel_dim = kdim;
                    rep.evidence = block_to_polynomial(nv, v);
                    rep.detail = "a generated consequence is not an identity of the algebra";
                    return rep;
                }
            if (tid.dim() != kdim) {
                rep.equal = false;
                rep.discrepancy = nv;
                rep.tideal_dim = tid.dim();
                rep.kernel_dim = kdim;
                for (const auto& v : block->span.orthogonal_complement())
                    if (!tid.contains(v)) {
                        rep.evidence = block_to_polynomial(nv, v);
                        break;
                    }
                rep.detail = "an identity of the algebra is not generated";
                return rep;
            }
        }
    }
    return rep;
}

ContainmentResult var_contains(const CodimEngine& a, const CodimEngine& b, std::size_t max_degree) {
    require_full(a);
    require_full(b);
    if (!(a.algebra().group() == b.algebra().group()))
        fail(ErrorKind::InvalidParameter, "algebras are graded by different groups");
    for (std::size_t n = 1; n <= max_degree; ++n) {
        for (const auto& nv : a.degree_vectors(n)) {
            auto ba = a.block(nv);
            auto bb = b.block(nv);
            if (bb->rank() == 0) continue;
            for (const auto& row : bb->span.sorted_rows()) {
                if (ba->span.contains(row)) continue;
                ContainmentResult r;
                r.contained = false;
                r.block = nv;
                Vec c = to_dense(row, bb->span.ambient());
                for (const auto& k : ba->span.orthogonal_complement())
                    if (!dot(k, c).is_zero()) {
                        r.separating_identity = block_to_polynomial(nv, k);
                        break;
                    }
                return r;
            }
        }
    }
    return {};
}

ContainmentResult var_contains(const GStarAlgebra& a, const GStarAlgebra& b, std::size_t max_degree,
                               EngineOptions options) {
    return var_contains(CodimEngine(a, CodimKind::Full, options), CodimEngine(b, CodimKind::Full, options),
                        max_degree);
}

bool t_equivalent(const CodimEngine& a, const CodimEngine& b, std::size_t max_degree) {
    return var_contains(a, b, max_degree).contained && var_contains(b, a, max_degree).contained;
}

bool t_equivalent(const GStarAlgebra& a, const GStarAlgebra& b, std::size_t max_degree, EngineOptions options) {
    CodimEngine ea(a, CodimKind::Full, options);
    CodimEngine eb(b, CodimKind::Full, options);
    return t_equivalent(ea, eb, max_degree);
}

}  // namespace gstar
