#include "gstar/growth.hpp"

#include <memory>

#include "gstar/errors.hpp"
#include "gstar/linalg.hpp"

namespace gstar {

Rational PolyProfile::at(std::size_t n) const {
    Rational v, p(1);
    for (const auto& a : coefficients) {
        v += a * p;
        p *= Rational(static_cast<std::int64_t>(n));
    }
    return v;
}

namespace {

std::vector<Rational> differences(const std::vector<Rational>& s) {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < s.size(); ++i) d.push_back(s[i] - s[i - 1]);
    return d;
}

// Length of the longest constant tail.
std::size_t constant_tail(const std::vector<Rational>& s) {
    if (s.empty()) return 0;
    std::size_t len = 1;
    while (len < s.size() && s[s.size() - 1 - len] == s.back()) ++len;
    return len;
}

// Interpolating polynomial through (onset + i, seq[onset - 1 + i]), i = 0..k.
std::vector<Rational> fit(const std::vector<Rational>& seq, std::size_t onset, std::size_t k) {
    std::vector<Vec> columns(k + 1, Vec(k + 1));
    Vec rhs(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
        Rational x(static_cast<std::int64_t>(onset + i)), p(1);
        for (std::size_t j = 0; j <= k; ++j) {
            columns[j][i] = p;
            p *= x;
        }
        rhs[i] = seq[onset - 1 + i];
    }
    auto sol = solve_combination(columns, rhs);
    if (!sol) fail(ErrorKind::Structural, "interpolation failed");
    return *sol;
}

}  // namespace

PolyProfile poly_profile(const std::vector<Rational>& seq) {
    if (seq.size() < 4) fail(ErrorKind::InvalidParameter, "poly_profile needs at least 4 terms");
    PolyProfile p;
    std::vector<Rational> d = seq;
    Rational kfact(1);
    for (std::size_t k = 0; d.size() >= 2; ++k) {
        if (k) kfact *= Rational(static_cast<std::int64_t>(k));
        auto tail = constant_tail(d);
        if (tail >= 2) {
            p.detected = true;
            p.degree = k;
            p.leading = d.back() / kfact;
            // k-th difference i involves seq terms i..i+k
            p.onset = d.size() - tail + 1;
            p.coefficients = fit(seq, p.onset, k);
            while (!p.coefficients.empty() && p.coefficients.back().is_zero()) p.coefficients.pop_back();
            return p;
        }
        d = differences(d);
    }
    return p;
}

PolyProfile poly_profile(const std::vector<std::uint64_t>& seq) {
    std::vector<Rational> r;
    for (auto v : seq) r.emplace_back(static_cast<std::int64_t>(v));
    return poly_profile(r);
}

std::string growth_label(const PolyProfile& p) {
    if (!p.detected) return "not-eventually-polynomial-at-this-N";
    switch (p.degree) {
    case 0: return "constant";
    case 1: return "linear";
    case 2: return "quadratic";
    default: return "degree-" + std::to_string(p.degree);
    }
}

std::vector<Exclusion> exclusion_report(const CodimEngine& a, std::string_view set_name, std::size_t max_degree) {
    if (max_degree < 2) fail(ErrorKind::InvalidParameter, "exclusion needs N >= 2");
    std::vector<Exclusion> out;
    for (const auto& q : catalog_set(set_name, a.algebra().group_ptr())) {
        CodimEngine b(q.algebra, CodimKind::Full, a.options());
        auto r = var_contains(a, b, max_degree);
        out.push_back({q.key, !r.contained, r.separating_identity});
    }
    return out;
}

namespace {

std::vector<std::uint64_t> prefix(const CodimEngine& a, std::size_t n) {
    std::vector<std::uint64_t> c;
    for (std::size_t k = 1; k <= n; ++k) c.push_back(a.total(k));
    return c;
}

}  // namespace

GrowthReport growth_report(const CodimEngine& a, std::size_t n_codim, std::size_t n_ideal) {
    GrowthReport r;
    r.algebra = a.algebra().name();
    r.codims = prefix(a, n_codim);
    r.profile = poly_profile(r.codims);
    r.radical_nilpotency = a.radical_nilpotency();
    r.label = growth_label(r.profile);
    r.exclusions = exclusion_report(a, "forbidden", n_ideal);
    return r;
}

bool radical_bound_check(const CodimEngine& a, std::size_t n_codim) {
    auto p = poly_profile(prefix(a, n_codim));
    return p.detected && p.degree + 1 <= a.radical_nilpotency();
}

namespace {

std::optional<std::string> find_equivalent(const CodimEngine& a, std::string_view set_name, std::size_t n) {
    for (const auto& q : catalog_set(set_name, a.algebra().group_ptr())) {
        CodimEngine b(q.algebra, CodimKind::Full, a.options());
        if (t_equivalent(a, b, n)) return q.key;
    }
    return std::nullopt;
}

}  // namespace

MinimalityVerdict minimality_report(const CodimEngine& a, std::size_t n_ideal, std::size_t n_codim) {
    MinimalityVerdict v;
    v.profile = poly_profile(prefix(a, n_codim));
    const std::string at = " at degree " + std::to_string(n_ideal);
    if (!v.profile.detected) {
        v.verdict = "not-eventually-polynomial-at-this-N";
    } else if (v.profile.degree == 2) {
        v.match = find_equivalent(a, "M", n_ideal);
        v.verdict = v.match ? "minimal-quadratic (matches " + *v.match + ")"
                            : "quadratic, matches no catalog entry" + at;
    } else if (v.profile.degree <= 1) {
        v.match = find_equivalent(a, "linear", n_ideal);
        if (v.match) {
            v.verdict = "minimal-linear (matches " + *v.match + ")";
        } else {
            v.match = find_equivalent(a, "P", n_ideal);
            v.verdict = v.match ? "linear, not minimal (matches " + *v.match + ")"
                                : "linear, matches no catalog entry" + at;
        }
    } else {
        v.verdict = "out of quadratic scope";
    }
    return v;
}

IncomparabilityReport pairwise_incomparability(std::string_view set_name, const GroupPtr& g, std::size_t max_degree,
                                               EngineOptions options) {
    if (max_degree < 2) fail(ErrorKind::InvalidParameter, "incomparability needs N >= 2");
    IncomparabilityReport r;
    std::vector<std::unique_ptr<CodimEngine>> engines;
    for (const auto& e : catalog_set(set_name, g)) {
        r.keys.push_back(e.key);
        engines.push_back(std::make_unique<CodimEngine>(e.algebra, CodimKind::Full, options));
    }
    const std::size_t k = engines.size();
    r.contained.assign(k, std::vector<bool>(k, true));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            r.contained[i][j] = var_contains(*engines[i], *engines[j], max_degree).contained;
            if (r.contained[i][j]) r.unseparated.emplace_back(i, j);
        }
    return r;
}

}  // namespace gstar
