#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "gstar/algebra.hpp"
#include "gstar/catalog.hpp"
#include "gstar/codim.hpp"
#include "gstar/errors.hpp"
#include "gstar/growth.hpp"
#include "gstar/polynomial.hpp"
#include "gstar/reptheory.hpp"

using namespace gstar;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Notes {
public:
    void fail(const std::string& s) {
        ok_ = false;
        if (count_++ < 6) out_ << (count_ > 1 ? "; " : "") << s;
    }
    Outcome outcome(const std::string& summary) const {
        std::string d = ok_ ? summary : out_.str();
        if (count_ > 6) d += "; ... " + std::to_string(count_ - 6) + " more";
        return {ok_, d};
    }

private:
    bool ok_ = true;
    std::size_t count_ = 0;
    std::ostringstream out_;
};

GroupPtr group(const char* spec) { return std::make_shared<FiniteAbelianGroup>(parse_group(spec)); }

std::string seq_str(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

// Every algebra reachable through the named sets, deduplicated by key.
std::map<std::string, GStarAlgebra> catalog_pool(const GroupPtr& g) {
    std::map<std::string, GStarAlgebra> pool;
    for (const auto& name : catalog_set_names()) {
        try {
            for (auto& e : catalog_set(name, g)) pool.emplace(e.key, e.algebra);
        } catch (const Error&) {
            // set not defined over this group
        }
    }
    for (auto extra : {"Mrho[1]", "Mrho[g]", "FC2star", "nilpotent[dim=2]"}) pool.emplace(extra, build_from_spec(extra, g));
    return pool;
}

Outcome formula_suite() {
    using F = std::function<std::uint64_t(std::uint64_t)>;
    auto c2 = [](std::uint64_t n) { return binomial(n, 2); };
    struct Item {
        std::string spec;
        F f;
    };
    std::vector<Item> items = {
        {"A2star@Z3", [](auto n) { return 4 * n - 1; }},
        {"N2star@Z3", [](auto n) { return n + 1; }},
        {"U2star@Z3", [](auto) { return std::uint64_t{1}; }},
        {"C3[g]@Z3", [&](auto n) { return 1 + 2 * n + c2(n); }},
        {"C3star[g]@Z3", [&](auto n) { return 1 + 2 * n + c2(n); }},
        {"G2[psi;g,g]@Z3", [&](auto n) { return 1 + 2 * n + c2(n); }},
        {"G2[tau;g,g]@Z3", [&](auto n) { return 1 + 2 * n + c2(n); }},
        {"G2[gamma;g,g]@Z3", [&](auto n) { return 1 + 3 * n + 2 * c2(n); }},
        {"G2[tau;1,1]@Z3", [&](auto n) { return 1 + n + c2(n); }},
        {"W[nu3;g,g]@Z3", [&](auto n) { return 1 + 3 * n + 2 * c2(n); }},
        {"W[nu1;g,g^2]@Z3", [&](auto n) { return 1 + 2 * n + 2 * c2(n); }},
        {"W[nu2;g,g^2]@Z3", [&](auto n) { return 1 + 2 * n + 2 * c2(n); }},
        {"W[nu1;g,g^3]@Z4", [&](auto n) { return 1 + 2 * n + 2 * c2(n); }},
        {"W[nu2;g,g^3]@Z4", [&](auto n) { return 1 + 2 * n + 2 * c2(n); }},
    };
    for (std::size_t m = 2; m <= 4; ++m)
        items.push_back({"C" + std::to_string(m) + "star[1]@Z3", [m](auto n) {
                             std::uint64_t s = 0;
                             for (std::size_t i = 0; i < m; ++i) s += binomial(n, i);
                             return s;
                         }});
    Notes notes;
    for (const auto& it : items) {
        CodimEngine e(build_from_spec(it.spec));
        std::vector<std::uint64_t> got, want;
        for (std::size_t n = 1; n <= 5; ++n) {
            got.push_back(e.total(n));
            want.push_back(it.f(n));
        }
        if (got != want) notes.fail(it.spec + " computed " + seq_str(got) + " formula " + seq_str(want));
    }
    return notes.outcome(std::to_string(items.size()) + " formulas, n=1..5");
}

Outcome lower_bounds() {
    Notes notes;
    std::size_t checked = 0;
    for (auto gs : {"Z2", "Z3"}) {
        auto g = group(gs);
        std::vector<std::string> names;
        for (Element a = 0; a < g->order(); ++a) names.push_back(g->element_name(a));
        std::vector<std::pair<std::string, bool>> keys;  // key, uses (n-1)(n-2)/2
        for (const auto& a : names) {
            keys.push_back({"M4[" + a + "]", false});
            keys.push_back({"M5[" + a + "]", false});
        }
        for (const auto& a : names)
            for (const auto& b : names) {
                const std::string p = a + "," + b + "]";
                for (auto f : {"M6[rho;", "M6[omega1;", "M7[rho;", "M7[omega2;", "M9[", "M10["})
                    keys.push_back({f + p, false});
                keys.push_back({"M8[" + p, true});
                if (a != names.front()) keys.push_back({"M11[" + p, false});
            }
        for (const auto& [k, m8] : keys) {
            auto a = build_from_spec(k, g);
            for (std::size_t n = 3; n <= 4; ++n) {
                const std::uint64_t bound = m8 ? (n - 1) * (n - 2) / 2 : n * (n - 1);
                const auto c = total_codim(a, n);
                ++checked;
                if (c < bound)
                    notes.fail(k + "@" + gs + " n=" + std::to_string(n) + ": " + std::to_string(c) + " < " +
                               std::to_string(bound));
            }
        }
    }
    return notes.outcome(std::to_string(checked) + " bounds over Z2, Z3");
}

Outcome quadratic_profiles() {
    Notes notes;
    auto members = catalog_set("M", group("Z2"));
    for (const auto& m : members) {
        CodimEngine e(m.algebra);
        std::vector<std::uint64_t> c;
        for (std::size_t n = 1; n <= 6; ++n) c.push_back(e.total(n));
        auto p = poly_profile(c);
        if (!p.detected || p.degree != 2) {
            // Diagnostic only: where the sequence settles with two more terms.
            EngineOptions wide;
            wide.cap_monomials = 40320;
            CodimEngine longer(m.algebra, CodimKind::Full, wide);
            auto more = c;
            for (std::size_t n = 7; n <= 8; ++n) more.push_back(longer.total(n));
            auto q = poly_profile(more);
            notes.fail(m.key + " c1..c6=" + seq_str(c) + " -> " + growth_label(p) + " (c1..c8: " + growth_label(q) +
                       " from n=" + std::to_string(q.onset) + ")");
        }
    }
    return notes.outcome(std::to_string(members.size()) + " members of M over Z2, degree 2");
}

Outcome generator_suite() {
    struct Item {
        std::string spec;
        std::vector<std::string> generators;  // x stands for y or z
    };
    const std::vector<Item> items = {
        {"FC2star@Z2", {"[x1_1,x2_1]", "x1_g"}},
        {"FC2star@Z3", {"[x1_1,x2_1]", "x1_g", "x1_(g^2)"}},
        {"Mrho[g]@Z2", {"z1_1", "x1_g x2_g"}},
        {"Mrho[g]@Z3", {"z1_1", "x1_g x2_g", "x1_(g^2)"}},
        {"Mrho[1]@Z2", {"z1_1 z2_1", "x1_g"}},
        {"Mrho[1]@Z3", {"z1_1 z2_1", "x1_g", "x1_(g^2)"}},
        {"FCp[g]@Z2", {"[y1_1,y2_1]", "[y1_1,y2_g]", "[y1_g,y2_g]", "z1_1", "z1_g"}},
        {"FCp[g]@Z3", {"[y1_1,y2_1]", "[y1_1,y2_g]", "[y1_1,y2_(g^2)]", "[y1_g,y2_g]", "[y1_g,y2_(g^2)]",
                       "[y1_(g^2),y2_(g^2)]", "z1_1", "z1_g", "z1_(g^2)"}},
        {"FC2G[g]@Z2", {"z1_1", "y1_g"}},
    };
    Notes notes;
    std::size_t blocks = 0;
    for (const auto& it : items) {
        auto a = build_from_spec(it.spec);
        std::vector<Polynomial> gens;
        for (const auto& text : it.generators)
            for (auto& p : parse_all(text, a.group())) gens.push_back(std::move(p));
        CodimEngine e(a);
        auto r = ideal_generated_check(e, gens, 4);
        blocks += r.blocks_checked;
        if (!r.equal) notes.fail(it.spec + ": " + r.detail);
    }
    return notes.outcome(std::to_string(items.size()) + " algebras, " + std::to_string(blocks) + " blocks up to N=4");
}

Outcome chain_inequalities() {
    Notes notes;
    std::size_t count = 0;
    for (auto gs : {"Z2", "Z3"}) {
        auto g = group(gs);
        for (const auto& [key, a] : catalog_pool(g)) {
            CodimEngine full(a, CodimKind::Full), st(a, CodimKind::Star), gr(a, CodimKind::Graded),
                ord(a, CodimKind::Ordinary);
            ++count;
            std::uint64_t pow = 1;
            for (std::size_t n = 1; n <= 4; ++n) {
                pow *= 2 * g->order();
                const auto c = ord.total(n), cs = st.total(n), cg = gr.total(n), cf = full.total(n);
                if (!(c <= cs && cs <= cf && c <= cg && cg <= cf && cf <= pow * c))
                    notes.fail(key + "@" + gs + " n=" + std::to_string(n) + " c=" + std::to_string(c) +
                               " c*=" + std::to_string(cs) + " cG=" + std::to_string(cg) + " c(G,*)=" +
                               std::to_string(cf));
            }
        }
    }
    return notes.outcome(std::to_string(count) + " catalog algebras over Z2, Z3, n<=4");
}

Outcome counting_lemma() {
    Notes notes;
    std::size_t enum_ok = 0, closed_ok = 0, total = 0;
    std::string closed_fail;
    for (std::size_t n = 1; n <= 12; ++n)
        for (std::size_t q = 1; q <= 4; ++q)
            for (std::size_t t = 1; t <= 3; ++t) {
                ++total;
                const auto c = delta_count(n, q, t);
                const auto e = delta_enumerate(n, q, t);
                const auto closed = binomial(q - 1 + 2 * t - 1, 2 * t - 1);
                if (c == e) ++enum_ok;
                else notes.fail("delta_count(" + std::to_string(n) + "," + std::to_string(q) + "," +
                                std::to_string(t) + ")=" + std::to_string(c) + " enumeration " + std::to_string(e));
                if (e == closed) {
                    ++closed_ok;
                } else if (closed_fail.empty()) {
                    closed_fail = "n=" + std::to_string(n) + ",q=" + std::to_string(q) + ",t=" + std::to_string(t) +
                                  ": |Delta|=" + std::to_string(e) + " vs closed form " + std::to_string(closed);
                }
            }
    if (closed_ok != total)
        notes.fail("closed form matches " + std::to_string(closed_ok) + "/" + std::to_string(total) +
                   " (all mismatches have n < q-1; first " + closed_fail + ")");
    return notes.outcome(std::to_string(total) + " triples, enumeration and closed form agree");
}

Outcome cocharacter_consistency() {
    Notes notes;
    std::size_t algebras = 0, strips = 0;
    for (auto gs : {"Z2", "Z3"}) {
        auto g = group(gs);
        for (const auto& [key, a] : catalog_pool(g)) {
            CodimEngine e(a);
            ++algebras;
            for (std::size_t n = 1; n <= 4; ++n)
                for (const auto& nv : e.degree_vectors(n)) {
                    std::uint64_t s = 0;
                    for (const auto& c : cocharacter_block(e, nv)) s += c.multiplicity * c.dims;
                    if (s != e.block_codim(nv))
                        notes.fail(key + "@" + gs + " block sum " + std::to_string(s) + " != " +
                                   std::to_string(e.block_codim(nv)));
                }
            bool polynomial = true;
            for (const auto& x : exclusion_report(e, "forbidden", 3)) polynomial = polynomial && x.excluded;
            if (!polynomial) continue;
            ++strips;
            for (std::size_t n = 1; n <= 4; ++n)
                if (!radical_strip_check(e, n)) notes.fail(key + "@" + gs + " strip check fails at n=" + std::to_string(n));
        }
    }
    return notes.outcome(std::to_string(algebras) + " algebras, strip check on " + std::to_string(strips) +
                         " certified polynomial-growth ones");
}

Outcome exponential_witnesses() {
    Notes notes;
    auto g = group("Z2");
    for (auto spec : {"FC2star", "FC2G[g]"}) {
        CodimEngine e(build_from_spec(spec, g));
        for (std::size_t n = 1; n <= 6; ++n)
            if (e.total(n) != (std::uint64_t{1} << n))
                notes.fail(std::string(spec) + " c_" + std::to_string(n) + "=" + std::to_string(e.total(n)));
    }
    CodimEngine fc(build_from_spec("FC2star", g));
    std::vector<std::uint64_t> l;
    for (std::size_t n = 1; n <= 5; ++n) l.push_back(colength(fc, n));
    for (std::size_t i = 1; i < l.size(); ++i)
        if (l[i] <= l[i - 1]) notes.fail("colength not increasing: " + seq_str(l));
    return notes.outcome("2^n up to n=6, colength " + seq_str(l));
}

// Structure lemmas ----------------------------------------------------------

bool products_vanish(const GStarAlgebra& a, const Subspace& s, const Subspace& t) {
    for (const auto& x : s.basis())
        for (const auto& y : t.basis())
            if (!is_zero(a.multiply(x, y))) return false;
    return true;
}

// a a* = 0 for every a in s, via the polarized form.
bool self_star_vanishes(const GStarAlgebra& a, const Subspace& s) {
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i; j < b.size(); ++j) {
            auto v = a.multiply(b[i], a.involute(b[j]));
            if (i != j) v = add(v, a.multiply(b[j], a.involute(b[i])));
            if (!is_zero(v)) return false;
        }
    return true;
}

Outcome structure_lemmas() {
    Notes notes;
    std::map<std::string, std::size_t> applied;
    std::size_t shapes = 0;
    for (auto gs : {"Z2", "Z3"}) {
        auto g = group(gs);
        std::map<std::string, std::vector<std::unique_ptr<CodimEngine>>> sets;
        for (auto n : {"I1", "I2", "I3", "I4", "I5", "I6", "I7", "I8", "I"})
            for (auto& e : catalog_set(n, g)) sets[n].push_back(std::make_unique<CodimEngine>(e.algebra));
        std::vector<Element> nontrivial;
        for (Element x = 1; x < g->order(); ++x) nontrivial.push_back(x);
        for (const auto& [key, a] : catalog_pool(g)) {
            auto one = a.field_idempotent();
            if (!one || !a.is_field_plus_radical(*one)) continue;
            ++shapes;
            const std::string name = key + "@" + gs;
            CodimEngine ea(a);
            auto excludes = [&](const char* set) {
                for (const auto& q : sets[set])
                    if (var_contains(ea, *q, 3).contained) return false;
                return true;
            };
            auto pd = a.peirce_decompose(*one);
            auto part = [&](const Subspace& s, Element x) { return s.intersect(a.component(x)); };
            auto signed_part = [&](const Subspace& s, Element x, Sign sg) {
                return s.intersect(a.homogeneous_component(x, sg));
            };
            auto check = [&](const std::string& lemma, bool ok) {
                ++applied[lemma];
                if (!ok) notes.fail(lemma + " on " + name);
            };
            for (Element x = 0; x < g->order(); ++x) {
                if (excludes("I1")) check("aa*=0 on J10", self_star_vanishes(a, part(pd.j10, x)));
                if (excludes("I2")) check("aa*=0 on J01", self_star_vanishes(a, part(pd.j01, x)));
                for (auto [set, sg] : {std::pair{"I3", Sign::Plus}, std::pair{"I4", Sign::Minus}})
                    if (excludes(set)) {
                        auto b = signed_part(pd.j00, x, sg);
                        check(std::string("J10 J00^") + (sg == Sign::Plus ? "+" : "-") + "=0",
                              products_vanish(a, pd.j10, b) && products_vanish(a, b, pd.j01));
                    }
                if (excludes("I7")) {
                    auto b = signed_part(pd.j11, x, Sign::Minus);
                    check("J01 J11^-=0", products_vanish(a, pd.j01, b) && products_vanish(a, b, pd.j10));
                }
                if (x != 0 && excludes("I8")) {
                    auto b = signed_part(pd.j11, x, Sign::Plus);
                    check("J01 J11^+=0", products_vanish(a, pd.j01, b) && products_vanish(a, b, pd.j10));
                }
            }
            if (excludes("I5")) check("J10 J01=0", products_vanish(a, pd.j10, pd.j01));
            if (excludes("I6")) check("J01 J10=0", products_vanish(a, pd.j01, pd.j10));
            if (!excludes("I")) continue;

            // B^x = F + (J11)_1^+ + J_x; their direct sum is equivalent to A.
            const Subspace field = Subspace::span(a.dim(), {*one});
            const Subspace base = field.sum(signed_part(pd.j11, 0, Sign::Plus));
            const Subspace rad = a.radical();
            std::vector<GStarAlgebra> pieces;
            try {
                for (Element x = 0; x < g->order(); ++x) {
                    pieces.push_back(subalgebra(a, base.sum(part(rad, x)), name + "|B" + std::to_string(x)));
                    if (x == 0) continue;
                    auto m = build_from_spec("Mrho[" + g->element_name(x) + "]", g);
                    check("B^h in var(M_h,rho)", var_contains(m, pieces.back(), 3).contained);
                }
                check("A ~ sum of B^g", t_equivalent(a, direct_sum(pieces), 3));
            } catch (const Error& err) {
                check("B^g is a subalgebra", false);
            }
        }
    }
    std::string summary = std::to_string(shapes) + " F+J algebras;";
    for (const auto& [lemma, n] : applied) summary += " [" + lemma + "] x" + std::to_string(n);
    return notes.outcome(summary);
}

Outcome minimality_and_incomparability() {
    Notes notes;
    auto g = group("Z2");
    auto r = pairwise_incomparability("K1", g, 4);
    for (auto [i, j] : r.unseparated) {
        CodimEngine a(build_from_spec(r.keys[i], g)), b(build_from_spec(r.keys[j], g));
        const bool later = !var_contains(a, b, 5).contained;
        notes.fail("K1 pair unseparated at N=4: Id(" + r.keys[i] + ") in Id(" + r.keys[j] + ")" +
                   (later ? " (separated at N=5)" : ""));
    }
    CodimEngine m6(build_from_spec("M6[omega1;1,1]", g)), u3(build_from_spec("U3star", g));
    if (auto c = var_contains(m6, u3, 4); !c.contained)
        notes.fail("Id(M6[omega1;1,1]) not inside Id(U3star): " + c.separating_identity->str(*g) +
                   " holds on M6[omega1;1,1], fails on U3star");
    if (var_contains(u3, m6, 4).contained) notes.fail("Id(U3star) inside Id(M6[omega1;1,1]) up to N=4");
    for (auto spec : {"G2[tau;1,1]", "C3star[1]", "N3star", "U3star", "M4[1]"}) {
        CodimEngine e(build_from_spec(spec, g));
        auto v = minimality_report(e, 4);
        if (v.verdict.rfind("minimal-quadratic", 0) != 0) notes.fail(std::string(spec) + ": " + v.verdict);
    }
    return notes.outcome(std::to_string(r.keys.size()) + " members of K1 separated, containment one-way, 5 minimal");
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"codimension formulas", formula_suite},
        {"lower bounds", lower_bounds},
        {"quadratic profiles", quadratic_profiles},
        {"identity generators", generator_suite},
        {"chain inequalities", chain_inequalities},
        {"counting lemma", counting_lemma},
        {"cocharacter consistency", cocharacter_consistency},
        {"exponential witnesses", exponential_witnesses},
        {"structure lemmas", structure_lemmas},
        {"minimality and incomparability", minimality_and_incomparability},
    };
    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failures;
        std::ostringstream line;
        line.precision(1);
        line << std::fixed << (o.pass ? "PASS" : "FAIL") << " " << index << " " << c.name << " (" << secs
             << " s): " << o.detail;
        std::cout << line.str() << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
