#include "gstar/catalog.hpp"

#include <algorithm>
#include <functional>
#include <regex>
#include <set>
#include <sstream>

#include "gstar/errors.hpp"

namespace gstar {

namespace {

struct Unit {
    std::size_t i, j;  // 1-based matrix position
    Rational c;
};
using Mat = std::vector<Unit>;

struct Spanned {
    std::string label;
    Mat m;
    Element degree;
};

Vec flatten(const Mat& m, std::size_t n) {
    Vec v(n * n);
    for (const auto& u : m) v[(u.i - 1) * n + (u.j - 1)] += u.c;
    return v;
}

Vec matrix_product(const Vec& a, const Vec& b, std::size_t n) {
    Vec r(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& x = a[i * n + k];
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k * n + j].is_zero()) r[i * n + j] += x * b[k * n + j];
        }
    return r;
}

// Transpose along the secondary diagonal: e_ij -> e_{n+1-j, n+1-i}.
Vec reflect(const Vec& a, std::size_t n) {
    Vec r(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[(n - 1 - j) * n + (n - 1 - i)] = a[i * n + j];
    return r;
}

std::string unit_label(const Mat& m) {
    std::string s;
    for (const auto& u : m) {
        if (u.c.sign() < 0) s += "-";
        else if (!s.empty()) s += "+";
        Rational a = u.c.sign() < 0 ? -u.c : u.c;
        if (!a.is_one()) s += a.str();
        s += "e" + std::to_string(u.i) + std::to_string(u.j);
    }
    return s;
}

Spanned unit_element(Mat m, Element degree) {
    std::string label = unit_label(m);
    return {std::move(label), std::move(m), degree};
}

Mat identity_units(std::size_t n) {
    Mat m;
    for (std::size_t i = 1; i <= n; ++i) m.push_back({i, i, 1});
    return m;
}

Mat vec_to_units(const Vec& v, std::size_t n) {
    Mat m;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!v[i * n + j].is_zero()) m.push_back({i + 1, j + 1, v[i * n + j]});
    return m;
}

std::optional<Vec> detect_unit(std::size_t d, const std::vector<GStarAlgebra::Product>& sc) {
    // u b_i = b_i and b_i u = b_i for every i, as a linear system in u.
    std::vector<Vec> columns(d, Vec(2 * d * d));
    for (const auto& p : sc) {
        // b_k b_i contributes to row block i of the left equations.
        columns[p.i][p.j * d + p.k] += p.coef;
        columns[p.j][d * d + p.i * d + p.k] += p.coef;
    }
    Vec rhs(2 * d * d);
    for (std::size_t i = 0; i < d; ++i) {
        rhs[i * d + i] = 1;
        rhs[d * d + i * d + i] = 1;
    }
    return solve_combination(columns, rhs);
}

GStarAlgebra finish(const GroupPtr& g, std::vector<std::string> labels, const std::vector<GStarAlgebra::Product>& sc,
                    std::vector<Element> grading, Matrix involution, std::string name) {
    const std::size_t d = labels.size();
    auto unit = detect_unit(d, sc);
    GStarAlgebra a(g, std::move(labels), sc, std::move(grading), std::move(involution), unit, std::move(name));
    auto report = a.validate();
    if (!report.ok) fail(ErrorKind::Structural, "catalog algebra " + a.name() + " fails " + report.axiom);
    return a;
}

// Builds the subalgebra of n x n matrices spanned by `basis`. Without an
// explicit involution the reflection involution is used.
GStarAlgebra from_span(const GroupPtr& g, std::size_t n, const std::vector<Spanned>& basis,
                       const std::optional<std::vector<Vec>>& involution_images, const std::string& name) {
    const std::size_t d = basis.size();
    std::vector<Vec> vs;
    for (const auto& b : basis) vs.push_back(flatten(b.m, n));
    auto coords = [&](const Vec& v, const char* what) {
        auto x = solve_combination(vs, v);
        if (!x) fail(ErrorKind::Structural, std::string("span of ") + name + " is not closed under " + what);
        return *x;
    };
    std::vector<GStarAlgebra::Product> sc;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec c = coords(matrix_product(vs[i], vs[j], n), "products");
            for (std::size_t k = 0; k < d; ++k)
                if (!c[k].is_zero()) sc.push_back({i, j, k, c[k]});
        }
    Matrix inv(d, Vec(d));
    for (std::size_t j = 0; j < d; ++j) {
        Vec c = involution_images ? (*involution_images)[j] : coords(reflect(vs[j], n), "the reflection");
        for (std::size_t i = 0; i < d; ++i) inv[i][j] = c[i];
    }
    std::vector<std::string> labels;
    std::vector<Element> grading;
    for (const auto& b : basis) {
        labels.push_back(b.label);
        grading.push_back(b.degree);
    }
    return finish(g, std::move(labels), sc, std::move(grading), std::move(inv), name);
}

std::vector<Vec> diagonal_involution(const std::vector<int>& signs) {
    std::vector<Vec> out;
    for (std::size_t j = 0; j < signs.size(); ++j) {
        Vec v(signs.size());
        v[j] = signs[j];
        out.push_back(std::move(v));
    }
    return out;
}

// Degree of a matrix under the elementary grading with vertex labels
// (e_ij has degree labels[i]^-1 labels[j]); fails when inhomogeneous.
Element vertex_degree(const FiniteAbelianGroup& G, const std::vector<Element>& labels, const Mat& m) {
    std::optional<Element> deg;
    for (const auto& u : m) {
        Element d = G.multiply(G.inverse(labels[u.i - 1]), labels[u.j - 1]);
        if (deg && *deg != d) fail(ErrorKind::Structural, "spanning matrix is not homogeneous");
        deg = d;
    }
    return deg.value_or(0);
}

// A_m, N_m, U_m inside UT_{2m}. `graded` selects the grading induced by
// (1, g, ..., g, 1, ..., 1, g); there E is replaced by its degree-one part so
// that the span is graded.
GStarAlgebra anu_family(const GroupPtr& gp, char which, std::size_t m, std::optional<Element> graded,
                        const std::string& name) {
    const auto& G = *gp;
    const std::size_t n = 2 * m;
    std::vector<Element> labels(n, 0);
    if (graded) {
        for (std::size_t i = 2; i <= m; ++i) labels[i - 1] = *graded;
        labels[n - 1] = *graded;
    }
    Mat e;
    for (std::size_t i = 1; i <= m - 1; ++i) {
        if (graded && i == 1) continue;
        e.push_back({i, i + 1, 1});
        e.push_back({n - i, n - i + 1, 1});
    }
    std::sort(e.begin(), e.end(), [](const Unit& a, const Unit& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
    const std::string ename = graded ? "E1" : "E";
    std::vector<Spanned> basis;
    auto add = [&](std::string label, Mat mat) {
        Element d = vertex_degree(G, labels, mat);
        basis.push_back({std::move(label), std::move(mat), d});
    };
    auto add_units = [&](Mat mat) {
        std::string label = unit_label(mat);
        add(std::move(label), std::move(mat));
    };
    if (which == 'A') add_units({{1, 1, 1}, {n, n, 1}});
    else add("I", identity_units(n));
    Vec ev = flatten(e, n);
    Vec power = ev;
    for (std::size_t k = 1; k + 2 <= m; ++k) {
        add(k == 1 ? ename : ename + "^" + std::to_string(k), vec_to_units(power, n));
        power = matrix_product(power, ev, n);
    }
    if (which == 'A') {
        for (std::size_t j = 2; j <= m; ++j) add_units({{1, j, 1}});
        for (std::size_t i = m + 1; i <= n - 1; ++i) add_units({{i, n, 1}});
    } else {
        add_units({{1, 2, 1}, {n - 1, n, which == 'N' ? Rational(-1) : Rational(1)}});
        for (std::size_t j = 3; j <= m; ++j) add_units({{1, j, 1}});
        for (std::size_t i = m + 1; i <= n - 2; ++i) add_units({{i, n, 1}});
    }
    return from_span(gp, n, basis, std::nullopt, name);
}

GStarAlgebra c_family(const GroupPtr& gp, std::size_t m, Element g, bool starred, const std::string& name) {
    const auto& G = *gp;
    Mat e1;
    for (std::size_t i = 1; i < m; ++i) e1.push_back({i, i + 1, 1});
    Vec ev = flatten(e1, m);
    Vec power = ev;
    std::vector<Spanned> basis{{"I", identity_units(m), 0}};
    std::vector<int> signs{1};
    for (std::size_t k = 1; k < m; ++k) {
        basis.push_back({k == 1 ? "E1" : "E1^" + std::to_string(k), vec_to_units(power, m),
                         G.power(g, static_cast<long long>(k))});
        signs.push_back(starred && k % 2 ? -1 : 1);
        power = matrix_product(power, ev, m);
    }
    return from_span(gp, m, basis, diagonal_involution(signs), name);
}

// Group algebra of a cyclic group of order p with generator u; when graded,
// u^i has degree g^i.
GStarAlgebra group_algebra(const GroupPtr& gp, std::size_t p, Element g, bool graded, bool skew,
                           const std::string& name) {
    const auto& G = *gp;
    std::vector<std::string> labels;
    std::vector<Element> grading;
    std::vector<GStarAlgebra::Product> sc;
    Matrix inv(p, Vec(p));
    for (std::size_t i = 0; i < p; ++i) {
        labels.push_back(i == 0 ? "1" : (i == 1 ? "u" : "u^" + std::to_string(i)));
        grading.push_back(graded ? G.power(g, static_cast<long long>(i)) : 0);
        inv[i][i] = skew && i % 2 ? -1 : 1;
        for (std::size_t j = 0; j < p; ++j) sc.push_back({i, j, (i + j) % p, 1});
    }
    return finish(gp, std::move(labels), sc, std::move(grading), std::move(inv), name);
}

GStarAlgebra null_algebra(const GroupPtr& gp, std::size_t d, const std::string& name) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= d; ++i) labels.push_back("n" + std::to_string(i));
    return finish(gp, std::move(labels), {}, std::vector<Element>(d, 0), identity_matrix(d), name);
}

bool is_prime(std::size_t p) {
    if (p < 2) return false;
    for (std::size_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

const std::set<std::string> kTags{"rho", "omega1", "omega2", "psi", "tau", "gamma", "nu1", "nu2", "nu3"};

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_top(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

}  // namespace

std::string CatalogKey::str(const FiniteAbelianGroup& G) const {
    auto el = [&](std::size_t i) { return G.element_name(elements.at(i)); };
    auto pair = [&] { return el(0) + "," + el(1); };
    const std::string ms = std::to_string(m);
    switch (family) {
        case Family::MRho: return "Mrho[" + el(0) + "]";
        case Family::FCp: return "FCp[" + el(0) + "]";
        case Family::FC2Star: return "FC2star";
        case Family::FC2GStar: return "FC2G[" + el(0) + "]";
        case Family::AStar: return "A" + ms + "star";
        case Family::NStar: return "N" + ms + "star";
        case Family::UStar: return "U" + ms + "star";
        case Family::AGraded: return "A" + ms + "[" + el(0) + "]";
        case Family::NGraded: return "N" + ms + "[" + el(0) + "]";
        case Family::UGraded: return "U" + ms + "[" + el(0) + "]";
        case Family::CGraded: return "C" + ms + "[" + el(0) + "]";
        case Family::CStarGraded: return "C" + ms + "star[" + el(0) + "]";
        case Family::G2: return "G2[" + tag + ";" + pair() + "]";
        case Family::W: return "W[" + tag + ";" + pair() + "]";
        case Family::M4: return "M4[" + el(0) + "]";
        case Family::M5: return "M5[" + el(0) + "]";
        case Family::M6: return "M6[" + tag + ";" + pair() + "]";
        case Family::M7: return "M7[" + tag + ";" + pair() + "]";
        case Family::M8: return "M8[" + pair() + "]";
        case Family::M9: return "M9[" + pair() + "]";
        case Family::M10: return "M10[" + pair() + "]";
        case Family::M11: return "M11[" + pair() + "]";
        case Family::Commutative: return m == 2 ? "C" : "C[m=" + ms + "]";
        case Family::Nilpotent: return "nilpotent[dim=" + std::to_string(dim) + "]";
    }
    return "?";
}

CatalogKey parse_key(std::string_view text, const FiniteAbelianGroup& G) {
    const std::string s = trim(text);
    const auto open = s.find('[');
    const std::string head = trim(s.substr(0, open));
    std::string body;
    if (open != std::string::npos) {
        if (s.back() != ']') fail(ErrorKind::MalformedInput, "unterminated parameter list in '" + s + "'");
        body = s.substr(open + 1, s.size() - open - 2);
    }

    CatalogKey key;
    std::size_t elements_needed = 0;
    std::set<std::string> allowed_tags;
    std::string default_tag;
    bool allow_m = false;
    bool allow_dim = false;
    static const std::regex anu_star(R"(([ANU])(\d+)star)");
    static const std::regex anu_graded(R"(([ANU])(\d+))");
    static const std::regex c_star(R"(C(\d+)star)");
    static const std::regex c_graded(R"(C(\d+))");
    std::smatch mt;
    auto anu = [](char c, Family a, Family n, Family u) { return c == 'A' ? a : (c == 'N' ? n : u); };
    if (head == "Mrho") {
        key.family = Family::MRho;
        elements_needed = 1;
    } else if (head == "FCp") {
        key.family = Family::FCp;
        elements_needed = 1;
    } else if (head == "FC2star") {
        key.family = Family::FC2Star;
    } else if (head == "FC2G") {
        key.family = Family::FC2GStar;
        elements_needed = 1;
    } else if (head == "G2") {
        key.family = Family::G2;
        elements_needed = 2;
        allowed_tags = {"psi", "tau", "gamma"};
    } else if (head == "W") {
        key.family = Family::W;
        elements_needed = 2;
        allowed_tags = {"nu1", "nu2", "nu3"};
    } else if (head == "M4" || head == "M5") {
        key.family = head == "M4" ? Family::M4 : Family::M5;
        elements_needed = 1;
        allowed_tags = {"rho"};
        default_tag = "rho";
    } else if (head == "M6" || head == "M7") {
        key.family = head == "M6" ? Family::M6 : Family::M7;
        elements_needed = 2;
        allowed_tags = {"rho", head == "M6" ? "omega1" : "omega2"};
    } else if (head == "M8" || head == "M9" || head == "M10" || head == "M11") {
        key.family = head == "M8" ? Family::M8 : head == "M9" ? Family::M9 : head == "M10" ? Family::M10 : Family::M11;
        elements_needed = 2;
        allowed_tags = {"rho"};
        default_tag = "rho";
    } else if (head == "C") {
        key.family = Family::Commutative;
        allow_m = true;
    } else if (head == "nilpotent") {
        key.family = Family::Nilpotent;
        allow_dim = true;
    } else if (std::regex_match(head, mt, anu_star)) {
        key.family = anu(mt[1].str()[0], Family::AStar, Family::NStar, Family::UStar);
        key.m = std::stoul(mt[2].str());
    } else if (std::regex_match(head, mt, anu_graded)) {
        key.family = anu(mt[1].str()[0], Family::AGraded, Family::NGraded, Family::UGraded);
        key.m = std::stoul(mt[2].str());
        elements_needed = 1;
    } else if (std::regex_match(head, mt, c_star)) {
        key.family = Family::CStarGraded;
        key.m = std::stoul(mt[1].str());
        elements_needed = 1;
    } else if (std::regex_match(head, mt, c_graded)) {
        key.family = Family::CGraded;
        key.m = std::stoul(mt[1].str());
        elements_needed = 1;
    } else {
        fail(ErrorKind::MalformedInput, "unknown algebra family '" + head + "'");
    }

    std::vector<std::string> tokens;
    if (!trim(body).empty())
        for (const auto& part : split_top(body, ';'))
            for (const auto& tok : split_top(part, ',')) tokens.push_back(tok);
    std::vector<Element> positional;
    std::map<std::string, Element> named;
    for (const auto& tok : tokens) {
        if (tok.empty()) fail(ErrorKind::MalformedInput, "empty parameter in '" + s + "'");
        if (kTags.count(tok)) {
            if (!allowed_tags.count(tok)) fail(ErrorKind::InvalidParameter, "involution " + tok + " not defined for " + head);
            if (!key.tag.empty()) fail(ErrorKind::MalformedInput, "more than one involution in '" + s + "'");
            key.tag = tok;
            continue;
        }
        const auto eq = tok.find('=');
        if (eq == std::string::npos) {
            positional.push_back(G.parse_element(tok));
            continue;
        }
        const std::string name = trim(tok.substr(0, eq));
        const std::string value = trim(tok.substr(eq + 1));
        if (name == "m" || name == "dim") {
            if ((name == "m" && !allow_m) || (name == "dim" && !allow_dim))
                fail(ErrorKind::MalformedInput, "parameter " + name + " not accepted by " + head);
            if (value.empty() || !std::all_of(value.begin(), value.end(), ::isdigit))
                fail(ErrorKind::MalformedInput, "parameter " + name + " needs a positive integer");
            (name == "m" ? key.m : key.dim) = std::stoul(value);
        } else if (name == "g" || name == "h") {
            named[name] = G.parse_element(value);
        } else {
            fail(ErrorKind::MalformedInput, "unknown parameter '" + name + "'");
        }
    }
    if (!named.empty()) {
        if (!positional.empty()) fail(ErrorKind::MalformedInput, "mixed named and positional elements in '" + s + "'");
        if (named.count("g")) positional.push_back(named["g"]);
        if (named.count("h")) {
            if (positional.empty()) fail(ErrorKind::MalformedInput, "h given without g in '" + s + "'");
            positional.push_back(named["h"]);
        }
    }
    if (positional.size() != elements_needed)
        fail(ErrorKind::MalformedInput, head + " takes " + std::to_string(elements_needed) + " group element(s)");
    key.elements = positional;
    if (key.tag.empty()) key.tag = default_tag;
    if (!allowed_tags.empty() && key.tag.empty())
        fail(ErrorKind::MalformedInput, head + " needs an involution tag");
    return key;
}

GStarAlgebra build(const CatalogKey& key, const GroupPtr& gp) {
    if (!gp) fail(ErrorKind::InvalidParameter, "no group");
    const auto& G = *gp;
    for (auto e : key.elements)
        if (e >= G.order()) fail(ErrorKind::InvalidParameter, "group element out of range");
    std::string name = key.str(G) + "@" + (G.name().empty() ? "G" : G.name());
    const Element g = key.elements.empty() ? 0 : key.elements[0];
    const Element h = key.elements.size() > 1 ? key.elements[1] : 0;
    const Element gh = G.multiply(g, h);
    auto need_m = [&](std::size_t lo) {
        if (key.m < lo) fail(ErrorKind::InvalidParameter, "m must be at least " + std::to_string(lo));
    };
    auto need_nontrivial = [&] {
        if (g == 0) fail(ErrorKind::InvalidParameter, key.str(G) + " needs g different from 1");
    };
    auto u = [](std::size_t i, std::size_t j, Rational c = 1) { return Unit{i, j, c}; };

    switch (key.family) {
        case Family::MRho:
            return from_span(gp, 4,
                             {unit_element({u(1, 1), u(4, 4)}, 0), unit_element({u(2, 2), u(3, 3)}, 0),
                              unit_element({u(1, 2)}, g), unit_element({u(3, 4)}, g)},
                             std::nullopt, name);
        case Family::FCp:
            if (!is_prime(G.element_order(g))) fail(ErrorKind::InvalidParameter, "FCp needs an element of prime order");
            return group_algebra(gp, G.element_order(g), g, true, false, name);
        case Family::FC2Star:
            return group_algebra(gp, 2, 0, false, true, name);
        case Family::FC2GStar:
            if (G.element_order(g) != 2) fail(ErrorKind::InvalidParameter, "FC2G needs an element of order 2");
            return group_algebra(gp, 2, g, true, true, name);
        case Family::AStar:
        case Family::NStar:
        case Family::UStar:
            need_m(2);
            return anu_family(gp, key.family == Family::AStar ? 'A' : key.family == Family::NStar ? 'N' : 'U', key.m,
                              std::nullopt, name);
        case Family::AGraded:
        case Family::NGraded:
        case Family::UGraded:
            need_m(2);
            need_nontrivial();
            return anu_family(gp, key.family == Family::AGraded ? 'A' : key.family == Family::NGraded ? 'N' : 'U',
                              key.m, g, name);
        case Family::CGraded:
            need_m(2);
            return c_family(gp, key.m, g, false, name);
        case Family::CStarGraded:
            need_m(2);
            return c_family(gp, key.m, g, true, name);
        case Family::Commutative:
            need_m(2);
            return c_family(gp, key.m, 0, false, name);
        case Family::Nilpotent:
            if (key.dim == 0) fail(ErrorKind::InvalidParameter, "nilpotent algebra needs dim >= 1");
            return null_algebra(gp, key.dim, name);
        case Family::G2: {
            std::vector<Spanned> basis{{"1", identity_units(4), 0},
                                       {"e1", {u(1, 2), u(3, 4)}, g},
                                       {"e2", {u(1, 3), u(2, 4, -1)}, h},
                                       {"e1e2", {u(1, 4, -1)}, gh}};
            std::vector<int> signs = key.tag == "psi" ? std::vector<int>{1, 1, 1, -1}
                                   : key.tag == "tau" ? std::vector<int>{1, -1, -1, -1}
                                                      : std::vector<int>{1, -1, 1, 1};
            return from_span(gp, 4, basis, diagonal_involution(signs), name);
        }
        case Family::W: {
            std::vector<Spanned> basis{{"I", identity_units(4), 0},
                                       unit_element({u(1, 2), u(3, 4)}, g),
                                       unit_element({u(1, 3), u(2, 4)}, h),
                                       unit_element({u(1, 4)}, gh)};
            std::vector<int> signs = key.tag == "nu1" ? std::vector<int>{1, 1, 1, 1}
                                   : key.tag == "nu2" ? std::vector<int>{1, -1, -1, 1}
                                                      : std::vector<int>{1, -1, 1, -1};
            return from_span(gp, 4, basis, diagonal_involution(signs), name);
        }
        case Family::M4:
        case Family::M5: {
            Spanned first = key.family == Family::M4 ? unit_element({u(1, 1), u(3, 3)}, 0) : unit_element({u(2, 2)}, 0);
            return from_span(gp, 3,
                             {first, unit_element({u(1, 2)}, g), unit_element({u(2, 3)}, g),
                              unit_element({u(1, 3)}, G.multiply(g, g))},
                             std::nullopt, name);
        }
        case Family::M6:
        case Family::M7: {
            Spanned first = key.family == Family::M6 ? unit_element({u(1, 1), u(4, 4)}, 0)
                                                     : unit_element({u(2, 2), u(3, 3)}, 0);
            std::vector<Spanned> basis{first,
                                       unit_element({u(1, 2)}, g),
                                       unit_element({u(1, 3)}, h),
                                       unit_element({u(1, 4)}, gh),
                                       unit_element({u(2, 4)}, h),
                                       unit_element({u(3, 4)}, g)};
            if (key.tag == "rho") return from_span(gp, 4, basis, std::nullopt, name);
            // (a, b, c, d, e, f) -> (a, -f, e, -d, c, -b) on the coordinates above.
            std::vector<Vec> images(6, Vec(6));
            images[0][0] = 1;
            images[1][5] = -1;
            images[2][4] = 1;
            images[3][3] = -1;
            images[4][2] = 1;
            images[5][1] = -1;
            return from_span(gp, 4, basis, images, name);
        }
        case Family::M8:
        case Family::M9: {
            Rational s = key.family == Family::M8 ? Rational(1) : Rational(-1);
            return from_span(gp, 6,
                             {unit_element({u(1, 1), u(6, 6)}, 0), unit_element({u(2, 3), u(4, 5, s)}, h),
                              unit_element({u(1, 2)}, g), unit_element({u(1, 3)}, gh), unit_element({u(4, 6)}, gh),
                              unit_element({u(5, 6)}, g)},
                             std::nullopt, name);
        }
        case Family::M10:
        case Family::M11: {
            Rational s = key.family == Family::M10 ? Rational(-1) : Rational(1);
            return from_span(gp, 6,
                             {unit_element({u(1, 1), u(2, 2), u(5, 5), u(6, 6)}, 0),
                              unit_element({u(1, 2), u(5, 6, s)}, g), unit_element({u(1, 3)}, gh),
                              unit_element({u(2, 3)}, h), unit_element({u(4, 5)}, h), unit_element({u(4, 6)}, gh)},
                             std::nullopt, name);
        }
    }
    fail(ErrorKind::InvalidParameter, "unhandled family");
}

GStarAlgebra build_from_spec(std::string_view spec, GroupPtr default_group) {
    std::string s = trim(spec);
    GroupPtr gp = default_group ? default_group : std::make_shared<FiniteAbelianGroup>(make_cyclic(1));
    const auto at = s.rfind('@');
    if (at != std::string::npos) {
        gp = std::make_shared<FiniteAbelianGroup>(parse_group(trim(s.substr(at + 1))));
        s = trim(s.substr(0, at));
    }
    if (s.empty()) fail(ErrorKind::MalformedInput, "empty algebra spec");
    std::vector<GStarAlgebra> parts;
    std::vector<std::string> names;
    for (const auto& piece : split_top(s, '+')) {
        parts.push_back(build(parse_key(piece, *gp), gp));
        names.push_back(parse_key(piece, *gp).str(*gp));
    }
    if (parts.size() == 1) return parts.front();
    GStarAlgebra sum = direct_sum(parts);
    std::string joined;
    for (const auto& n : names) joined += (joined.empty() ? "" : "+") + n;
    sum.set_name(joined + "@" + (gp->name().empty() ? "G" : gp->name()));
    return sum;
}

// ---------------------------------------------------------------------------

namespace {

class SetBuilder {
public:
    explicit SetBuilder(const GroupPtr& g) : g_(g) {}

    void add(const std::string& spec) {
        if (!seen_.insert(spec).second) return;
        specs_.push_back(spec);
    }
    void remove(const std::string& spec) {
        seen_.erase(spec);
        specs_.erase(std::remove(specs_.begin(), specs_.end(), spec), specs_.end());
    }
    void merge(const SetBuilder& o) {
        for (const auto& s : o.specs_) add(s);
    }
    std::vector<CatalogEntry> build_all() const {
        std::vector<CatalogEntry> out;
        for (const auto& s : specs_) out.push_back({s, build_from_spec(s, g_)});
        return out;
    }
    const std::vector<std::string>& specs() const { return specs_; }

private:
    GroupPtr g_;
    std::vector<std::string> specs_;
    std::set<std::string> seen_;
};

struct SetContext {
    GroupPtr gp;
    std::vector<Element> all;
    std::vector<Element> nontrivial;
    std::string e(Element x) const { return gp->element_name(x); }
    std::string p(Element x, Element y) const { return e(x) + "," + e(y); }
};

SetBuilder make_set(const std::string& name, const SetContext& c);

SetBuilder make_set(const std::string& name, const SetContext& c) {
    SetBuilder b(c.gp);
    auto each = [&](const std::vector<Element>& xs, const std::function<void(Element)>& f) {
        for (auto x : xs) f(x);
    };
    auto each2 = [&](const std::function<void(Element, Element)>& f) {
        for (auto x : c.all)
            for (auto y : c.all) f(x, y);
    };
    if (name == "I1") {
        each(c.all, [&](Element g) { b.add("M4[" + c.e(g) + "]"); });
    } else if (name == "I2") {
        each(c.all, [&](Element g) { b.add("M5[" + c.e(g) + "]"); });
    } else if (name == "I3" || name == "I4") {
        b.merge(make_set("I1", c));
        b.merge(make_set("I2", c));
        std::string fam = name == "I3" ? "M8" : "M9";
        each2([&](Element g, Element h) { b.add(fam + "[" + c.p(g, h) + "]"); });
    } else if (name == "I5" || name == "I6") {
        b.merge(make_set("I3", c));
        b.merge(make_set("I4", c));
        std::string fam = name == "I5" ? "M6" : "M7";
        std::string omega = name == "I5" ? "omega1" : "omega2";
        each2([&](Element g, Element h) { b.add(fam + "[" + omega + ";" + c.p(g, h) + "]"); });
        each2([&](Element r, Element s) {
            if (r != s) b.add(fam + "[rho;" + c.p(r, s) + "]");
        });
    } else if (name == "I7") {
        b.merge(make_set("I6", c));
        each(c.all, [&](Element g) { b.add("C3star[" + c.e(g) + "]"); });
        each2([&](Element g, Element h) { b.add("M10[" + c.p(g, h) + "]"); });
    } else if (name == "I8") {
        b.merge(make_set("I6", c));
        each(c.nontrivial, [&](Element g) { b.add("C3[" + c.e(g) + "]"); });
        each2([&](Element g, Element h) {
            if (g != 0) b.add("M11[" + c.p(g, h) + "]");
        });
    } else if (name == "I9") {
        each(c.nontrivial, [&](Element g) { b.add("C3[" + c.e(g) + "]"); });
        each(c.all, [&](Element u) { b.add("C3star[" + c.e(u) + "]"); });
        b.add("U3star");
        for (auto g : c.nontrivial)
            for (auto h : c.nontrivial)
                for (const char* t : {"psi", "tau", "gamma"}) b.add(std::string("G2[") + t + ";" + c.p(g, h) + "]");
        for (auto g : c.nontrivial)
            for (auto h : c.nontrivial)
                for (const char* t : {"nu1", "nu2", "nu3"}) b.add(std::string("W[") + t + ";" + c.p(g, h) + "]");
        for (auto h : c.nontrivial)
            for (const char* t : {"tau", "gamma"}) b.add(std::string("G2[") + t + ";" + c.p(0, h) + "]");
        for (auto h : c.nontrivial)
            for (const char* t : {"nu2", "nu3"}) b.add(std::string("W[") + t + ";" + c.p(0, h) + "]");
    } else if (name == "I") {
        for (const char* s : {"I5", "I7", "I8", "I9"}) b.merge(make_set(s, c));
    } else if (name == "K" || name == "K1") {
        const std::string one = c.e(0);
        const std::string oo = c.p(0, 0);
        for (const std::string& s :
             {"G2[tau;" + oo + "]", "C3star[" + one + "]", std::string("N3star"), std::string("U3star"),
              "M4[" + one + "]", "M5[" + one + "]", "M6[omega1;" + oo + "]", "M7[omega2;" + oo + "]",
              "M8[" + oo + "]", "M9[" + oo + "]", "M10[" + oo + "]"})
            b.add(s);
        if (name == "K1") b.remove("M6[omega1;" + oo + "]");
    } else if (name == "I10") {
        for (auto g : c.nontrivial)
            for (const char* f : {"A3", "N3", "U3"}) b.add(std::string(f) + "[" + c.e(g) + "]");
    } else if (name == "M") {
        b.merge(make_set("I", c));
        b.merge(make_set("K1", c));
        b.merge(make_set("I10", c));
        b.remove("M6[omega1;" + c.p(0, 0) + "]");
    } else if (name == "L") {
        if (c.gp->order() != 2) fail(ErrorKind::InvalidParameter, "the set L is defined over Z2 only");
        const Element g = 1;
        each(c.all, [&](Element u) { b.add("M4[" + c.e(u) + "]"); });
        each(c.all, [&](Element u) { b.add("M5[" + c.e(u) + "]"); });
        for (const char* f : {"M8", "M9", "M10"}) each2([&](Element u, Element v) { b.add(std::string(f) + "[" + c.p(u, v) + "]"); });
        for (const char* f : {"M6", "M7"})
            each2([&](Element p, Element q) {
                if (p != q) b.add(std::string(f) + "[rho;" + c.p(p, q) + "]");
            });
        each2([&](Element u, Element v) { b.add("M6[omega1;" + c.p(u, v) + "]"); });
        each2([&](Element u, Element v) { b.add("M7[omega2;" + c.p(u, v) + "]"); });
        each(c.all, [&](Element u) { b.add("M11[" + c.p(g, u) + "]"); });
        each(c.all, [&](Element u) { b.add("C3star[" + c.e(u) + "]"); });
        b.add("C3[" + c.e(g) + "]");
        for (const char* t : {"tau", "gamma", "psi"}) b.add(std::string("G2[") + t + ";" + c.p(g, g) + "]");
        for (const char* t : {"tau", "gamma"}) b.add(std::string("G2[") + t + ";" + c.p(0, g) + "]");
        b.add("G2[tau;" + c.p(0, 0) + "]");
        for (const char* t : {"nu1", "nu2", "nu3"}) b.add(std::string("W[") + t + ";" + c.p(g, g) + "]");
        for (const char* t : {"nu2", "nu3"}) b.add(std::string("W[") + t + ";" + c.p(0, g) + "]");
        b.add("U3star");
        b.add("N3star");
        for (const char* f : {"A3", "N3", "U3"}) b.add(std::string(f) + "[" + c.e(g) + "]");
        b.remove("M6[omega1;" + c.p(0, 0) + "]");
    } else if (name == "forbidden") {
        const auto& G = *c.gp;
        const bool even = G.order() % 2 == 0;
        b.add("FC2star");
        if (even)
            each(c.all, [&](Element g) {
                if (G.element_order(g) == 2) b.add("FC2G[" + c.e(g) + "]");
            });
        each(c.all, [&](Element g) {
            if (is_prime(G.element_order(g))) b.add("FCp[" + c.e(g) + "]");
        });
        each(c.all, [&](Element g) { b.add("Mrho[" + c.e(g) + "]"); });
    } else if (name == "linear") {
        each(c.all, [&](Element g) { b.add("C2star[" + c.e(g) + "]"); });
        b.add("A2star");
        each(c.nontrivial, [&](Element h) { b.add("C2[" + c.e(h) + "]"); });
        each(c.nontrivial, [&](Element h) { b.add("A2[" + c.e(h) + "]"); });
    } else if (name == "P") {
        const std::string one = c.e(0);
        std::vector<std::vector<std::string>> choices;
        choices.push_back({"", "C", "C2star[" + one + "]", "A2star", "C2star[" + one + "]+A2star"});
        for (auto g : c.nontrivial) {
            const std::string x = c.e(g);
            std::vector<std::string> opts{"", "C"};
            const std::vector<std::string> parts{"C2star[" + x + "]", "C2[" + x + "]", "A2[" + x + "]"};
            for (std::size_t mask = 1; mask < 8; ++mask) {
                std::string s;
                for (std::size_t i = 0; i < 3; ++i)
                    if (mask >> i & 1) s += (s.empty() ? "" : "+") + parts[i];
                opts.push_back(s);
            }
            choices.push_back(opts);
        }
        std::vector<std::size_t> idx(choices.size(), 0);
        while (true) {
            std::string s;
            bool has_c = false;
            for (std::size_t i = 0; i < choices.size(); ++i) {
                const auto& piece = choices[i][idx[i]];
                if (piece.empty()) continue;
                if (piece == "C") {
                    if (has_c) continue;
                    has_c = true;
                }
                s += piece + "+";
            }
            b.add(s + "nilpotent[dim=2]");
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
    } else {
        fail(ErrorKind::InvalidParameter, "unknown catalog set '" + name + "'");
    }
    return b;
}

}  // namespace

std::vector<CatalogEntry> catalog_set(std::string_view name, const GroupPtr& g) {
    if (!g) fail(ErrorKind::InvalidParameter, "no group");
    SetContext c{g, {}, {}};
    for (Element x = 0; x < g->order(); ++x) {
        c.all.push_back(x);
        if (x != 0) c.nontrivial.push_back(x);
    }
    return make_set(std::string(name), c).build_all();
}

std::vector<std::string> catalog_set_names() {
    return {"I1", "I2", "I3", "I4", "I5", "I6", "I7", "I8", "I9", "I10", "I",
            "K",  "K1", "M",  "L",  "forbidden", "linear", "P"};
}

std::vector<FamilyInfo> family_listing() {
    return {
        {"Mrho[g]", "M in UT4 with reflection involution, e12 and e34 in degree g (g=1: trivial grading)"},
        {"FCp[g]", "group algebra of <g>, |g| prime, graded by <g>, trivial involution"},
        {"FC2star", "group algebra of C2, trivial grading, u* = -u"},
        {"FC2G[g]", "group algebra of <g>, |g| = 2, graded by <g>, u* = -u"},
        {"A<m>star, N<m>star, U<m>star", "subalgebras of UT_2m with trivial grading and reflection"},
        {"A<m>[g], N<m>[g], U<m>[g]", "same with the elementary grading (1,g,...,g,1,...,1,g), g != 1"},
        {"C<m>[g]", "span of I and powers of E1 in UT_m, E1 in degree g, trivial involution"},
        {"C<m>star[g]", "same with E1^i -> (-1)^i E1^i"},
        {"G2[psi|tau|gamma;g,h]", "four-dimensional Grassmann algebra, e1 in degree g, e2 in degree h"},
        {"W[nu1|nu2|nu3;g,h]", "W in UT4, e12+e34 in degree g, e13+e24 in degree h"},
        {"M4[g], M5[g]", "subalgebras of UT3 with reflection, e12 and e23 in degree g"},
        {"M6[rho|omega1;g,h], M7[rho|omega2;g,h]", "subalgebras of UT4, e12,e34 in g and e13,e24 in h"},
        {"M8[g,h] .. M11[g,h]", "subalgebras of UT6 with reflection involution"},
        {"C[m=2]", "commutative C_m with trivial grading and involution"},
        {"nilpotent[dim=2]", "null algebra (all products zero)"},
    };
}

}  // namespace gstar
