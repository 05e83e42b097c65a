#include "gstar/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gstar/errors.hpp"

namespace gstar {

GStarAlgebra::GStarAlgebra(GroupPtr group, std::vector<std::string> labels, const std::vector<Product>& sc,
                           std::vector<Element> grading, Matrix involution, std::optional<Vec> unit,
                           std::string name)
    : group_(std::move(group)),
      labels_(std::move(labels)),
      grading_(std::move(grading)),
      involution_(std::move(involution)),
      unit_(std::move(unit)),
      name_(std::move(name)) {
    if (!group_) fail(ErrorKind::MalformedInput, "algebra without group");
    const std::size_t d = labels_.size();
    if (grading_.size() != d) fail(ErrorKind::MalformedInput, "grading length does not match dimension");
    for (auto g : grading_)
        if (g >= group_->order()) fail(ErrorKind::MalformedInput, "grading element out of range");
    if (involution_.size() != d) fail(ErrorKind::MalformedInput, "involution matrix has wrong row count");
    for (const auto& row : involution_)
        if (row.size() != d) fail(ErrorKind::MalformedInput, "involution matrix has wrong column count");
    if (unit_ && unit_->size() != d) fail(ErrorKind::MalformedInput, "unit vector has wrong length");

    std::vector<std::map<std::size_t, Rational>> acc(d * d);
    for (const auto& p : sc) {
        if (p.i >= d || p.j >= d || p.k >= d) fail(ErrorKind::MalformedInput, "structure constant index out of range");
        acc[p.i * d + p.j][p.k] += p.coef;
    }
    products_.resize(d * d);
    for (std::size_t c = 0; c < d * d; ++c)
        for (auto& [k, v] : acc[c])
            if (!v.is_zero()) products_[c].push_back({static_cast<std::uint32_t>(k), v});
}

std::vector<GStarAlgebra::Product> GStarAlgebra::structure_constants() const {
    std::vector<Product> out;
    const std::size_t d = dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& e : basis_product(i, j)) out.push_back({i, j, e.index, e.value});
    return out;
}

void GStarAlgebra::check_length(const Vec& x) const {
    if (x.size() != dim()) fail(ErrorKind::MalformedInput, "coordinate vector has wrong length");
}

Vec GStarAlgebra::multiply(const Vec& x, const Vec& y) const {
    check_length(x);
    check_length(y);
    const std::size_t d = dim();
    Vec r(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (y[j].is_zero()) continue;
            Rational c = x[i] * y[j];
            for (const auto& e : basis_product(i, j)) r[e.index] += c * e.value;
        }
    }
    return r;
}

Vec GStarAlgebra::involute(const Vec& x) const {
    check_length(x);
    return mat_vec(involution_, x);
}

std::optional<Element> GStarAlgebra::degree_of(const Vec& x) const {
    check_length(x);
    std::optional<Element> g;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        if (g && *g != grading_[i]) return std::nullopt;
        g = grading_[i];
    }
    return g;
}

std::string GStarAlgebra::format(const Vec& x) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        Rational c = x[i];
        if (!first) {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        } else if (c == Rational(-1)) {
            os << "-";
            c = Rational(1);
        }
        if (!c.is_one()) os << c << "*";
        bool compound = labels_[i].find_first_of("+-") != std::string::npos;
        os << (compound ? "(" + labels_[i] + ")" : labels_[i]);
        first = false;
    }
    return first ? "0" : os.str();
}

ValidationReport GStarAlgebra::validate() const {
    const std::size_t d = dim();
    auto failure = [](std::string axiom, std::vector<std::size_t> w, std::string msg) {
        return ValidationReport{false, std::move(axiom), std::move(w), std::move(msg)};
    };
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < d; ++i) basis.push_back(basis_vector(i));
    std::vector<Vec> prod(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) prod[i * d + j] = to_dense(basis_product(i, j), d);

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (multiply(prod[i * d + j], basis[k]) != multiply(basis[i], prod[j * d + k]))
                    return failure("associativity", {i, j, k},
                                   "(b_i b_j) b_k != b_i (b_j b_k)");

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& e : basis_product(i, j))
                if (grading_[e.index] != group_->multiply(grading_[i], grading_[j]))
                    return failure("grading-compatibility", {i, j, e.index},
                                   "product lands outside the expected homogeneous component");

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (involute(prod[i * d + j]) != multiply(involute(basis[j]), involute(basis[i])))
                return failure("anti-automorphism", {i, j}, "(b_i b_j)^* != b_j^* b_i^*");

    if (mat_mul(involution_, involution_) != identity_matrix(d))
        return failure("involution-order", {}, "involution does not square to the identity");

    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i)
            if (!involution_[i][j].is_zero() && grading_[i] != grading_[j])
                return failure("graded-involution", {j}, "involution moves b_j out of its component");

    if (unit_) {
        for (std::size_t i = 0; i < d; ++i)
            if (multiply(*unit_, basis[i]) != basis[i] || multiply(basis[i], *unit_) != basis[i])
                return failure("unit", {i}, "unit does not act as identity on b_i");
        if (involute(*unit_) != *unit_) return failure("unit", {}, "unit is not symmetric");
    }
    return {};
}

Subspace GStarAlgebra::component(Element g) const {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < dim(); ++i)
        if (grading_[i] == g) vs.push_back(basis_vector(i));
    return Subspace::span(dim(), vs);
}

Subspace GStarAlgebra::homogeneous_component(Element g, Sign sign) const {
    // Image of the projection (x ± x^*)/2 restricted to A_g.
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (grading_[i] != g) continue;
        Vec b = basis_vector(i);
        Vec s = involute(b);
        vs.push_back(sign == Sign::Plus ? add(b, s) : sub(b, s));
    }
    return Subspace::span(dim(), vs);
}

Subspace GStarAlgebra::product_space(const Subspace& s, const Subspace& t) const {
    EchelonBasis e(dim());
    for (const auto& x : s.basis())
        for (const auto& y : t.basis()) {
            e.insert(multiply(x, y));
            if (e.full()) return Subspace::from_echelon(e);
        }
    return Subspace::from_echelon(e);
}

Subspace GStarAlgebra::radical() const {
    // Kernel of the trace form T(x, y) = tr(L_{xy}); in characteristic zero
    // this is the largest nilpotent ideal.
    const std::size_t d = dim();
    Vec trace(d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t m = 0; m < d; ++m)
            for (const auto& e : basis_product(k, m))
                if (e.index == m) trace[k] += e.value;
    Matrix gram(d, Vec(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& e : basis_product(i, j)) gram[i][j] += e.value * trace[e.index];
    return kernel(gram, d);
}

std::size_t GStarAlgebra::nilpotency_index(const Subspace& s) const {
    if (s.is_zero()) return 1;
    Subspace power = s;
    for (std::size_t q = 2; q <= dim() + 1; ++q) {
        power = product_space(power, s);
        if (power.is_zero()) return q;
    }
    fail(ErrorKind::NotNilpotent, "subspace is not nilpotent");
}

std::optional<Vec> GStarAlgebra::field_idempotent() const {
    Subspace j = radical();
    if (j.dim() + 1 != dim()) return std::nullopt;
    Subspace sym = homogeneous_component(0, Sign::Plus);
    for (const auto& b : sym.basis()) {
        if (j.contains(b)) continue;
        // b^2 = lambda b mod J.
        Vec b2 = multiply(b, b);
        EchelonBasis jb(dim());
        for (const auto& v : j.basis()) jb.insert(v);
        Vec rb = jb.residual(b);
        Vec rb2 = jb.residual(b2);
        std::size_t p = 0;
        while (rb[p].is_zero()) ++p;
        Rational lambda = rb2[p] / rb[p];
        if (lambda.is_zero()) continue;
        Vec e = scale(b, Rational(1) / lambda);
        for (std::size_t it = 0; it < 64; ++it) {
            Vec e2 = multiply(e, e);
            if (e2 == e) return e;
            Vec e3 = multiply(e2, e);
            e = sub(scale(e2, Rational(3)), scale(e3, Rational(2)));
        }
        fail(ErrorKind::Structural, "idempotent lifting did not converge");
    }
    return std::nullopt;
}

bool GStarAlgebra::is_field_plus_radical(const Vec& one_f) const {
    check_length(one_f);
    if (multiply(one_f, one_f) != one_f || is_zero(one_f)) return false;
    Subspace j = radical();
    if (j.contains(one_f)) return false;
    return j.dim() + 1 == dim();
}

PeirceDecomposition GStarAlgebra::peirce_decompose(const Vec& one_f) const {
    check_length(one_f);
    if (multiply(one_f, one_f) != one_f) fail(ErrorKind::InvalidParameter, "1_F is not idempotent");
    if (!is_field_plus_radical(one_f)) fail(ErrorKind::Structural, "algebra is not F 1_F + J");
    Subspace j = radical();
    std::vector<Vec> v00, v10, v01, v11;
    for (const auto& x : j.basis()) {
        Vec ex = multiply(one_f, x);
        Vec xe = multiply(x, one_f);
        Vec exe = multiply(ex, one_f);
        v11.push_back(exe);
        v10.push_back(sub(ex, exe));
        v01.push_back(sub(xe, exe));
        v00.push_back(add(sub(sub(x, ex), xe), exe));
    }
    const std::size_t d = dim();
    PeirceDecomposition p{Subspace::span(d, v00), Subspace::span(d, v10), Subspace::span(d, v01),
                          Subspace::span(d, v11)};
    Subspace total = p.j00.sum(p.j10).sum(p.j01).sum(p.j11);
    if (!(total == j) || p.j00.dim() + p.j10.dim() + p.j01.dim() + p.j11.dim() != j.dim())
        fail(ErrorKind::Structural, "Peirce components do not decompose the radical");
    return p;
}

std::string GStarAlgebra::to_json() const {
    nlohmann::json j;
    j["group"] = nlohmann::json::parse(group_->to_json());
    j["name"] = name_;
    j["dim"] = dim();
    j["basis"] = labels_;
    nlohmann::json sc = nlohmann::json::array();
    for (const auto& p : structure_constants()) sc.push_back({p.i, p.j, p.k, p.coef.str()});
    j["sc"] = sc;
    j["grading"] = grading_;
    nlohmann::json inv = nlohmann::json::array();
    for (const auto& row : involution_) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(x.str());
        inv.push_back(r);
    }
    j["involution"] = inv;
    if (unit_) {
        nlohmann::json u = nlohmann::json::array();
        for (const auto& x : *unit_) u.push_back(x.str());
        j["unit"] = u;
    }
    return j.dump();
}

namespace {

Rational json_rational(const nlohmann::json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    fail(ErrorKind::MalformedInput, "expected rational string or integer in algebra JSON");
}

}  // namespace

GStarAlgebra GStarAlgebra::from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        auto group = std::make_shared<const FiniteAbelianGroup>(FiniteAbelianGroup::from_json(j.at("group").dump()));
        auto d = j.at("dim").get<std::size_t>();
        auto labels = j.at("basis").get<std::vector<std::string>>();
        if (labels.size() != d) fail(ErrorKind::MalformedInput, "basis label count does not match dim");
        std::vector<Product> sc;
        for (const auto& t : j.at("sc")) {
            if (!t.is_array() || t.size() != 4) fail(ErrorKind::MalformedInput, "structure constant must be [i,j,k,c]");
            sc.push_back({t[0].get<std::size_t>(), t[1].get<std::size_t>(), t[2].get<std::size_t>(), json_rational(t[3])});
        }
        auto grading = j.at("grading").get<std::vector<Element>>();
        Matrix inv;
        for (const auto& row : j.at("involution")) {
            Vec r;
            for (const auto& x : row) r.push_back(json_rational(x));
            inv.push_back(std::move(r));
        }
        std::optional<Vec> unit;
        if (j.contains("unit") && !j["unit"].is_null()) {
            Vec u;
            for (const auto& x : j["unit"]) u.push_back(json_rational(x));
            unit = std::move(u);
        }
        std::string name = j.value("name", std::string("custom"));
        return GStarAlgebra(group, std::move(labels), sc, std::move(grading), std::move(inv), std::move(unit),
                            std::move(name));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::MalformedInput, std::string("invalid algebra JSON: ") + e.what());
    }
}

GStarAlgebra direct_sum(const std::vector<GStarAlgebra>& as) {
    if (as.empty()) fail(ErrorKind::InvalidParameter, "direct sum of no algebras");
    if (as.size() == 1) return as.front();
    const auto& group = as.front().group_ptr();
    std::size_t total = 0;
    for (const auto& a : as) {
        if (!(a.group() == *group)) fail(ErrorKind::InvalidParameter, "direct sum over different groups");
        total += a.dim();
    }
    std::vector<std::string> labels;
    std::vector<GStarAlgebra::Product> sc;
    std::vector<Element> grading;
    Matrix inv(total, Vec(total));
    bool unital = true;
    Vec unit(total);
    std::string name;
    std::size_t offset = 0;
    for (std::size_t s = 0; s < as.size(); ++s) {
        const auto& a = as[s];
        for (const auto& l : a.labels()) labels.push_back(l + "#" + std::to_string(s + 1));
        for (const auto& p : a.structure_constants()) sc.push_back({p.i + offset, p.j + offset, p.k + offset, p.coef});
        grading.insert(grading.end(), a.grading().begin(), a.grading().end());
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) inv[i + offset][j + offset] = a.involution()[i][j];
        if (a.unit()) {
            for (std::size_t i = 0; i < a.dim(); ++i) unit[i + offset] = (*a.unit())[i];
        } else {
            unital = false;
        }
        name += (s ? " + " : "") + a.name();
        offset += a.dim();
    }
    return GStarAlgebra(group, std::move(labels), sc, std::move(grading), std::move(inv),
                        unital ? std::optional<Vec>(unit) : std::nullopt, name);
}

GStarAlgebra subalgebra(const GStarAlgebra& a, const Subspace& s, std::string name) {
    if (s.ambient() != a.dim()) fail(ErrorKind::InvalidParameter, "subspace of the wrong ambient dimension");
    const auto& b = s.basis();
    std::vector<std::string> labels;
    std::vector<Element> grading;
    for (const auto& v : b) {
        auto d = a.degree_of(v);
        if (!d) fail(ErrorKind::Structural, "subspace is not graded");
        grading.push_back(*d);
        labels.push_back(a.format(v));
    }
    auto coords = [&](const Vec& v, const char* what) {
        if (!s.contains(v)) fail(ErrorKind::Structural, std::string("subspace is not closed under ") + what);
        return s.coordinates(v);
    };
    std::vector<GStarAlgebra::Product> sc;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto c = coords(a.multiply(b[i], b[j]), "products");
            for (std::size_t k = 0; k < c.size(); ++k)
                if (!c[k].is_zero()) sc.push_back({i, j, k, c[k]});
        }
    Matrix inv(b.size(), Vec(b.size()));
    for (std::size_t j = 0; j < b.size(); ++j) {
        auto c = coords(a.involute(b[j]), "the involution");
        for (std::size_t i = 0; i < b.size(); ++i) inv[i][j] = c[i];
    }
    std::optional<Vec> unit;
    if (a.unit() && s.contains(*a.unit())) unit = s.coordinates(*a.unit());
    return GStarAlgebra(a.group_ptr(), std::move(labels), sc, std::move(grading), std::move(inv), std::move(unit),
                        name.empty() ? a.name() + "|sub" : std::move(name));
}

}  // namespace gstar
