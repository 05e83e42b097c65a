#include "gstar/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "gstar/errors.hpp"

namespace gstar {

namespace {

// Placeholder kind for x-variables while parsing.
constexpr auto kAnyKind = static_cast<VarKind>(2);

}  // namespace

std::string Variable::str(const FiniteAbelianGroup& g) const {
    char k = kind == VarKind::Y ? 'y' : (kind == VarKind::Z ? 'z' : 'x');
    std::string deg = g.element_name(degree);
    return std::string(1, k) + std::to_string(index) + "_" + deg;
}

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    p.add_term({}, c);
    return p;
}

Polynomial Polynomial::monomial(Monomial m, const Rational& c) {
    Polynomial p;
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(ma);
            m.insert(m.end(), mb.begin(), mb.end());
            r.add_term(m, ca * cb);
        }
    return r;
}

std::vector<Variable> Polynomial::variables() const {
    std::set<Variable> vs;
    for (const auto& [m, c] : terms_) vs.insert(m.begin(), m.end());
    return {vs.begin(), vs.end()};
}

namespace {

std::map<Variable, std::size_t> occurrences(const Monomial& m) {
    std::map<Variable, std::size_t> occ;
    for (const auto& v : m) ++occ[v];
    return occ;
}

}  // namespace

bool Polynomial::is_multihomogeneous() const {
    if (terms_.empty()) return true;
    auto ref = occurrences(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (occurrences(m) != ref) return false;
    return true;
}

bool Polynomial::is_multilinear() const {
    if (!is_multihomogeneous()) return false;
    if (terms_.empty()) return true;
    for (const auto& [v, k] : occurrences(terms_.begin()->first))
        if (k != 1) return false;
    return true;
}

std::size_t Polynomial::max_degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.size());
    return d;
}

std::string Polynomial::str(const FiniteAbelianGroup& g) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational coef = c;
        if (first) {
            if (coef.sign() < 0) {
                os << "-";
                coef = -coef;
            }
        } else {
            os << (coef.sign() < 0 ? " - " : " + ");
            if (coef.sign() < 0) coef = -coef;
        }
        first = false;
        bool show_coef = !coef.is_one() || m.empty();
        if (show_coef) os << coef.str();
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i > 0 || show_coef) os << " ";
            os << m[i].str(g);
        }
    }
    return os.str();
}

Element monomial_degree(const Monomial& m, const FiniteAbelianGroup& g) {
    Element d = 0;
    for (const auto& v : m) d = g.multiply(d, v.degree);
    return d;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    Parser(std::string_view text, const FiniteAbelianGroup& g) : text_(text), g_(g) {}

    Polynomial parse() {
        Polynomial p = sum();
        skip_ws();
        if (pos_ < text_.size()) throw SyntaxError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    bool at_term_end() {
        skip_ws();
        if (pos_ >= text_.size()) return true;
        char c = text_[pos_];
        return c == '+' || c == '-' || c == ')' || c == ']' || c == ',';
    }

    std::uint64_t integer() {
        skip_ws();
        std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (1ULL << 62)) throw SyntaxError("integer too large", start);
            ++pos_;
        }
        if (start == pos_) throw SyntaxError("expected integer", pos_);
        return v;
    }

    Polynomial sum() {
        Polynomial acc;
        bool negate = false;
        skip_ws();
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            negate = true;
        }
        for (;;) {
            Polynomial t = term();
            if (negate) acc -= t;
            else acc += t;
            if (peek('+')) {
                ++pos_;
                negate = false;
            } else if (peek('-')) {
                ++pos_;
                negate = true;
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term() {
        if (at_term_end()) throw SyntaxError("expected a term", pos_);
        Polynomial acc = Polynomial::constant(Rational(1));
        while (!at_term_end()) {
            if (peek('*')) {
                ++pos_;
                continue;
            }
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = primary();
        if (peek('^')) {
            ++pos_;
            std::size_t at = pos_;
            auto k = integer();
            if (k == 0 || k > 64) throw SyntaxError("exponent must be between 1 and 64", at);
            Polynomial r = base;
            for (std::uint64_t i = 1; i < k; ++i) r = r * base;
            return r;
        }
        return base;
    }

    Polynomial primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = sum();
            expect(')');
            return p;
        }
        if (c == '[') {
            ++pos_;
            Polynomial a = sum();
            expect(',');
            Polynomial b = sum();
            expect(']');
            return a * b - b * a;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = integer();
            std::uint64_t d = 1;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                std::size_t at = pos_;
                d = integer();
                if (d == 0) throw SyntaxError("zero denominator", at);
            }
            return Polynomial::constant(Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)));
        }
        if (c == 'y' || c == 'z' || c == 'x') return Polynomial::variable(variable());
        throw SyntaxError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    Variable variable() {
        std::size_t start = pos_;
        char k = text_[pos_++];
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError("expected variable index", pos_);
        auto idx = integer();
        if (idx == 0 || idx > 1000000) throw SyntaxError("variable index must be positive", start);
        if (pos_ >= text_.size() || text_[pos_] != '_') throw SyntaxError("expected '_' after variable index", pos_);
        ++pos_;
        std::string elem;
        if (pos_ < text_.size() && text_[pos_] == '(') {
            std::size_t close = text_.find(')', pos_);
            if (close == std::string_view::npos) throw SyntaxError("unclosed '(' in group degree", pos_);
            elem = std::string(text_.substr(pos_ + 1, close - pos_ - 1));
            pos_ = close + 1;
        } else {
            while (pos_ < text_.size()) {
                char e = text_[pos_];
                if (std::isdigit(static_cast<unsigned char>(e)) || e == 'g' || e == 'h' || e == 'e') {
                    elem.push_back(e);
                    ++pos_;
                } else {
                    break;
                }
            }
        }
        if (elem.empty()) throw SyntaxError("missing group degree", pos_);
        Variable v;
        v.kind = k == 'y' ? VarKind::Y : (k == 'z' ? VarKind::Z : kAnyKind);
        v.index = static_cast<std::uint32_t>(idx);
        try {
            v.degree = g_.parse_element(elem);
        } catch (const SyntaxError& e) {
            throw SyntaxError("unknown group element '" + elem + "'", start);
        }
        return v;
    }

    std::string_view text_;
    const FiniteAbelianGroup& g_;
    std::size_t pos_ = 0;
};

Polynomial replace_kind(const Polynomial& p, const std::map<Variable, VarKind>& choice) {
    Polynomial r;
    for (const auto& [m, c] : p.terms()) {
        Monomial out(m);
        for (auto& v : out) {
            auto it = choice.find(v);
            if (it != choice.end()) v.kind = it->second;
        }
        r.add_term(out, c);
    }
    return r;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const FiniteAbelianGroup& g) {
    Polynomial p = Parser(text, g).parse();
    for (const auto& v : p.variables())
        if (v.kind == kAnyKind)
            fail(ErrorKind::Syntax, "x-variables denote a choice of kind; expand them with parse_all");
    return p;
}

std::vector<Polynomial> parse_all(std::string_view text, const FiniteAbelianGroup& g) {
    Polynomial p = Parser(text, g).parse();
    std::vector<Variable> xs;
    for (const auto& v : p.variables())
        if (v.kind == kAnyKind) xs.push_back(v);
    std::vector<Polynomial> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << xs.size()); ++mask) {
        std::map<Variable, VarKind> choice;
        for (std::size_t i = 0; i < xs.size(); ++i) choice[xs[i]] = (mask >> i) & 1 ? VarKind::Z : VarKind::Y;
        Polynomial q = replace_kind(p, choice);
        // Distinct x-variables may collide with an existing variable after the
        // choice; the result is still a valid polynomial.
        out.push_back(std::move(q));
    }
    return out;
}

Polynomial star(const Polynomial& p) {
    Polynomial r;
    for (const auto& [m, c] : p.terms()) {
        Monomial rev(m.rbegin(), m.rend());
        std::size_t skew = std::count_if(m.begin(), m.end(), [](const Variable& v) { return v.kind == VarKind::Z; });
        r.add_term(rev, skew % 2 ? -c : c);
    }
    return r;
}

std::vector<Polynomial> multihomogeneous_components(const Polynomial& p) {
    std::map<std::map<Variable, std::size_t>, Polynomial> parts;
    for (const auto& [m, c] : p.terms()) parts[occurrences(m)].add_term(m, c);
    std::vector<Polynomial> out;
    for (auto& [k, q] : parts) out.push_back(std::move(q));
    return out;
}

Polynomial multilinearize(const Polynomial& p) {
    if (!p.is_multihomogeneous()) fail(ErrorKind::MustBeHomogeneous, "multilinearize needs a multihomogeneous polynomial");
    if (p.is_zero() || p.is_multilinear()) return p;
    auto occ = occurrences(p.terms().begin()->first);

    // Fresh copies: a class (kind, degree) gets indices above its largest index.
    std::map<std::pair<VarKind, Element>, std::uint32_t> next;
    for (const auto& [v, k] : occ) {
        auto& n = next[{v.kind, v.degree}];
        n = std::max(n, v.index);
    }
    std::map<Variable, std::vector<Variable>> copies;
    for (const auto& [v, k] : occ) {
        std::vector<Variable> cs{v};
        for (std::size_t i = 1; i < k; ++i) {
            Variable c = v;
            c.index = ++next[{v.kind, v.degree}];
            cs.push_back(c);
        }
        copies[v] = std::move(cs);
    }

    Polynomial r;
    for (const auto& [m, c] : p.terms()) {
        // Positions of each variable within m.
        std::map<Variable, std::vector<std::size_t>> positions;
        for (std::size_t i = 0; i < m.size(); ++i) positions[m[i]].push_back(i);
        std::vector<std::pair<Variable, std::vector<std::size_t>>> groups(positions.begin(), positions.end());
        std::vector<std::vector<std::size_t>> perms(groups.size());
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            perms[gi].resize(groups[gi].second.size());
            std::iota(perms[gi].begin(), perms[gi].end(), 0);
        }
        // Odometer over the product of per-variable permutations.
        for (;;) {
            Monomial out(m);
            for (std::size_t gi = 0; gi < groups.size(); ++gi) {
                const auto& cs = copies[groups[gi].first];
                for (std::size_t j = 0; j < groups[gi].second.size(); ++j)
                    out[groups[gi].second[j]] = cs[perms[gi][j]];
            }
            r.add_term(out, c);
            std::size_t gi = 0;
            while (gi < groups.size() && !std::next_permutation(perms[gi].begin(), perms[gi].end())) ++gi;
            if (gi == groups.size()) break;
        }
    }
    return r;
}

Polynomial substitute(const Polynomial& p, const std::map<Variable, Polynomial>& assignment,
                      const FiniteAbelianGroup& g) {
    for (const auto& [v, q] : assignment) {
        for (const auto& [m, c] : q.terms())
            if (m.empty() || monomial_degree(m, g) != v.degree)
                fail(ErrorKind::IllegalSubstitution,
                     "image of " + v.str(g) + " is not homogeneous of degree " + g.element_name(v.degree));
        Polynomial s = star(q);
        bool ok = v.kind == VarKind::Y ? s == q : s == q * Rational(-1);
        if (!ok)
            fail(ErrorKind::IllegalSubstitution,
                 "image of " + v.str(g) + (v.kind == VarKind::Y ? " is not symmetric" : " is not skew"));
    }
    Polynomial r;
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(c);
        for (const auto& v : m) {
            auto it = assignment.find(v);
            term = term * (it == assignment.end() ? Polynomial::variable(v) : it->second);
            if (term.is_zero()) break;
        }
        r += term;
    }
    return r;
}

}  // namespace gstar
