#include "gstar/group.hpp"

#include <cctype>

#include <nlohmann/json.hpp>

#include "gstar/errors.hpp"

namespace gstar {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::vector<Element>> cayley, std::string name)
    : cayley_(std::move(cayley)), name_(std::move(name)) {
    const std::size_t t = cayley_.size();
    if (t == 0) fail(ErrorKind::InvalidParameter, "group of order 0");
    for (const auto& row : cayley_) {
        if (row.size() != t) fail(ErrorKind::MalformedInput, "cayley table is not square");
        for (auto x : row)
            if (x >= t) fail(ErrorKind::MalformedInput, "cayley entry out of range");
    }
    for (Element a = 0; a < t; ++a) {
        if (cayley_[0][a] != a || cayley_[a][0] != a)
            fail(ErrorKind::MalformedInput, "element 0 is not the identity");
        for (Element b = 0; b < t; ++b)
            if (cayley_[a][b] != cayley_[b][a]) fail(ErrorKind::MalformedInput, "group is not abelian");
    }
    for (Element a = 0; a < t; ++a)
        for (Element b = 0; b < t; ++b)
            for (Element c = 0; c < t; ++c)
                if (cayley_[cayley_[a][b]][c] != cayley_[a][cayley_[b][c]])
                    fail(ErrorKind::MalformedInput, "cayley table is not associative");
    inverse_.assign(t, t);
    for (Element a = 0; a < t; ++a) {
        for (Element b = 0; b < t; ++b)
            if (cayley_[a][b] == 0) inverse_[a] = b;
        if (inverse_[a] == t) fail(ErrorKind::MalformedInput, "element without inverse");
    }
    if (name_.empty()) name_ = "G" + std::to_string(t);
}

Element FiniteAbelianGroup::power(Element a, long long k) const {
    if (k < 0) {
        a = inverse(a);
        k = -k;
    }
    Element r = 0;
    for (long long i = 0; i < k; ++i) r = multiply(r, a);
    return r;
}

std::size_t FiniteAbelianGroup::element_order(Element a) const {
    if (a >= order()) fail(ErrorKind::InvalidParameter, "element index out of range");
    std::size_t k = 1;
    for (Element x = a; x != 0; x = multiply(x, a)) ++k;
    return k;
}

std::string FiniteAbelianGroup::element_name(Element a) const {
    if (a == 0) return "1";
    if (a == 1) return "g";
    if (a == 2) return "h";
    return "e" + std::to_string(a);
}

Element FiniteAbelianGroup::parse_element(std::string_view text) const {
    std::size_t pos = 0;
    auto at_end = [&] { return pos >= text.size(); };
    auto read_int = [&](bool allow_sign) -> long long {
        bool neg = false;
        if (allow_sign && !at_end() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw SyntaxError("expected integer in group element '" + std::string(text) + "'", pos);
        long long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000) throw SyntaxError("group element index too large", pos);
            ++pos;
        }
        return neg ? -v : v;
    };
    if (text.empty()) throw SyntaxError("empty group element", 0);

    Element result = 0;
    while (!at_end()) {
        Element base = 0;
        char c = text[pos];
        if (c == '1') {
            ++pos;
        } else if (c == 'g' || c == 'h') {
            if (order() == 1) fail(ErrorKind::InvalidParameter, "trivial group has no element '" + std::string(1, c) + "'");
            base = c == 'g' ? symbol_g() : symbol_h();
            ++pos;
        } else if (c == 'e') {
            ++pos;
            long long v = read_int(false);
            if (static_cast<std::size_t>(v) >= order())
                fail(ErrorKind::InvalidParameter, "group element e" + std::to_string(v) + " out of range");
            base = static_cast<Element>(v);
        } else if (c == '*' || c == ' ') {
            ++pos;
            continue;
        } else {
            throw SyntaxError("unexpected character '" + std::string(1, c) + "' in group element", pos);
        }
        long long exponent = 1;
        if (!at_end() && text[pos] == '^') {
            ++pos;
            exponent = read_int(true);
        }
        result = multiply(result, power(base, exponent));
    }
    return result;
}

std::string FiniteAbelianGroup::to_json() const {
    nlohmann::json j;
    j["order"] = order();
    j["cayley"] = cayley_;
    return j.dump();
}

FiniteAbelianGroup FiniteAbelianGroup::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        auto t = j.at("order").get<std::size_t>();
        auto table = j.at("cayley").get<std::vector<std::vector<Element>>>();
        if (table.size() != t) fail(ErrorKind::MalformedInput, "group order does not match cayley table");
        return FiniteAbelianGroup(std::move(table));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::MalformedInput, std::string("invalid group JSON: ") + e.what());
    }
}

FiniteAbelianGroup make_cyclic(std::size_t m) {
    if (m == 0) fail(ErrorKind::InvalidParameter, "cyclic group of order 0");
    std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) t[i][j] = (i + j) % m;
    return FiniteAbelianGroup(std::move(t), "Z" + std::to_string(m));
}

FiniteAbelianGroup make_product(const std::vector<FiniteAbelianGroup>& gs) {
    if (gs.empty()) fail(ErrorKind::InvalidParameter, "empty group product");
    if (gs.size() == 1) return gs.front();
    std::size_t total = 1;
    std::string name;
    for (const auto& g : gs) {
        total *= g.order();
        if (!name.empty()) name += "x";
        name += g.name();
    }
    // Lexicographic indexing: the first factor is the most significant digit.
    auto decode = [&](std::size_t idx) {
        std::vector<Element> digits(gs.size());
        for (std::size_t f = gs.size(); f-- > 0;) {
            digits[f] = idx % gs[f].order();
            idx /= gs[f].order();
        }
        return digits;
    };
    std::vector<std::vector<Element>> t(total, std::vector<Element>(total));
    for (std::size_t a = 0; a < total; ++a) {
        auto da = decode(a);
        for (std::size_t b = 0; b < total; ++b) {
            auto db = decode(b);
            std::size_t idx = 0;
            for (std::size_t f = 0; f < gs.size(); ++f) idx = idx * gs[f].order() + gs[f].multiply(da[f], db[f]);
            t[a][b] = idx;
        }
    }
    return FiniteAbelianGroup(std::move(t), name);
}

FiniteAbelianGroup parse_group(std::string_view spec) {
    std::string s(spec);
    if (s.empty() || s == "1" || s == "trivial") return make_cyclic(1);
    std::vector<FiniteAbelianGroup> factors;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != 'Z' && s[pos] != 'C') throw SyntaxError("group factor must start with Z in '" + s + "'", pos);
        ++pos;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw SyntaxError("missing cyclic order in '" + s + "'", pos);
        std::size_t m = std::stoul(s.substr(start, pos - start));
        if (m > 64) fail(ErrorKind::InvalidParameter, "cyclic factor order above 64 is not supported");
        factors.push_back(make_cyclic(m));
        if (pos < s.size()) {
            if (s[pos] != 'x' && s[pos] != '*') throw SyntaxError("expected 'x' between group factors", pos);
            ++pos;
        }
    }
    return make_product(factors);
}

}  // namespace gstar
