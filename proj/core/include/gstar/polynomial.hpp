#ifndef GSTAR_POLYNOMIAL_HPP
#define GSTAR_POLYNOMIAL_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gstar/group.hpp"
#include "gstar/rational.hpp"

namespace gstar {

enum class VarKind : std::uint8_t { Y = 0, Z = 1 };  // symmetric, skew

struct Variable {
    VarKind kind = VarKind::Y;
    std::uint32_t index = 1;
    Element degree = 0;

    friend auto operator<=>(const Variable&, const Variable&) = default;
    friend bool operator==(const Variable&, const Variable&) = default;

    std::string str(const FiniteAbelianGroup& g) const;
};

using Monomial = std::vector<Variable>;

// Degree-lexicographic: shorter monomials first, then lexicographic.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, MonomialLess>;

    Polynomial() = default;
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(Monomial m, const Rational& c = Rational(1));
    static Polynomial variable(const Variable& v) { return monomial({v}); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    // Distinct variables in increasing order.
    std::vector<Variable> variables() const;
    // Number of occurrences of each variable when it is the same in every monomial.
    bool is_multihomogeneous() const;
    bool is_multilinear() const;
    std::size_t max_degree() const;

    std::string str(const FiniteAbelianGroup& g) const;

private:
    Terms terms_;
};

// Group degree of a monomial (product of its variables' degrees).
Element monomial_degree(const Monomial& m, const FiniteAbelianGroup& g);

/*
 * Parses the polynomial grammar:
 *   y<i>_<g>, z<i>_<g>    variables (g an element expression, parenthesize powers)
 *   [a, b]                commutator ab - ba
 *   juxtaposition or '*'  product;  '+', '-';  rational scalars "p/q";  '^k'
 * x<i>_<g> stands for "y or z" and is rejected here; see parse_all.
 */
Polynomial parse_polynomial(std::string_view text, const FiniteAbelianGroup& g);

// Like parse_polynomial but expands each distinct x-variable into its y and z
// versions, returning every combination.
std::vector<Polynomial> parse_all(std::string_view text, const FiniteAbelianGroup& g);

Polynomial star(const Polynomial& p);

// Splits p by multidegree (occurrence count of each variable).
std::vector<Polynomial> multihomogeneous_components(const Polynomial& p);

// Full multilinearization of a multihomogeneous polynomial. A variable of
// degree k is replaced by itself and k-1 fresh variables of the same kind and
// group degree, indexed above the largest index in use.
Polynomial multilinearize(const Polynomial& p);

Polynomial substitute(const Polynomial& p, const std::map<Variable, Polynomial>& assignment,
                      const FiniteAbelianGroup& g);

}  // namespace gstar

#endif
