#ifndef GSTAR_GROUP_HPP
#define GSTAR_GROUP_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace gstar {

using Element = std::size_t;

// Finite abelian group given by its Cayley table. Element 0 is the identity.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<std::vector<Element>>{{0}}) {}
    // Validates closure, identity, inverses, commutativity and associativity.
    explicit FiniteAbelianGroup(std::vector<std::vector<Element>> cayley, std::string name = "");

    std::size_t order() const noexcept { return cayley_.size(); }
    const std::vector<std::vector<Element>>& cayley() const noexcept { return cayley_; }
    const std::string& name() const noexcept { return name_; }

    Element identity() const noexcept { return 0; }
    Element multiply(Element a, Element b) const { return cayley_.at(a).at(b); }
    Element inverse(Element a) const { return inverse_.at(a); }
    Element power(Element a, long long k) const;
    std::size_t element_order(Element a) const;

    // Index of the generator symbols "g" and "h" (see parse_element).
    Element symbol_g() const noexcept { return order() > 1 ? 1 : 0; }
    Element symbol_h() const noexcept { return order() > 2 ? 2 : symbol_g(); }

    // Display name: "1", "g", "h" for the default symbols, otherwise "e<k>".
    std::string element_name(Element a) const;

    // Accepts "1", "g", "h", "e<k>" (element index k), products such as "gh"
    // and powers "g^2", "g^-1".
    Element parse_element(std::string_view text) const;

    std::string to_json() const;
    static FiniteAbelianGroup from_json(const std::string& text);

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.cayley_ == b.cayley_;
    }

private:
    std::vector<std::vector<Element>> cayley_;
    std::vector<Element> inverse_;
    std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteAbelianGroup>;

FiniteAbelianGroup make_cyclic(std::size_t m);
FiniteAbelianGroup make_product(const std::vector<FiniteAbelianGroup>& gs);

// "Z4", "Z2xZ2", "Z2*Z3", "1" (trivial).
FiniteAbelianGroup parse_group(std::string_view spec);

}  // namespace gstar

#endif
