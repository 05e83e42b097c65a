#ifndef GSTAR_COMBINATORICS_HPP
#define GSTAR_COMBINATORICS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gstar {

using DegreeVector = std::vector<std::size_t>;

std::uint64_t factorial(std::size_t n);
std::uint64_t binomial(std::size_t n, std::size_t k);
std::uint64_t multinomial(const DegreeVector& parts);

// All vectors of `parts` nonnegative integers summing to n, in lexicographic
// order with the first entry largest first: (n,0,..), (n-1,1,..), ...
std::vector<DegreeVector> compositions(std::size_t n, std::size_t parts);

// Rank of a permutation of 0..n-1 among all n! words in lexicographic order.
std::size_t word_rank(const std::vector<std::size_t>& word);
std::vector<std::size_t> word_unrank(std::size_t rank, std::size_t n);

}  // namespace gstar

#endif
