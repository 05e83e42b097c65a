#include "gstar/combinatorics.hpp"

#include <algorithm>

#include "gstar/errors.hpp"

namespace gstar {

std::uint64_t factorial(std::size_t n) {
    if (n > 20) fail(ErrorKind::Capacity, "factorial overflows 64 bits");
    std::uint64_t r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= i;
    return r;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t multinomial(const DegreeVector& parts) {
    std::uint64_t r = 1;
    std::size_t total = 0;
    for (auto p : parts) {
        total += p;
        r *= binomial(total, p);
    }
    return r;
}

namespace {

void compose(std::size_t remaining, std::size_t slot, DegreeVector& cur, std::vector<DegreeVector>& out) {
    if (slot + 1 == cur.size()) {
        cur[slot] = remaining;
        out.push_back(cur);
        return;
    }
    for (std::size_t v = remaining + 1; v-- > 0;) {
        cur[slot] = v;
        compose(remaining - v, slot + 1, cur, out);
    }
}

}  // namespace

std::vector<DegreeVector> compositions(std::size_t n, std::size_t parts) {
    std::vector<DegreeVector> out;
    if (parts == 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    DegreeVector cur(parts);
    compose(n, 0, cur, out);
    return out;
}

std::size_t word_rank(const std::vector<std::size_t>& word) {
    const std::size_t n = word.size();
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (word[j] < word[i]) ++smaller;
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

std::vector<std::size_t> word_unrank(std::size_t rank, std::size_t n) {
    std::vector<std::size_t> digits(n);
    for (std::size_t i = n; i-- > 0;) {
        digits[i] = rank % (n - i);
        rank /= (n - i);
    }
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<std::size_t> word(n);
    for (std::size_t i = 0; i < n; ++i) {
        word[i] = pool[digits[i]];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
    }
    return word;
}

}  // namespace gstar
