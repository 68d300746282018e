#include "orchard/combinatorics.hpp"

#include <limits>
#include <stdexcept>

namespace orchard {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    // Multiplicative form; every intermediate division is exact.
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        const unsigned __int128 next =
            static_cast<unsigned __int128>(result) * static_cast<std::uint64_t>(n - k + i);
        if (next / static_cast<std::uint64_t>(i) > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial: C(" + std::to_string(n) + "," +
                                      std::to_string(k) + ") exceeds 64 bits");
        result = static_cast<std::uint64_t>(next / static_cast<std::uint64_t>(i));
    }
    return result;
}

int binomial_parity(int a, int b) {
    if (b < 0 || a < b) return 0;
    // Lucas: C(a, b) is odd iff the binary digits of b are dominated by a's.
    const unsigned ua = static_cast<unsigned>(a);
    const unsigned ub = static_cast<unsigned>(b);
    return ((ub & (ua - ub)) == 0) ? 1 : 0;
}

std::uint64_t colex_rank(std::span<const int> sorted_subset) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < sorted_subset.size(); ++i)
        r += binomial(sorted_subset[i], static_cast<int>(i) + 1);
    return r;
}

std::vector<int> colex_unrank(std::uint64_t rank, int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("colex_unrank: k out of range");
    std::vector<int> subset(static_cast<std::size_t>(k));
    int hi = n - 1;
    for (int i = k; i >= 1; --i) {
        int c = hi;
        while (c >= i - 1 && binomial(c, i) > rank) --c;
        subset[static_cast<std::size_t>(i - 1)] = c;
        rank -= binomial(c, i);
        hi = c - 1;
    }
    if (rank != 0) throw std::out_of_range("colex_unrank: rank exceeds C(n,k)");
    return subset;
}

std::vector<int> first_colex_subset(int k) {
    std::vector<int> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
    return s;
}

bool next_colex_subset(std::vector<int>& subset, int n) {
    const int k = static_cast<int>(subset.size());
    for (int i = 0; i < k; ++i) {
        const int limit = (i + 1 < k) ? subset[static_cast<std::size_t>(i + 1)] : n;
        if (subset[static_cast<std::size_t>(i)] + 1 < limit) {
            ++subset[static_cast<std::size_t>(i)];
            for (int j = 0; j < i; ++j) subset[static_cast<std::size_t>(j)] = j;
            return true;
        }
    }
    return false;
}

}  // namespace orchard
