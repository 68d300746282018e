#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace orchard {

/// Exact binomial coefficient C(n, k). Throws std::overflow_error if the
/// value does not fit in 64 bits. C(n, k) = 0 for k < 0 or k > n.
std::uint64_t binomial(int n, int k);

/// Parity of the binomial coefficient as used by the orchard prefactor
/// and the separation criterion: 0 (even) unless 0 <= b <= a, in which
/// case it is C(a, b) mod 2 by Lucas' theorem.
int binomial_parity(int a, int b);

/// Colex (combinatorial number system) rank of a strictly increasing
/// subset: rank = sum_i C(subset[i], i+1).
std::uint64_t colex_rank(std::span<const int> sorted_subset);

/// Inverse of colex_rank for k-subsets of {0,...,n-1}.
std::vector<int> colex_unrank(std::uint64_t rank, int n, int k);

/// Iterates all strictly increasing k-subsets of {0,...,n-1} in colex
/// order. Start with first_subset; next_subset advances in place and
/// returns false after the last subset.
std::vector<int> first_colex_subset(int k);
bool next_colex_subset(std::vector<int>& subset, int n);

}  // namespace orchard
