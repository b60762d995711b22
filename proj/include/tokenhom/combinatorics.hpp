#ifndef TOKENHOM_COMBINATORICS_HPP
#define TOKENHOM_COMBINATORICS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tokenhom {

/// Exact C(n, k) in 64 bits; throws on overflow.
long long binomial(long long n, long long k);

/// Lexicographic rank of a strictly increasing k-subset of {0..n-1}.
long long subset_rank(const std::vector<int>& subset, int n);

/// Inverse of subset_rank.
std::vector<int> subset_unrank(long long rank, int n, int k);

/// Lexicographic rank of a sorted multiset (weakly increasing) over {0..n-1}.
/// Uses the strictly-increasing shift c_i + i into the combinatorial number
/// system, which preserves lexicographic order.
long long multiset_rank(const std::vector<int>& multiset, int n);

std::vector<int> multiset_unrank(long long rank, int n, int k);

/// All weakly increasing k-tuples over {0..n-1} in lexicographic order.
std::vector<std::vector<int>> all_multisets(int n, int k);

/// All strictly increasing k-tuples over {0..n-1} in lexicographic order.
std::vector<std::vector<int>> all_subsets(int n, int k);

}  // namespace tokenhom

#endif
