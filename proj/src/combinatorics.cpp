#include "tokenhom/combinatorics.hpp"

#include <algorithm>
#include <limits>

namespace tokenhom {

long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (long long i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned __int128>(n - k + i) / i;
        if (result > static_cast<unsigned __int128>(std::numeric_limits<long long>::max()))
            throw std::overflow_error("binomial: overflow");
    }
    return static_cast<long long>(result);
}

long long subset_rank(const std::vector<int>& subset, int n) {
    int k = static_cast<int>(subset.size());
    long long rank = 0;
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        int c = subset[i];
        if (c <= prev || c >= n)
            throw std::invalid_argument("subset_rank: not a strictly increasing subset");
        for (int j = prev + 1; j < c; ++j) rank += binomial(n - 1 - j, k - 1 - i);
        prev = c;
    }
    return rank;
}

std::vector<int> subset_unrank(long long rank, int n, int k) {
    std::vector<int> out;
    out.reserve(k);
    int next = 0;
    for (int i = 0; i < k; ++i) {
        for (int c = next;; ++c) {
            if (c >= n) throw std::out_of_range("subset_unrank: rank out of range");
            long long block = binomial(n - 1 - c, k - 1 - i);
            if (rank < block) {
                out.push_back(c);
                next = c + 1;
                break;
            }
            rank -= block;
        }
    }
    if (rank != 0) throw std::out_of_range("subset_unrank: rank out of range");
    return out;
}

long long multiset_rank(const std::vector<int>& multiset, int n) {
    int k = static_cast<int>(multiset.size());
    std::vector<int> shifted(multiset);
    for (int i = 0; i < k; ++i) {
        if (i > 0 && multiset[i] < multiset[i - 1])
            throw std::invalid_argument("multiset_rank: not sorted");
        shifted[i] += i;
    }
    return subset_rank(shifted, n + k - 1);
}

std::vector<int> multiset_unrank(long long rank, int n, int k) {
    auto shifted = subset_unrank(rank, n + k - 1, k);
    for (int i = 0; i < k; ++i) shifted[i] -= i;
    return shifted;
}

namespace {

void enumerate(int n, int k, int low, bool strict, std::vector<int>& current,
               std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == k) {
        out.push_back(current);
        return;
    }
    for (int c = low; c < n; ++c) {
        current.push_back(c);
        enumerate(n, k, strict ? c + 1 : c, strict, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> all_multisets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> current;
    enumerate(n, k, 0, false, current, out);
    return out;
}

std::vector<std::vector<int>> all_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    if (k > n) return out;
    std::vector<int> current;
    enumerate(n, k, 0, true, current, out);
    return out;
}

}  // namespace tokenhom
