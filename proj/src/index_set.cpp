/// @file index_set.cpp
#include "skewrank/index_set.hpp"

#include <algorithm>

#include "skewrank/errors.hpp"

namespace skewrank {

bool is_valid_index_set(const IndexSet& indices, int n) {
    int previous = 0;
    for (int index : indices) {
        if (index <= previous || index > n) return false;
        previous = index;
    }
    return true;
}

int merge_sign(const IndexSet& lhs, const IndexSet& rhs) {
    // Count inversions between the two sorted blocks; every shared index is a
    // precondition violation (the wedge of overlapping monomials is zero and
    // must be filtered by the caller).
    int inversions = 0;
    std::size_t j = 0;
    for (int r : rhs) {
        while (j < lhs.size() && lhs[j] < r) ++j;
        if (j < lhs.size() && lhs[j] == r) {
            throw invariant_error("merge_sign: index sets overlap");
        }
        inversions += static_cast<int>(lhs.size() - j);
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

IndexSet merge_union(const IndexSet& lhs, const IndexSet& rhs) {
    IndexSet result;
    result.reserve(lhs.size() + rhs.size());
    std::merge(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(result));
    return result;
}

bool contains_subset(const IndexSet& superset, const IndexSet& subset) {
    return std::includes(superset.begin(), superset.end(), subset.begin(), subset.end());
}

IndexSet set_difference(const IndexSet& lhs, const IndexSet& rhs) {
    IndexSet result;
    std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                        std::back_inserter(result));
    return result;
}

int removal_sign(const IndexSet& whole, const IndexSet& part) {
    if (!contains_subset(whole, part)) {
        throw invariant_error("removal_sign: part is not a subset");
    }
    const IndexSet rest = set_difference(whole, part);
    int transpositions = 0;
    for (int r : part) {
        transpositions += static_cast<int>(
            std::lower_bound(rest.begin(), rest.end(), r) - rest.begin());
    }
    return (transpositions % 2 == 0) ? 1 : -1;
}

std::vector<IndexSet> all_subsets(int n, int d) {
    IndexSet base(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i + 1;
    return all_subsets_of(base, d);
}

std::vector<IndexSet> all_subsets_of(const IndexSet& base, int d) {
    std::vector<IndexSet> result;
    if (d < 0 || d > static_cast<int>(base.size())) return result;
    if (d == 0) {
        result.push_back(IndexSet{});
        return result;
    }
    std::vector<int> cursor(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) cursor[static_cast<std::size_t>(i)] = i;
    const int m = static_cast<int>(base.size());
    while (true) {
        IndexSet subset(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            subset[static_cast<std::size_t>(i)] =
                base[static_cast<std::size_t>(cursor[static_cast<std::size_t>(i)])];
        }
        result.push_back(std::move(subset));
        int pos = d - 1;
        while (pos >= 0 && cursor[static_cast<std::size_t>(pos)] == m - d + pos) --pos;
        if (pos < 0) break;
        ++cursor[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < d; ++i) {
            cursor[static_cast<std::size_t>(i)] = cursor[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return result;
}

} // namespace skewrank
