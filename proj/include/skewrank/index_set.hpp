/// @file index_set.hpp
/// @brief Sorted index sets labelling exterior-algebra basis monomials.
#pragma once

#include <vector>

namespace skewrank {

/// Strictly increasing 1-based indices, e.g. {1,3,5} for e1^e3^e5.  std::vector
/// comparison is lexicographic, which is exactly the monomial order used for
/// term maps and for leading-term elimination.
using IndexSet = std::vector<int>;

/// True when `indices` is strictly increasing within [1, n].
bool is_valid_index_set(const IndexSet& indices, int n);

/// Sign (+1/-1) of the permutation sorting the concatenation (lhs, rhs) of two
/// disjoint sorted sets, i.e. parity of the number of pairs (i in lhs, j in rhs)
/// with i > j.  Precondition (checked): disjoint inputs.
int merge_sign(const IndexSet& lhs, const IndexSet& rhs);

/// Sorted union of two disjoint sorted sets.
IndexSet merge_union(const IndexSet& lhs, const IndexSet& rhs);

/// True when subset is contained in superset (both sorted).
bool contains_subset(const IndexSet& superset, const IndexSet& subset);

/// Elements of lhs not in rhs (both sorted).
IndexSet set_difference(const IndexSet& lhs, const IndexSet& rhs);

/// Sign of the permutation sending the sorted set `whole` to the concatenation
/// (part, whole \ part), i.e. parity of sum over r in part of the count of
/// elements of whole \ part smaller than r.  Precondition: part is a subset.
int removal_sign(const IndexSet& whole, const IndexSet& part);

/// All d-subsets of {1..n}, lexicographic.
std::vector<IndexSet> all_subsets(int n, int d);

/// All d-subsets of an arbitrary sorted base set, lexicographic.
std::vector<IndexSet> all_subsets_of(const IndexSet& base, int d);

} // namespace skewrank
