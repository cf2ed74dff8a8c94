/// @file oracle.hpp
/// @brief Independent brute-force reference implementations for cross-checks.
///
/// Everything here is deliberately naive: permutation-sign wedges, Laplace
/// determinants, dense Gaussian elimination.  The implementations share no
/// code with the production routines, so agreement between the two is
/// meaningful evidence.  Complexities are exponential; callers keep n small.
#pragma once

#include <vector>

#include "skewrank/grassmann.hpp"
#include "skewrank/index_set.hpp"
#include "skewrank/multivector.hpp"
#include "skewrank/rational.hpp"

namespace skewrank::oracle {

/// Exterior product computed term by term with an explicit inversion count of
/// the concatenated index sequence (bubble-sort parity).
Multivector wedge_slow(const Multivector& lhs, const Multivector& rhs);

/// Determinant by Laplace expansion along the first row.
Rational det_slow(const std::vector<std::vector<Rational>>& matrix);

/// Full pairing <x_{J}, v_1 ^ ... ^ v_k> = det of the k x k matrix whose
/// (a, b) entry is coordinate J[b] of v_a.  The adjointness oracle for
/// contract().
Rational pairing_det(const std::vector<std::vector<Rational>>& vectors, const IndexSet& dual);

/// Rank of a family of equal-shape multivectors by dense elimination.
long long rank_slow(const std::vector<Multivector>& elements);

/// Kernel distance between two Grassmannian points: k - dim(P cap Q),
/// computed from the rank of the stacked coordinate bases.
int distance_slow(const GrassPoint& p, const GrassPoint& q);

/// Decomposability test via the divisor space {v : v ^ t = 0}: a nonzero
/// grade-k tensor is decomposable exactly when that space has dimension k.
bool decomposable_slow(const Multivector& tensor);

} // namespace skewrank::oracle
