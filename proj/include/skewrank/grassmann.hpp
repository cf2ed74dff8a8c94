/// @file grassmann.hpp
/// @brief Points of the Grassmannian Gr(k, n): Pluecker embedding, kernel
///        distance, and tangent spaces of the affine cone.
#pragma once

#include <vector>

#include "skewrank/multivector.hpp"
#include "skewrank/subspace.hpp"

namespace skewrank {

/// A point of Gr(k, n), stored as its k-dimensional subspace in canonical
/// RREF form.  The Pluecker coordinates are recovered by wedging the basis.
class GrassPoint {
public:
    explicit GrassPoint(Subspace space);
    /// Recover the point from a decomposable grade-k tensor.  Throws
    /// wrong_stratum_error when the tensor is not decomposable.
    static GrassPoint from_multivector(const Multivector& tensor);

    int n() const { return space_.n(); }
    int k() const { return space_.dim(); }
    const Subspace& space() const { return space_; }
    /// Canonical Pluecker representative: wedge of the RREF basis rows.
    Multivector pluecker() const;

    bool operator==(const GrassPoint& other) const = default;
    bool operator<(const GrassPoint& other) const { return space_ < other.space_; }

private:
    Subspace space_;
};

/// Kernel of the wedge map v -> v ^ t on V.  For decomposable t this is the
/// k-dimensional support subspace; for general t it is smaller.
Subspace psi_kernel(const Multivector& tensor);

/// True iff the tensor is decomposable (nonzero and dim psi_kernel == grade).
bool is_decomposable(const Multivector& tensor);

/// Kernel distance d(p, q) = k - dim(H_p intersect H_q); ranges over 0..k.
int hamming_distance(const GrassPoint& p, const GrassPoint& q);

/// Basis of the affine tangent space at pl(p) of the cone over Gr(k, n):
/// the Pluecker vector itself followed by all single-slot replacements of a
/// basis vector by a complement coordinate vector, in ascending (slot, coord)
/// order.  Always exactly 1 + k(n - k) elements.
std::vector<Multivector> tangent_space_basis(const GrassPoint& p);

/// Dimensions of the two affine tangent spaces, their sum and intersection,
/// and the Terracini flag (sum deficient, i.e. dim sum < 2k(n-k) + 2).
struct TangentPairInfo {
    int dim_p = 0;
    int dim_q = 0;
    int dim_sum = 0;
    int dim_intersection = 0;
    bool in_terracini = false;
};

TangentPairInfo tangent_span_pair(const GrassPoint& p, const GrassPoint& q);

} // namespace skewrank
