/// @file identifiability.hpp
/// @brief Decompositions, decomposition families, tangential loci and the
///        Terracini pair test on the secant variety of lines.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skewrank/grassmann.hpp"
#include "skewrank/multivector.hpp"
#include "skewrank/rational.hpp"

namespace skewrank {

/// An exact length-2 decomposition t = c_p * pl(p) + c_q * pl(q).
struct SecantDecomposition {
    GrassPoint p;
    GrassPoint q;
    Rational c_p;
    Rational c_q;
    /// True exactly on the identifiable strata (kernel distance >= 3).
    bool unique = false;
};

/// Points p of the Grassmannian with t inside the affine tangent span at p.
struct TangentialLocus {
    std::vector<GrassPoint> points;
    /// True when `points` is the entire locus (distance >= 3: a single point).
    bool complete = false;
    /// Dimension of the locus as a variety: 0 when finite, 4 on the
    /// distance-2 stratum (where it matches the decomposition-locus dimension).
    int dimension = 0;
};

/// Solve t = c_p * pl(p) + c_q * pl(q) exactly; nullopt when no such
/// (necessarily unique, both nonzero) pair of coefficients exists.
std::optional<std::pair<Rational, Rational>> secant_coefficients(const Multivector& t,
                                                                 const GrassPoint& p,
                                                                 const GrassPoint& q);

/// Recover a length-2 decomposition of a secant point.  Unique on distance->=3
/// strata; on the distance-2 stratum returns one member of the 4-dimensional
/// family.  Throws wrong_stratum_error on decomposable, tangent-only
/// (distance >= 3), zero, or unclassified inputs.
SecantDecomposition decompose_secant(const Multivector& t);

/// A finite sample of pairwise-distinct exact decompositions of a distance-2
/// point, obtained by rational moves inside its 4-dimensional decomposition
/// family.  Every returned entry is verified.  Throws wrong_stratum_error off
/// the distance-2 stratum.
std::vector<SecantDecomposition> unident_family(const Multivector& t);

/// Tangential locus of a tangent point: the unique tangency point for
/// distance >= 3, or four sample tangency points (dimension 4 family) on the
/// distance-2 stratum.  Throws wrong_stratum_error elsewhere.
TangentialLocus tangential_locus(const Multivector& t);

/// Kernel distance together with the tangent-span data of the pair: the pair
/// belongs to the second Terracini locus iff the span is deficient, which
/// happens exactly at distance <= 2.
struct TerraciniReport {
    int distance = 0;
    TangentPairInfo tangents;
};

TerraciniReport terracini_pair(const GrassPoint& p, const GrassPoint& q);

} // namespace skewrank
