/// @file apolarity.hpp
/// @brief Apolar ideals of skew tensors, perp dimensions of squared-ideal
///        slices, and exact smoothness certificates for the secant variety of
///        lines of Gr(k, n).
#pragma once

#include <string>
#include <vector>

#include "skewrank/multivector.hpp"
#include "skewrank/orbits.hpp"

namespace skewrank {

/// Basis of the degree-d slice of the apolar ideal of t: all grade-d dual
/// forms alpha with alpha . t = 0.
std::vector<DualForm> annihilator(const Multivector& tensor, int d);

/// dim of the degree-k slice of the squared apolar ideal, where the ideal is
/// the one generated by the annihilator in degrees 1 and 2.  Higher-degree
/// annihilator elements outside that ideal are deliberately excluded: the
/// tangent-space bound below holds for the low-degree ideal only.  (At the
/// distance-3 tangent representative with k >= 4, x_1 ^ x_2 ^ x_3 annihilates
/// but is not generated in degrees <= 2; its products with the linear
/// generators would shrink the perp below the cone dimension, contradicting
/// the verified ruling direction e_{1,..,k-1,k+4} at that point.)
long long squared_ideal_dim(const Multivector& tensor);

/// dim of the perp of the squared-ideal slice inside Lambda^k:
/// C(n, k) - squared_ideal_dim.  On identifiable strata the affine tangent
/// space of the secant cone at t lies inside this perp, so the value is an
/// upper bound for its dimension there.
long long perp_dim(const Multivector& tensor);

/// Affine dimension of the cone over the secant variety of lines:
/// 2k(n-k) + 2 for k >= 3 (non-defective) and 4(n-2) - 2 in the defective
/// plane case k = 2.  Requires n >= 2k.
long long sigma2_cone_dim(int k, int n);

/// Certified lower bound for the dimension of the affine tangent space of the
/// secant cone at t, together with the points whose embedded tangent spaces
/// were spanned.  Every contributing space is a linear subspace of the secant
/// cone through t: the Terracini pair of a verified decomposition, the full
/// embedded tangent space at every verified tangency point, and at a
/// decomposable point the tangent spaces at its verified distance-1
/// neighbours (with the Pluecker ruling directions as a final fallback).
/// Throws wrong_stratum_error off the variety.
struct TangentLowerBound {
    long long dim = 0;
    std::vector<GrassPoint> contributing_points;
};

TangentLowerBound tangent_lower_bound(const Multivector& tensor, const Classification& cls);

/// Rank in Lambda^k of the ideal slice generated by the given dual forms:
/// every generator wedged with every complementary basis monomial.
long long ideal_slice_dim(const std::vector<DualForm>& generators, int n, int k);

/// The degree <= 2 generator groups of the apolar ideal of the distance-3
/// tangent representative q3 (columns k+1..k+3 paired against rows 1..3):
///   linear:    x_i for i >= k+4;
///   mixed:     x_1 x_{k+1}, x_2 x_{k+2}, x_3 x_{k+3};
///   quadratic: x_{k+1} x_{k+2}, x_{k+1} x_{k+3}, x_{k+2} x_{k+3};
///   symmetric: x_2 x_{k+1} + x_1 x_{k+2}, x_3 x_{k+1} + x_1 x_{k+3},
///              x_2 x_{k+3} + x_3 x_{k+2}.
struct Q3Ideal {
    std::vector<DualForm> linear;
    std::vector<DualForm> mixed;
    std::vector<DualForm> quadratic;
    std::vector<DualForm> symmetric;
};

Q3Ideal q3_ideal_groups(int k, int n);

/// Staged perp computation at the distance-3 tangent representative.  The
/// stage slice drops the symmetric-group products; its perp has the closed
/// form 9(n-3) - 7 for k = 3 and 5 + 3(n-k-3)(k-1) + 6(k-2) + k(n-k) for
/// k >= 4.  Adding the symmetric products pins the full perp to the floor
/// 2k(n-k) + 2.
struct Q3PerpReport {
    int k = 0;
    int n = 0;
    long long ambient = 0;    ///< C(n, k)
    long long stage_perp = 0; ///< perp of the stage slice
    long long final_perp = 0; ///< perp of the full squared-ideal slice
    std::string stage_formula;
    std::string final_formula;
};

Q3PerpReport q3_perp_report(int k, int n);

/// Outcome of the pointwise smoothness test on the secant variety of lines.
enum class Smoothness {
    Smooth,
    Singular,
    OutsideSigma2,
    Inconclusive,
};

std::string to_string(Smoothness verdict);

/// An exact two-sided certificate: Smooth is certified by the apolar upper
/// bound pinching to the cone dimension, Singular by a span of certified
/// tangent directions exceeding it.  Inconclusive only reports the gap; it
/// never misclassifies.
struct SmoothnessCertificate {
    Smoothness verdict = Smoothness::Inconclusive;
    Stratum stratum;            ///< classification of the probed point
    int k = 0;
    int n = 0;
    long long ambient_dim = 0;  ///< C(n, k)
    long long cone_dim = 0;     ///< affine dim of the secant cone
    long long tangent_lower = 0; ///< certified lower bound (0 when unused)
    long long tangent_upper = 0; ///< apolar upper bound (0 when unused)
    std::vector<GrassPoint> contributing_points; ///< tangent spaces spanned
                                                 ///< for the lower bound
    bool via_closure = false;   ///< smoothness transferred from the distance-3
                                ///< tangent stratum in this stratum's closure
    std::string reason;
};

SmoothnessCertificate smoothness_certificate(const Multivector& tensor);

} // namespace skewrank
