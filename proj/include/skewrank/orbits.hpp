/// @file orbits.hpp
/// @brief Orbit stratification of the secant variety of lines of Gr(k, n):
///        representatives, the classification pipeline, orbit dimensions and
///        the stratum atlas.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewrank/identifiability.hpp"
#include "skewrank/multivector.hpp"
#include "skewrank/subspace.hpp"

namespace skewrank {

enum class OrbitLabel {
    Zero,          ///< the zero tensor
    Grass,         ///< decomposable: the cone over the Grassmannian
    SigmaTheta2,   ///< distance-2 stratum (secant and tangent orbits agree)
    Sigma,         ///< distance-l secant stratum, l >= 3
    Theta,         ///< distance-l tangent stratum, l >= 3
    OutsideSigma2, ///< certified not to admit a rational rank-<=2 structure
};

struct Stratum {
    OrbitLabel label = OrbitLabel::Zero;
    int l = 0; ///< kernel distance for Sigma/Theta (and 2 for SigmaTheta2)

    std::string name() const;
    bool operator==(const Stratum& other) const = default;
};

/// --- Orbit representatives -------------------------------------------------

/// omega = e_1 ^ ... ^ e_k.
Multivector omega_rep(int k, int n);
/// The distance-l companion point e_1 ^ .. ^ e_{k-l} ^ e_{k+1} ^ .. ^ e_{k+l}.
Multivector shifted_rep(int k, int n, int l);
/// Secant representative s_l = omega + shifted, for 2 <= l <= k, n >= k + l.
Multivector secant_rep(int k, int n, int l);
/// Tangent representative theta_l = sum over j of
/// e_1 ^ .. ^ e_{j-1} ^ e_{k+j} ^ e_{j+1} ^ .. ^ e_k, for 2 <= l <= k.
Multivector tangent_rep(int k, int n, int l);
/// The distance-3 tangent point
/// e_2..e_k ^ e_{k+1} - e_1 e_3..e_k ^ e_{k+2} + e_1 e_2 e_4..e_k ^ e_{k+3};
/// equals tangent_rep(k, n, 3) up to the global sign (-1)^(k-1).
Multivector q3_rep(int k, int n);

/// --- Classification ---------------------------------------------------------

struct Classification {
    Stratum stratum;
    int k = 0;
    int n = 0;
    /// dim of the wedge kernel H_t; equals k exactly on the Grass stratum.
    int kernel_dim = 0;
    /// Kernel distance l = k - kernel_dim of the underlying point pair.
    int distance = 0;
    /// For grade-2 input: the matrix rank of the skew form (2, 4, 6, ...).
    int skew_rank = 0;
    /// Exact decomposition witness (Grass-free secant strata).
    std::optional<SecantDecomposition> decomposition;
    /// Verified tangency points: one for Theta(l >= 3), four samples on the
    /// distance-2 stratum.
    std::vector<GrassPoint> tangency_points;
    /// Shared kernel H_t.
    Subspace kernel;
    /// Lifted symplectic frame (distance-2 only): four ambient vectors
    /// v1..v4 with t = e_H ^ (v1 ^ v2 + v3 ^ v4) up to the frame scaling;
    /// consumed by the decomposition-family sampler.
    std::vector<Multivector> split_frame;
    /// Human-readable detail, e.g. why an input fell outside the variety.
    std::string note;

    Classification() : kernel(0) {}
};

/// Full classification pipeline.  Exact, deterministic, and verify-certify:
/// a stratum label is only emitted together with a checked witness.  Points
/// whose secant structure exists only over an irrational extension are
/// labelled OutsideSigma2 with an explanatory note.
Classification classify(const Multivector& tensor);

/// --- Dimensions --------------------------------------------------------------

/// Affine dimension of the GL-orbit cone through t: the rank of X -> X.t on
/// the n^2 elementary matrices.  The projective orbit dimension is one less.
int orbit_cone_dim(const Multivector& tensor);

/// Closed-form projective dimensions of the strata.
long long dim_grass(int k, int n);
long long dim_sigma_theta2(int k, int n);
long long dim_theta(int k, int n, int l); ///< l >= 3
long long dim_sigma(int k, int n, int l); ///< l >= 3

/// --- Atlas -------------------------------------------------------------------

struct AtlasEntry {
    Stratum stratum;
    std::string name;
    long long projective_dim = 0;
    std::string formula; ///< closed form in k, N, l
};

struct Atlas {
    int k = 0;
    int n = 0;
    std::vector<AtlasEntry> entries;
    /// Pairs (a, b) meaning: stratum a lies in the closure of stratum b.
    std::vector<std::pair<std::string, std::string>> closure;
};

/// Stratum table of the secant variety of lines for k >= 2, n >= 2k:
/// 2k - 2 strata for k >= 3, two strata in the defective case k = 2.
Atlas orbit_atlas(int k, int n);

} // namespace skewrank
