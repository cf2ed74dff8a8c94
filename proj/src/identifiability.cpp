/// @file identifiability.cpp
/// @brief Decomposition recovery, the distance-2 decomposition family, the
///        tangential locus and the Terracini pair test.
#include "skewrank/identifiability.hpp"

#include <array>
#include <set>
#include <utility>

#include "skewrank/errors.hpp"
#include "skewrank/matrix.hpp"
#include "skewrank/orbits.hpp"
#include "skewrank/span.hpp"
#include "skewrank/subspace.hpp"

namespace skewrank {

std::optional<std::pair<Rational, Rational>> secant_coefficients(const Multivector& t,
                                                                 const GrassPoint& p,
                                                                 const GrassPoint& q) {
    if (p.n() != t.n() || q.n() != t.n())
        throw ambient_mismatch("secant_coefficients: ambient dimensions differ");
    if (p.k() != t.grade() || q.k() != t.grade())
        throw invariant_error("secant_coefficients: point dimension must match the grade");

    const Multivector pl_p = p.pluecker();
    const Multivector pl_q = q.pluecker();
    auto relations = kernel_of_images({pl_p, pl_q, t});
    if (relations.size() != 1) return std::nullopt;
    const auto& rel = relations.front();
    if (rel[2] == 0) return std::nullopt;
    Rational c_p = -rel[0] / rel[2];
    Rational c_q = -rel[1] / rel[2];
    c_p.canonicalize();
    c_q.canonicalize();
    if (c_p == 0 || c_q == 0) return std::nullopt;
    if (!(c_p * pl_p + c_q * pl_q == t)) return std::nullopt;
    return std::make_pair(std::move(c_p), std::move(c_q));
}

SecantDecomposition decompose_secant(const Multivector& t) {
    Classification cls = classify(t);
    switch (cls.stratum.label) {
        case OrbitLabel::SigmaTheta2:
        case OrbitLabel::Sigma:
            if (!cls.decomposition) throw internal_error("decompose: missing witness");
            return *cls.decomposition;
        case OrbitLabel::Zero:
            throw wrong_stratum_error("decompose: the zero tensor has no length-2 decomposition");
        case OrbitLabel::Grass:
            throw wrong_stratum_error(
                "decompose: the point is decomposable (rank 1); it lies on the Grassmannian, "
                "not on a proper secant line");
        case OrbitLabel::Theta:
            throw wrong_stratum_error(
                "decompose: tangential point of kernel distance " + std::to_string(cls.distance) +
                "; its border rank is 2 but it admits no exact length-2 decomposition");
        case OrbitLabel::OutsideSigma2:
            throw wrong_stratum_error("decompose: not a border-rank-2 point (" + cls.note + ")");
    }
    throw internal_error("decompose: unknown stratum");
}

namespace {

/// One verified decomposition candidate from an ambient frame (a, b | c, d):
/// the pair of spaces (H + <a, b>, H + <c, d>), coefficients re-solved
/// against t.  Returns nullopt when the candidate fails any exact check.
std::optional<SecantDecomposition> frame_decomposition(const Multivector& t, const Subspace& H,
                                                       const Multivector& a, const Multivector& b,
                                                       const Multivector& c, const Multivector& d) {
    const int k = t.grade();
    std::vector<std::vector<Rational>> rows_p = H.basis();
    rows_p.push_back(a.to_vector());
    rows_p.push_back(b.to_vector());
    Subspace sp = Subspace::from_vectors(t.n(), rows_p);
    std::vector<std::vector<Rational>> rows_q = H.basis();
    rows_q.push_back(c.to_vector());
    rows_q.push_back(d.to_vector());
    Subspace sq = Subspace::from_vectors(t.n(), rows_q);
    if (sp.dim() != k || sq.dim() != k) return std::nullopt;
    GrassPoint p{std::move(sp)};
    GrassPoint q{std::move(sq)};
    auto coeffs = secant_coefficients(t, p, q);
    if (!coeffs) return std::nullopt;
    if (q < p) {
        std::swap(p, q);
        std::swap(coeffs->first, coeffs->second);
    }
    return SecantDecomposition{std::move(p), std::move(q), coeffs->first, coeffs->second, false};
}

} // namespace

std::vector<SecantDecomposition> unident_family(const Multivector& t) {
    Classification cls = classify(t);
    if (cls.stratum.label != OrbitLabel::SigmaTheta2)
        throw wrong_stratum_error(
            "decomposition family: the point is not on the distance-2 stratum (found " +
            cls.stratum.name() + "); only distance-2 points are unidentifiable");
    if (cls.split_frame.size() != 4) throw internal_error("decomposition family: missing frame");

    const Multivector& a = cls.split_frame[0];
    const Multivector& b = cls.split_frame[1];
    const Multivector& c = cls.split_frame[2];
    const Multivector& d = cls.split_frame[3];

    // Orientation variants of the same split t = e_H ^ (a ^ b + c ^ d); each
    // preserves the two-term shape, so the moves below apply to all of them.
    std::vector<std::array<Multivector, 4>> variants;
    variants.push_back({a, b, c, d});
    variants.push_back({c, d, a, b});
    variants.push_back({a, b, -d, c});
    variants.push_back({-b, a, c, d});

    std::vector<SecantDecomposition> family;
    std::set<std::pair<Subspace, Subspace>> seen;
    auto push = [&](std::optional<SecantDecomposition> dec) {
        if (!dec) return;
        auto key = std::make_pair(dec->p.space(), dec->q.space());
        if (!seen.insert(key).second) return;
        family.push_back(std::move(*dec));
    };

    push(frame_decomposition(t, cls.kernel, a, b, c, d));
    for (const auto& v : variants) {
        for (int lambda = 1; lambda <= 2; ++lambda) {
            const Rational coeff(lambda);
            // a ^ b + c ^ d == a ^ (b + lambda c) + c ^ (d + lambda a)
            push(frame_decomposition(t, cls.kernel, v[0], v[1] + coeff * v[2], v[2],
                                     v[3] + coeff * v[0]));
            // a ^ b + c ^ d == (a + lambda c) ^ b + c ^ (d - lambda b)
            push(frame_decomposition(t, cls.kernel, v[0] + coeff * v[2], v[1], v[2],
                                     v[3] - coeff * v[1]));
        }
    }
    if (family.size() < 2) throw internal_error("decomposition family: moves collapsed");
    return family;
}

TangentialLocus tangential_locus(const Multivector& t) {
    Classification cls = classify(t);
    TangentialLocus locus;
    switch (cls.stratum.label) {
        case OrbitLabel::Theta:
            locus.points = cls.tangency_points;
            locus.complete = true;
            locus.dimension = 0;
            return locus;
        case OrbitLabel::SigmaTheta2:
            // Distance 2 is the non-identifiable overlap: the tangency points
            // form a 4-dimensional family, of which these are exact samples.
            locus.points = cls.tangency_points;
            locus.complete = false;
            locus.dimension = 4;
            return locus;
        case OrbitLabel::Zero:
            throw wrong_stratum_error("tangential locus: the zero tensor is not a tangential point");
        case OrbitLabel::Grass:
            throw wrong_stratum_error(
                "tangential locus: the point is decomposable; the locus through a Grassmannian "
                "point is not a finite datum");
        case OrbitLabel::Sigma:
            throw wrong_stratum_error(
                "tangential locus: identifiable secant point of kernel distance " +
                std::to_string(cls.distance) + " lies outside the tangential variety");
        case OrbitLabel::OutsideSigma2:
            throw wrong_stratum_error("tangential locus: not a border-rank-2 point (" + cls.note +
                                      ")");
    }
    throw internal_error("tangential locus: unknown stratum");
}

TerraciniReport terracini_pair(const GrassPoint& p, const GrassPoint& q) {
    if (p.n() != q.n()) throw ambient_mismatch("terracini: ambient dimensions differ");
    if (p.k() != q.k()) throw invariant_error("terracini: points must have equal dimension");
    TerraciniReport report;
    report.distance = hamming_distance(p, q);
    report.tangents = tangent_span_pair(p, q);
    return report;
}

} // namespace skewrank
