/// @file apolarity.cpp
/// @brief Apolar ideals, squared-ideal perps and smoothness certificates.
#include "skewrank/apolarity.hpp"

#include <algorithm>
#include <utility>

#include "skewrank/errors.hpp"
#include "skewrank/grassmann.hpp"
#include "skewrank/index_set.hpp"
#include "skewrank/matrix.hpp"
#include "skewrank/rational.hpp"
#include "skewrank/span.hpp"
#include "skewrank/subspace.hpp"

namespace skewrank {

std::vector<DualForm> annihilator(const Multivector& tensor, int d) {
    if (d < 1) throw invariant_error("annihilator: degree must be positive");
    const int n = tensor.n();
    const std::vector<IndexSet> monomials = all_subsets(n, d);
    std::vector<Multivector> images;
    images.reserve(monomials.size());
    for (const auto& A : monomials) images.push_back(contract(Multivector::basis(n, A), tensor));
    std::vector<DualForm> forms;
    for (const auto& coeffs : kernel_of_images(images)) {
        DualForm f(n, d);
        for (std::size_t i = 0; i < monomials.size(); ++i) f.add_term(monomials[i], coeffs[i]);
        forms.push_back(std::move(f));
    }
    return forms;
}

namespace {

/// Rank of the degree-k slice of the square of the ideal generated by the
/// degree-1 and degree-2 annihilators, stopping early once `stop_rank` is
/// reached (pass the ambient dimension to disable).  Because I_1 ^ Lambda^1
/// lies inside I_2, the generator products collapse to a single stage:
/// I_1 ^ I_1 for k = 2, I_1 ^ I_2 for k = 3 and I_2 ^ I_2 ^ Lambda^(k-4) for
/// k >= 4.  Rows with a single monomial are installed first: they are unit
/// pivot rows, which keeps the later reductions sparse.
long long squared_rank(const Multivector& tensor, long long stop_rank) {
    const int n = tensor.n();
    const int k = tensor.grade();
    if (k < 2) throw invariant_error("squared ideal: grade must be at least 2");

    const int a = (k >= 4) ? 2 : 1;
    const int b = (k >= 3) ? 2 : 1;
    const std::vector<DualForm> left = annihilator(tensor, a);
    std::vector<DualForm> other;
    if (b != a) other = annihilator(tensor, b);
    const std::vector<DualForm>& right = (b == a) ? left : other;

    // Products of two generators, echelonized at their own grade first so the
    // monomial multiplication below runs over an independent set only.
    SpanBuilder products(n, a + b);
    for (std::size_t i = 0; i < left.size(); ++i) {
        const std::size_t j_begin = (b == a) ? i : 0;
        for (std::size_t j = j_begin; j < right.size(); ++j) products.add(wedge(left[i], right[j]));
    }

    SpanBuilder span(n, k);
    std::vector<Multivector> deferred;
    auto feed = [&](Multivector&& product) {
        if (product.is_zero()) return;
        if (product.term_count() == 1) {
            span.add(product);
        } else {
            deferred.push_back(std::move(product));
        }
    };
    for (const auto& [lead, w] : products.rows())
        for (const auto& A : all_subsets(n, k - a - b)) {
            feed(wedge(Multivector::basis(n, A), w));
            if (span.rank() >= stop_rank) return span.rank();
        }
    for (const auto& product : deferred) {
        span.add(product);
        if (span.rank() >= stop_rank) return span.rank();
    }
    return span.rank();
}

} // namespace

long long squared_ideal_dim(const Multivector& tensor) {
    return squared_rank(tensor, binomial(tensor.n(), tensor.grade()));
}

long long perp_dim(const Multivector& tensor) {
    return binomial(tensor.n(), tensor.grade()) - squared_ideal_dim(tensor);
}

long long sigma2_cone_dim(int k, int n) {
    if (k < 2) throw invariant_error("sigma2 dimension: need k >= 2");
    if (n < 2 * k) throw invariant_error("sigma2 dimension: need n >= 2k");
    if (k == 2) return 4LL * (n - 2) - 2;
    return 2LL * k * (n - k) + 2;
}

namespace {

/// Span the embedded tangent space at q into the builder and record q.
void span_tangent_space(SpanBuilder& span, std::vector<GrassPoint>& recorded,
                        const GrassPoint& q) {
    for (const auto& v : tangent_space_basis(q)) span.add(v);
    recorded.push_back(q);
}

/// Lower bound at a decomposable point p: the tangent space at p plus the
/// tangent spaces at its distance-1 neighbours (single-slot replacements of a
/// basis vector by a complement coordinate vector), each verified to contain
/// the probed tensor, until the span exceeds the cone dimension.  If the
/// neighbours run out first, fall back to the ruling lines toward the
/// coordinate Pluecker vectors, which span the full ambient space.
TangentLowerBound grass_lower_bound(const Multivector& tensor) {
    const int n = tensor.n();
    const int k = tensor.grade();
    const GrassPoint p = GrassPoint::from_multivector(tensor);
    const long long ambient = binomial(n, k);
    const long long target = std::min(sigma2_cone_dim(k, n) + 1, ambient);

    TangentLowerBound out;
    SpanBuilder span(n, k);
    span_tangent_space(span, out.contributing_points, p);

    const std::vector<std::vector<Rational>> rows = p.space().basis();
    for (int coord : p.space().complement_coords()) {
        for (int slot = 0; slot < k && span.rank() < target; ++slot) {
            std::vector<std::vector<Rational>> replaced = rows;
            replaced[slot] = std::vector<Rational>(n, Rational(0));
            replaced[slot][coord - 1] = Rational(1);
            const GrassPoint q{Subspace::from_vectors(n, replaced)};
            if (hamming_distance(p, q) != 1)
                throw internal_error("tangent bound: slot replacement is not a neighbour");
            SpanBuilder check(n, k);
            for (const auto& v : tangent_space_basis(q)) check.add(v);
            if (check.add(tensor))
                throw internal_error("tangent bound: neighbour tangent space misses the point");
            span_tangent_space(span, out.contributing_points, q);
        }
        if (span.rank() >= target) break;
    }
    // Ruling fallback: the two-plane through the point and any coordinate
    // Pluecker vector lies on the secant cone, so its direction is tangent.
    if (span.rank() < target)
        for (const auto& A : all_subsets(n, k)) span.add(Multivector::basis(n, A));
    out.dim = span.rank();
    return out;
}

/// Lower bound from linear subspaces of the secant cone through the point:
/// the Terracini span of a verified decomposition plus the full embedded
/// tangent spaces at every verified tangency point.
TangentLowerBound stratum_lower_bound(const Classification& cls) {
    TangentLowerBound out;
    SpanBuilder span(cls.n, cls.k);
    if (cls.decomposition) {
        span_tangent_space(span, out.contributing_points, cls.decomposition->p);
        span_tangent_space(span, out.contributing_points, cls.decomposition->q);
    }
    for (const auto& p : cls.tangency_points) span_tangent_space(span, out.contributing_points, p);
    out.dim = span.rank();
    return out;
}

} // namespace

TangentLowerBound tangent_lower_bound(const Multivector& tensor, const Classification& cls) {
    if (cls.n != tensor.n() || cls.k != tensor.grade())
        throw invariant_error("tangent bound: classification does not match the tensor");
    switch (cls.stratum.label) {
        case OrbitLabel::Grass:
            return grass_lower_bound(tensor);
        case OrbitLabel::SigmaTheta2:
        case OrbitLabel::Sigma:
        case OrbitLabel::Theta:
            return stratum_lower_bound(cls);
        case OrbitLabel::Zero:
            throw wrong_stratum_error("tangent bound: the zero tensor is the cone vertex");
        case OrbitLabel::OutsideSigma2:
            throw wrong_stratum_error("tangent bound: not a border-rank-2 point (" + cls.note +
                                      ")");
    }
    throw internal_error("tangent bound: unknown stratum");
}

long long ideal_slice_dim(const std::vector<DualForm>& generators, int n, int k) {
    SpanBuilder span(n, k);
    std::vector<Multivector> deferred;
    auto feed = [&](Multivector&& element) {
        if (element.is_zero()) return;
        if (element.term_count() == 1) {
            span.add(element);
        } else {
            deferred.push_back(std::move(element));
        }
    };
    for (const auto& g : generators) {
        if (g.n() != n) throw ambient_mismatch("ideal slice: ambient dimensions differ");
        if (g.grade() > k) continue;
        if (g.grade() == k) {
            feed(Multivector(g));
            continue;
        }
        for (const auto& A : all_subsets(n, k - g.grade()))
            feed(wedge(g, Multivector::basis(n, A)));
    }
    for (const auto& element : deferred) span.add(element);
    return span.rank();
}

Q3Ideal q3_ideal_groups(int k, int n) {
    if (k < 3) throw invariant_error("q3 ideal: need k >= 3");
    if (n < k + 3) throw invariant_error("q3 ideal: need n >= k + 3");
    Q3Ideal ideal;
    for (int i = k + 4; i <= n; ++i) ideal.linear.push_back(Multivector::basis(n, {i}));
    for (int j = 1; j <= 3; ++j) ideal.mixed.push_back(Multivector::basis(n, {j, k + j}));
    for (int j = 1; j <= 3; ++j)
        for (int s = j + 1; s <= 3; ++s)
            ideal.quadratic.push_back(Multivector::basis(n, {k + j, k + s}));
    auto symmetric_pair = [&](int j1, int s1, int j2, int s2) {
        Multivector f = Multivector::basis(n, {std::min(j1, s1 + k), std::max(j1, s1 + k)});
        f += Multivector::basis(n, {std::min(j2, s2 + k), std::max(j2, s2 + k)});
        return f;
    };
    ideal.symmetric.push_back(symmetric_pair(2, 1, 1, 2)); // x2 x_{k+1} + x1 x_{k+2}
    ideal.symmetric.push_back(symmetric_pair(3, 1, 1, 3)); // x3 x_{k+1} + x1 x_{k+3}
    ideal.symmetric.push_back(symmetric_pair(2, 3, 3, 2)); // x2 x_{k+3} + x3 x_{k+2}
    return ideal;
}

namespace {

std::vector<DualForm> block_products(const std::vector<DualForm>& lhs,
                                     const std::vector<DualForm>& rhs) {
    std::vector<DualForm> products;
    for (const auto& f : lhs)
        for (const auto& g : rhs) {
            Multivector p = wedge(f, g);
            if (!p.is_zero()) products.push_back(std::move(p));
        }
    return products;
}

void append(std::vector<DualForm>& into, std::vector<DualForm> more) {
    for (auto& f : more) into.push_back(std::move(f));
}

} // namespace

Q3PerpReport q3_perp_report(int k, int n) {
    const Q3Ideal ideal = q3_ideal_groups(k, n);
    Q3PerpReport report;
    report.k = k;
    report.n = n;
    report.ambient = binomial(n, k);

    // Stage slice: (A)_3 = (1)^2, (1)(2), (1)(3) for k = 3, extended to
    // (B)_k by the (2)^2 and (2)(3) products for k >= 4.
    std::vector<DualForm> stage;
    append(stage, block_products(ideal.linear, ideal.linear));
    append(stage, block_products(ideal.linear, ideal.mixed));
    append(stage, block_products(ideal.linear, ideal.quadratic));
    append(stage, block_products(ideal.mixed, ideal.mixed));
    append(stage, block_products(ideal.mixed, ideal.quadratic));
    report.stage_perp = report.ambient - ideal_slice_dim(stage, n, k);
    report.stage_formula = (k == 3) ? "9(N-3)-7" : "5+3(N-k-3)(k-1)+6(k-2)+k(N-k)";

    // Full slice: the symmetric-group products pin the perp to the floor.
    std::vector<DualForm> full = stage;
    append(full, block_products(ideal.linear, ideal.symmetric));
    append(full, block_products(ideal.mixed, ideal.symmetric));
    append(full, block_products(ideal.quadratic, ideal.quadratic));
    append(full, block_products(ideal.quadratic, ideal.symmetric));
    append(full, block_products(ideal.symmetric, ideal.symmetric));
    report.final_perp = report.ambient - ideal_slice_dim(full, n, k);
    report.final_formula = "2k(N-k)+2";
    return report;
}

std::string to_string(Smoothness verdict) {
    switch (verdict) {
        case Smoothness::Smooth: return "Smooth";
        case Smoothness::Singular: return "Singular";
        case Smoothness::OutsideSigma2: return "OutsideSigma2";
        case Smoothness::Inconclusive: return "Inconclusive";
    }
    throw internal_error("smoothness: unknown verdict");
}

SmoothnessCertificate smoothness_certificate(const Multivector& tensor) {
    const int k = tensor.grade();
    const int n = tensor.n();
    SmoothnessCertificate cert;
    cert.k = k;
    cert.n = n;
    cert.ambient_dim = binomial(n, k);
    cert.cone_dim = sigma2_cone_dim(k, n);

    Classification cls = classify(tensor);
    if (cls.stratum.label == OrbitLabel::Zero)
        throw wrong_stratum_error("smoothness: the zero tensor is the cone vertex, not a point "
                                  "of the projective variety");
    cert.stratum = cls.stratum;

    if (cert.cone_dim >= cert.ambient_dim) {
        cert.verdict = Smoothness::Smooth;
        cert.tangent_upper = cert.ambient_dim;
        cert.reason = "the secant variety of lines fills the ambient space, so every point "
                      "is smooth";
        return cert;
    }

    switch (cls.stratum.label) {
        case OrbitLabel::Grass: {
            // Classical containment: for a secant variety that is not a linear
            // space, the variety of rank-one points lies in the singular
            // locus.  Certify it here by an explicit tangent span: the tangent
            // spaces at the point and at verified distance-1 neighbours exceed
            // the cone dimension.
            TangentLowerBound bound = tangent_lower_bound(tensor, cls);
            cert.tangent_lower = bound.dim;
            cert.contributing_points = std::move(bound.contributing_points);
            if (cert.tangent_lower > cert.cone_dim) {
                cert.verdict = Smoothness::Singular;
                cert.reason = "a decomposable point lies in the singular locus of the secant "
                              "variety (the rank-one locus is always singular there); "
                              "certified by the span of tangent spaces at the point and its "
                              "verified distance-1 neighbours exceeding the cone dimension";
            } else {
                cert.verdict = Smoothness::Inconclusive;
                cert.reason = "the certified tangent directions do not exceed the cone "
                              "dimension";
            }
            return cert;
        }
        case OrbitLabel::SigmaTheta2: {
            if (k == 2) {
                const long long floor_rank = cert.ambient_dim - cert.cone_dim;
                const long long rank = squared_rank(tensor, floor_rank);
                cert.tangent_upper = cert.ambient_dim - rank;
                if (cert.tangent_upper == cert.cone_dim) {
                    cert.verdict = Smoothness::Smooth;
                    cert.reason = "the squared-apolar-ideal perp equals the cone dimension "
                                  "4(N-2)-2, pinching the tangent space";
                } else {
                    cert.verdict = Smoothness::Inconclusive;
                    cert.reason = "the apolar upper bound does not meet the cone dimension";
                }
                return cert;
            }
            TangentLowerBound bound = tangent_lower_bound(tensor, cls);
            cert.tangent_lower = bound.dim;
            cert.contributing_points = std::move(bound.contributing_points);
            if (cert.tangent_lower > cert.cone_dim) {
                cert.verdict = Smoothness::Singular;
                cert.reason = "the span of the tangent spaces at the decomposition and "
                              "tangency points already exceeds the cone dimension";
            } else {
                cert.verdict = Smoothness::Inconclusive;
                cert.reason = "the certified tangent directions do not exceed the cone "
                              "dimension";
            }
            return cert;
        }
        case OrbitLabel::Sigma:
        case OrbitLabel::Theta: {
            const long long floor_rank = cert.ambient_dim - cert.cone_dim;
            const long long rank = squared_rank(tensor, floor_rank);
            cert.tangent_upper = cert.ambient_dim - rank;
            if (cert.tangent_upper == cert.cone_dim) {
                cert.verdict = Smoothness::Smooth;
                cert.reason = "the squared-apolar-ideal perp equals the cone dimension "
                              "2k(N-k)+2, pinching the tangent space";
                return cert;
            }
            // The distance-3 tangent stratum lies in the closure of every
            // distance >= 3 stratum, and the singular locus is closed and
            // orbit-stable: smoothness there transfers here.
            const Q3PerpReport q3 = q3_perp_report(k, n);
            if (q3.final_perp == cert.cone_dim) {
                cert.verdict = Smoothness::Smooth;
                cert.via_closure = true;
                cert.reason = "the apolar pinch certifies smoothness on the distance-3 "
                              "tangent stratum contained in this stratum's closure; the "
                              "singular locus is closed";
                return cert;
            }
            cert.verdict = Smoothness::Inconclusive;
            cert.reason = "neither the direct apolar bound nor the closure transfer pinches "
                          "the tangent space";
            return cert;
        }
        case OrbitLabel::OutsideSigma2: {
            cert.verdict = Smoothness::OutsideSigma2;
            cert.reason = cls.note;
            return cert;
        }
        case OrbitLabel::Zero:
            break;
    }
    throw internal_error("smoothness: unknown stratum");
}

} // namespace skewrank
