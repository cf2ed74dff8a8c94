/// @file test_orbits.cpp
/// @brief Orbit representatives, the classification pipeline, dimensions, atlas.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "skewrank/errors.hpp"
#include "skewrank/grassmann.hpp"
#include "skewrank/orbits.hpp"
#include "skewrank/rng.hpp"
#include "skewrank/span.hpp"

using namespace skewrank;

namespace {

Multivector transported(const Multivector& t, Rng& rng) {
    return apply_matrix(random_unimodular(t.n(), rng), t);
}

bool decomposition_exact(const SecantDecomposition& dec, const Multivector& t) {
    Multivector sum = dec.c_p * dec.p.pluecker();
    sum += dec.c_q * dec.q.pluecker();
    return sum == t;
}

Multivector random_multivector(int n, int grade, int terms, Rng& rng) {
    Multivector out(n, grade);
    const auto monomials = all_subsets(n, grade);
    for (int i = 0; i < terms; ++i) {
        const auto& indices = monomials[static_cast<std::size_t>(
            rng.uniform(0, static_cast<int>(monomials.size()) - 1))];
        out.add_term(indices, Rational(rng.uniform(-4, 4)));
    }
    return out;
}

} // namespace

TEST_CASE("representatives have the hand-computed coordinate form") {
    CHECK(omega_rep(3, 7) == Multivector::basis(7, {1, 2, 3}));
    CHECK(shifted_rep(3, 7, 2) == Multivector::basis(7, {1, 4, 5}));
    CHECK(shifted_rep(3, 7, 3) == Multivector::basis(7, {4, 5, 6}));
    CHECK(secant_rep(3, 7, 3) ==
          Multivector::basis(7, {1, 2, 3}) + Multivector::basis(7, {4, 5, 6}));

    // theta_3 at k=3: +e234 - e135 + e126 after sorting each wedge monomial.
    Multivector theta3(7, 3);
    theta3.add_term({2, 3, 4}, Rational(1));
    theta3.add_term({1, 3, 5}, Rational(-1));
    theta3.add_term({1, 2, 6}, Rational(1));
    CHECK(tangent_rep(3, 7, 3) == theta3);
    // q_3 equals theta_3 up to the sign (-1)^(k-1); at k=3 they coincide.
    CHECK(q3_rep(3, 7) == theta3);

    // Structure at higher k: l monomial terms with unit coefficients.
    const Multivector theta4 = tangent_rep(4, 9, 4);
    CHECK(theta4.term_count() == 4);
    for (const auto& [indices, coeff] : theta4.terms())
        CHECK((coeff == 1 || coeff == -1));

    CHECK_THROWS_AS(secant_rep(3, 5, 3), invariant_error); // needs n >= k + l
    CHECK_THROWS_AS(tangent_rep(3, 7, 1), invariant_error);
    CHECK_THROWS_AS(tangent_rep(3, 7, 4), invariant_error); // needs l <= k
}

TEST_CASE("classify labels every representative correctly") {
    CHECK(classify(Multivector(7, 3)).stratum.label == OrbitLabel::Zero);
    CHECK(classify(omega_rep(3, 7)).stratum.label == OrbitLabel::Grass);
    CHECK(classify(secant_rep(3, 7, 2)).stratum == Stratum{OrbitLabel::SigmaTheta2, 2});
    CHECK(classify(tangent_rep(3, 7, 2)).stratum == Stratum{OrbitLabel::SigmaTheta2, 2});
    CHECK(classify(secant_rep(3, 7, 3)).stratum == Stratum{OrbitLabel::Sigma, 3});
    CHECK(classify(tangent_rep(3, 7, 3)).stratum == Stratum{OrbitLabel::Theta, 3});
    CHECK(classify(q3_rep(3, 7)).stratum == Stratum{OrbitLabel::Theta, 3});

    CHECK(classify(secant_rep(4, 9, 3)).stratum == Stratum{OrbitLabel::Sigma, 3});
    CHECK(classify(secant_rep(4, 9, 4)).stratum == Stratum{OrbitLabel::Sigma, 4});
    CHECK(classify(tangent_rep(4, 9, 3)).stratum == Stratum{OrbitLabel::Theta, 3});
    CHECK(classify(tangent_rep(4, 9, 4)).stratum == Stratum{OrbitLabel::Theta, 4});
    CHECK(classify(secant_rep(5, 10, 5)).stratum == Stratum{OrbitLabel::Sigma, 5});
    CHECK(classify(tangent_rep(5, 10, 5)).stratum == Stratum{OrbitLabel::Theta, 5});
}

TEST_CASE("classify computes the kernel and its dimension") {
    const Classification cls = classify(secant_rep(4, 9, 3));
    CHECK(cls.kernel_dim == 1);
    CHECK(cls.distance == 3);
    CHECK(cls.kernel == Subspace::coordinate(9, {1}));

    const Classification grass = classify(omega_rep(3, 7));
    CHECK(grass.kernel_dim == 3);
    CHECK(grass.kernel == Subspace::coordinate(7, {1, 2, 3}));
}

TEST_CASE("classification is equivariant and scale invariant") {
    Rng rng(314);
    const std::vector<Multivector> reps = {
        omega_rep(3, 7),     secant_rep(3, 7, 2), secant_rep(3, 7, 3),
        tangent_rep(3, 7, 3)};
    for (const auto& rep : reps) {
        const Stratum expected = classify(rep).stratum;
        for (int trial = 0; trial < 5; ++trial) {
            CHECK(classify(transported(rep, rng)).stratum == expected);
            CHECK(classify(Rational(-7, 3) * rep).stratum == expected);
        }
    }
}

TEST_CASE("secant classifications carry an exact verified decomposition") {
    Rng rng(271);
    for (int l = 3; l <= 4; ++l) {
        const Multivector rep = secant_rep(4, 9, l);
        for (int trial = 0; trial < 4; ++trial) {
            const Multivector moved = transported(rep, rng);
            const Classification cls = classify(moved);
            REQUIRE(cls.decomposition.has_value());
            CHECK(decomposition_exact(*cls.decomposition, moved));
            CHECK(hamming_distance(cls.decomposition->p, cls.decomposition->q) == l);
            CHECK(cls.decomposition->unique);
        }
    }
}

TEST_CASE("distance-2 classification recovers the four tangency points") {
    // s2 = e123 + e145 on n=6; the tangency points replace one of {e2,e3} and
    // one of {e4,e5} pairings as in the coordinate pattern.
    const Multivector s2 = secant_rep(3, 6, 2);
    const Classification cls = classify(s2);
    REQUIRE(cls.stratum.label == OrbitLabel::SigmaTheta2);
    REQUIRE(cls.tangency_points.size() == 4);
    std::vector<GrassPoint> expected = {
        GrassPoint(Subspace::coordinate(6, {1, 2, 4})),
        GrassPoint(Subspace::coordinate(6, {1, 2, 5})),
        GrassPoint(Subspace::coordinate(6, {1, 3, 4})),
        GrassPoint(Subspace::coordinate(6, {1, 3, 5}))};
    std::sort(expected.begin(), expected.end());
    std::vector<GrassPoint> actual = cls.tangency_points;
    std::sort(actual.begin(), actual.end());
    CHECK(actual == expected);

    REQUIRE(cls.decomposition.has_value());
    CHECK(decomposition_exact(*cls.decomposition, s2));
    CHECK(cls.decomposition->p == GrassPoint(Subspace::coordinate(6, {1, 2, 3})));
    CHECK(cls.decomposition->q == GrassPoint(Subspace::coordinate(6, {1, 4, 5})));
    CHECK(cls.split_frame.size() == 4);
}

TEST_CASE("theta classifications carry the verified tangency point") {
    Rng rng(272);
    for (int l = 3; l <= 4; ++l) {
        const Multivector rep = tangent_rep(4, 9, l);
        const Classification base = classify(rep);
        REQUIRE(base.tangency_points.size() == 1);
        CHECK(base.tangency_points[0] ==
              GrassPoint(Subspace::coordinate(9, {1, 2, 3, 4})));
        CHECK_FALSE(base.decomposition.has_value());

        const Multivector moved = transported(rep, rng);
        const Classification cls = classify(moved);
        REQUIRE(cls.tangency_points.size() == 1);
        SpanBuilder span(9, 4);
        for (const auto& v : tangent_space_basis(cls.tangency_points[0])) span.add(v);
        CHECK(span.contains(moved));
    }
}

TEST_CASE("kernel law: dim H_{p+q} = k - d on planted pairs, 2 <= d <= k") {
    Rng rng(4444);
    for (int trial = 0; trial < 25; ++trial) {
        const int k = rng.uniform(2, 4);
        const int n = rng.uniform(2 * k, 9);
        const int d = rng.uniform(2, k);
        const auto [p, q] = random_pair_at_distance(k, n, d, rng);
        const Multivector sum = p.pluecker() + q.pluecker();
        CHECK(psi_kernel(sum).dim() == k - d);
    }
}

TEST_CASE("kernel law breaks at distance <= 1: the pencil stays decomposable") {
    // At distance 0 the sum is a rescaled point; at distance 1 it is
    // vol(H) ^ (v + w), again decomposable.  Both have the full k-dimensional
    // kernel of a new Grassmannian point, not k - d.
    Rng rng(4445);
    for (int trial = 0; trial < 10; ++trial) {
        const int k = rng.uniform(2, 4);
        const int n = rng.uniform(2 * k, 9);
        const int d = rng.uniform(0, 1);
        const auto [p, q] = random_pair_at_distance(k, n, d, rng);
        const Multivector sum = p.pluecker() + q.pluecker();
        CHECK(psi_kernel(sum).dim() == k);
        CHECK(classify(sum).stratum == Stratum{OrbitLabel::Grass, 0});
    }
}

TEST_CASE("sums of three decomposables with full support fall outside") {
    // Grade 2, skew rank 6.
    Multivector r3(6, 2);
    r3.add_term({1, 2}, Rational(1));
    r3.add_term({3, 4}, Rational(1));
    r3.add_term({5, 6}, Rational(1));
    const Classification k2 = classify(r3);
    CHECK(k2.stratum.label == OrbitLabel::OutsideSigma2);
    CHECK(k2.skew_rank == 6);

    // Grade 3 analogue on disjoint supports: reduced support exceeds 2l.
    Multivector t(9, 3);
    t.add_term({1, 2, 3}, Rational(1));
    t.add_term({4, 5, 6}, Rational(1));
    t.add_term({7, 8, 9}, Rational(1));
    const Classification k3 = classify(t);
    CHECK(k3.stratum.label == OrbitLabel::OutsideSigma2);
    CHECK_FALSE(k3.note.empty());
}

TEST_CASE("secant points split only over their field of definition") {
    // pl(P) + pl(conj P) for P spanned by e_i + sqrt(2) e_{3+i}: the sum is
    // rational but the two planes are conjugate over Q(sqrt 2), so no exact
    // rational decomposition exists.  Expanded by hand:
    Multivector t(6, 3);
    t.add_term({1, 2, 3}, Rational(1));
    t.add_term({1, 5, 6}, Rational(2));
    t.add_term({2, 4, 6}, Rational(-2));
    t.add_term({3, 4, 5}, Rational(2));
    const Classification cls = classify(t);
    CHECK(cls.stratum.label == OrbitLabel::OutsideSigma2);
    CHECK(cls.note.find("irrational") != std::string::npos);
}

TEST_CASE("orbit_cone_dim matches the closed forms at k=3, N=7") {
    CHECK(orbit_cone_dim(omega_rep(3, 7)) - 1 == dim_grass(3, 7));
    CHECK(orbit_cone_dim(secant_rep(3, 7, 2)) - 1 == dim_sigma_theta2(3, 7));
    CHECK(orbit_cone_dim(tangent_rep(3, 7, 3)) - 1 == dim_theta(3, 7, 3));
    CHECK(orbit_cone_dim(secant_rep(3, 7, 3)) - 1 == dim_sigma(3, 7, 3));
}

TEST_CASE("closed-form dimensions instantiate correctly") {
    CHECK(dim_grass(3, 7) == 12);
    CHECK(dim_sigma_theta2(3, 7) == 19);
    CHECK(dim_theta(3, 7, 3) == 24);
    CHECK(dim_sigma(3, 7, 3) == 25);
    // The top-distance strata agree with the simplified closed forms.
    for (int k = 3; k <= 5; ++k)
        for (int n = 2 * k; n <= 12; ++n) {
            CHECK(dim_sigma(k, n, k) == 2LL * k * (n - k) + 1);
            CHECK(dim_theta(k, n, k) == 2LL * k * (n - k));
        }
}

TEST_CASE("atlas for k=3, N=7 lists four strata in closure order") {
    const Atlas atlas = orbit_atlas(3, 7);
    REQUIRE(atlas.entries.size() == 4);
    CHECK(atlas.entries[0].name == "Grass");
    CHECK(atlas.entries[0].projective_dim == 12);
    CHECK(atlas.entries[1].name == "SigmaTheta2");
    CHECK(atlas.entries[1].projective_dim == 19);
    CHECK(atlas.entries[2].name == "Theta3");
    CHECK(atlas.entries[2].projective_dim == 24);
    CHECK(atlas.entries[3].name == "Sigma3");
    CHECK(atlas.entries[3].projective_dim == 25);
    for (const auto& [inner, outer] : atlas.closure) {
        long long inner_dim = -1, outer_dim = -1;
        for (const auto& e : atlas.entries) {
            if (e.name == inner) inner_dim = e.projective_dim;
            if (e.name == outer) outer_dim = e.projective_dim;
        }
        CHECK(inner_dim < outer_dim);
    }
}

TEST_CASE("atlas stratum count is 2k-2 for k >= 3 and 2 in the defective case") {
    CHECK(orbit_atlas(4, 9).entries.size() == 6);
    CHECK(orbit_atlas(5, 12).entries.size() == 8);
    const Atlas defective = orbit_atlas(2, 8);
    REQUIRE(defective.entries.size() == 2);
    CHECK(defective.entries[0].name == "Grass");
    CHECK(defective.entries[1].name == "SigmaTheta2");
    CHECK_THROWS_AS(orbit_atlas(3, 5), invariant_error);
}

TEST_CASE("grade-2 inputs are stratified by skew rank") {
    CHECK(classify(omega_rep(2, 6)).skew_rank == 2);
    const Classification s2 = classify(secant_rep(2, 6, 2));
    CHECK(s2.stratum.label == OrbitLabel::SigmaTheta2);
    CHECK(s2.skew_rank == 4);
    REQUIRE(s2.decomposition.has_value());
    CHECK(decomposition_exact(*s2.decomposition, secant_rep(2, 6, 2)));
}

TEST_CASE("classify is total: random inputs land in a verified stratum") {
    Rng rng(606);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.uniform(4, 7);
        const int k = rng.uniform(2, 3);
        const Multivector t = random_multivector(n, k, rng.uniform(1, 4), rng);
        const Classification cls = classify(t);
        if (cls.decomposition) CHECK(decomposition_exact(*cls.decomposition, t));
        if (cls.stratum.label == OrbitLabel::Zero) CHECK(t.is_zero());
    }
}
