/// @file test_identifiability.cpp
/// @brief Decomposition recovery, decomposition families, tangential loci,
///        and the Terracini pair criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "skewrank/errors.hpp"
#include "skewrank/grassmann.hpp"
#include "skewrank/identifiability.hpp"
#include "skewrank/orbits.hpp"
#include "skewrank/rng.hpp"
#include "skewrank/span.hpp"
#include "skewrank/subspace.hpp"

using namespace skewrank;

namespace {

bool decomposition_exact(const SecantDecomposition& dec, const Multivector& t) {
    Multivector sum = dec.c_p * dec.p.pluecker();
    sum += dec.c_q * dec.q.pluecker();
    return sum == t;
}

std::vector<Rational> rationals(const std::vector<int>& entries) {
    return std::vector<Rational>(entries.begin(), entries.end());
}

bool same_unordered_pair(const SecantDecomposition& dec, const GrassPoint& a,
                         const GrassPoint& b) {
    return (dec.p == a && dec.q == b) || (dec.p == b && dec.q == a);
}

} // namespace

TEST_CASE("secant_coefficients solves the planted linear system exactly") {
    Rng rng(99);
    const auto [p, q] = random_pair_at_distance(3, 7, 3, rng);
    Multivector t = Rational(2) * p.pluecker();
    t += Rational(-3, 5) * q.pluecker();
    const auto coeffs = secant_coefficients(t, p, q);
    REQUIRE(coeffs.has_value());
    CHECK(coeffs->first == Rational(2));
    CHECK(coeffs->second == Rational(-3, 5));

    // A tensor outside the pencil has no solution.
    Multivector off = t + Multivector::basis(7, {1, 2, 7});
    if (off != t) CHECK_FALSE(secant_coefficients(off, p, q).has_value());

    // Coincident points leave the coefficients ambiguous: refuse.
    CHECK_FALSE(secant_coefficients(Rational(2) * p.pluecker(), p, p).has_value());
}

TEST_CASE("decompose_secant recovers the coordinate pair on representatives") {
    for (int k = 3; k <= 5; ++k)
        for (int l = 3; l <= k; ++l) {
            const int n = 2 * k;
            const SecantDecomposition dec = decompose_secant(secant_rep(k, n, l));
            IndexSet omega_support, shifted_support;
            for (int i = 1; i <= k; ++i) omega_support.push_back(i);
            for (int i = 1; i <= k - l; ++i) shifted_support.push_back(i);
            for (int i = k + 1; i <= k + l; ++i) shifted_support.push_back(i);
            CHECK(same_unordered_pair(
                dec, GrassPoint(Subspace::coordinate(n, omega_support)),
                GrassPoint(Subspace::coordinate(n, shifted_support))));
            CHECK(dec.c_p == 1);
            CHECK(dec.c_q == 1);
            CHECK(dec.unique);
        }
}

TEST_CASE("decompose_secant is exact on transported scaled secants") {
    Rng rng(27182);
    for (int trial = 0; trial < 15; ++trial) {
        const int k = rng.uniform(3, 4);
        const int l = rng.uniform(3, k);
        const int n = rng.uniform(k + l, 9);
        const auto [p, q] = random_pair_at_distance(k, n, l, rng);
        Multivector t = Rational(rng.uniform(1, 5)) * p.pluecker();
        t += Rational(rng.uniform(1, 5)) * q.pluecker();
        const SecantDecomposition dec = decompose_secant(t);
        CHECK(decomposition_exact(dec, t));
        CHECK(same_unordered_pair(dec, p, q));
        CHECK(dec.unique);
    }
}

TEST_CASE("decompose_secant rejects off-stratum inputs") {
    CHECK_THROWS_AS(decompose_secant(omega_rep(3, 7)), wrong_stratum_error);
    CHECK_THROWS_AS(decompose_secant(tangent_rep(3, 7, 3)), wrong_stratum_error);
    CHECK_THROWS_AS(decompose_secant(Multivector(7, 3)), wrong_stratum_error);
}

TEST_CASE("distance-2 decompositions are non-unique, family members verify") {
    const Multivector s2 = secant_rep(3, 7, 2);
    const SecantDecomposition dec = decompose_secant(s2);
    CHECK(decomposition_exact(dec, s2));
    CHECK_FALSE(dec.unique);

    const std::vector<SecantDecomposition> family = unident_family(s2);
    CHECK(family.size() >= 5);
    std::set<std::pair<Subspace, Subspace>> distinct;
    for (const auto& member : family) {
        CHECK(decomposition_exact(member, s2));
        Subspace a = member.p.space(), b = member.q.space();
        if (b < a) std::swap(a, b);
        distinct.emplace(std::move(a), std::move(b));
    }
    CHECK(distinct.size() == family.size());
}

TEST_CASE("the classical alternative decomposition of s2 is reachable") {
    // At k=3 (s2 = e123 + e145): A = <e1, e2, e3 + e4>, B = <e1, e4, e2 + e5>
    // satisfies pl(A) = e123 + e124 and, in the basis order (e1, e4, e2 + e5),
    // pl(B) = e142 + e145 = e145 - e124, so that pl(A) + pl(B) = s2.  The
    // canonical row-echelon orientation of B flips that sign, hence the
    // recovered coefficients are (1, -1).
    const Multivector s2 = secant_rep(3, 7, 2);
    const GrassPoint a(Subspace::from_vectors(7, {rationals({1, 0, 0, 0, 0, 0, 0}),
                                                  rationals({0, 1, 0, 0, 0, 0, 0}),
                                                  rationals({0, 0, 1, 1, 0, 0, 0})}));
    const GrassPoint b(Subspace::from_vectors(7, {rationals({1, 0, 0, 0, 0, 0, 0}),
                                                  rationals({0, 0, 0, 1, 0, 0, 0}),
                                                  rationals({0, 1, 0, 0, 1, 0, 0})}));
    CHECK(a.pluecker() - b.pluecker() == s2);

    const auto coeffs = secant_coefficients(s2, a, b);
    REQUIRE(coeffs.has_value());
    CHECK(coeffs->first == 1);
    CHECK(coeffs->second == -1);

    // The sampled family explores far enough to contain a pair different from
    // the coordinate one in every entry beyond the first.
    const std::vector<SecantDecomposition> family = unident_family(s2);
    const GrassPoint omega(Subspace::coordinate(7, {1, 2, 3}));
    int non_coordinate = 0;
    for (const auto& member : family)
        if (!(member.p == omega) && !(member.q == omega)) ++non_coordinate;
    CHECK(non_coordinate >= 2);
}

TEST_CASE("unident_family rejects identifiable and decomposable points") {
    CHECK_THROWS_AS(unident_family(secant_rep(3, 7, 3)), wrong_stratum_error);
    CHECK_THROWS_AS(unident_family(omega_rep(3, 7)), wrong_stratum_error);
}

TEST_CASE("tangential locus of theta_l is exactly the coordinate point") {
    for (int k = 3; k <= 4; ++k)
        for (int l = 3; l <= k; ++l) {
            const int n = 2 * k + 1;
            const TangentialLocus locus = tangential_locus(tangent_rep(k, n, l));
            REQUIRE(locus.points.size() == 1);
            IndexSet head;
            for (int i = 1; i <= k; ++i) head.push_back(i);
            CHECK(locus.points[0] == GrassPoint(Subspace::coordinate(n, head)));
            CHECK(locus.complete);
            CHECK(locus.dimension == 0);
        }
}

TEST_CASE("tangential locus is equivariant under transport") {
    Rng rng(515);
    const Multivector theta = tangent_rep(3, 7, 3);
    for (int trial = 0; trial < 10; ++trial) {
        const RationalMatrix g = random_unimodular(7, rng);
        const TangentialLocus locus = tangential_locus(apply_matrix(g, theta));
        REQUIRE(locus.points.size() == 1);
        std::vector<Multivector> moved;
        for (const auto& row : Subspace::coordinate(7, {1, 2, 3}).basis_multivectors())
            moved.push_back(apply_matrix(g, row));
        CHECK(locus.points[0] == GrassPoint(Subspace::from_multivectors(moved)));
    }
}

TEST_CASE("distance-2 tangential locus returns verified sample points") {
    const Multivector s2 = secant_rep(3, 7, 2);
    const TangentialLocus locus = tangential_locus(s2);
    CHECK(locus.points.size() >= 2);
    CHECK_FALSE(locus.complete);
    CHECK(locus.dimension == 4);
    std::set<Subspace> distinct;
    for (const auto& point : locus.points) {
        SpanBuilder span(7, 3);
        for (const auto& v : tangent_space_basis(point)) span.add(v);
        CHECK(span.contains(s2));
        distinct.insert(point.space());
    }
    CHECK(distinct.size() == locus.points.size());
}

TEST_CASE("tangential locus rejects secant-only and decomposable points") {
    CHECK_THROWS_AS(tangential_locus(secant_rep(3, 7, 3)), wrong_stratum_error);
    CHECK_THROWS_AS(tangential_locus(omega_rep(3, 7)), wrong_stratum_error);
}

TEST_CASE("terracini_pair flags deficiency exactly at distance <= 2") {
    Rng rng(8080);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = rng.uniform(2, 4);
        const int n = rng.uniform(2 * k, 9);
        const int d = rng.uniform(0, k);
        const auto [p, q] = random_pair_at_distance(k, n, d, rng);
        const TerraciniReport report = terracini_pair(p, q);
        CHECK(report.distance == d);
        CHECK(report.tangents.in_terracini == (d <= 2));
        CHECK(report.tangents.dim_sum ==
              report.tangents.dim_p + report.tangents.dim_q -
                  report.tangents.dim_intersection);
        const TerraciniReport mirrored = terracini_pair(q, p);
        CHECK(mirrored.tangents.dim_sum == report.tangents.dim_sum);
    }
}
