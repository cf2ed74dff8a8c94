/// @file test_matrix.cpp
/// @brief Exact dense linear algebra: RREF, rank, kernel, solve, inverse.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "skewrank/matrix.hpp"
#include "skewrank/multivector.hpp"
#include "skewrank/rng.hpp"

using namespace skewrank;

namespace {

std::vector<Rational> rationals(std::initializer_list<int> values) {
    std::vector<Rational> out;
    for (int v : values) out.emplace_back(v);
    return out;
}

bool is_zero_vector(const std::vector<Rational>& v) {
    for (const auto& entry : v)
        if (entry != 0) return false;
    return true;
}

} // namespace

TEST_CASE("rref reaches the canonical reduced form") {
    RationalMatrix m = RationalMatrix::from_rows({
        rationals({2, 4, -2}),
        rationals({1, 2, 0}),
    });
    const std::vector<int> pivots = m.rref();
    CHECK(pivots == std::vector<int>{0, 2});
    CHECK(m.row(0) == rationals({1, 2, 0}));
    CHECK(m.row(1) == rationals({0, 0, 1}));
    CHECK(m.rank() == 2);
}

TEST_CASE("kernel: hand case and defining property") {
    // x + 2y = 0 has kernel spanned by (-2, 1).
    RationalMatrix m = RationalMatrix::from_rows({rationals({1, 2})});
    const auto basis = m.kernel();
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == rationals({-2, 1}));

    // A matrix with no rows has the full standard basis as kernel.
    RationalMatrix empty(0, 3);
    CHECK(empty.kernel().size() == 3);

    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const int rows = rng.uniform(1, 4);
        const int cols = rng.uniform(1, 5);
        RationalMatrix a(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) a.at(r, c) = Rational(rng.uniform(-3, 3));
        const auto kernel = a.kernel();
        RationalMatrix copy = a;
        copy.rref();
        CHECK(static_cast<int>(kernel.size()) + copy.rank() == cols);
        for (const auto& v : kernel) CHECK(is_zero_vector(a.apply(v)));
    }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
    RationalMatrix a = RationalMatrix::from_rows({
        rationals({1, 1}),
        rationals({1, -1}),
    });
    const auto x = a.solve(rationals({3, 1}));
    REQUIRE(x.has_value());
    CHECK(*x == rationals({2, 1}));

    RationalMatrix singular = RationalMatrix::from_rows({
        rationals({1, 1}),
        rationals({2, 2}),
    });
    CHECK(singular.solve(rationals({1, 3})) == std::nullopt);
    CHECK(singular.solve(rationals({1, 2})).has_value());

    Rng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const int rows = rng.uniform(1, 4);
        const int cols = rng.uniform(1, 4);
        RationalMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = Rational(rng.uniform(-3, 3));
        std::vector<Rational> x0;
        for (int c = 0; c < cols; ++c) x0.emplace_back(rng.uniform(-3, 3));
        const auto solved = m.solve(m.apply(x0));
        REQUIRE(solved.has_value());
        CHECK(m.apply(*solved) == m.apply(x0));
    }
}

TEST_CASE("inverse of unimodular matrices is exact") {
    Rng rng(123);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = rng.uniform(2, 5);
        const RationalMatrix g = random_unimodular(n, rng);
        const auto inv = g.inverse();
        REQUIRE(inv.has_value());
        CHECK(g * *inv == RationalMatrix::identity(n));
        CHECK(*inv * g == RationalMatrix::identity(n));
    }
    RationalMatrix singular = RationalMatrix::from_rows({
        rationals({1, 2}),
        rationals({2, 4}),
    });
    CHECK(singular.inverse() == std::nullopt);
}

TEST_CASE("transpose and multiplication") {
    RationalMatrix a = RationalMatrix::from_rows({
        rationals({1, 2, 3}),
        rationals({0, 1, 0}),
    });
    CHECK(a.transpose().rows() == 3);
    CHECK(a.transpose().cols() == 2);
    CHECK(a.transpose().at(2, 0) == 3);

    const RationalMatrix id = RationalMatrix::identity(3);
    CHECK(a * id == a);
    CHECK(a.apply(rationals({1, 1, 1})) == rationals({6, 1}));
}

TEST_CASE("kernel_of_images finds exact linear relations") {
    const Multivector e12 = Multivector::basis(4, {1, 2});
    const Multivector e34 = Multivector::basis(4, {3, 4});
    Multivector sum = e12 + e34;

    const auto relations = kernel_of_images({e12, e34, sum});
    REQUIRE(relations.size() == 1);
    const auto& rel = relations[0];
    // The relation c0*e12 + c1*e34 + c2*(e12+e34) = 0 up to scale.
    Multivector combo(4, 2);
    combo += rel[0] * e12;
    combo += rel[1] * e34;
    combo += rel[2] * sum;
    CHECK(combo.is_zero());
    CHECK_FALSE(is_zero_vector(rel));

    CHECK(kernel_of_images({e12, e34}).empty());
}
