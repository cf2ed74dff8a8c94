/// @file test_subspace.cpp
/// @brief Canonical RREF subspaces: equality, sums, intersections, complements.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "skewrank/rng.hpp"
#include "skewrank/subspace.hpp"

using namespace skewrank;

namespace {

std::vector<Rational> rationals(std::initializer_list<int> values) {
    std::vector<Rational> out;
    for (int v : values) out.emplace_back(v);
    return out;
}

Subspace random_subspace(int n, int dim, Rng& rng) {
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < dim; ++i) {
        std::vector<Rational> row;
        for (int c = 0; c < n; ++c) row.emplace_back(rng.uniform(-3, 3));
        rows.push_back(std::move(row));
    }
    return Subspace::from_vectors(n, rows);
}

} // namespace

TEST_CASE("canonical form: spanning sets of the same space compare equal") {
    const Subspace a = Subspace::from_vectors(3, {rationals({1, 1, 0}), rationals({0, 0, 1})});
    const Subspace b =
        Subspace::from_vectors(3, {rationals({2, 2, 2}), rationals({0, 0, -5}),
                                   rationals({1, 1, 1})});
    CHECK(a == b);
    CHECK(a.dim() == 2);
    CHECK(a.pivot_columns() == IndexSet{1, 3});
    CHECK(a.complement_coords() == IndexSet{2});
}

TEST_CASE("containment of vectors and subspaces") {
    const Subspace s = Subspace::from_vectors(4, {rationals({1, 0, 1, 0}),
                                                  rationals({0, 1, 0, 1})});
    CHECK(s.contains(rationals({1, 1, 1, 1})));
    CHECK_FALSE(s.contains(rationals({1, 0, 0, 0})));
    CHECK(s.contains(Subspace::from_vectors(4, {rationals({1, -1, 1, -1})})));
    CHECK_FALSE(s.contains(Subspace::coordinate(4, {1})));
    CHECK(s.contains(Subspace(4))); // the zero subspace
}

TEST_CASE("coordinate subspaces") {
    const Subspace s = Subspace::coordinate(5, {2, 4});
    CHECK(s.dim() == 2);
    CHECK(s.contains(rationals({0, 3, 0, -1, 0})));
    CHECK_FALSE(s.contains(rationals({1, 0, 0, 0, 0})));
    CHECK(s.pivot_columns() == IndexSet{2, 4});
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.uniform(3, 6);
        const Subspace a = random_subspace(n, rng.uniform(1, n), rng);
        const Subspace b = random_subspace(n, rng.uniform(1, n), rng);
        const Subspace s = sum(a, b);
        const Subspace i = intersect(a, b);
        CHECK(s.dim() + i.dim() == a.dim() + b.dim());
        CHECK(s.contains(a));
        CHECK(s.contains(b));
        CHECK(a.contains(i));
        CHECK(b.contains(i));
    }
}

TEST_CASE("hand-computed intersection") {
    const Subspace a = Subspace::coordinate(4, {1, 2});
    const Subspace b = Subspace::from_vectors(4, {rationals({1, 0, 0, 0}),
                                                  rationals({0, 0, 1, 0})});
    const Subspace i = intersect(a, b);
    CHECK(i == Subspace::coordinate(4, {1}));
    CHECK(sum(a, b).dim() == 3);
}

TEST_CASE("from_multivectors matches from_vectors") {
    const Multivector v1 = Multivector::from_vector(rationals({1, 2, 0}));
    const Multivector v2 = Multivector::from_vector(rationals({0, 1, 1}));
    CHECK(Subspace::from_multivectors({v1, v2}) ==
          Subspace::from_vectors(3, {rationals({1, 2, 0}), rationals({0, 1, 1})}));
    const auto back = Subspace::from_multivectors({v1, v2}).basis_multivectors();
    CHECK(back.size() == 2);
    CHECK(Subspace::from_multivectors(back) == Subspace::from_multivectors({v1, v2}));
}

TEST_CASE("ordering is a strict total order on distinct spaces") {
    Rng rng(23);
    std::vector<Subspace> spaces;
    for (int i = 0; i < 12; ++i) spaces.push_back(random_subspace(4, rng.uniform(1, 3), rng));
    for (const auto& a : spaces)
        for (const auto& b : spaces) {
            if (a == b) {
                CHECK_FALSE(a < b);
                CHECK_FALSE(b < a);
            } else {
                CHECK((a < b) != (b < a));
            }
        }
}
