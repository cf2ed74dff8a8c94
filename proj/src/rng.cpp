/// @file rng.cpp
#include "skewrank/rng.hpp"

#include "skewrank/errors.hpp"

namespace skewrank {

RationalMatrix random_unimodular(int n, Rng& rng, int ops) {
    RationalMatrix mat = RationalMatrix::identity(n);
    for (int step = 0; step < ops; ++step) {
        int i = rng.uniform(0, n - 1);
        int j = rng.uniform(0, n - 2);
        if (j >= i) ++j; // distinct row pair
        int c = rng.uniform(1, 4);
        Rational coeff = (c <= 2) ? Rational(c) : Rational(2 - c); // {1, 2, -1, -2}
        for (int col = 0; col < n; ++col) {
            Rational updated = mat.at(j, col) + coeff * mat.at(i, col);
            updated.canonicalize();
            mat.at(j, col) = updated;
        }
    }
    return mat;
}

static Subspace transported_coordinate_space(const RationalMatrix& g, const IndexSet& coords, int n) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(coords.size());
    for (int c : coords) {
        std::vector<Rational> image(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) image[static_cast<std::size_t>(r)] = g.at(r, c - 1);
        rows.push_back(std::move(image));
    }
    return Subspace::from_vectors(n, rows);
}

GrassPoint random_grass_point(int k, int n, Rng& rng, int ops) {
    if (k < 1 || k > n) throw invariant_error("rng: need 1 <= k <= n");
    RationalMatrix g = random_unimodular(n, rng, ops);
    IndexSet coords;
    for (int i = 1; i <= k; ++i) coords.push_back(i);
    return GrassPoint(transported_coordinate_space(g, coords, n));
}

std::pair<GrassPoint, GrassPoint> random_pair_at_distance(int k, int n, int d, Rng& rng, int ops) {
    if (d < 0 || d > k) throw invariant_error("rng: planted distance must satisfy 0 <= d <= k");
    if (k + d > n) throw invariant_error("rng: planted distance needs k + d <= n");
    RationalMatrix g = random_unimodular(n, rng, ops);
    IndexSet first;
    for (int i = 1; i <= k; ++i) first.push_back(i);
    IndexSet second;
    for (int i = 1; i <= k - d; ++i) second.push_back(i);
    for (int i = k + 1; i <= k + d; ++i) second.push_back(i);
    return {GrassPoint(transported_coordinate_space(g, first, n)),
            GrassPoint(transported_coordinate_space(g, second, n))};
}

} // namespace skewrank
