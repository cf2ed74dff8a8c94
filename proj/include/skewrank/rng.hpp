/// @file rng.hpp
/// @brief Deterministic pseudo-random generators for sampled test families:
///        sparse unimodular transports and planted-distance point pairs.
#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "skewrank/grassmann.hpp"
#include "skewrank/matrix.hpp"

namespace skewrank {

/// Thin wrapper over mt19937_64 so every sampled family is reproducible from
/// a single 64-bit seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in the closed range [lo, hi].
    int uniform(int lo, int hi) {
        std::uniform_int_distribution<int> dist(lo, hi);
        return dist(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// Sparse unimodular matrix: the identity reshaped by `ops` elementary row
/// additions row_j += c * row_i with c in {-2,-1,1,2}.  Determinant is 1 and
/// entries stay small, which keeps exact arithmetic fast downstream.
RationalMatrix random_unimodular(int n, Rng& rng, int ops = 8);

/// A random point of Gr(k, n): a unimodular transport of the coordinate point.
GrassPoint random_grass_point(int k, int n, Rng& rng, int ops = 8);

/// A pair of points with the exact kernel distance d planted: the coordinate
/// pair span(e_1..e_k), span(e_1..e_{k-d}, e_{k+1}..e_{k+d}) moved by one
/// common transport.  Requires 0 <= d <= k and k + d <= n.
std::pair<GrassPoint, GrassPoint> random_pair_at_distance(int k, int n, int d, Rng& rng, int ops = 8);

} // namespace skewrank
