/// @file matrix.hpp
/// @brief Dense exact rational matrices: RREF, rank, kernels, solves.
#pragma once

#include <optional>
#include <vector>

#include "skewrank/rational.hpp"

namespace skewrank {

class Multivector;

/// Row-major dense matrix over Q.  Sizes here are small (ambient dimensions
/// and their low exterior powers), so dense Gauss-Jordan with exact rationals
/// is the right tool; large sparse spans go through SpanBuilder instead.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);

    static RationalMatrix identity(int n);
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return static_cast<int>(data_.size()); }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    const std::vector<Rational>& row(int r) const { return data_[static_cast<std::size_t>(r)]; }

    void append_row(const std::vector<Rational>& row);

    /// In-place reduced row echelon form; returns the pivot column list.
    std::vector<int> rref();
    int rank() const;

    /// Basis of the null space of the linear map x -> A x (x in Q^cols).
    std::vector<std::vector<Rational>> kernel() const;

    /// One solution of A x = rhs, or nullopt when inconsistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& rhs) const;

    /// Inverse of a square matrix, nullopt when singular.
    std::optional<RationalMatrix> inverse() const;

    RationalMatrix transpose() const;
    friend RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs);
    std::vector<Rational> apply(const std::vector<Rational>& x) const;

    bool operator==(const RationalMatrix& other) const = default;

private:
    int cols_ = 0;
    std::vector<std::vector<Rational>> data_;
};

/// Kernel of the linear map c -> sum_i c_i * images[i]: the exact coefficient
/// vectors of linear relations among the given multivectors.  All images must
/// share ambient and grade.
std::vector<std::vector<Rational>> kernel_of_images(const std::vector<Multivector>& images);

} // namespace skewrank
