/// @file matrix.cpp
#include "skewrank/matrix.hpp"

#include <map>

#include "skewrank/errors.hpp"
#include "skewrank/multivector.hpp"

namespace skewrank {

RationalMatrix::RationalMatrix(int rows, int cols)
    : cols_(cols),
      data_(static_cast<std::size_t>(rows),
            std::vector<Rational>(static_cast<std::size_t>(cols), Rational(0))) {}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    RationalMatrix m;
    m.cols_ = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    for (const auto& row : rows) m.append_row(row);
    return m;
}

void RationalMatrix::append_row(const std::vector<Rational>& row) {
    if (!data_.empty() && static_cast<int>(row.size()) != cols_) {
        throw invariant_error("RationalMatrix: inconsistent row width");
    }
    if (data_.empty()) cols_ = static_cast<int>(row.size());
    data_.push_back(row);
}

std::vector<int> RationalMatrix::rref() {
    std::vector<int> pivots;
    int pivot_row = 0;
    const int m = rows();
    for (int col = 0; col < cols_ && pivot_row < m; ++col) {
        int found = -1;
        for (int r = pivot_row; r < m; ++r) {
            if (at(r, col) != 0) { found = r; break; }
        }
        if (found < 0) continue;
        std::swap(data_[static_cast<std::size_t>(found)], data_[static_cast<std::size_t>(pivot_row)]);
        const Rational inv_pivot = Rational(1) / at(pivot_row, col);
        for (int c = col; c < cols_; ++c) at(pivot_row, c) *= inv_pivot;
        for (int r = 0; r < m; ++r) {
            if (r == pivot_row || at(r, col) == 0) continue;
            const Rational factor = at(r, col);
            for (int c = col; c < cols_; ++c) at(r, c) -= factor * at(pivot_row, c);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return pivots;
}

int RationalMatrix::rank() const {
    RationalMatrix copy = *this;
    return static_cast<int>(copy.rref().size());
}

std::vector<std::vector<Rational>> RationalMatrix::kernel() const {
    RationalMatrix reduced = *this;
    const std::vector<int> pivots = reduced.rref();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        std::vector<Rational> vec(static_cast<std::size_t>(cols_), Rational(0));
        vec[static_cast<std::size_t>(free_col)] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            vec[static_cast<std::size_t>(pivots[i])] = -reduced.at(static_cast<int>(i), free_col);
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

std::optional<std::vector<Rational>> RationalMatrix::solve(const std::vector<Rational>& rhs) const {
    if (static_cast<int>(rhs.size()) != rows()) {
        throw invariant_error("RationalMatrix::solve: rhs size mismatch");
    }
    RationalMatrix augmented(rows(), cols_ + 1);
    for (int r = 0; r < rows(); ++r) {
        for (int c = 0; c < cols_; ++c) augmented.at(r, c) = at(r, c);
        augmented.at(r, cols_) = rhs[static_cast<std::size_t>(r)];
    }
    const std::vector<int> pivots = augmented.rref();
    for (int p : pivots) {
        if (p == cols_) return std::nullopt; // pivot in the rhs column: inconsistent
    }
    std::vector<Rational> solution(static_cast<std::size_t>(cols_), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        solution[static_cast<std::size_t>(pivots[i])] = augmented.at(static_cast<int>(i), cols_);
    }
    return solution;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
    if (rows() != cols_) throw invariant_error("RationalMatrix::inverse: not square");
    const int n = rows();
    RationalMatrix augmented(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) augmented.at(r, c) = at(r, c);
        augmented.at(r, n + r) = 1;
    }
    const std::vector<int> pivots = augmented.rref();
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
    RationalMatrix result(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) result.at(r, c) = augmented.at(r, n + c);
    }
    return result;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix result(cols_, rows());
    for (int r = 0; r < rows(); ++r) {
        for (int c = 0; c < cols_; ++c) result.at(c, r) = at(r, c);
    }
    return result;
}

RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs) {
    if (lhs.cols() != rhs.rows()) throw invariant_error("matrix product: size mismatch");
    RationalMatrix result(lhs.rows(), rhs.cols());
    for (int r = 0; r < lhs.rows(); ++r) {
        for (int k = 0; k < lhs.cols(); ++k) {
            if (lhs.at(r, k) == 0) continue;
            for (int c = 0; c < rhs.cols(); ++c) {
                if (rhs.at(k, c) == 0) continue;
                result.at(r, c) += lhs.at(r, k) * rhs.at(k, c);
            }
        }
    }
    return result;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != cols_) {
        throw invariant_error("RationalMatrix::apply: size mismatch");
    }
    std::vector<Rational> y(static_cast<std::size_t>(rows()), Rational(0));
    for (int r = 0; r < rows(); ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (at(r, c) != 0) y[static_cast<std::size_t>(r)] += at(r, c) * x[static_cast<std::size_t>(c)];
        }
    }
    return y;
}

std::vector<std::vector<Rational>> kernel_of_images(const std::vector<Multivector>& images) {
    // Rows are indexed by the monomials that actually appear; absent monomials
    // contribute zero rows and can be skipped.
    std::map<IndexSet, int> row_of;
    for (const auto& image : images) {
        for (const auto& [indices, coeff] : image.terms()) {
            row_of.emplace(indices, 0);
        }
    }
    int next = 0;
    for (auto& [indices, row] : row_of) row = next++;
    RationalMatrix matrix(next, static_cast<int>(images.size()));
    for (std::size_t col = 0; col < images.size(); ++col) {
        for (const auto& [indices, coeff] : images[col].terms()) {
            matrix.at(row_of.at(indices), static_cast<int>(col)) = coeff;
        }
    }
    return matrix.kernel();
}

} // namespace skewrank
