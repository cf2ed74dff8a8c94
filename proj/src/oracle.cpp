/// @file oracle.cpp
/// @brief Independent brute-force reference implementations for cross-checks.
#include "skewrank/oracle.hpp"

#include <algorithm>

#include "skewrank/errors.hpp"

namespace skewrank::oracle {

Multivector wedge_slow(const Multivector& lhs, const Multivector& rhs) {
    if (lhs.n() != rhs.n()) throw ambient_mismatch("oracle wedge: ambient dimensions differ");
    Multivector result(lhs.n(), lhs.grade() + rhs.grade());
    for (const auto& [left_indices, left_coeff] : lhs.terms()) {
        for (const auto& [right_indices, right_coeff] : rhs.terms()) {
            std::vector<int> concat = left_indices;
            concat.insert(concat.end(), right_indices.begin(), right_indices.end());
            bool repeated = false;
            int inversions = 0;
            for (std::size_t a = 0; a < concat.size() && !repeated; ++a)
                for (std::size_t b = a + 1; b < concat.size(); ++b) {
                    if (concat[a] == concat[b]) {
                        repeated = true;
                        break;
                    }
                    if (concat[a] > concat[b]) ++inversions;
                }
            if (repeated) continue;
            std::sort(concat.begin(), concat.end());
            const int sign = (inversions % 2 == 0) ? 1 : -1;
            result.add_term(concat, sign * left_coeff * right_coeff);
        }
    }
    return result;
}

Rational det_slow(const std::vector<std::vector<Rational>>& matrix) {
    const std::size_t size = matrix.size();
    if (size == 0) return Rational(1);
    if (size == 1) return matrix[0][0];
    Rational total(0);
    for (std::size_t col = 0; col < size; ++col) {
        if (matrix[0][col] == 0) continue;
        std::vector<std::vector<Rational>> minor;
        minor.reserve(size - 1);
        for (std::size_t row = 1; row < size; ++row) {
            std::vector<Rational> entries;
            entries.reserve(size - 1);
            for (std::size_t c = 0; c < size; ++c)
                if (c != col) entries.push_back(matrix[row][c]);
            minor.push_back(std::move(entries));
        }
        const Rational cofactor = matrix[0][col] * det_slow(minor);
        if (col % 2 == 0) {
            total += cofactor;
        } else {
            total -= cofactor;
        }
    }
    return total;
}

Rational pairing_det(const std::vector<std::vector<Rational>>& vectors, const IndexSet& dual) {
    if (vectors.size() != dual.size())
        throw invariant_error("oracle pairing: need as many vectors as dual indices");
    std::vector<std::vector<Rational>> matrix;
    matrix.reserve(vectors.size());
    for (const auto& v : vectors) {
        std::vector<Rational> row;
        row.reserve(dual.size());
        for (int j : dual) row.push_back(v.at(static_cast<std::size_t>(j) - 1));
        matrix.push_back(std::move(row));
    }
    return det_slow(matrix);
}

long long rank_slow(const std::vector<Multivector>& elements) {
    if (elements.empty()) return 0;
    const int n = elements[0].n();
    const int grade = elements[0].grade();
    const std::vector<IndexSet> monomials = all_subsets(n, grade);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(elements.size());
    for (const auto& element : elements) {
        if (element.n() != n || element.grade() != grade)
            throw ambient_mismatch("oracle rank: mixed shapes");
        std::vector<Rational> row(monomials.size(), Rational(0));
        for (const auto& [indices, coeff] : element.terms()) {
            const auto it = std::lower_bound(monomials.begin(), monomials.end(), indices);
            row[static_cast<std::size_t>(it - monomials.begin())] = coeff;
        }
        rows.push_back(std::move(row));
    }
    long long rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < monomials.size() && pivot_row < rows.size(); ++col) {
        std::size_t source = pivot_row;
        while (source < rows.size() && rows[source][col] == 0) ++source;
        if (source == rows.size()) continue;
        std::swap(rows[pivot_row], rows[source]);
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            const Rational factor = rows[r][col] / rows[pivot_row][col];
            for (std::size_t c = col; c < monomials.size(); ++c) {
                Rational updated = rows[r][c] - factor * rows[pivot_row][c];
                rows[r][c] = std::move(updated);
            }
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

int distance_slow(const GrassPoint& p, const GrassPoint& q) {
    if (p.n() != q.n()) throw ambient_mismatch("oracle distance: ambient dimensions differ");
    if (p.k() != q.k()) throw invariant_error("oracle distance: Grassmannians differ");
    std::vector<Multivector> stacked;
    for (const auto& row : p.space().basis()) stacked.push_back(Multivector::from_vector(row));
    for (const auto& row : q.space().basis()) stacked.push_back(Multivector::from_vector(row));
    return static_cast<int>(rank_slow(stacked)) - p.k();
}

bool decomposable_slow(const Multivector& tensor) {
    if (tensor.is_zero()) return false;
    const int n = tensor.n();
    std::vector<Multivector> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) images.push_back(wedge_slow(Multivector::basis(n, {i}), tensor));
    const long long divisor_dim = n - rank_slow(images);
    return divisor_dim == tensor.grade();
}

} // namespace skewrank::oracle
