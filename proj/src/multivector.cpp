/// @file multivector.cpp
#include "skewrank/multivector.hpp"

#include <algorithm>
#include <sstream>

#include "skewrank/errors.hpp"
#include "skewrank/matrix.hpp"

namespace skewrank {

Multivector::Multivector(int n, int grade) : n_(n), grade_(grade) {
    // grade > n is permitted: Lambda^grade is then the zero space and the term
    // map stays empty (no valid index set of that size exists).
    if (n < 0 || grade < 0) {
        throw invariant_error("Multivector: negative grade or ambient dimension");
    }
}

Multivector Multivector::basis(int n, const IndexSet& indices) {
    return monomial(n, indices, Rational(1));
}

Multivector Multivector::monomial(int n, const IndexSet& indices, const Rational& coeff) {
    Multivector m(n, static_cast<int>(indices.size()));
    m.add_term(indices, coeff);
    return m;
}

Multivector Multivector::from_vector(const std::vector<Rational>& coords) {
    Multivector m(static_cast<int>(coords.size()), 1);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] != 0) m.add_term({static_cast<int>(i) + 1}, coords[i]);
    }
    return m;
}

Rational Multivector::coeff(const IndexSet& indices) const {
    const auto it = terms_.find(indices);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Multivector::add_term(const IndexSet& indices, const Rational& coeff) {
    if (static_cast<int>(indices.size()) != grade_) {
        throw invariant_error("Multivector::add_term: wrong grade");
    }
    if (!is_valid_index_set(indices, n_)) {
        throw invariant_error("Multivector::add_term: invalid index set");
    }
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(indices, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

IndexSet Multivector::index_support() const {
    IndexSet support;
    for (const auto& [indices, coeff] : terms_) {
        IndexSet merged;
        std::set_union(support.begin(), support.end(), indices.begin(), indices.end(),
                       std::back_inserter(merged));
        support = std::move(merged);
    }
    return support;
}

std::vector<Rational> Multivector::to_vector() const {
    if (grade_ != 1) throw invariant_error("Multivector::to_vector: grade must be 1");
    std::vector<Rational> coords(static_cast<std::size_t>(n_), Rational(0));
    for (const auto& [indices, coeff] : terms_) {
        coords[static_cast<std::size_t>(indices.front() - 1)] = coeff;
    }
    return coords;
}

Multivector Multivector::operator-() const {
    Multivector result(n_, grade_);
    for (const auto& [indices, coeff] : terms_) result.terms_.emplace(indices, -coeff);
    return result;
}

Multivector& Multivector::operator+=(const Multivector& other) {
    if (n_ != other.n_) throw ambient_mismatch("multivector addition: ambient mismatch");
    if (grade_ != other.grade_) throw invariant_error("multivector addition: grade mismatch");
    for (const auto& [indices, coeff] : other.terms_) add_term(indices, coeff);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
    if (n_ != other.n_) throw ambient_mismatch("multivector subtraction: ambient mismatch");
    if (grade_ != other.grade_) throw invariant_error("multivector subtraction: grade mismatch");
    for (const auto& [indices, coeff] : other.terms_) add_term(indices, -coeff);
    return *this;
}

Multivector& Multivector::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [indices, coeff] : terms_) coeff *= scalar;
    return *this;
}

bool Multivector::operator==(const Multivector& other) const {
    return n_ == other.n_ && grade_ == other.grade_ && terms_ == other.terms_;
}

std::string Multivector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [indices, coeff] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << rational_to_string(coeff) << ")*e[";
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (i) out << ",";
            out << indices[i];
        }
        out << "]";
    }
    return out.str();
}

Multivector wedge(const Multivector& lhs, const Multivector& rhs) {
    if (lhs.n() != rhs.n()) throw ambient_mismatch("wedge: ambient mismatch");
    const int grade = lhs.grade() + rhs.grade();
    Multivector result(lhs.n(), grade);
    if (grade > lhs.n()) return result; // Lambda^grade is the zero space
    for (const auto& [left_indices, left_coeff] : lhs.terms()) {
        for (const auto& [right_indices, right_coeff] : rhs.terms()) {
            IndexSet overlap;
            std::set_intersection(left_indices.begin(), left_indices.end(),
                                  right_indices.begin(), right_indices.end(),
                                  std::back_inserter(overlap));
            if (!overlap.empty()) continue;
            const int sign = merge_sign(left_indices, right_indices);
            result.add_term(merge_union(left_indices, right_indices),
                            Rational(sign) * left_coeff * right_coeff);
        }
    }
    return result;
}

Multivector wedge_all(const std::vector<Multivector>& factors) {
    if (factors.empty()) throw invariant_error("wedge_all: empty factor list");
    Multivector result = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) result = wedge(result, factors[i]);
    return result;
}

Multivector contract(const DualForm& alpha, const Multivector& tensor) {
    if (alpha.n() != tensor.n()) throw ambient_mismatch("contract: ambient mismatch");
    const int h = alpha.grade();
    const int k = tensor.grade();
    if (h > k) return Multivector(tensor.n(), 0);
    Multivector result(tensor.n(), k - h);
    for (const auto& [dual_indices, dual_coeff] : alpha.terms()) {
        for (const auto& [indices, coeff] : tensor.terms()) {
            if (!contains_subset(indices, dual_indices)) continue;
            const int sign = removal_sign(indices, dual_indices);
            result.add_term(set_difference(indices, dual_indices),
                            Rational(sign) * dual_coeff * coeff);
        }
    }
    return result;
}

Multivector gl_act(int i, int j, const Multivector& tensor) {
    if (i < 1 || i > tensor.n() || j < 1 || j > tensor.n()) {
        throw invariant_error("gl_act: generator index out of range");
    }
    Multivector result(tensor.n(), tensor.grade());
    for (const auto& [indices, coeff] : tensor.terms()) {
        const bool has_j = std::binary_search(indices.begin(), indices.end(), j);
        if (!has_j) continue;
        if (i == j) {
            result.add_term(indices, coeff);
            continue;
        }
        if (std::binary_search(indices.begin(), indices.end(), i)) continue;
        // Replace j by i in its slot, then resort; the sign is the parity of
        // the number of indices strictly between i and j.
        const int lo = std::min(i, j);
        const int hi = std::max(i, j);
        int between = 0;
        for (int x : indices) {
            if (x > lo && x < hi) ++between;
        }
        IndexSet replaced = set_difference(indices, {j});
        replaced.insert(std::upper_bound(replaced.begin(), replaced.end(), i), i);
        const int sign = (between % 2 == 0) ? 1 : -1;
        result.add_term(replaced, Rational(sign) * coeff);
    }
    return result;
}

Multivector apply_matrix(const RationalMatrix& matrix, const Multivector& tensor) {
    if (matrix.rows() != tensor.n() || matrix.cols() != tensor.n()) {
        throw invariant_error("apply_matrix: matrix must be n x n");
    }
    Multivector result(tensor.n(), tensor.grade());
    std::vector<Multivector> columns;
    columns.reserve(static_cast<std::size_t>(tensor.n()));
    for (int c = 0; c < tensor.n(); ++c) {
        std::vector<Rational> column(static_cast<std::size_t>(tensor.n()));
        for (int r = 0; r < tensor.n(); ++r) column[static_cast<std::size_t>(r)] = matrix.at(r, c);
        columns.push_back(Multivector::from_vector(column));
    }
    for (const auto& [indices, coeff] : tensor.terms()) {
        std::vector<Multivector> factors;
        factors.reserve(indices.size());
        for (int index : indices) factors.push_back(columns[static_cast<std::size_t>(index - 1)]);
        result += coeff * wedge_all(factors);
    }
    return result;
}

Multivector relabel(const Multivector& tensor, const std::vector<int>& index_map, int new_n) {
    Multivector result(new_n, tensor.grade());
    for (const auto& [indices, coeff] : tensor.terms()) {
        IndexSet mapped;
        mapped.reserve(indices.size());
        for (int index : indices) {
            if (index < 1 || index > static_cast<int>(index_map.size())) {
                throw invariant_error("relabel: index outside map domain");
            }
            mapped.push_back(index_map[static_cast<std::size_t>(index - 1)]);
        }
        if (!std::is_sorted(mapped.begin(), mapped.end())) {
            throw invariant_error("relabel: index map must be monotone on supports");
        }
        result.add_term(mapped, coeff);
    }
    return result;
}

} // namespace skewrank
