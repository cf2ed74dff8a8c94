/// @file subspace.cpp
#include "skewrank/subspace.hpp"

#include <algorithm>

#include "skewrank/errors.hpp"

namespace skewrank {

Subspace Subspace::from_vectors(int n, const std::vector<std::vector<Rational>>& vectors) {
    Subspace result(n);
    if (vectors.empty()) return result;
    RationalMatrix mat(0, n);
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != n)
            throw invariant_error("subspace: vector length does not match ambient dimension");
        mat.append_row(v);
    }
    mat.rref();
    for (int i = 0; i < mat.rows(); ++i) {
        bool nonzero = false;
        for (int j = 0; j < n; ++j)
            if (mat.at(i, j) != 0) { nonzero = true; break; }
        if (nonzero) result.basis_.push_back(mat.row(i));
    }
    return result;
}

Subspace Subspace::from_multivectors(const std::vector<Multivector>& vectors) {
    if (vectors.empty())
        throw invariant_error("subspace: cannot infer ambient dimension from an empty family");
    int n = vectors.front().n();
    std::vector<std::vector<Rational>> rows;
    for (const auto& v : vectors) {
        if (v.n() != n) throw ambient_mismatch("subspace: mixed ambient dimensions");
        rows.push_back(v.to_vector());
    }
    return from_vectors(n, rows);
}

Subspace Subspace::coordinate(int n, const IndexSet& coords) {
    if (!is_valid_index_set(coords, n))
        throw invariant_error("subspace: invalid coordinate list");
    std::vector<std::vector<Rational>> rows;
    for (int c : coords) {
        std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
        row[static_cast<std::size_t>(c - 1)] = 1;
        rows.push_back(std::move(row));
    }
    return from_vectors(n, rows);
}

std::vector<Multivector> Subspace::basis_multivectors() const {
    std::vector<Multivector> out;
    out.reserve(basis_.size());
    for (const auto& row : basis_) out.push_back(Multivector::from_vector(row));
    return out;
}

bool Subspace::contains(const std::vector<Rational>& vector) const {
    if (static_cast<int>(vector.size()) != n_)
        throw invariant_error("subspace: vector length does not match ambient dimension");
    // Reduce against the RREF basis; membership iff the remainder vanishes.
    std::vector<Rational> rem = vector;
    for (const auto& row : basis_) {
        int pivot = -1;
        for (int j = 0; j < n_; ++j)
            if (row[static_cast<std::size_t>(j)] != 0) { pivot = j; break; }
        if (pivot < 0) continue;
        if (rem[static_cast<std::size_t>(pivot)] == 0) continue;
        Rational factor = rem[static_cast<std::size_t>(pivot)];
        for (int j = 0; j < n_; ++j) {
            Rational updated = rem[static_cast<std::size_t>(j)] - factor * row[static_cast<std::size_t>(j)];
            updated.canonicalize();
            rem[static_cast<std::size_t>(j)] = updated;
        }
    }
    return std::all_of(rem.begin(), rem.end(), [](const Rational& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.n_ != n_) throw ambient_mismatch("subspace: mixed ambient dimensions");
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const std::vector<Rational>& v) { return contains(v); });
}

bool Subspace::operator<(const Subspace& other) const {
    if (n_ != other.n_) throw ambient_mismatch("subspace: mixed ambient dimensions");
    if (dim() != other.dim()) return dim() < other.dim();
    // Schubert position first, so coordinate subspaces sort by their index
    // sets; ties broken on the canonical basis entries.
    const IndexSet mine = pivot_columns();
    const IndexSet theirs = other.pivot_columns();
    if (mine != theirs) return mine < theirs;
    return basis_ < other.basis_;
}

IndexSet Subspace::pivot_columns() const {
    IndexSet pivots;
    for (const auto& row : basis_)
        for (int j = 0; j < n_; ++j)
            if (row[static_cast<std::size_t>(j)] != 0) { pivots.push_back(j + 1); break; }
    std::sort(pivots.begin(), pivots.end());
    return pivots;
}

IndexSet Subspace::complement_coords() const {
    IndexSet pivots = pivot_columns();
    IndexSet rest;
    for (int j = 1; j <= n_; ++j)
        if (!std::binary_search(pivots.begin(), pivots.end(), j)) rest.push_back(j);
    return rest;
}

Subspace sum(const Subspace& lhs, const Subspace& rhs) {
    if (lhs.n_ != rhs.n_) throw ambient_mismatch("subspace sum: mixed ambient dimensions");
    std::vector<std::vector<Rational>> rows = lhs.basis_;
    rows.insert(rows.end(), rhs.basis_.begin(), rhs.basis_.end());
    return Subspace::from_vectors(lhs.n_, rows);
}

Subspace intersect(const Subspace& lhs, const Subspace& rhs) {
    if (lhs.n_ != rhs.n_) throw ambient_mismatch("subspace intersection: mixed ambient dimensions");
    // Kernel method: columns are the two bases side by side; a kernel vector
    // (c, d) certifies sum_i c_i u_i = -sum_j d_j w_j, an intersection vector.
    int du = lhs.dim();
    int dw = rhs.dim();
    if (du == 0 || dw == 0) return Subspace(lhs.n_);
    RationalMatrix mat(lhs.n_, du + dw);
    for (int i = 0; i < du; ++i)
        for (int r = 0; r < lhs.n_; ++r) mat.at(r, i) = lhs.basis_[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
    for (int j = 0; j < dw; ++j)
        for (int r = 0; r < rhs.n_; ++r) mat.at(r, du + j) = rhs.basis_[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
    std::vector<std::vector<Rational>> vectors;
    for (const auto& ker : mat.kernel()) {
        std::vector<Rational> v(static_cast<std::size_t>(lhs.n_), Rational(0));
        for (int i = 0; i < du; ++i)
            for (int r = 0; r < lhs.n_; ++r) {
                Rational updated = v[static_cast<std::size_t>(r)] +
                                   ker[static_cast<std::size_t>(i)] * lhs.basis_[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
                updated.canonicalize();
                v[static_cast<std::size_t>(r)] = updated;
            }
        vectors.push_back(std::move(v));
    }
    return Subspace::from_vectors(lhs.n_, vectors);
}

} // namespace skewrank
