/// @file subspace.hpp
/// @brief Linear subspaces of Q^n in canonical reduced-row-echelon form.
#pragma once

#include <vector>

#include "skewrank/matrix.hpp"
#include "skewrank/multivector.hpp"
#include "skewrank/rational.hpp"

namespace skewrank {

/// A subspace is stored as the unique RREF basis of its row space, which makes
/// equality, containment and canonical ordering trivial.
class Subspace {
public:
    /// The zero subspace of Q^n.
    explicit Subspace(int n) : n_(n) {}

    /// Span of the given vectors (rows); reduces to canonical RREF.
    static Subspace from_vectors(int n, const std::vector<std::vector<Rational>>& vectors);
    /// Span of grade-1 multivectors.
    static Subspace from_multivectors(const std::vector<Multivector>& vectors);
    /// Coordinate subspace spanned by the listed basis vectors.
    static Subspace coordinate(int n, const IndexSet& coords);

    int n() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<Rational>>& basis() const { return basis_; }
    const std::vector<Rational>& row(int i) const { return basis_[static_cast<std::size_t>(i)]; }
    std::vector<Multivector> basis_multivectors() const;

    bool contains(const std::vector<Rational>& vector) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& other) const = default;
    /// Lexicographic order on (dim, pivot columns, entries) - a deterministic
    /// total order used to canonicalize unordered pairs of subspaces.
    bool operator<(const Subspace& other) const;

    /// Pivot columns of the RREF basis (1-based).
    IndexSet pivot_columns() const;
    /// Non-pivot coordinates (1-based): a coordinate complement of the space.
    IndexSet complement_coords() const;

    friend Subspace sum(const Subspace& lhs, const Subspace& rhs);
    friend Subspace intersect(const Subspace& lhs, const Subspace& rhs);

private:
    int n_;
    std::vector<std::vector<Rational>> basis_;
};

} // namespace skewrank
