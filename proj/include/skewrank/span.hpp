/// @file span.hpp
/// @brief Incremental exact span computation by leading-monomial elimination.
#pragma once

#include <map>
#include <vector>

#include "skewrank/multivector.hpp"

namespace skewrank {

/// Maintains a triangular basis of the span of the multivectors added so far.
/// Each stored row is normalized to leading coefficient 1 and keyed by its
/// leading (lexicographically smallest) monomial, so insertion order does not
/// affect the final rank and membership tests are a single reduction.
class SpanBuilder {
public:
    SpanBuilder(int n, int grade) : n_(n), grade_(grade) {}

    /// Reduces v against the current rows; installs the remainder as a new
    /// pivot row when nonzero.  Returns true when the rank grew.
    bool add(const Multivector& v);

    /// True when v already lies in the span (reduces to zero).
    bool contains(const Multivector& v) const;

    /// Reduces v against the current rows without modifying the span.
    Multivector reduce(Multivector v) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    int n() const { return n_; }
    int grade() const { return grade_; }

    /// Pivot rows keyed by leading monomial (a canonical triangular basis).
    const std::map<IndexSet, Multivector>& rows() const { return rows_; }

private:
    int n_;
    int grade_;
    std::map<IndexSet, Multivector> rows_;
};

/// Rank of the span of a family of same-grade multivectors.
int span_rank(const std::vector<Multivector>& family);

} // namespace skewrank
