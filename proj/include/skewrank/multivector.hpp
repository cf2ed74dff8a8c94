/// @file multivector.hpp
/// @brief Sparse exact multivectors over Q and the exterior-algebra operations.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "skewrank/index_set.hpp"
#include "skewrank/rational.hpp"

namespace skewrank {

class RationalMatrix;

/// Sparse element of Lambda^grade(Q^n): an ordered map from sorted index sets
/// to nonzero rational coefficients.  The zero multivector is the empty map and
/// still carries its grade and ambient dimension, so grade/ambient checks stay
/// meaningful on intermediate zeros.
class Multivector {
public:
    using TermMap = std::map<IndexSet, Rational>;

    Multivector(int n, int grade);

    /// Single basis monomial e_I with coefficient 1.
    static Multivector basis(int n, const IndexSet& indices);
    /// Single term c * e_I (c may be zero, yielding the zero multivector).
    static Multivector monomial(int n, const IndexSet& indices, const Rational& coeff);
    /// Grade-1 vector from coordinates.
    static Multivector from_vector(const std::vector<Rational>& coords);

    int n() const { return n_; }
    int grade() const { return grade_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of e_I (zero when absent).
    Rational coeff(const IndexSet& indices) const;
    /// Adds c * e_I, erasing the term if the result cancels.
    void add_term(const IndexSet& indices, const Rational& coeff);

    /// Union of all indices appearing in any term (coordinate support; the
    /// basis-independent support is computed via contractions elsewhere).
    IndexSet index_support() const;

    /// Coordinates of a grade-1 multivector as a dense vector.
    std::vector<Rational> to_vector() const;

    Multivector operator-() const;
    Multivector& operator+=(const Multivector& other);
    Multivector& operator-=(const Multivector& other);
    Multivector& operator*=(const Rational& scalar);

    friend Multivector operator+(Multivector lhs, const Multivector& rhs) { return lhs += rhs; }
    friend Multivector operator-(Multivector lhs, const Multivector& rhs) { return lhs -= rhs; }
    friend Multivector operator*(const Rational& scalar, Multivector m) { return m *= scalar; }

    bool operator==(const Multivector& other) const;

    std::string to_string() const;

private:
    int n_;
    int grade_;
    TermMap terms_;
};

/// Dual-basis multivectors (forms x_I) share the representation; the semantic
/// split is which argument slot of contract() they occupy.
using DualForm = Multivector;

/// Exterior product.  Grades add; ambient dimensions must agree
/// (ambient_mismatch otherwise).  Anticommutative and associative by
/// construction; unit tests pin both against a brute-force oracle.
Multivector wedge(const Multivector& lhs, const Multivector& rhs);

/// Left-fold wedge of several factors.
Multivector wedge_all(const std::vector<Multivector>& factors);

/// Skew apolarity contraction alpha . t of a grade-h dual form against a
/// grade-k multivector; the result has grade k-h, and is zero when h > k.
/// Monomial rule: x_J(e_I) = removal_sign(I, J) * e_{I\J} when J is inside I,
/// zero otherwise; extended bilinearly.  Satisfies the composition law
/// contract(beta, contract(alpha, t)) == contract(wedge(alpha, beta), t).
Multivector contract(const DualForm& alpha, const Multivector& tensor);

/// Derivation action of the gl generator E_{ij} (e_j -> e_i, other basis
/// vectors -> 0) extended by Leibniz over the slots of each monomial.
Multivector gl_act(int i, int j, const Multivector& tensor);

/// Induced action of an invertible linear map on Lambda^k: basis vector e_j is
/// sent to the j-th column of `matrix`, monomials to wedges of columns.
Multivector apply_matrix(const RationalMatrix& matrix, const Multivector& tensor);

/// Renames coordinates: index i becomes index_map[i] (1-based, injective),
/// producing a multivector on a fresh ambient of dimension new_n.  index_map
/// must be strictly increasing on each term's support to preserve signs; the
/// maps used here are globally monotone, which suffices.
Multivector relabel(const Multivector& tensor, const std::vector<int>& index_map, int new_n);

} // namespace skewrank
