/// @file grassmann.cpp
#include "skewrank/grassmann.hpp"

#include "skewrank/errors.hpp"
#include "skewrank/span.hpp"

namespace skewrank {

GrassPoint::GrassPoint(Subspace space) : space_(std::move(space)) {
    if (space_.dim() == 0)
        throw invariant_error("grassmann: a point needs a positive-dimensional subspace");
}

GrassPoint GrassPoint::from_multivector(const Multivector& tensor) {
    if (tensor.is_zero())
        throw wrong_stratum_error("grassmann: the zero tensor is not decomposable");
    Subspace support = psi_kernel(tensor);
    if (support.dim() != tensor.grade())
        throw wrong_stratum_error("grassmann: tensor is not decomposable");
    GrassPoint point(support);
    // Safety net: a full wedge kernel forces proportionality to the Pluecker
    // vector, so a mismatch here would mean an arithmetic defect upstream.
    Multivector pl = point.pluecker();
    const auto& [lead, lead_coeff] = *tensor.terms().begin();
    Rational scale = lead_coeff / pl.coeff(lead);
    scale.canonicalize();
    if (!(scale * pl == tensor))
        throw internal_error("grassmann: kernel support does not reproduce the tensor");
    return point;
}

Multivector GrassPoint::pluecker() const {
    return wedge_all(space_.basis_multivectors());
}

Subspace psi_kernel(const Multivector& tensor) {
    int n = tensor.n();
    std::vector<Multivector> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) images.push_back(wedge(Multivector::basis(n, {i}), tensor));
    return Subspace::from_vectors(n, kernel_of_images(images));
}

bool is_decomposable(const Multivector& tensor) {
    return !tensor.is_zero() && psi_kernel(tensor).dim() == tensor.grade();
}

int hamming_distance(const GrassPoint& p, const GrassPoint& q) {
    if (p.n() != q.n()) throw ambient_mismatch("distance: mixed ambient dimensions");
    if (p.k() != q.k()) throw invariant_error("distance: points live on different Grassmannians");
    return p.k() - intersect(p.space(), q.space()).dim();
}

std::vector<Multivector> tangent_space_basis(const GrassPoint& p) {
    int n = p.n();
    int k = p.k();
    std::vector<Multivector> rows = p.space().basis_multivectors();
    IndexSet outside = p.space().complement_coords();

    std::vector<Multivector> basis;
    basis.reserve(1 + static_cast<std::size_t>(k) * outside.size());
    basis.push_back(p.pluecker());
    // Single-slot replacements by complement coordinates.  Every replacement
    // carries the monomial obtained from the pivot set by swapping pivot i for
    // coordinate j, and those monomials are pairwise distinct, so the family
    // is independent of size 1 + k(n - k) by construction.
    for (int slot = 0; slot < k; ++slot) {
        for (int j : outside) {
            std::vector<Multivector> factors = rows;
            factors[static_cast<std::size_t>(slot)] = Multivector::basis(n, {j});
            basis.push_back(wedge_all(factors));
        }
    }
    return basis;
}

TangentPairInfo tangent_span_pair(const GrassPoint& p, const GrassPoint& q) {
    if (p.n() != q.n()) throw ambient_mismatch("terracini: mixed ambient dimensions");
    if (p.k() != q.k()) throw invariant_error("terracini: points live on different Grassmannians");
    std::vector<Multivector> bp = tangent_space_basis(p);
    std::vector<Multivector> bq = tangent_space_basis(q);

    TangentPairInfo info;
    info.dim_p = static_cast<int>(bp.size());
    info.dim_q = static_cast<int>(bq.size());
    SpanBuilder builder(p.n(), p.k());
    for (const auto& v : bp) builder.add(v);
    for (const auto& v : bq) builder.add(v);
    info.dim_sum = builder.rank();
    info.dim_intersection = info.dim_p + info.dim_q - info.dim_sum;
    info.in_terracini = info.dim_sum < 2 * p.k() * (p.n() - p.k()) + 2;
    return info;
}

} // namespace skewrank
