/// @file span.cpp
#include "skewrank/span.hpp"

#include "skewrank/errors.hpp"

namespace skewrank {

bool SpanBuilder::add(const Multivector& v) {
    Multivector remainder = reduce(v);
    if (remainder.is_zero()) return false;
    const auto leading = remainder.terms().begin();
    remainder *= Rational(1) / leading->second;
    rows_.emplace(remainder.terms().begin()->first, std::move(remainder));
    return true;
}

bool SpanBuilder::contains(const Multivector& v) const {
    return reduce(v).is_zero();
}

Multivector SpanBuilder::reduce(Multivector v) const {
    if (v.n() != n_ || v.grade() != grade_) {
        throw invariant_error("SpanBuilder: ambient or grade mismatch");
    }
    // Groebner-style normal form: kill any monomial that matches a pivot key.
    // Each subtraction replaces the matched monomial by strictly larger ones,
    // so the loop terminates; a fully reduced nonzero remainder shares no
    // monomial with any pivot key and is therefore independent of the span.
    while (!v.is_zero()) {
        bool reduced_any = false;
        for (const auto& [indices, coeff] : v.terms()) {
            const auto hit = rows_.find(indices);
            if (hit != rows_.end()) {
                v -= coeff * hit->second;
                reduced_any = true;
                break;
            }
        }
        if (!reduced_any) break;
    }
    return v;
}

int span_rank(const std::vector<Multivector>& family) {
    if (family.empty()) return 0;
    SpanBuilder builder(family.front().n(), family.front().grade());
    for (const auto& v : family) builder.add(v);
    return builder.rank();
}

} // namespace skewrank
