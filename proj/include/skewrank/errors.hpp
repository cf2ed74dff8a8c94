/// @file errors.hpp
/// @brief Exception taxonomy; the CLI maps these onto its exit-code scheme.
#pragma once

#include <stdexcept>
#include <string>

namespace skewrank {

/// Malformed input file / unparseable rational or index data.  CLI exit 2.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A documented precondition was violated (bad grades, indices out of range,
/// non-decomposable input where a Grassmann point is required...).  CLI exit 3.
struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two multivectors from different ambient dimensions were combined.
struct ambient_mismatch : invariant_error {
    using invariant_error::invariant_error;
};

/// The input is a well-formed tensor but does not lie in the stratum the
/// requested operation needs (e.g. decompose on a tangential point).  CLI exit 4.
struct wrong_stratum_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internally produced certificate failed its own verification.  This never
/// fires on valid runs; it indicates a bug, not bad input.  CLI exit 5.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace skewrank
