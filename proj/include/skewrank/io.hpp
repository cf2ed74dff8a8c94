/// @file io.hpp
/// @brief Tensor-file (de)serialization, file helpers and input digests.
#pragma once

#include <string>

#include "skewrank/multivector.hpp"

namespace skewrank {

/// Parse the canonical tensor-file JSON format:
///
///   { "n": 7, "k": 3, "terms": [ { "coeff": "1", "indices": [1, 2, 3] } ] }
///
/// Coefficients are rational strings ("p", "-p/q"); plain JSON integers are
/// also accepted.  Indices are 1-based, strictly increasing, and each term
/// lists exactly k of them; duplicate index sets are rejected and at least
/// one term is required.  Malformed JSON or coefficients throw parse_error;
/// structurally valid files violating the invariants throw invariant_error.
Multivector parse_tensor_json(const std::string& text);

/// Canonical serialization of the same format: terms in ascending monomial
/// order, coefficients in lowest terms, two-space indentation, trailing
/// newline.  parse_tensor_json(serialize_tensor_json(t)) == t for nonzero t.
std::string serialize_tensor_json(const Multivector& tensor);

/// Read and parse a tensor file; throws parse_error when unreadable.
Multivector read_tensor_file(const std::string& path);

/// Whole-file read/write helpers (binary-exact); throw parse_error on failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// 64-bit FNV-1a digest of the given bytes, formatted "fnv1a:<16 hex digits>".
/// Stamped into reports so a report names the exact input it was computed on.
std::string fnv1a_digest(const std::string& bytes);

} // namespace skewrank
