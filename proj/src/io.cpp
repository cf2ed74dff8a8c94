/// @file io.cpp
/// @brief Tensor-file (de)serialization, file helpers and input digests.
#include "skewrank/io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "skewrank/errors.hpp"
#include "skewrank/index_set.hpp"
#include "skewrank/rational.hpp"

namespace skewrank {

namespace {

const nlohmann::json& require_field(const nlohmann::json& doc, const char* field) {
    if (!doc.contains(field))
        throw parse_error(std::string("tensor file: missing field \"") + field + "\"");
    return doc.at(field);
}

int require_int(const nlohmann::json& value, const char* what) {
    if (!value.is_number_integer())
        throw parse_error(std::string("tensor file: ") + what + " must be an integer");
    return value.get<int>();
}

Rational parse_coeff(const nlohmann::json& value) {
    if (value.is_string()) return rational_from_string(value.get<std::string>());
    if (value.is_number_integer()) return Rational(static_cast<long>(value.get<long long>()));
    throw parse_error("tensor file: coeff must be a rational string such as \"-3/2\"");
}

} // namespace

Multivector parse_tensor_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("tensor file: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("tensor file: top level must be an object");
    const int n = require_int(require_field(doc, "n"), "n");
    const int k = require_int(require_field(doc, "k"), "k");
    const nlohmann::json& terms = require_field(doc, "terms");
    if (!terms.is_array()) throw parse_error("tensor file: terms must be an array");
    if (terms.empty()) throw invariant_error("tensor file: at least one term is required");

    Multivector tensor(n, k);
    std::set<IndexSet> seen;
    for (const auto& term : terms) {
        if (!term.is_object()) throw parse_error("tensor file: each term must be an object");
        const Rational coeff = parse_coeff(require_field(term, "coeff"));
        const nlohmann::json& index_json = require_field(term, "indices");
        if (!index_json.is_array()) throw parse_error("tensor file: indices must be an array");
        IndexSet indices;
        indices.reserve(index_json.size());
        for (const auto& v : index_json) indices.push_back(require_int(v, "every index"));
        if (static_cast<int>(indices.size()) != k)
            throw invariant_error("tensor file: each term must list exactly k indices");
        if (!is_valid_index_set(indices, n))
            throw invariant_error(
                "tensor file: indices must be strictly increasing and within 1..n");
        if (!seen.insert(indices).second)
            throw invariant_error("tensor file: duplicate index set");
        tensor.add_term(indices, coeff);
    }
    return tensor;
}

std::string serialize_tensor_json(const Multivector& tensor) {
    nlohmann::ordered_json doc;
    doc["n"] = tensor.n();
    doc["k"] = tensor.grade();
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [indices, coeff] : tensor.terms()) {
        nlohmann::ordered_json term;
        term["coeff"] = rational_to_string(coeff);
        term["indices"] = indices;
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    return doc.dump(2) + "\n";
}

Multivector read_tensor_file(const std::string& path) {
    return parse_tensor_json(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open file for writing: " + path);
    out << content;
    if (!out) throw parse_error("write failed: " + path);
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << "fnv1a:" << std::hex << std::setfill('0') << std::setw(16) << hash;
    return out.str();
}

} // namespace skewrank
