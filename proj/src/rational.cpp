/// @file rational.cpp
#include "skewrank/rational.hpp"

#include <cctype>

#include "skewrank/errors.hpp"

namespace skewrank {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational rational_from_string(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
        throw parse_error("malformed rational literal: '" + text + "'");
    }
    Rational value;
    if (mpq_set_str(value.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) {
        throw parse_error("malformed rational literal: '" + text + "'");
    }
    if (value.get_den() == 0) {
        throw parse_error("zero denominator in rational literal: '" + text + "'");
    }
    value.canonicalize();
    return value;
}

std::string rational_to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::optional<Rational> rational_sqrt(const Rational& value) {
    if (value < 0) return std::nullopt;
    const mpz_class num = value.get_num();
    const mpz_class den = value.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class num_root, den_root;
    mpz_sqrt(num_root.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), den.get_mpz_t());
    Rational root(num_root, den_root);
    root.canonicalize();
    return root;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long result = 1;
    for (int i = 0; i < k; ++i) {
        result = result * (n - i) / (i + 1);
    }
    return result;
}

} // namespace skewrank
