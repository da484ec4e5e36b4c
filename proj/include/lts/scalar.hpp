#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "lts/error.hpp"

namespace lts {

/// Exact rational number. GMP keeps every result in lowest terms with a
/// positive denominator, so structural equality is value equality.
using Scalar = mpq_class;

/// Parses "p", "p/q", "-p/q" (optionally with a leading '+').
inline Scalar parse_scalar(std::string_view text) {
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        }
        return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!is_digits(num) || (slash != std::string_view::npos && !is_digits(den))) {
        throw ParseError("invalid rational literal '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(1);
    if (slash != std::string_view::npos) {
        d = mpz_class(std::string(den), 10);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) n = -n;
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Scalar& q) {
    Scalar c = q;
    c.canonicalize();
    return c.get_str(10);
}

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

}  // namespace lts
