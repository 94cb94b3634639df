#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "midtree/errors.hpp"

namespace midtree {

// Exact arithmetic only. Edge lengths in the constructions reach 10^(2V+8C+7),
// so machine integers are never used on a verdict path.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer pow10z(unsigned k) {
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 10;
    return r;
}

inline Rational pow10q(unsigned k) { return Rational(pow10z(k)); }

inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses a nonempty integer or "p/q" ratio token.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw Error(Err::Parse, "empty rational token");
    std::size_t pos = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool slash_seen = false;
    if (pos == s.size()) throw Error(Err::Parse, "bad rational token '" + s + "'");
    for (std::size_t i = pos; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/' && !slash_seen && i > pos && i + 1 < s.size()) {
            slash_seen = true;
            continue;
        }
        if (c < '0' || c > '9') throw Error(Err::Parse, "bad rational token '" + s + "'");
    }
    return Rational(s);
}

} // namespace midtree
