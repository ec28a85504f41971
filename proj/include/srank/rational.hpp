#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace srank {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown for malformed textual input (numbers, JSON, field specs).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an object violates its structural invariants
/// (non-homomorphism, non-commuting x-action, unstable subspace, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an internal consistency assertion fails.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational &q) { return q.get_den() == 1; }

/// Parses "a", "-a", "a/b" into a canonical rational.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return ParseError("malformed rational: '" + s + "'"); };
    if (s.empty())
        throw bad();
    auto slash = s.find('/');
    auto check_int = [&](const std::string &part, bool allow_sign) {
        if (part.empty())
            throw bad();
        std::size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+'))
            i = 1;
        if (i == part.size())
            throw bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw bad();
    };
    Rational q;
    if (slash == std::string::npos) {
        check_int(s, true);
        q = Rational(Integer(s[0] == '+' ? s.substr(1) : s));
    } else {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        check_int(num, true);
        check_int(den, false);
        Integer d(den);
        if (d == 0)
            throw ParseError("zero denominator in '" + s + "'");
        q = Rational(Integer(num[0] == '+' ? num.substr(1) : num), d);
    }
    q.canonicalize();
    return q;
}

/// "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rational &q) { return q.get_str(); }
inline std::string to_string(const Integer &z) { return z.get_str(); }

} // namespace srank
