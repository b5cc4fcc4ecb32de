#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace girthbound {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Vertex and edge counts.
using Count = std::int64_t;

inline BigInt big(Count x) { return BigInt(x); }

/// Largest m >= 0 with m*m <= x.
inline BigInt isqrt(const BigInt& x)
{
    if (x < 0) throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(x);
}

/// Largest m >= 0 with m*m*m <= x.
inline BigInt icbrt(const BigInt& x)
{
    if (x < 0) throw std::domain_error("icbrt of negative value");
    BigInt lo = 0, hi = 1;
    while (hi * hi * hi <= x) hi *= 2;
    // lo^3 <= x < hi^3
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (mid * mid * mid <= x) lo = mid;
        else hi = mid;
    }
    return lo;
}

/// Parses "p/q", "p" or "-p/q" into an exact rational.
inline Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    auto parse_int = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("+-0123456789") != std::string::npos ||
            s.find_first_of("0123456789") == std::string::npos)
            throw std::invalid_argument("not a rational number: '" + text + "'");
        return BigInt(s[0] == '+' ? s.substr(1) : s);
    };
    if (slash == std::string::npos) return Rational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
}

inline std::string to_string(const Rational& r)
{
    if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

} // namespace girthbound
