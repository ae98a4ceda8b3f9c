#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace repdual {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Reduced "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw DomainError("zero denominator in '" + s + "'");
        return Rational(Integer(s.substr(0, slash)), den);
    } catch (const std::runtime_error&) {
        throw DomainError("not a rational number: '" + s + "'");
    }
}

inline std::int64_t checked_int64(const Integer& z) {
    if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
        throw DomainError("integer does not fit in 64 bits: " + z.str());
    return static_cast<std::int64_t>(z);
}

inline Integer ipow(const Integer& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

}  // namespace repdual
