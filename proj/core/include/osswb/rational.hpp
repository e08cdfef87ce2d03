#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "osswb/errors.hpp"

namespace osswb {

// Arbitrary-precision rational, always kept in lowest terms with a
// positive denominator (cpp_rational normalizes after every operation).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline int sign_of(const Rational& r) { return r.sign(); }

// "p/q" with the "/q" dropped for integers; never a decimal.
inline std::string rat_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rat_from_string(const std::string& s) {
    try {
        if (s.empty()) throw SpecParseError("empty rational literal");
        if (s.find('.') != std::string::npos)
            throw SpecParseError("decimal notation not accepted: " + s);
        return Rational(s);
    } catch (const std::exception&) {
        throw SpecParseError("malformed rational literal: " + s);
    }
}

}  // namespace osswb
