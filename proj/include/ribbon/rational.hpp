#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ribbon {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact "p" or "p/q" text, no floating point anywhere.
inline std::string to_string(const Rational& r) {
    return r.str();
}

inline Rational parse_rational(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

}  // namespace ribbon
