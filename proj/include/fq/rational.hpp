#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fq {

// Arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form we rely on everywhere: gcd(|num|, den) = 1, den > 0.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int to_int(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("rational is not an integer: " + r.str());
    return numerator(r);
}

inline long to_long(const Rat& r) { return static_cast<long>(to_int(r)); }

/// Parses "p", "-p" or "p/q" (q > 0 after normalization).
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational: '" + s + "'");
    }
}

inline std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace fq
