#pragma once

// Exact rational scalars used throughout the exact pipeline.
//
// Rat is an arbitrary-precision rational kept in canonical form (reduced,
// positive denominator) by the backend. The helpers here add the few
// operations the torus code needs on top of plain field arithmetic:
// floors, mod-1 reduction, half-up rounding and "p/q" string I/O.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/functional/hash.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pwi {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

/// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
    Int n = numerator(r), d = denominator(r);  // d > 0
    Int q = n / d;                             // truncates toward zero
    if (n < 0 && q * d != n) --q;
    return q;
}

/// r - floor(r), always in [0, 1).
inline Rat mod1(const Rat& r) {
    Rat f = r - Rat(rat_floor(r));
    return f;
}

/// Nearest integer, ties rounded up.
inline Int rat_round(const Rat& r) { return rat_floor(r + Rat(1, 2)); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

/// Parses "p/q", plain integers and decimal strings ("0.25", "-3.5e-1" is
/// not supported; exponents never appear in the file formats used here).
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("parse_rat: zero denominator");
        return Rat(n, d);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(Int(s));
    bool neg = s[0] == '-';
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (head == "-" || head.empty()) head = neg ? "-0" : "0";
    Int ip(head), scale = 1;
    for (char c : tail) {
        if (c < '0' || c > '9') throw std::invalid_argument("parse_rat: bad digit");
        scale *= 10;
    }
    Int frac = tail.empty() ? Int(0) : Int(tail);
    Rat r = Rat(ip) + (neg ? -Rat(frac, scale) : Rat(frac, scale));
    return r;
}

inline std::string rat_str(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline std::size_t rat_hash(const Rat& r) { return boost::hash<Rat>{}(r); }

using ExactVec = std::vector<Rat>;

}  // namespace pwi
