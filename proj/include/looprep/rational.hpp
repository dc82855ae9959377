#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <numeric>
#include <string>

namespace looprep {

// All arithmetic in this library is exact. Magnitudes stay tiny (lattice
// coordinates and Gram entries of rank <= 9 root systems), so a rational
// over 64-bit integers is ample.
using Rat = boost::rational<long long>;

inline long long num(const Rat& r) { return r.numerator(); }
inline long long den(const Rat& r) { return r.denominator(); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline long long to_integer(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("rational is not an integer");
    return num(r);
}

inline long long floor_int(const Rat& r) {
    long long n = num(r), d = den(r);
    long long q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

// Representative of r in [0, 1).
inline Rat mod1(const Rat& r) { return r - Rat(floor_int(r)); }

inline bool is_even_integer(const Rat& r) {
    return is_integer(r) && num(r) % 2 == 0;
}

inline std::string to_string(const Rat& r) {
    std::string s = std::to_string(num(r));
    if (den(r) != 1) s += "/" + std::to_string(den(r));
    return s;
}

} // namespace looprep
