#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <numeric>

namespace unbias {

using Int = long long;
using Rat = boost::rational<Int>;

inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Largest integer <= q.
inline Int rat_floor(const Rat& q) { return floor_div(q.numerator(), q.denominator()); }

/// Representative of q modulo m in [0, m).
inline Rat rat_mod(const Rat& q, Int m) {
    Rat r = q - Rat(m) * rat_floor(q / m);
    if (r < 0) r += m;  // guard against boundary rounding of rat_floor
    if (r >= Rat(m)) r -= m;
    return r;
}

/// Representative of q modulo 1 in [0, 1).
inline Rat rat_mod1(const Rat& q) { return rat_mod(q, 1); }

inline bool is_integer(const Rat& q) { return q.denominator() == 1; }

inline double to_double(const Rat& q) {
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

inline Int lcm_int(Int a, Int b) { return std::lcm(a, b); }

}  // namespace unbias
