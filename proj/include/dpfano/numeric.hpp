#pragma once

// Exact arithmetic primitives shared by every module. All lattice and
// intersection arithmetic runs on arbitrary-precision integers and
// rationals; no floating point anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace dpfano {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

// floor(sqrt(n)) for n >= 0.
inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

struct SquareTest {
    Int value;
    Int floor_sqrt;   // s with s^2 <= value < (s+1)^2
    bool is_square;
};

inline SquareTest test_square(const Int& n) {
    if (n < 0) return {n, 0, false};
    Int s = isqrt_floor(n);
    return {n, s, s * s == n};
}

// floor of a rational.
inline Int rat_floor(const Rat& q) {
    Int n = num(q), d = den(q);
    Int quo = n / d, rem = n % d;
    if (rem != 0 && n < 0) --quo;
    return quo;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

// Largest integer t with t <= c + sqrt(q), for rational c and q >= 0.
// Exact: t <= c + sqrt(q)  <=>  t - c <= 0  or  (t - c)^2 <= q.
inline Int floor_plus_sqrt(const Rat& c, const Rat& q) {
    if (q < 0) throw std::invalid_argument("floor_plus_sqrt: negative radicand");
    auto le = [&](const Int& t) {
        Rat d = Rat(t) - c;
        return d <= 0 || d * d <= q;
    };
    Int t = rat_floor(c) + isqrt_floor(rat_floor(q) + 1) + 2;
    while (!le(t)) --t;
    return t;
}

// Smallest integer t with t >= c - sqrt(q).
inline Int ceil_minus_sqrt(const Rat& c, const Rat& q) {
    return -floor_plus_sqrt(-c, q);
}

inline Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (Int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline std::string rat_str(const Rat& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

// Parses "p", "-p" or "p/q". Used for exact values in case files.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rat(p) / q;
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
    }
}

} // namespace dpfano
