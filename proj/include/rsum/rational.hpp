#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace rsum {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps gcd(|num|,den)=1 and den>0 by
// construction, with zero stored as 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: negative power of zero");
        Rational inv = Rational(den(base), num(base));
        return rat_pow(inv, -e);
    }
    Rational r = 1;
    Rational b = base;
    unsigned long ue = static_cast<unsigned long>(e);
    while (ue) {
        if (ue & 1ul) r *= b;
        b *= b;
        ue >>= 1ul;
    }
    return r;
}

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

// Accepts "123", "-123", "p/q" with optional sign on p.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw std::domain_error("parse_rational: zero denominator");
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        throw std::domain_error("parse_rational: bad rational literal '" + s + "'");
    }
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace rsum
