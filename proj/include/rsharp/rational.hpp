#pragma once

#include <gmpxx.h>

#include <string>

namespace rsharp {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

// Exact a^e for integer e >= 0.
Rational rpow(const Rational& a, unsigned e);

Integer igcd(const Integer& a, const Integer& b);

}  // namespace rsharp
