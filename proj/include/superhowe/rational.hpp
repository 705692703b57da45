#pragma once

#include <gmpxx.h>

#include <string>

namespace howe {

// Exact rational coefficients.  GMP keeps numerator/denominator reduced with
// a positive denominator, which is exactly the invariant we need.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational factorial(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace howe
