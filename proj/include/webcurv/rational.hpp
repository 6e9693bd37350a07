#pragma once

#include <gmpxx.h>

#include <string>

namespace webcurv {

// Arbitrary-precision rational scalar. GMP keeps the canonical form
// (gcd-reduced, positive denominator) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// "p/q", or just "p" when q = 1.
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Integer binomial(unsigned n, unsigned k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace webcurv
