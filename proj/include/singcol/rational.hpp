#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace singcol {

// Exact rational coefficients. mpq_class keeps values canonical
// (reduced, positive denominator), which is what everything here relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

// Accepts "n" or "n/d".
Rational parse_rational(const std::string& s);

inline long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer too large for long");
    return z.get_si();
}

} // namespace singcol
