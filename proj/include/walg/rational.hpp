// Exact scalar arithmetic. All coefficients in the toolkit are arbitrary
// precision rationals; floating point never enters any computation.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace walg {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// base^e for integer e (negative allowed when base is nonzero).
inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (is_zero(base)) {
        if (e < 0) throw std::domain_error("rat_pow: negative power of zero");
        return Rational(0);
    }
    Rational acc(1);
    Rational b = e > 0 ? base : Rational(1) / base;
    for (long k = e > 0 ? e : -e; k > 0; --k) acc *= b;
    return acc;
}

// s^b for a sign s in {+1,-1} and a bit b in Z/2.
inline int sign_pow(int s, int bit) { return (bit & 1) ? s : 1; }

inline std::string num_string(const Rational& r) { return r.get_num().get_str(); }
inline std::string den_string(const Rational& r) { return r.get_den().get_str(); }

}  // namespace walg
