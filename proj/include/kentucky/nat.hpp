#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace kentucky {

// All sequence terms and counts live in arbitrary precision; moments stay
// exact rationals until a caller asks for a double.
using Nat = mpz_class;
using Rat = mpq_class;

inline Nat pow2(unsigned long k) {
    Nat r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

inline Nat binomial(unsigned long n, unsigned long k) {
    Nat r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Quotient of an exactly divisible value; throws invariant_error on remainder.
Nat exact_quotient(const Nat& value, unsigned long divisor);

// num/den in canonical form.
inline Rat ratio(const Nat& num, const Nat& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rat& q) { return q.get_d(); }
inline double to_double(const Nat& n) { return n.get_d(); }

}  // namespace kentucky
