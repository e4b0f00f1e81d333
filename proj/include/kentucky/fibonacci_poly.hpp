#pragma once

#include <cstddef>
#include <vector>

#include "kentucky/nat.hpp"

namespace kentucky {

// Fibonacci polynomials: F_0 = 0, F_1 = 1, F_2 = x, F_n = x F_{n-1} + F_{n-2}.
// F_n(1) is the standard Fibonacci sequence.

/// Dense coefficient list (coeffs[i] is the coefficient of x^i):
/// F_n(x) = sum_j C(n-j-1, j) x^{n-2j-1}.
std::vector<Nat> fibonacci_poly_coeffs(std::size_t n);

/// Exact evaluation by the recurrence.
Rat fibonacci_poly(std::size_t n, const Rat& x);

/// Exact evaluation through the binomial sum formula.
Rat fibonacci_poly_sum_form(std::size_t n, const Rat& x);

/// Floating evaluation of ((x+s)^n - (x-s)^n) / (2^n s) with s = sqrt(x^2+4).
double fibonacci_poly_radical(std::size_t n, double x);

/// F_n'(x) = (2n F_{n-1}(x) + (n-1) x F_n(x)) / (x^2 + 4), exact.
Rat fibonacci_poly_derivative(std::size_t n, const Rat& x);

}  // namespace kentucky
