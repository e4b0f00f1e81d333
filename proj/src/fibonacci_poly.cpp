#include "kentucky/fibonacci_poly.hpp"

#include <cmath>

namespace kentucky {

std::vector<Nat> fibonacci_poly_coeffs(std::size_t n) {
    if (n == 0) return {};
    std::vector<Nat> coeffs(n);  // degree n-1
    for (std::size_t j = 0; 2 * j + 1 <= n; ++j)
        coeffs[n - 1 - 2 * j] = binomial(n - j - 1, j);
    return coeffs;
}

Rat fibonacci_poly(std::size_t n, const Rat& x) {
    if (n == 0) return Rat(0);
    Rat prev(0), cur(1);  // F_0, F_1
    for (std::size_t i = 2; i <= n; ++i) {
        Rat next = x * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rat fibonacci_poly_sum_form(std::size_t n, const Rat& x) {
    const auto coeffs = fibonacci_poly_coeffs(n);
    Rat acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + Rat(coeffs[i]);
    return acc;
}

double fibonacci_poly_radical(std::size_t n, double x) {
    const double s = std::sqrt(x * x + 4.0);
    const int ni = static_cast<int>(n);
    return (std::pow(x + s, ni) - std::pow(x - s, ni)) / std::ldexp(s, ni);
}

Rat fibonacci_poly_derivative(std::size_t n, const Rat& x) {
    if (n == 0) return Rat(0);
    const Rat fn1 = fibonacci_poly(n - 1, x);
    const Rat fn = fibonacci_poly(n, x);
    const long nl = static_cast<long>(n);
    return (Rat(2 * nl) * fn1 + Rat(nl - 1) * x * fn) / (x * x + 4);
}

}  // namespace kentucky
