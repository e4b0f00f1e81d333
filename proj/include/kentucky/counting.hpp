#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kentucky/nat.hpp"

namespace kentucky {

// p(n,k): how many m in [0, a_{2n+1}) have exactly k summands in their legal
// decomposition.  p(n,0) = 1, p(0,k) = 0 for k > 0, p(1,1) = 2, p(n,k) = 0
// for k > floor((n+1)/2), and p(n,k) = 2 p(n-2,k-1) + p(n-1,k).  Row n sums
// to a_{2n+1}.

/// Exact table of p(n,k) built from the recurrence.
class SummandCountTable {
public:
    explicit SummandCountTable(std::size_t max_n);

    /// p(n,k); zero outside the table's row range or past the row width.
    const Nat& count(std::size_t n, std::size_t k) const;

    /// Row n, entries k = 0..floor((n+1)/2).
    std::span<const Nat> row(std::size_t n) const;

    std::size_t max_n() const { return rows_.size() - 1; }

private:
    std::vector<std::vector<Nat>> rows_;
};

/// Memoized recurrence value (thread-local cache).
Nat summand_count(std::size_t n, std::size_t k);

/// Closed form 2^k C(n-(k-1), k); returns the table conventions (1 for k=0,
/// 0 past the row width) outside the formula's range.
Nat summand_count_closed(std::size_t n, std::size_t k);

/// Row n via the recurrence table.
std::vector<Nat> summand_count_row(std::size_t n);

/// Row n via the closed form.
std::vector<Nat> summand_count_row_closed(std::size_t n);

/// Row n by expanding the rational generating function
/// (1 + 2xy) / (1 - x - 2x^2 y) as a power series in x: the denominator
/// induces a linear recurrence on the polynomial-in-y coefficients.
std::vector<Nat> summand_count_row_gf(std::size_t n);

// g_n(y) = sum_k p(n,k) y^k, the coefficient of x^n in the generating
// function above.  Three routes:

/// Coefficient list of g_n(y) (recurrence-table route).
std::vector<Nat> summand_poly(std::size_t n);

/// Evaluate a coefficient list at rational y.
Rat summand_poly_eval(std::span<const Nat> coeffs, const Rat& y);

/// g_n(y) = (sqrt(2y))^{n+1} F_{n+2}(1/sqrt(2y)) with the half-integer powers
/// cancelled pairwise, so the value is exact for rational y: every surviving
/// term of F_{n+2} contributes C(n+1-j, j) (2y)^j.
Rat summand_poly_fib(std::size_t n, const Rat& y);

/// Partial-fraction closed form in floating point, for y > 0:
/// g_n(y) = [4y((1+u)^n - (1-u)^n) + (1+u)^{n+1} - (1-u)^{n+1}] / (2^{n+1} u)
/// with u = sqrt(1+8y).
double summand_poly_radical(std::size_t n, double y);

}  // namespace kentucky
