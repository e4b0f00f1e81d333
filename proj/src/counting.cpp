#include "kentucky/counting.hpp"

#include <cmath>
#include <stdexcept>

#include "kentucky/fibonacci_poly.hpp"

namespace kentucky {

namespace {

inline std::size_t row_width(std::size_t n) { return (n + 1) / 2 + 1; }  // k = 0..floor((n+1)/2)

const Nat kZero = 0;

}  // namespace

SummandCountTable::SummandCountTable(std::size_t max_n) {
    rows_.resize(max_n + 1);
    rows_[0] = {Nat(1)};
    if (max_n >= 1) rows_[1] = {Nat(1), Nat(2)};
    for (std::size_t n = 2; n <= max_n; ++n) {
        auto& row = rows_[n];
        row.resize(row_width(n));
        row[0] = 1;
        for (std::size_t k = 1; k < row.size(); ++k) {
            // p(n,k) = 2 p(n-2,k-1) + p(n-1,k)
            Nat v = 2 * count(n - 2, k - 1);
            if (k < rows_[n - 1].size()) v += rows_[n - 1][k];
            row[k] = std::move(v);
        }
    }
}

const Nat& SummandCountTable::count(std::size_t n, std::size_t k) const {
    if (n >= rows_.size()) throw std::out_of_range("SummandCountTable: row not built");
    if (k >= rows_[n].size()) return kZero;
    return rows_[n][k];
}

std::span<const Nat> SummandCountTable::row(std::size_t n) const {
    if (n >= rows_.size()) throw std::out_of_range("SummandCountTable: row not built");
    return rows_[n];
}

Nat summand_count(std::size_t n, std::size_t k) {
    thread_local SummandCountTable cache(64);
    if (n > cache.max_n()) cache = SummandCountTable(std::max(n, 2 * cache.max_n()));
    return cache.count(n, k);
}

Nat summand_count_closed(std::size_t n, std::size_t k) {
    if (k == 0) return 1;
    if (2 * k > n + 1) return 0;
    return pow2(k) * binomial(n - (k - 1), k);
}

std::vector<Nat> summand_count_row(std::size_t n) {
    SummandCountTable table(n);
    auto r = table.row(n);
    return {r.begin(), r.end()};
}

std::vector<Nat> summand_count_row_closed(std::size_t n) {
    std::vector<Nat> row(row_width(n));
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = summand_count_closed(n, k);
    return row;
}

namespace {

// c += y^shift * scale * b, on coefficient lists in y.
void add_scaled(std::vector<Nat>& c, const std::vector<Nat>& b, std::size_t shift,
                unsigned long scale) {
    if (c.size() < b.size() + shift) c.resize(b.size() + shift);
    for (std::size_t i = 0; i < b.size(); ++i) c[i + shift] += scale * b[i];
}

}  // namespace

std::vector<Nat> summand_count_row_gf(std::size_t n) {
    // F(x,y) = (1 + 2xy) / (1 - x - 2x^2 y): with c_j the coefficient of x^j
    // (a polynomial in y), the denominator gives c_j = N_j + c_{j-1} + 2y c_{j-2}
    // where N_0 = 1 and N_1 = 2y.
    std::vector<Nat> two_back, one_back, cur;
    for (std::size_t j = 0; j <= n; ++j) {
        cur.clear();
        if (j == 0) cur = {Nat(1)};
        if (j == 1) add_scaled(cur, {Nat(1)}, 1, 2);
        if (j >= 1) add_scaled(cur, one_back, 0, 1);
        if (j >= 2) add_scaled(cur, two_back, 1, 2);
        two_back = std::move(one_back);
        one_back = cur;
    }
    return cur;
}

std::vector<Nat> summand_poly(std::size_t n) { return summand_count_row(n); }

Rat summand_poly_eval(std::span<const Nat> coeffs, const Rat& y) {
    Rat acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * y + Rat(coeffs[i]);
    return acc;
}

Rat summand_poly_fib(std::size_t n, const Rat& y) {
    // (sqrt(2y))^{n+1} F_{n+2}(1/sqrt(2y)): the x^{n+1-2j} term of F_{n+2}
    // meets the prefactor as (2y)^j, so rational arithmetic suffices.
    const auto coeffs = fibonacci_poly_coeffs(n + 2);
    const Rat two_y = 2 * y;
    Rat power(1), acc(0);
    for (std::size_t j = 0; 2 * j <= n + 1; ++j) {
        acc += Rat(coeffs[n + 1 - 2 * j]) * power;
        power *= two_y;
    }
    return acc;
}

double summand_poly_radical(std::size_t n, double y) {
    if (!(y > 0.0))
        throw std::invalid_argument("summand_poly_radical: y must be positive");
    const double u = std::sqrt(1.0 + 8.0 * y);
    const double p = 1.0 + u, q = 1.0 - u;
    const int ni = static_cast<int>(n);
    const double numer = 4.0 * y * (std::pow(p, ni) - std::pow(q, ni)) +
                         std::pow(p, ni + 1) - std::pow(q, ni + 1);
    return numer / (std::ldexp(u, ni + 1));
}

}  // namespace kentucky
