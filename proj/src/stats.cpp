#include "kentucky/stats.hpp"

#include <cmath>
#include <stdexcept>

#include "kentucky/counting.hpp"
#include "kentucky/errors.hpp"
#include "kentucky/sequence.hpp"

namespace kentucky {

namespace {

void row_moments(std::span<const Nat> row, Nat& m1, Nat& m2) {
    m1 = 0;
    m2 = 0;
    for (std::size_t k = 1; k < row.size(); ++k) {
        m1 += k * row[k];
        m2 += k * k * row[k];
    }
}

}  // namespace

Rat exact_mean(std::size_t n) {
    const auto row = summand_count_row_closed(n);
    Nat m1, m2;
    row_moments(row, m1, m2);
    return ratio(m1, term_closed_form(2 * n + 1));
}

Rat exact_variance(std::size_t n) {
    const auto row = summand_count_row_closed(n);
    Nat m1, m2;
    row_moments(row, m1, m2);
    const Nat a = term_closed_form(2 * n + 1);
    return ratio(m2 * a - m1 * m1, a * a);
}

Rat variance_closed_form(std::size_t n) {
    const Nat nn(static_cast<unsigned long>(n));
    const long sign = n % 2 == 0 ? 1 : -1;
    const Nat num = pow2(2 * n + 5) * (4 + 3 * nn) - 2 * (8 + 3 * nn) -
                    pow2(n + 2) * sign * (28 + 36 * nn + 9 * nn * nn);
    const Nat den = 81 * (pow2(n + 2) - sign) * (pow2(n + 2) - sign);
    return ratio(num, den);
}

std::pair<double, double> asymptotic_moments(std::size_t n) {
    const double nd = static_cast<double>(n);
    return {nd / 3.0 + 2.0 / 9.0, 2.0 * nd / 27.0 + 8.0 / 81.0};
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

DistributionSummary gaussian_diagnostics(std::size_t n, std::span<const double> t_grid) {
    if (n < 2)
        throw std::invalid_argument("gaussian_diagnostics: n must be >= 2");
    for (double t : t_grid)
        if (!(t >= -2.0 && t <= 2.0))
            throw std::invalid_argument("gaussian_diagnostics: grid values must lie in [-2, 2]");

    DistributionSummary s;
    s.n = n;
    s.mean = exact_mean(n);
    s.variance = exact_variance(n);

    const auto row = summand_count_row_closed(n);
    const Nat a = term_closed_form(2 * n + 1);
    s.pmf.reserve(row.size());
    for (const Nat& p : row) s.pmf.push_back(ratio(p, a));

    const double mu = to_double(s.mean);
    const double sigma = std::sqrt(to_double(s.variance));

    // KS against N(0,1): compare the step CDF and its left limit at every
    // normalized support point.
    Rat cum(0);
    double prev_cum = 0.0, ks = 0.0;
    std::vector<double> z(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) {
        z[k] = (static_cast<double>(k) - mu) / sigma;
        cum += s.pmf[k];
        const double cur_cum = to_double(cum);
        const double phi = normal_cdf(z[k]);
        ks = std::max({ks, std::abs(phi - cur_cum), std::abs(phi - prev_cum)});
        prev_cum = cur_cum;
    }
    s.ks_to_normal = ks;

    // log MGF of the normalized variable: exact-weight summation (doubles are
    // dyadic rationals, so lifting exp(t z_k) to Rat loses nothing), with
    // floating point confined to exp and the final log.
    double residual = 0.0;
    for (double t : t_grid) {
        Rat mgf(0);
        for (std::size_t k = 0; k < row.size(); ++k)
            mgf += s.pmf[k] * Rat(std::exp(t * z[k]));
        residual = std::max(residual, std::abs(std::log(to_double(mgf)) - t * t / 2.0));
    }
    s.mgf_log_residual = residual;
    return s;
}

}  // namespace kentucky
