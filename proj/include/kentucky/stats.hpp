#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kentucky/nat.hpp"

namespace kentucky {

// Y_n: number of summands in the decomposition of an integer drawn uniformly
// from [0, a_{2n+1}).  Exact pmf: P(Y_n = k) = p(n,k) / a_{2n+1}.

struct DistributionSummary {
    std::size_t n = 0;
    Rat mean;
    Rat variance;
    std::vector<Rat> pmf;          // index k
    double ks_to_normal = 0.0;     // sup-distance of the normalized pmf's CDF to N(0,1)
    double mgf_log_residual = 0.0; // max_t |log M(t) - t^2/2| over the supplied grid
};

/// E[Y_n] as an exact rational, n >= 0.
Rat exact_mean(std::size_t n);

/// Var[Y_n] as an exact rational, n >= 0.
Rat exact_variance(std::size_t n);

/// Direct closed form
/// [2^{2n+5}(4+3n) - 2(8+3n) - 2^{n+2}(-1)^n(28+36n+9n^2)] / [81 (2^{n+2}-(-1)^n)^2],
/// an independent route that must equal exact_variance.
Rat variance_closed_form(std::size_t n);

/// (n/3 + 2/9, 2n/27 + 8/81).
std::pair<double, double> asymptotic_moments(std::size_t n);

/// Standard normal CDF.
double normal_cdf(double z);

/// Normalized-pmf diagnostics for Y_n' = (Y_n - mu)/sigma, n >= 2.
///
/// ks_to_normal uses the right-continuous step CDF evaluated at each support
/// point and its left limit.  The MGF is summed exactly (rational weights
/// times the double exp factors lifted to rationals) and only the final log
/// is floating point, so the residual at t = 0 is exactly zero.  Grid values
/// must lie in [-2, 2].
DistributionSummary gaussian_diagnostics(std::size_t n, std::span<const double> t_grid);

}  // namespace kentucky
