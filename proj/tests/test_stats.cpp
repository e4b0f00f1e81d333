#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>

#include "kentucky/counting.hpp"
#include "kentucky/sequence.hpp"
#include "kentucky/stats.hpp"

using namespace kentucky;

TEST_CASE("exact mean point values") {
    CHECK(exact_mean(1) == Rat(2, 3));
    CHECK(exact_mean(3) == Rat(14, 11));
    CHECK(exact_mean(0) == 0);
    // asymptotic error is O(n/2^n): invisible at n = 2000
    CHECK(std::abs(to_double(exact_mean(2000)) - (2000.0 / 3.0 + 2.0 / 9.0)) < 1e-6);
}

TEST_CASE("exact variance point values") {
    CHECK(exact_variance(1) == Rat(2, 9));
    CHECK(exact_variance(1) == ratio(1458, 6561));
    CHECK(exact_variance(0) == 0);
    CHECK(std::abs(to_double(exact_variance(2000)) - (2.0 * 2000 / 27.0 + 8.0 / 81.0)) < 1e-6);
}

TEST_CASE("pmf variance equals the direct closed form") {
    for (std::size_t n = 0; n <= 60; ++n) CHECK(exact_variance(n) == variance_closed_form(n));
}

TEST_CASE("g_n(1) closed form") {
    for (std::size_t n = 0; n <= 60; ++n) {
        Nat expected = pow2(n + 2);
        if (n % 2 == 0) expected -= 1; else expected += 1;  // (-1)^{n+1} + 2^{n+2}
        CHECK(3 * term_closed_form(2 * n + 1) == expected);
    }
}

TEST_CASE("asymptotic moments") {
    const auto [m2000, v2000] = asymptotic_moments(2000);
    CHECK(m2000 == doctest::Approx(666.888888888).epsilon(1e-9));
    CHECK(v2000 == doctest::Approx(148.2469135802).epsilon(1e-9));
    CHECK(std::sqrt(v2000) == doctest::Approx(12.176).epsilon(1e-4));
    const auto [m3, v3] = asymptotic_moments(3);
    CHECK(m3 == doctest::Approx(1.0 + 2.0 / 9.0));
    CHECK(v3 == doctest::Approx(6.0 / 27.0 + 8.0 / 81.0));
}

TEST_CASE("exact moments converge to the asymptotic line") {
    for (std::size_t n = 60; n <= 200; n += 10) {
        const Rat mean_gap = exact_mean(n) - ratio(Nat(3 * n + 2), Nat(9));
        const Rat var_gap = exact_variance(n) - ratio(Nat(6 * n + 8), Nat(81));
        CHECK(std::abs(to_double(mean_gap)) < 1e-9);
        CHECK(std::abs(to_double(var_gap)) < 1e-9);
    }
}

TEST_CASE("pmf is a probability vector") {
    const std::array<double, 2> grid{-1.0, 1.0};
    for (std::size_t n : {2, 7, 31}) {
        const auto s = gaussian_diagnostics(n, grid);
        Rat sum(0);
        for (const Rat& p : s.pmf) {
            CHECK(p >= 0);
            CHECK(p <= 1);
            sum += p;
        }
        CHECK(sum == 1);
        CHECK(to_double(s.variance) >= 0.0);
    }
}

TEST_CASE("diagnostics input validation") {
    const std::array<double, 1> ok{0.5};
    CHECK_THROWS_AS(gaussian_diagnostics(1, ok), std::invalid_argument);
    const std::array<double, 1> wide{2.5};
    CHECK_THROWS_AS(gaussian_diagnostics(10, wide), std::invalid_argument);
}

TEST_CASE("mgf residual vanishes exactly at t = 0") {
    const std::array<double, 1> zero{0.0};
    for (std::size_t n : {5, 50, 300}) {
        const auto s = gaussian_diagnostics(n, zero);
        CHECK(s.mgf_log_residual == 0.0);
    }
}

TEST_CASE("normal distance shrinks with n") {
    const std::array<double, 4> grid{-2.0, -1.0, 1.0, 2.0};
    const auto s50 = gaussian_diagnostics(50, grid);
    const auto s200 = gaussian_diagnostics(200, grid);
    CHECK(s50.ks_to_normal > s200.ks_to_normal);
    CHECK(s50.mgf_log_residual > s200.mgf_log_residual);
    CHECK(s200.ks_to_normal < 0.06);
}
