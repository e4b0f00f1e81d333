#include "kentucky/sampler.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <thread>
#include <vector>

#include "kentucky/decompose.hpp"
#include "kentucky/errors.hpp"
#include "kentucky/stats.hpp"

namespace kentucky {

namespace {

constexpr std::size_t kRejectionCap = 1'000'000;

}  // namespace

Nat uniform_below(const Nat& bound, SplitMix64& rng) {
    if (bound < 1) throw std::invalid_argument("uniform_below: bound must be >= 1");
    if (bound == 1) return Nat(0);

    const bool power_of_two = mpz_popcount(bound.get_mpz_t()) == 1;
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) - (power_of_two ? 1 : 0);
    const std::size_t words = (bits + 63) / 64;
    const unsigned top_bits = bits % 64;
    std::vector<std::uint64_t> block(words);

    for (std::size_t iter = 0; iter < kRejectionCap; ++iter) {
        for (auto& w : block) w = rng.next();
        if (top_bits != 0) block[words - 1] &= ~std::uint64_t{0} >> (64 - top_bits);
        Nat draw;
        mpz_import(draw.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, block.data());
        if (power_of_two || draw < bound) return draw;
    }
    throw invariant_error("uniform_below: rejection loop exceeded its iteration cap; RNG stream is broken");
}

SampleReport run_experiment(const SampleConfig& cfg, SequenceTable& table) {
    if (cfg.count < 1) throw std::invalid_argument("run_experiment: count must be >= 1");
    if (cfg.bound < 1) throw std::invalid_argument("run_experiment: bound must be >= 1");
    if (cfg.workers < 1) throw std::invalid_argument("run_experiment: workers must be >= 1");

    table.extend_to_cover(cfg.bound);
    const SequenceTable& frozen = table;

    // n_effective = max n with a_{2n+1} <= bound
    std::size_t n_eff = 0;
    for (std::size_t l = 1; l <= frozen.size(); l += 2) {
        if (frozen.term(l) <= cfg.bound) n_eff = (l - 1) / 2;
        else break;
    }

    const unsigned nworkers =
        static_cast<unsigned>(std::min<std::uint64_t>(cfg.workers, cfg.count));
    std::vector<std::map<std::size_t, std::uint64_t>> tallies(nworkers);
    auto draw_slice = [&](unsigned w, std::uint64_t draws) {
        SplitMix64 rng = worker_stream(cfg.seed, w);
        auto& local = tallies[w];
        for (std::uint64_t i = 0; i < draws; ++i) {
            const Nat m = uniform_below(cfg.bound, rng);
            ++local[decompose(frozen, m).indices.size()];
        }
    };

    const std::uint64_t per = cfg.count / nworkers;
    const std::uint64_t extra = cfg.count % nworkers;
    if (nworkers == 1) {
        draw_slice(0, cfg.count);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < nworkers; ++w)
            pool.emplace_back(draw_slice, w, per + (w < extra ? 1 : 0));
        for (auto& t : pool) t.join();
    }

    SampleReport report;
    report.n_effective = n_eff;
    for (const auto& local : tallies)
        for (const auto& [k, c] : local) report.histogram[k] += c;

    double sum = 0.0;
    for (const auto& [k, c] : report.histogram)
        sum += static_cast<double>(k) * static_cast<double>(c);
    const double count = static_cast<double>(cfg.count);
    report.empirical_mean = sum / count;
    if (cfg.count > 1) {
        double ss = 0.0;
        for (const auto& [k, c] : report.histogram) {
            const double d = static_cast<double>(k) - report.empirical_mean;
            ss += d * d * static_cast<double>(c);
        }
        report.empirical_std = std::sqrt(ss / (count - 1.0));
    }

    const auto [mu, var] = asymptotic_moments(n_eff);
    report.predicted_mean = mu;
    report.predicted_std = std::sqrt(var);
    return report;
}

}  // namespace kentucky
