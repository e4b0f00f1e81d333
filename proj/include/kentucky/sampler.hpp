#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "kentucky/nat.hpp"
#include "kentucky/sequence.hpp"

namespace kentucky {

/// SplitMix64: a counter-based 64-bit generator (Steele, Lea & Flood's
/// splittable stream mixer).  One call advances the counter by the golden
/// ratio increment and hashes it.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Stream derivation for parallel sampling: worker w draws from SplitMix64
/// seeded with seed XOR (w+1)*0x9E3779B97F4A7C15.
inline SplitMix64 worker_stream(std::uint64_t seed, unsigned worker) {
    return SplitMix64(seed ^ ((worker + 1) * 0x9E3779B97F4A7C15ULL));
}

/// Uniform draw from [0, bound) by rejection on fixed-width random bit
/// blocks; a power-of-two bound uses exactly log2(bound) bits and never
/// rejects.  Throws invariant_error if the rejection loop exceeds 10^6
/// iterations (the stream is broken).
Nat uniform_below(const Nat& bound, SplitMix64& rng);

struct SampleConfig {
    std::uint64_t count = 1;   // >= 1
    Nat bound;                 // exclusive upper bound, >= 1
    std::uint64_t seed = 0;
    unsigned workers = 1;      // >= 1
};

struct SampleReport {
    double empirical_mean = 0.0;
    double empirical_std = 0.0;  // sample standard deviation (n-1 denominator)
    double predicted_mean = 0.0;
    double predicted_std = 0.0;
    std::size_t n_effective = 0; // max n with a_{2n+1} <= bound
    std::map<std::size_t, std::uint64_t> histogram;  // summand count -> draws
};

/// Draw cfg.count uniform integers below cfg.bound, decompose each, and
/// tally summand counts.  Predictions use the asymptotic moments at
/// n_effective.  The report is a pure function of (count, bound, seed,
/// workers): each worker owns the stream worker_stream(seed, w) and a fixed
/// slice of the draw count, and the merged tally is order-independent.
SampleReport run_experiment(const SampleConfig& cfg, SequenceTable& table);

}  // namespace kentucky
