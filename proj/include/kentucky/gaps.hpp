#pragma once

#include <cstddef>
#include <map>

#include "kentucky/nat.hpp"
#include "kentucky/sequence.hpp"

namespace kentucky {

/// Exact tally of gap lengths over the decompositions of all m in
/// [0, a_{2n+1}).  counts carries no keys below 3 (legality forces every gap
/// to be >= 3); total_gaps = sum of counts = sum_m max(k(m)-1, 0).
struct GapHistogram {
    std::size_t n = 0;
    std::map<std::size_t, Nat> counts;
    Nat total_gaps;
};

inline constexpr std::size_t kGapBruteforceBudget = 22;

/// Decompose every m in [0, a_{2n+1}) and tally consecutive-index gaps.
/// n is capped at kGapBruteforceBudget (the range holds ~2^{n+2}/3 integers).
/// include_wait additionally tallies the leading index of each nonempty
/// decomposition (the wait to the first summand); exploratory, off by
/// default.  Ranges of m are split across workers; the merged tally does not
/// depend on the split.
GapHistogram gap_histogram_bruteforce(SequenceTable& table, std::size_t n,
                                      bool include_wait = false, unsigned workers = 1);

/// Number of m in [0, a_{2n+1}) whose decomposition has a gap of length g,
/// summed in exact arithmetic over every admissible start index: the count
/// splits into (configurations left of the gap) x (configurations right of
/// the gap), each a closed-form sequence value depending only on parities.
/// Returns 0 for g < 3.
Nat gap_count_formula(std::size_t n, std::size_t g);

/// Histogram assembled from gap_count_formula for g in [3, 2n-1], with
/// total_gaps from the summand-count moment identity; throws invariant_error
/// if the two routes disagree on the total.
GapHistogram gap_histogram_formula(std::size_t n);

/// sum_m max(k(m)-1, 0) = (mu_n - 1) a_{2n+1} + 1, exact.
Nat total_gap_count(std::size_t n);

/// P_n(g) = gap_count_formula(n,g) / total_gap_count(n), exact rational.
/// Requires n >= 3 (no gaps exist below that).
Rat gap_probability(std::size_t n, std::size_t g);

/// Limit of P_n(g): 0 for g < 3, 1/8 for g = 3, 2^{-j} for g = 2j,
/// 3/2^{j+2} for g = 2j+1 (g >= 4).
Rat gap_probability_limit(std::size_t g);

}  // namespace kentucky
