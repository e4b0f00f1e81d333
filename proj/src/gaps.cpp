#include "kentucky/gaps.hpp"

#include <stdexcept>
#include <thread>
#include <vector>

#include "kentucky/counting.hpp"
#include "kentucky/decompose.hpp"
#include "kentucky/errors.hpp"

namespace kentucky {

namespace {

// (2^exponent + 1)/3 or (2^exponent - 1)/3; both sequence values.
Nat third(unsigned long exponent, bool plus) {
    Nat t = pow2(exponent);
    if (plus) t += 1; else t -= 1;
    return exact_quotient(t, 3);
}

// Legal configurations strictly left of a gap starting at index i: sums over
// indices <= i-4 (i even) or <= i-3 (i odd).  Evaluates to 1 when that range
// is empty.
Nat left_configurations(std::size_t i) {
    if (i % 2 == 0) {
        const std::size_t k = i / 2;
        return third(k, k % 2 == 1);  // (2^{i/2} + (-1)^{(i-2)/2})/3
    }
    const std::size_t h = (i - 1) / 2;
    return third(h + 1, h % 2 == 0);  // (2^{(i-1)/2+1} + (-1)^{(i-1)/2})/3
}

// Legal configurations strictly right of a gap ending at index e, within
// indices <= 2n: sums over indices >= e+3 (e even) or >= e+4 (e odd).
Nat right_configurations(std::size_t n, std::size_t e) {
    if (e % 2 == 0) {
        const std::size_t d = n - e / 2;
        return third(d + 1, d % 2 == 0);  // (2^{(2n-e)/2+1} + (-1)^{(2n-e)/2})/3
    }
    const std::size_t d = n - (e + 1) / 2;
    return third(d + 1, d % 2 == 0);  // (2^{(2n-(e+1))/2+1} + (-1)^{(2n-(e+1))/2})/3
}

}  // namespace

Nat gap_count_formula(std::size_t n, std::size_t g) {
    if (n < 1) throw std::invalid_argument("gap_count_formula: n must be >= 1");
    Nat total = 0;
    if (g < 3 || g + 1 > 2 * n) return total;
    for (std::size_t i = 1; i + g <= 2 * n; ++i) {
        // a gap from i to i+g must land in a bin at least two past bin(i);
        // this only excludes odd i when g = 3
        if (SequenceTable::bin_of(i + g) < SequenceTable::bin_of(i) + 2) continue;
        total += left_configurations(i) * right_configurations(n, i + g);
    }
    return total;
}

Nat total_gap_count(std::size_t n) {
    const auto row = summand_count_row_closed(n);
    Nat m1 = 0;
    for (std::size_t k = 1; k < row.size(); ++k) m1 += k * row[k];
    return m1 - (term_closed_form(2 * n + 1) - 1);
}

GapHistogram gap_histogram_formula(std::size_t n) {
    GapHistogram h;
    h.n = n;
    h.total_gaps = total_gap_count(n);
    Nat sum = 0;
    for (std::size_t g = 3; g + 1 <= 2 * n; ++g) {
        Nat c = gap_count_formula(n, g);
        if (c > 0) {
            sum += c;
            h.counts.emplace(g, std::move(c));
        }
    }
    if (sum != h.total_gaps)
        throw invariant_error("gap_histogram_formula: per-length counts disagree with the moment identity total");
    return h;
}

GapHistogram gap_histogram_bruteforce(SequenceTable& table, std::size_t n,
                                      bool include_wait, unsigned workers) {
    if (n > kGapBruteforceBudget)
        throw budget_error("gap_histogram_bruteforce: n exceeds the enumeration budget of " +
                           std::to_string(kGapBruteforceBudget));
    if (workers < 1) throw std::invalid_argument("gap_histogram_bruteforce: workers must be >= 1");

    const Nat limit_nat = term_closed_form(2 * n + 1);
    table.extend_to_cover(limit_nat);
    const SequenceTable& frozen = table;
    const unsigned long limit = limit_nat.get_ui();  // < 2^25 within budget

    const unsigned nworkers = static_cast<unsigned>(std::min<unsigned long>(workers, limit));
    std::vector<std::map<std::size_t, unsigned long>> tallies(nworkers);
    auto tally_range = [&](unsigned w, unsigned long lo, unsigned long hi) {
        auto& local = tallies[w];
        for (unsigned long m = lo; m < hi; ++m) {
            const Decomposition d = decompose(frozen, Nat(m));
            for (std::size_t j = 1; j < d.indices.size(); ++j)
                ++local[d.indices[j] - d.indices[j - 1]];
            if (include_wait && !d.indices.empty()) ++local[d.indices.front()];
        }
    };

    if (nworkers <= 1) {
        tally_range(0, 0, limit);
    } else {
        std::vector<std::thread> pool;
        const unsigned long chunk = limit / nworkers;
        for (unsigned w = 0; w < nworkers; ++w) {
            const unsigned long lo = w * chunk;
            const unsigned long hi = w + 1 == nworkers ? limit : lo + chunk;
            pool.emplace_back(tally_range, w, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    GapHistogram h;
    h.n = n;
    h.total_gaps = 0;
    for (const auto& local : tallies)
        for (const auto& [g, c] : local) {
            h.counts[g] += c;
            h.total_gaps += c;
        }
    return h;
}

Rat gap_probability(std::size_t n, std::size_t g) {
    const Nat total = total_gap_count(n);
    if (total == 0)
        throw std::domain_error("gap_probability: no gaps exist below n = 3");
    return ratio(gap_count_formula(n, g), total);
}

Rat gap_probability_limit(std::size_t g) {
    if (g < 3) return Rat(0);
    if (g == 3) return ratio(1, 8);
    const std::size_t j = g / 2;
    if (g % 2 == 0) return ratio(1, pow2(j));
    return ratio(3, pow2(j + 2));
}

}  // namespace kentucky
