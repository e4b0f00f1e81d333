#include "kentucky/sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "kentucky/errors.hpp"

namespace kentucky {

void SequenceTable::extend(std::size_t up_to) {
    if (up_to <= terms_.size()) return;
    terms_.reserve(up_to);
    while (terms_.size() < up_to) {
        const std::size_t n = terms_.size() + 1;
        if (n <= 4) {
            terms_.emplace_back(static_cast<unsigned long>(n));
        } else {
            // a_n = a_{n-2} + 2 a_{n-4}
            terms_.emplace_back(terms_[n - 3] + 2 * terms_[n - 5]);
        }
    }
}

void SequenceTable::extend_to_cover(const Nat& value) {
    while (terms_.empty() || terms_.back() <= value) extend(terms_.size() + 8);
}

const Nat& SequenceTable::term(std::size_t n) const {
    if (n == 0 || n > terms_.size())
        throw std::out_of_range("SequenceTable::term: index " + std::to_string(n) + " not cached");
    return terms_[n - 1];
}

std::size_t SequenceTable::largest_index_leq(const Nat& value, std::size_t cap) const {
    // 2^{B-1} <= value < 2^B, so a_{2(B-1)} <= value < a_{2B}: the answer is
    // within two steps of min(cap, 2B).
    const std::size_t bits = mpz_sizeinbase(value.get_mpz_t(), 2);
    std::size_t idx = std::min({cap, 2 * bits, terms_.size()});
    while (terms_[idx - 1] > value) --idx;
    return idx;
}

Nat term_closed_form(std::size_t n) {
    if (n == 0) throw std::invalid_argument("term_closed_form: indices are 1-based");
    if (n % 2 == 0) return pow2(n / 2);
    const std::size_t k = (n + 1) / 2;
    Nat t = pow2(k + 1);
    if (k % 2 == 0) t += 1; else t -= 1;
    return exact_quotient(t, 3);
}

namespace {

// Sums reachable by legal subsets of `terms` under the (skip, bin_size)
// rule, as a bitmap indexed by sum.  Processes bins in order keeping a
// window of the last skip+1 per-bin-prefix bitmaps: sums over bins 1..j are
// the sums over bins 1..j-1 plus, for each element t of bin j, t shifted
// into the sums over bins 1..j-skip-1.
std::vector<bool> legal_subset_sums(const std::vector<unsigned long>& terms,
                                    unsigned skip, unsigned bin_size) {
    unsigned long cap = 1;  // every subset sum is < sum(terms) + 1
    for (unsigned long t : terms) cap += t;
    if (cap > (1ULL << 33))
        throw budget_error("build_constructive: subset-sum table would exceed the work budget");

    const std::size_t nbins = (terms.size() + bin_size - 1) / bin_size;
    std::vector<bool> base(cap, false);
    base[0] = true;
    // Ring of the last skip+2 prefix bitmaps; slot j % (skip+2) holds P[j].
    std::vector<std::vector<bool>> window(skip + 2, base);

    std::vector<bool> prev = base;  // bins 1..j-1
    for (std::size_t j = 1; j <= nbins; ++j) {
        const auto& reach =  // bins 1..j-skip-1 (empty prefix below that)
            j >= skip + 1 ? window[(j - skip - 1) % (skip + 2)] : base;
        std::vector<bool> cur = prev;
        for (std::size_t e = (j - 1) * bin_size; e < std::min(j * bin_size, terms.size()); ++e) {
            const unsigned long t = terms[e];
            for (std::size_t s = cap; s-- > t;)
                if (reach[s - t]) cur[s] = true;
        }
        window[j % (skip + 2)] = cur;
        prev = std::move(cur);
    }
    return prev;
}

}  // namespace

std::vector<Nat> build_constructive(unsigned skip, unsigned bin_size, std::size_t count) {
    if (skip < 1 || bin_size < 1)
        throw std::invalid_argument("build_constructive: skip and bin_size must be >= 1");
    if (count > kConstructiveBudget)
        throw budget_error("build_constructive: count exceeds the exhaustive-search budget of " +
                           std::to_string(kConstructiveBudget));

    std::vector<unsigned long> terms;
    terms.reserve(count);
    while (terms.size() < count) {
        const auto reachable = legal_subset_sums(terms, skip, bin_size);
        unsigned long next = 1;
        while (next < reachable.size() && reachable[next]) ++next;
        terms.push_back(next);
    }
    return {terms.begin(), terms.end()};
}

}  // namespace kentucky
