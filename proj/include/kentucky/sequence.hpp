#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kentucky/nat.hpp"

namespace kentucky {

/// Cached prefix a_1, a_2, ... of the Kentucky-2 sequence.
///
/// Terms are grouped into bins of two, b_k = {a_{2k-1}, a_{2k}}; a legal sum
/// never takes two summands from the same bin or from adjacent bins.  The
/// table satisfies a_1..a_4 = 1,2,3,4 and a_n = a_{n-2} + 2*a_{n-4}, and it
/// only ever grows: once extended, terms are immutable and the table may be
/// shared read-only across threads.
class SequenceTable {
public:
    static constexpr unsigned kSkip = 1;
    static constexpr unsigned kBinSize = 2;

    SequenceTable() = default;
    explicit SequenceTable(std::size_t up_to) { extend(up_to); }

    /// Populate terms 1..up_to; no-op on an already covered prefix.
    void extend(std::size_t up_to);

    /// Grow until the last cached term is strictly greater than value.
    void extend_to_cover(const Nat& value);

    std::size_t size() const { return terms_.size(); }
    bool covers(const Nat& value) const { return !terms_.empty() && terms_.back() >= value; }

    /// 1-based access; index must be cached.
    const Nat& term(std::size_t n) const;

    std::span<const Nat> terms() const { return terms_; }

    /// Largest index l <= cap with a_l <= value.  value >= 1, the table must
    /// cover value, and cap >= 1.  Constant-time: a_{2k} = 2^k locates the
    /// candidate window from the bit length of value.
    std::size_t largest_index_leq(const Nat& value, std::size_t cap) const;

    static constexpr std::size_t bin_of(std::size_t index) { return (index + 1) / 2; }

private:
    std::vector<Nat> terms_;
};

/// a_{2k} = 2^k and a_{2k-1} = (2^{k+1} + (-1)^k)/3, n >= 1.
Nat term_closed_form(std::size_t n);

inline constexpr std::size_t kConstructiveBudget = 40;

/// Adjoining construction for the general (s,b) rule: repeatedly append the
/// smallest positive integer that no legal sum of the current terms reaches
/// (at most one summand per bin of size b, chosen bins more than s apart).
/// Exhaustive over legal bin subsets; capped at kConstructiveBudget terms.
std::vector<Nat> build_constructive(unsigned skip, unsigned bin_size, std::size_t count);

}  // namespace kentucky
