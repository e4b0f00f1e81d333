#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kentucky/nat.hpp"
#include "kentucky/sequence.hpp"

namespace kentucky {

/// A legal decomposition: strictly increasing indices whose bins are pairwise
/// at least two apart, with value = sum of the indexed terms.  The empty index
/// list represents 0.
struct Decomposition {
    std::vector<std::size_t> indices;
    Nat value;
};

/// True iff consecutive bins differ by >= 2.  Indices must be sorted strictly
/// ascending and >= 1; anything else throws std::invalid_argument.
bool is_legal(std::span<const std::size_t> indices);

/// Greedy decomposition of m >= 0.  Picks the largest a_l <= remainder, then
/// restricts later picks to indices <= l-4 (l even) or <= l-3 (l odd).  The
/// table must already cover m.
Decomposition decompose(const SequenceTable& table, const Nat& m);

/// Same, but extends the table to cover m first.
Decomposition decompose(SequenceTable& table, const Nat& m);

inline constexpr std::size_t kEnumerationBudget = 50;

/// Every legal index set over a_1..a_max_index summing to m, by depth-first
/// search over bins (skip the bin, or take one of its two elements and jump
/// past the adjacent bin).  max_index is capped at kEnumerationBudget.
std::vector<Decomposition> enumerate_all(SequenceTable& table, const Nat& m,
                                         std::size_t max_index);

/// Consecutive index differences, in index order; every entry is >= 3 for a
/// legal decomposition.  Order-insensitive consumers treat it as a multiset.
std::vector<std::size_t> gaps_of(const Decomposition& d);

}  // namespace kentucky
