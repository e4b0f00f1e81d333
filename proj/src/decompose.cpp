#include "kentucky/decompose.hpp"

#include <algorithm>
#include <stdexcept>

#include "kentucky/errors.hpp"

namespace kentucky {

bool is_legal(std::span<const std::size_t> indices) {
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] < 1)
            throw std::invalid_argument("is_legal: indices are 1-based");
        if (j > 0 && indices[j] <= indices[j - 1])
            throw std::invalid_argument("is_legal: indices must be strictly ascending");
    }
    for (std::size_t j = 1; j < indices.size(); ++j)
        if (SequenceTable::bin_of(indices[j]) < SequenceTable::bin_of(indices[j - 1]) + 2)
            return false;
    return true;
}

namespace {

// After picking index l, later picks may use indices up to l-4 (l even) or
// l-3 (l odd): exactly the indices whose bin is at least two below bin(l).
std::size_t cap_after(std::size_t l) {
    if (l % 2 == 0) return l >= 4 ? l - 4 : 0;
    return l >= 3 ? l - 3 : 0;
}

}  // namespace

Decomposition decompose(const SequenceTable& table, const Nat& m) {
    if (m < 0) throw std::invalid_argument("decompose: value must be non-negative");
    Decomposition d;
    d.value = m;
    if (m == 0) return d;
    if (!table.covers(m)) throw std::invalid_argument("decompose: table does not cover the value");

    Nat remainder = m;
    std::size_t cap = table.size();
    while (remainder > 0) {
        if (cap == 0) throw invariant_error("decompose: greedy ran out of admissible indices");
        const std::size_t l = table.largest_index_leq(remainder, cap);
        d.indices.push_back(l);
        remainder -= table.term(l);
        cap = cap_after(l);
    }
    std::reverse(d.indices.begin(), d.indices.end());
    return d;
}

Decomposition decompose(SequenceTable& table, const Nat& m) {
    if (m >= 0) table.extend_to_cover(m);
    return decompose(std::as_const(table), m);
}

namespace {

struct Enumerator {
    const SequenceTable& table;
    std::size_t max_index;
    std::vector<Nat> prefix_sum;           // prefix_sum[i] = a_1 + ... + a_i
    std::vector<std::size_t> picked;       // descending while recursing
    std::vector<Decomposition> out;

    void run(const Nat& target) {
        dfs(SequenceTable::bin_of(max_index), target);
    }

    void dfs(std::size_t bin, const Nat& remaining) {
        if (remaining == 0) {
            Decomposition d;
            d.indices.assign(picked.rbegin(), picked.rend());
            for (std::size_t l : d.indices) d.value += table.term(l);
            out.push_back(std::move(d));
            return;
        }
        if (bin == 0) return;
        const std::size_t top = std::min(2 * bin, max_index);
        if (remaining > prefix_sum[top]) return;  // not enough mass left
        dfs(bin - 1, remaining);                  // skip this bin
        for (std::size_t l : {2 * bin - 1, 2 * bin}) {
            if (l > max_index) continue;
            const Nat& t = table.term(l);
            if (t > remaining) continue;
            picked.push_back(l);
            dfs(bin >= 2 ? bin - 2 : 0, remaining - t);
            picked.pop_back();
        }
    }
};

}  // namespace

std::vector<Decomposition> enumerate_all(SequenceTable& table, const Nat& m,
                                         std::size_t max_index) {
    if (max_index > kEnumerationBudget)
        throw budget_error("enumerate_all: max_index exceeds the exhaustive budget of " +
                           std::to_string(kEnumerationBudget));
    if (m < 0) throw std::invalid_argument("enumerate_all: value must be non-negative");
    table.extend(max_index);

    Enumerator e{table, max_index, {}, {}, {}};
    e.prefix_sum.resize(max_index + 1);
    for (std::size_t i = 1; i <= max_index; ++i)
        e.prefix_sum[i] = e.prefix_sum[i - 1] + table.term(i);
    e.run(m);
    return std::move(e.out);
}

std::vector<std::size_t> gaps_of(const Decomposition& d) {
    std::vector<std::size_t> gaps;
    for (std::size_t j = 1; j < d.indices.size(); ++j)
        gaps.push_back(d.indices[j] - d.indices[j - 1]);
    return gaps;
}

}  // namespace kentucky
