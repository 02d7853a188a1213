#pragma once

// The distribution of norm values.
//
// s(m) counts the permutations of norm m across all degrees at once, each
// class of the degree-raising embedding counted once -- equivalently, the
// block decompositions of m (see decomposition.hpp). Only two block sizes
// can lead a decomposition of m: with q the exponent of the highest set
// bit, s_k(m) = 0 unless k is q or q-1. This module computes the two live
// counts three independent ways:
//
//   * a memoized recursion dispatched on the binary shape of m,
//   * the definitional enumeration (s_k_bruteforce, decomposition.hpp),
//   * a census of a single symmetric group large enough to contain one
//     representative per class (norm_histogram / s_total_permutation_oracle).
//
// The recursion reduces m strictly, so memoizing on m alone suffices; each
// memo entry stores both live counts.

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "decomposition.hpp"
#include "lehmer_code.hpp"
#include "norm.hpp"
#include "permutation.hpp"

namespace lfn {

// Exponent of the highest set bit; m must be positive.
inline constexpr int top_bit(std::uint64_t m) { return std::bit_width(m) - 1; }

// The binary shapes the recursion dispatches on. Exactly one applies to
// every m >= 1; the two smallest values are their own base cases.
enum class RecursionCase {
    base_one,           // m = 1
    base_two,           // m = 2
    power_of_two,       // m = 2^q, q >= 2
    run_no_tail,        // m = 2^q + ... + 2^l, l < q, nothing below
    run_with_tail,      // maximal run 2^q..2^l (l < q), a zero bit, then a nonzero tail
    top_bit_with_tail,  // m = 2^q + tail with bit q-1 clear and tail nonzero
};

inline RecursionCase classify_recursion_case(std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("distribution counts start at m = 1");
    if (m == 1) return RecursionCase::base_one;
    if (m == 2) return RecursionCase::base_two;
    const int q = top_bit(m);
    int l = q;  // lowest bit of the maximal run of ones that starts at bit q
    while (l > 0 && ((m >> (l - 1)) & 1)) --l;
    const std::uint64_t tail = m & ((std::uint64_t{1} << l) - 1);
    if (l == q) return tail == 0 ? RecursionCase::power_of_two : RecursionCase::top_bit_with_tail;
    return tail == 0 ? RecursionCase::run_no_tail : RecursionCase::run_with_tail;
}

// Memoizing calculator for the two live counts of each m. One session per
// thread of control: the memo is private and grows monotonically.
class DistributionSession {
public:
    // s_k(m): decompositions of m led by a block with exponent k.
    std::uint64_t s_k(std::uint64_t m, int k) {
        if (m == 0 || k < 0) return 0;
        const int q = top_bit(m);
        if (k == q) return live_counts(m).top;
        if (k == q - 1) return live_counts(m).second;
        return 0;
    }

    // s(m) = sum over k; by convention s(0) = 1 (the empty class).
    std::uint64_t s_total(std::uint64_t m) {
        if (m == 0) return 1;
        const LiveCounts counts = live_counts(m);
        return counts.top + counts.second;
    }

private:
    struct LiveCounts {
        std::uint64_t top = 0;     // s_q(m), q = top_bit(m)
        std::uint64_t second = 0;  // s_{q-1}(m)
    };

    // Sum of s_k(x) over k <= kmax: at most the two live counts contribute.
    std::uint64_t sum_up_to(std::uint64_t x, int kmax) {
        if (x == 0 || kmax < 0) return 0;
        const int q = top_bit(x);
        const LiveCounts counts = live_counts(x);
        std::uint64_t total = 0;
        if (q <= kmax) total += counts.top;
        if (q - 1 >= 0 && q - 1 <= kmax) total += counts.second;
        return total;
    }

    LiveCounts live_counts(std::uint64_t m) {
        auto found = memo_.find(m);
        if (found != memo_.end()) return found->second;

        LiveCounts counts;
        const int q = top_bit(m);
        switch (classify_recursion_case(m)) {
            case RecursionCase::base_one:
            case RecursionCase::base_two:
                counts = {1, 0};
                break;

            case RecursionCase::power_of_two: {
                // m = 2^q. Led by (q, 0): the single block is forced.
                counts.top = 1;
                // Led by (q-1, ...): the first block covers 2^{q-1}..2^{q-1-j}
                // and leaves 2^j to the shorter blocks, for each j < q.
                for (int j = 0; j < q; ++j)
                    counts.second += sum_up_to(std::uint64_t{1} << j, q - 2);
                break;
            }

            case RecursionCase::run_no_tail: {
                // m = 2^q + ... + 2^l with l < q.
                const int l = run_low_bit(m, q);
                // Led by (q, ...): the whole run as one block, or the first
                // block stops early at 2^{j+1} leaving 2^j + ... + 2^l.
                counts.top = 1;
                for (int j = l; j < q; ++j)
                    counts.top +=
                        sum_up_to((std::uint64_t{1} << (j + 1)) - (std::uint64_t{1} << l), q - 1);
                // Led by (q-1, ...): the first block covers 2^{q-1}..2^{q-1-j}
                // of the doubled leading power, leaving 2^j plus the rest of
                // the run below bit q.
                const std::uint64_t below_top = m - (std::uint64_t{1} << q);
                for (int j = 0; j < q; ++j)
                    counts.second += sum_up_to(below_top + (std::uint64_t{1} << j), q - 2);
                break;
            }

            case RecursionCase::run_with_tail: {
                // m = (2^q + ... + 2^l) + tail with a zero at bit l-1.
                const int l = run_low_bit(m, q);
                const std::uint64_t tail = m & ((std::uint64_t{1} << l) - 1);
                // Led by (q, ...): either the block is the whole run (tail
                // remains), or it stops inside the run.
                counts.top = sum_up_to(tail, q - 1);
                for (int j = l; j < q; ++j)
                    counts.top += sum_up_to(
                        (std::uint64_t{1} << (j + 1)) - (std::uint64_t{1} << l) + tail, q - 1);
                // Led by (q-1, ...): as in the tailless case, with the tail
                // carried along.
                const std::uint64_t below_top = m - (std::uint64_t{1} << q);
                for (int j = 0; j < q; ++j)
                    counts.second += sum_up_to(below_top + (std::uint64_t{1} << j), q - 2);
                break;
            }

            case RecursionCase::top_bit_with_tail: {
                // m = 2^q + tail, bit q-1 clear, tail nonzero.
                const std::uint64_t tail = m - (std::uint64_t{1} << q);
                counts.top = sum_up_to(tail, q - 1);
                for (int j = 0; j < q; ++j)
                    counts.second += sum_up_to(tail + (std::uint64_t{1} << j), q - 2);
                break;
            }
        }

        memo_.emplace(m, counts);
        return counts;
    }

    static int run_low_bit(std::uint64_t m, int q) {
        int l = q;
        while (l > 0 && ((m >> (l - 1)) & 1)) --l;
        return l;
    }

    std::unordered_map<std::uint64_t, LiveCounts> memo_;
};

// One-shot conveniences; batch callers should keep their own session.
inline std::uint64_t s_k_recursive(std::uint64_t m, int k) {
    DistributionSession session;
    return session.s_k(m, k);
}

inline std::uint64_t s_total(std::uint64_t m) {
    DistributionSession session;
    return session.s_total(m);
}

struct DistributionRow {
    std::uint64_t m = 0;
    int top_k = 0;               // exponent of the highest set bit of m
    std::uint64_t s_top = 0;     // decompositions led by exponent top_k
    std::uint64_t s_second = 0;  // decompositions led by exponent top_k - 1
    std::uint64_t s = 0;         // s(m) = s_top + s_second
    std::uint64_t d = 0;         // cumulative: d(m) = s(1) + ... + s(m)
};

struct DistributionTable {
    std::vector<DistributionRow> rows;  // m = 1..max_m, in order
};

// The table for m = 1..max_m via the recursion; the cumulative column
// starts at s(1) (it does not include the conventional s(0) = 1).
inline DistributionTable distribution_table(std::uint64_t max_m) {
    if (max_m < 1) throw std::invalid_argument("table needs max_m >= 1");
    DistributionSession session;
    DistributionTable table;
    table.rows.reserve(static_cast<std::size_t>(max_m));
    std::uint64_t cumulative = 0;
    for (std::uint64_t m = 1; m <= max_m; ++m) {
        DistributionRow row;
        row.m = m;
        row.top_k = top_bit(m);
        row.s_top = session.s_k(m, row.top_k);
        row.s_second = row.top_k >= 1 ? session.s_k(m, row.top_k - 1) : 0;
        row.s = row.s_top + row.s_second;
        cumulative += row.s;
        row.d = cumulative;
        table.rows.push_back(row);
    }
    return table;
}

inline constexpr int max_census_degree = 12;  // 12! is the desk-scale ceiling

// Census of one whole symmetric group: counts[v] = |{sigma in S_n : norm = v}|.
// The sweep walks lexicographic rank ranges in fixed-size chunks, re-seeding
// each chunk by unranking its first element; the result is independent of
// the chunk size, which keeps the partitioning honest and testable.
inline std::vector<std::uint64_t> norm_histogram(int n, std::uint64_t chunk_size = 40320) {
    if (n < 1 || n > max_census_degree)
        throw std::domain_error("census degree " + std::to_string(n) + " out of range 1.." +
                                std::to_string(max_census_degree));
    if (chunk_size < 1) throw std::invalid_argument("chunk size must be positive");
    const std::uint64_t group_order = factorial(n);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_norm(n)) + 1, 0);
    for (std::uint64_t start = 0; start < group_order; start += chunk_size) {
        const std::uint64_t stop = std::min(group_order, start + chunk_size);
        std::vector<int> word = lex_unrank(start, n).word();
        for (std::uint64_t rank = start; rank < stop; ++rank) {
            ++counts[static_cast<std::size_t>(norm_of_word(word))];
            std::next_permutation(word.begin(), word.end());
        }
    }
    return counts;
}

// s(m) by counting permutations of norm m in one group. Degree
// floor(log2 m) + 2 suffices: every class of norm m has a representative
// there (a nonzero leading digit forces norm >= 2^{degree-2}), and exactly
// one per class because the degree-raising embedding preserves the norm.
inline std::uint64_t s_total_permutation_oracle(std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("the census counts norms m >= 1");
    const int degree = top_bit(m) + 2;
    if (degree > max_census_degree)
        throw std::domain_error("norm " + std::to_string(m) + " needs a census of degree " +
                                std::to_string(degree) + " > " +
                                std::to_string(max_census_degree));
    const std::vector<std::uint64_t> counts = norm_histogram(degree);
    return counts[static_cast<std::size_t>(m)];
}

}  // namespace lfn
