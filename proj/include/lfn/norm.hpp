#pragma once

// The base-2 factorial norm on permutations and the metric it induces.
//
// With the Lehmer digits c_1,...,c_n of sigma, the norm is
//     ||sigma|| = sum_{i=1}^{n} (2^{n-i} - 2^{n-i-c_i}),
// an exact nonnegative integer between 0 (identity only) and 2^n - (n+1)
// (reversal of the identity only). A digit at an early position contributes
// exponentially more than the same digit later on, which is the whole point:
// the induced distance charges disorder near the top of a ranking far more
// than the same disorder near the bottom.

#include <cstdint>
#include <string>

#include "lehmer_code.hpp"
#include "permutation.hpp"

namespace lfn {

inline std::uint64_t norm_of_code(const LehmerCode& code) {
    const int n = static_cast<int>(code.size());
    std::uint64_t total = 0;
    for (int i = 1; i <= n; ++i) {
        const int digit = code[static_cast<std::size_t>(i - 1)];
        total += (std::uint64_t{1} << (n - i)) - (std::uint64_t{1} << (n - i - digit));
    }
    return total;
}

inline std::uint64_t norm_of_word(const std::vector<int>& word) {
    return norm_of_code(lehmer_code_of_word(word));
}

inline std::uint64_t norm(const Permutation& sigma) {
    return norm_of_word(sigma.word());
}

// Norm of the permutation of degree n at lexicographic position m, computed
// straight from the factorial digits of m without building the permutation.
inline std::uint64_t norm_of_natural(std::uint64_t m, int n) {
    return norm_of_code(factorial_digits(m, n));
}

// The largest norm in degree n: 2^n - (n+1), attained only by the reversal.
inline constexpr std::uint64_t max_norm(int n) {
    return (std::uint64_t{1} << n) - static_cast<std::uint64_t>(n + 1);
}

// Norm of the adjacent transposition at position s in degree n: 2^{n-1-s}.
// Closed form; no permutation is constructed.
inline constexpr std::uint64_t adjacent_transposition_norm(int n, int s) {
    if (n < 2 || s < 1 || s > n - 1)
        throw std::invalid_argument("position " + std::to_string(s) +
                                    " out of range 1.." + std::to_string(n - 1));
    return std::uint64_t{1} << (n - 1 - s);
}

enum class Invariance {
    left,   // d(sigma, tau) = ||sigma^{-1} tau||; d(rho sigma, rho tau) = d(sigma, tau)
    right,  // d(sigma, tau) = ||sigma tau^{-1}||; d(sigma rho, tau rho) = d(sigma, tau)
};

// Distance induced by the norm. The default is the left-invariant form: with
// it, exchanging the entries at positions s and s+1 of any ranking costs
// exactly 2^{n-1-s}, independent of the ranking itself.
inline std::uint64_t distance(const Permutation& sigma, const Permutation& tau,
                              Invariance invariance = Invariance::left) {
    if (sigma.degree() != tau.degree())
        throw std::invalid_argument("degree mismatch: " + std::to_string(sigma.degree()) +
                                    " vs " + std::to_string(tau.degree()));
    return invariance == Invariance::left ? norm(compose(inverse(sigma), tau))
                                          : norm(compose(sigma, inverse(tau)));
}

// Signed norm change caused by one adjacent transposition on the right,
// ||sigma sigma_s|| - ||sigma||, in O(1) from two Lehmer digits:
//   ascent  (sigma(s) < sigma(s+1)):  +2^{n-s-1-c_s}
//   descent (sigma(s) > sigma(s+1)):  -2^{n-s-1-c_{s+1}}
// In absolute value this is the transposition's own norm 2^{n-1-s} scaled
// down by 2^{-min(c_s, c_{s+1})}.
inline std::int64_t transposition_delta(const Permutation& sigma, int s) {
    const int n = sigma.degree();
    if (s < 1 || s > n - 1)
        throw std::invalid_argument("position " + std::to_string(s) + " out of range 1.." +
                                    std::to_string(n - 1));
    int cs = 0;
    int cs1 = 0;
    for (int j = s + 1; j <= n; ++j)
        if (sigma(j) < sigma(s)) ++cs;
    for (int j = s + 2; j <= n; ++j)
        if (sigma(j) < sigma(s + 1)) ++cs1;
    if (sigma(s) < sigma(s + 1))
        return static_cast<std::int64_t>(std::uint64_t{1} << (n - s - 1 - cs));
    return -static_cast<std::int64_t>(std::uint64_t{1} << (n - s - 1 - cs1));
}

// The two one-sided bounds tied to the leading Lehmer digit:
//   c_1 == 0  =>  ||sigma|| <= 2^{n-1} - n   (all disorder sits in the tail)
//   c_1  > 0  =>  ||sigma|| >= 2^{n-2}       (the leading digit alone forces this)
// A permutation moves nothing below its first entry exactly when c_1 = 0,
// so c_1 > 0 characterizes minimal-degree representatives.
struct NormBoundsReport {
    int leading_digit = 0;
    std::uint64_t norm_value = 0;
    std::uint64_t bound = 0;
    bool bound_is_upper = false;
    bool pass = false;
};

inline NormBoundsReport norm_bounds_check(const Permutation& sigma) {
    const int n = sigma.degree();
    NormBoundsReport report;
    report.leading_digit = sigma(1) - 1;  // c_1 counts the later, smaller values
    report.norm_value = norm(sigma);
    if (report.leading_digit == 0) {
        report.bound_is_upper = true;
        report.bound = (std::uint64_t{1} << (n - 1)) - static_cast<std::uint64_t>(n);
        report.pass = report.norm_value <= report.bound;
    } else {
        report.bound_is_upper = false;
        report.bound = std::uint64_t{1} << (n - 2);
        report.pass = report.norm_value >= report.bound;
    }
    return report;
}

}  // namespace lfn
