#pragma once

// Lehmer codes and the factorial number system.
//
// The code of sigma is the digit vector [c_1,...,c_n] with
//     c_i = |{ j > i : sigma(j) < sigma(i) }|,
// so 0 <= c_i <= n-i and c_n = 0. Read with mixed radix weights
// (n-1)!, (n-2)!, ..., 0! the digits spell out the 0-based position of
// sigma in the lexicographic enumeration of its symmetric group, which is
// what rank/unrank below exploit. All arithmetic is exact: ranks that do
// not fit in 64 bits raise std::overflow_error instead of wrapping.

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "permutation.hpp"

namespace lfn {

using LehmerCode = std::vector<int>;

// Factorials up to 20! -- the largest one representable in 64 bits.
inline constexpr int max_factorial_arg = 20;
inline constexpr std::uint64_t factorial_table[max_factorial_arg + 1] = {
    1ULL,
    1ULL,
    2ULL,
    6ULL,
    24ULL,
    120ULL,
    720ULL,
    5040ULL,
    40320ULL,
    362880ULL,
    3628800ULL,
    39916800ULL,
    479001600ULL,
    6227020800ULL,
    87178291200ULL,
    1307674368000ULL,
    20922789888000ULL,
    355687428096000ULL,
    6402373705728000ULL,
    121645100408832000ULL,
    2432902008176640000ULL,
};

inline constexpr std::uint64_t factorial(int n) {
    if (n < 0 || n > max_factorial_arg)
        throw std::overflow_error("factorial of " + std::to_string(n) +
                                  " does not fit in 64 bits");
    return factorial_table[n];
}

// Code of a raw word; the allocation-light path used by the big sweeps.
inline LehmerCode lehmer_code_of_word(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    LehmerCode code(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int smaller_later = 0;
        for (int j = i + 1; j < n; ++j)
            if (word[static_cast<std::size_t>(j)] < word[static_cast<std::size_t>(i)]) ++smaller_later;
        code[static_cast<std::size_t>(i)] = smaller_later;
    }
    return code;
}

inline LehmerCode lehmer_code(const Permutation& sigma) {
    return lehmer_code_of_word(sigma.word());
}

inline bool is_valid_code(const LehmerCode& code) {
    const int n = static_cast<int>(code.size());
    if (n < 1 || n > max_degree) return false;
    for (int i = 1; i <= n; ++i) {
        int digit = code[static_cast<std::size_t>(i - 1)];
        if (digit < 0 || digit > n - i) return false;
    }
    return true;
}

// Rebuilds the unique permutation with the given code: position i takes the
// (c_i + 1)-th smallest value not used yet.
inline Permutation decode(const LehmerCode& code) {
    const int n = static_cast<int>(code.size());
    if (n < 1 || n > max_degree)
        throw std::invalid_argument("code length " + std::to_string(n) +
                                    " out of range 1.." + std::to_string(max_degree));
    for (int i = 1; i <= n; ++i) {
        int digit = code[static_cast<std::size_t>(i - 1)];
        if (digit < 0 || digit > n - i)
            throw std::invalid_argument("digit " + std::to_string(digit) + " at position " +
                                        std::to_string(i) + " out of range 0.." +
                                        std::to_string(n - i));
    }
    std::vector<int> unused(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) unused[static_cast<std::size_t>(v - 1)] = v;
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto it = unused.begin() + code[static_cast<std::size_t>(i)];
        word.push_back(*it);
        unused.erase(it);
    }
    return Permutation(std::move(word));
}

// 0-based position of sigma in the lexicographic order of its group:
// sum of c_i * (n-i)!. Exact or std::overflow_error -- never wraps.
inline std::uint64_t lex_rank(const Permutation& sigma) {
    const LehmerCode code = lehmer_code(sigma);
    const int n = sigma.degree();
    constexpr std::uint64_t maxv = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t rank = 0;
    for (int i = 1; i <= n; ++i) {
        const std::uint64_t digit = static_cast<std::uint64_t>(code[static_cast<std::size_t>(i - 1)]);
        if (digit == 0) continue;  // zero digits never overflow, whatever their weight
        const std::uint64_t weight = factorial(n - i);  // throws when n-i > 20
        if (weight > (maxv - rank) / digit)
            throw std::overflow_error("lexicographic rank does not fit in 64 bits");
        rank += digit * weight;
    }
    return rank;
}

// Factorial-base digits [k_{n-1},...,k_1,k_0] of m, with 0 <= k_i <= i and
// k_0 = 0; read left to right they coincide with the Lehmer code of the
// permutation of degree n at lexicographic position m. Positions with
// i > 20 always carry digit 0 for a 64-bit m, since 21! exceeds 2^64.
inline std::vector<int> factorial_digits(std::uint64_t m, int n) {
    if (n < 1 || n > max_degree)
        throw std::invalid_argument("width " + std::to_string(n) + " out of range 1.." +
                                    std::to_string(max_degree));
    if (n <= max_factorial_arg && m >= factorial(n))
        throw std::invalid_argument("value " + std::to_string(m) + " needs more than " +
                                    std::to_string(n) + " factorial digits");
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    std::uint64_t rest = m;
    for (int i = std::min(n - 1, max_factorial_arg); i >= 1; --i) {
        const std::uint64_t weight = factorial(i);
        digits[static_cast<std::size_t>(n - 1 - i)] = static_cast<int>(rest / weight);
        rest %= weight;
    }
    return digits;  // rest is now < 1, i.e. the mandatory k_0 = 0
}

inline Permutation lex_unrank(std::uint64_t rank, int n) {
    return decode(factorial_digits(rank, n));
}

// Lehmer code of the inverse, digit by digit, without building the inverse:
//     c_i(sigma^{-1}) = c_j(sigma) + j - i   where sigma(j) = i.
inline LehmerCode inverse_code(const Permutation& sigma) {
    const LehmerCode code = lehmer_code(sigma);
    const int n = sigma.degree();
    LehmerCode inv(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int j = 0;
        for (int probe = 1; probe <= n; ++probe)
            if (sigma(probe) == i) {
                j = probe;
                break;
            }
        inv[static_cast<std::size_t>(i - 1)] = code[static_cast<std::size_t>(j - 1)] + j - i;
    }
    return inv;
}

// Code of sigma * (adjacent transposition at s), touching only digits s and
// s+1. Swapping two adjacent word entries exchanges their counts of smaller
// later values, except that the larger of the two entries gains or loses
// the other one:
//   ascent  (sigma(s) < sigma(s+1)):  c_s' = c_{s+1} + 1,  c_{s+1}' = c_s
//   descent (sigma(s) > sigma(s+1)):  c_s' = c_{s+1},      c_{s+1}' = c_s - 1
// Precondition: code == lehmer_code(sigma).
inline LehmerCode code_after_transposition(const LehmerCode& code, const Permutation& sigma,
                                           int s) {
    const int n = sigma.degree();
    if (s < 1 || s > n - 1)
        throw std::invalid_argument("position " + std::to_string(s) + " out of range 1.." +
                                    std::to_string(n - 1));
    LehmerCode result = code;
    const int cs = code[static_cast<std::size_t>(s - 1)];
    const int cs1 = code[static_cast<std::size_t>(s)];
    if (sigma(s) < sigma(s + 1)) {
        result[static_cast<std::size_t>(s - 1)] = cs1 + 1;
        result[static_cast<std::size_t>(s)] = cs;
    } else {
        result[static_cast<std::size_t>(s - 1)] = cs1;
        result[static_cast<std::size_t>(s)] = cs - 1;
    }
    return result;
}

// Pointwise evaluation of the three structural code relations:
//   (a) value bound:     sigma(i) <= i + c_i(sigma)
//   (b) subadditivity:   c_i(sigma tau) <= c_i(tau) + c_{tau(i)}(sigma)
//   (c) index identity:  i + c_i(sigma) == sigma(i) + c_{sigma(i)}(sigma^{-1})
struct CodeInequalityReport {
    int degree = 0;
    std::vector<bool> value_bound;     // (a), indexed by i-1
    std::vector<bool> subadditivity;   // (b)
    std::vector<bool> index_identity;  // (c)

    bool all_pass() const {
        for (bool ok : value_bound)
            if (!ok) return false;
        for (bool ok : subadditivity)
            if (!ok) return false;
        for (bool ok : index_identity)
            if (!ok) return false;
        return true;
    }
};

inline CodeInequalityReport check_code_inequalities(const Permutation& sigma,
                                                    const Permutation& tau) {
    if (sigma.degree() != tau.degree())
        throw std::invalid_argument("degree mismatch: " + std::to_string(sigma.degree()) +
                                    " vs " + std::to_string(tau.degree()));
    const int n = sigma.degree();
    const LehmerCode cs = lehmer_code(sigma);
    const LehmerCode ct = lehmer_code(tau);
    const LehmerCode cst = lehmer_code(compose(sigma, tau));
    const LehmerCode cinv = lehmer_code(inverse(sigma));

    CodeInequalityReport report;
    report.degree = n;
    report.value_bound.resize(static_cast<std::size_t>(n));
    report.subadditivity.resize(static_cast<std::size_t>(n));
    report.index_identity.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const std::size_t at = static_cast<std::size_t>(i - 1);
        report.value_bound[at] = sigma(i) <= i + cs[at];
        report.subadditivity[at] =
            cst[at] <= ct[at] + cs[static_cast<std::size_t>(tau(i) - 1)];
        report.index_identity[at] =
            i + cs[at] == sigma(i) + cinv[static_cast<std::size_t>(sigma(i) - 1)];
    }
    return report;
}

// Text form: "[2,0,0]".
inline std::string to_string(const LehmerCode& code) {
    std::string out = "[";
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(code[i]);
    }
    out += ']';
    return out;
}

// Accepts "[2,0,0]" and "2,0,0".
inline LehmerCode parse_code(std::string_view text) {
    std::string_view body = text;
    while (!body.empty() && (body.front() == ' ' || body.front() == '\t')) body.remove_prefix(1);
    while (!body.empty() && (body.back() == ' ' || body.back() == '\t')) body.remove_suffix(1);
    if (body.size() >= 2 && body.front() == '[' && body.back() == ']') {
        body.remove_prefix(1);
        body.remove_suffix(1);
    }
    if (body.empty()) throw std::invalid_argument("empty code text");
    LehmerCode code;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        std::string_view token = body.substr(
            start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
        while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
        if (token.empty() || token.find_first_not_of("0123456789") != std::string_view::npos)
            throw std::invalid_argument("invalid digit '" + std::string(token) + "'");
        if (token.size() > 2)
            throw std::invalid_argument("digit " + std::string(token) + " out of range");
        code.push_back(std::stoi(std::string(token)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return code;
}

}  // namespace lfn
