#pragma once

// Permutations in one-line notation, 1-based as written by hand:
// sigma = (sigma(1),...,sigma(n)). Values are immutable; every operation
// returns a fresh permutation. The degree is capped at 62 so that all norm
// arithmetic elsewhere in the library stays inside exact unsigned 64-bit
// integers (the largest norm of a degree-n permutation is 2^n - (n+1)).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lfn {

inline constexpr int max_degree = 62;

class Permutation {
public:
    // word must be a bijection of {1,...,n} with 1 <= n <= max_degree.
    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        validate(word_);
    }

    int degree() const { return static_cast<int>(word_.size()); }

    // 1-based application: sigma(i) for 1 <= i <= n.
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& word() const { return word_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    static void validate(const std::vector<int>& word) {
        if (word.empty())
            throw std::invalid_argument("empty permutation (the smallest group has degree 1)");
        if (word.size() > static_cast<std::size_t>(max_degree))
            throw std::invalid_argument("degree " + std::to_string(word.size()) +
                                        " exceeds the cap of " + std::to_string(max_degree));
        const int n = static_cast<int>(word.size());
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int value : word) {
            if (value < 1 || value > n)
                throw std::invalid_argument("value " + std::to_string(value) +
                                            " out of range 1.." + std::to_string(n));
            if (seen[static_cast<std::size_t>(value - 1)])
                throw std::invalid_argument("duplicate value " + std::to_string(value));
            seen[static_cast<std::size_t>(value - 1)] = true;
        }
    }

    std::vector<int> word_;
};

inline Permutation make_permutation(std::vector<int> word) {
    return Permutation(std::move(word));
}

inline Permutation identity(int n) {
    if (n < 1)
        throw std::invalid_argument("degree must be at least 1, got " + std::to_string(n));
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(word));
}

// Composition acts right-to-left: (sigma tau)(i) = sigma(tau(i)).
inline Permutation compose(const Permutation& sigma, const Permutation& tau) {
    if (sigma.degree() != tau.degree())
        throw std::invalid_argument("degree mismatch: " + std::to_string(sigma.degree()) +
                                    " vs " + std::to_string(tau.degree()));
    const int n = sigma.degree();
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) word[static_cast<std::size_t>(i - 1)] = sigma(tau(i));
    return Permutation(std::move(word));
}

inline Permutation inverse(const Permutation& sigma) {
    const int n = sigma.degree();
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) word[static_cast<std::size_t>(sigma(i) - 1)] = i;
    return Permutation(std::move(word));
}

// Reversal reads the word back to front: result(i) = sigma(n+1-i).
inline Permutation reverse(const Permutation& sigma) {
    std::vector<int> word(sigma.word().rbegin(), sigma.word().rend());
    return Permutation(std::move(word));
}

// The adjacent transposition swapping s and s+1 and fixing everything else.
inline Permutation adjacent_transposition(int n, int s) {
    if (n < 2)
        throw std::invalid_argument("adjacent transpositions need degree >= 2");
    if (s < 1 || s > n - 1)
        throw std::invalid_argument("position " + std::to_string(s) +
                                    " out of range 1.." + std::to_string(n - 1));
    Permutation sigma = identity(n);
    std::vector<int> word = sigma.word();
    std::swap(word[static_cast<std::size_t>(s - 1)], word[static_cast<std::size_t>(s)]);
    return Permutation(std::move(word));
}

// Degree-raising embedding that inserts a new fixed point in front:
// (sigma(1),...,sigma(n)) -> (1, sigma(1)+1,..., sigma(n)+1).
// This is the embedding under which the norm is invariant.
inline Permutation prepend_fixed_point(const Permutation& sigma) {
    const int n = sigma.degree();
    std::vector<int> word(static_cast<std::size_t>(n + 1));
    word[0] = 1;
    for (int i = 1; i <= n; ++i) word[static_cast<std::size_t>(i)] = sigma(i) + 1;
    return Permutation(std::move(word));
}

// Degree-raising embedding that appends a new fixed point at the end:
// (sigma(1),...,sigma(n)) -> (sigma(1),...,sigma(n), n+1).
inline Permutation append_fixed_point(const Permutation& sigma) {
    std::vector<int> word = sigma.word();
    word.push_back(sigma.degree() + 1);
    return Permutation(std::move(word));
}

// Text form: "(3,1,2)".
inline std::string to_string(const Permutation& sigma) {
    std::string out = "(";
    for (int i = 1; i <= sigma.degree(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(sigma(i));
    }
    out += ')';
    return out;
}

// Accepts "3,1,2" and "(3,1,2)"; whitespace around entries is tolerated.
inline Permutation parse_permutation(std::string_view text) {
    std::string_view body = text;
    while (!body.empty() && (body.front() == ' ' || body.front() == '\t')) body.remove_prefix(1);
    while (!body.empty() && (body.back() == ' ' || body.back() == '\t')) body.remove_suffix(1);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
        body.remove_prefix(1);
        body.remove_suffix(1);
    }
    if (body.empty()) throw std::invalid_argument("empty permutation text");

    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        std::string_view token = body.substr(
            start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
        while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
        if (token.empty() || token.find_first_not_of("0123456789") != std::string_view::npos)
            throw std::invalid_argument("invalid entry '" + std::string(token) + "'");
        tokens.emplace_back(token);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }

    const int n = static_cast<int>(tokens.size());
    std::vector<int> word;
    word.reserve(tokens.size());
    for (const std::string& token : tokens) {
        // Oversized tokens cannot belong to any valid word; report them with
        // the range the caller actually has to hit.
        if (token.size() > 2)
            throw std::invalid_argument("value " + token + " out of range 1.." + std::to_string(n));
        word.push_back(std::stoi(token));
    }
    return Permutation(std::move(word));
}

}  // namespace lfn
