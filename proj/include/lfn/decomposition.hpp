#pragma once

// Block decompositions of a natural number.
//
// A block (e, l) with 0 <= l <= e stands for the sum of consecutive powers
// of two 2^e + 2^{e-1} + ... + 2^{e-l}, i.e. the value 2^{e+1} - 2^{e-l}.
// A decomposition of m is a nonempty sequence of blocks with strictly
// decreasing leading exponents whose values add up to m. Decompositions
// with leading exponent k are exactly what the distribution machinery
// counts: each one corresponds to a unique permutation (of degree k+2,
// with nonzero leading Lehmer digit) whose norm is m, and the two
// directions of that correspondence live here as well.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lehmer_code.hpp"
#include "norm.hpp"
#include "permutation.hpp"

namespace lfn {

struct Block {
    int lead = 0;  // exponent of the largest power of two in the block
    int len = 0;   // how far the run extends downward: 2^lead + ... + 2^{lead-len}

    friend bool operator==(const Block&, const Block&) = default;
    friend auto operator<=>(const Block&, const Block&) = default;
};

inline constexpr std::uint64_t block_value(const Block& block) {
    return (std::uint64_t{1} << (block.lead + 1)) - (std::uint64_t{1} << (block.lead - block.len));
}

struct Decomposition {
    std::vector<Block> blocks;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
    friend auto operator<=>(const Decomposition&, const Decomposition&) = default;
};

inline bool is_valid_decomposition(const Decomposition& dec) {
    if (dec.blocks.empty()) return false;
    int previous_lead = -1;
    for (std::size_t j = 0; j < dec.blocks.size(); ++j) {
        const Block& block = dec.blocks[j];
        if (block.lead < 0 || block.len < 0 || block.len > block.lead) return false;
        if (j > 0 && block.lead >= previous_lead) return false;
        previous_lead = block.lead;
    }
    return true;
}

inline Decomposition make_decomposition(std::vector<Block> blocks) {
    Decomposition dec{std::move(blocks)};
    if (dec.blocks.empty()) throw std::invalid_argument("a decomposition needs at least one block");
    int previous_lead = -1;
    for (std::size_t j = 0; j < dec.blocks.size(); ++j) {
        const Block& block = dec.blocks[j];
        if (block.lead < 0)
            throw std::invalid_argument("negative leading exponent " + std::to_string(block.lead));
        if (block.len < 0 || block.len > block.lead)
            throw std::invalid_argument("block length " + std::to_string(block.len) +
                                        " out of range 0.." + std::to_string(block.lead));
        if (j > 0 && block.lead >= previous_lead)
            throw std::invalid_argument("leading exponents must strictly decrease, got " +
                                        std::to_string(previous_lead) + " then " +
                                        std::to_string(block.lead));
        previous_lead = block.lead;
    }
    return dec;
}

inline std::uint64_t decomposition_value(const Decomposition& dec) {
    std::uint64_t total = 0;
    for (const Block& block : dec.blocks) total += block_value(block);
    return total;
}

// Leading exponent of the first (largest) block.
inline int decomposition_k(const Decomposition& dec) { return dec.blocks.front().lead; }

namespace detail {

// Upper bound for the total value of any block sequence whose leading
// exponents are all <= e. Loose but cheap: good enough to prune the search.
inline constexpr std::uint64_t max_tail_value(int e) {
    if (e < 0) return 0;
    return (std::uint64_t{1} << (e + 2)) - static_cast<std::uint64_t>(e + 2);
}

inline void enumerate_tails(std::uint64_t remaining, int max_lead, std::vector<Block>& prefix,
                            std::vector<Decomposition>& out) {
    if (remaining == 0) {
        out.push_back(Decomposition{prefix});
        return;
    }
    for (int lead = 0; lead <= max_lead; ++lead) {
        for (int len = 0; len <= lead; ++len) {
            const std::uint64_t value = block_value(Block{lead, len});
            if (value > remaining) break;  // longer runs only grow the block
            if (remaining - value > max_tail_value(lead - 1)) continue;
            prefix.push_back(Block{lead, len});
            enumerate_tails(remaining - value, lead - 1, prefix, out);
            prefix.pop_back();
        }
    }
}

}  // namespace detail

// All decompositions of m whose first block has leading exponent exactly k,
// in ascending lexicographic order of their block sequences. Empty when no
// such decomposition exists (in particular whenever k is not the exponent
// of one of the two highest relevant powers of two).
inline std::vector<Decomposition> enumerate_Sk(std::uint64_t m, int k) {
    if (m < 1) throw std::invalid_argument("decomposition targets start at 1");
    if (k < 0 || k > 61)
        throw std::invalid_argument("leading exponent " + std::to_string(k) +
                                    " out of range 0..61");
    std::vector<Decomposition> out;
    std::vector<Block> prefix;
    for (int len = 0; len <= k; ++len) {
        const std::uint64_t value = block_value(Block{k, len});
        if (value > m) break;
        if (m - value > detail::max_tail_value(k - 1)) continue;
        prefix.push_back(Block{k, len});
        detail::enumerate_tails(m - value, k - 1, prefix, out);
        prefix.pop_back();
    }
    return out;
}

// |{ decompositions of m with leading exponent k }| by direct enumeration.
// This is the definitional oracle; it shares nothing with the recursion.
inline std::uint64_t s_k_bruteforce(std::uint64_t m, int k) {
    return static_cast<std::uint64_t>(enumerate_Sk(m, k).size());
}

// The permutation of degree k+2 encoding the decomposition: each block
// (e, l) plants the Lehmer digit l+1 at the position whose weight is 2^e
// in the norm, i.e. c_{n-1-e} = l+1 with n = k+2; all other digits are 0.
// Its norm is exactly the decomposition's value and its leading digit is
// nonzero, making it the minimal-degree representative of its class.
inline Permutation decomposition_to_permutation(const Decomposition& dec) {
    if (!is_valid_decomposition(dec)) throw std::invalid_argument("invalid decomposition");
    const int n = decomposition_k(dec) + 2;
    if (n > max_degree)
        throw std::invalid_argument("leading exponent " + std::to_string(decomposition_k(dec)) +
                                    " needs degree " + std::to_string(n) + " > " +
                                    std::to_string(max_degree));
    LehmerCode code(static_cast<std::size_t>(n), 0);
    for (const Block& block : dec.blocks)
        code[static_cast<std::size_t>(n - 2 - block.lead)] = block.len + 1;
    return decode(code);
}

// Inverse direction: read the nonzero Lehmer digits of sigma as blocks.
// Only defined for minimal-degree representatives, i.e. permutations whose
// leading digit is nonzero; the identity (norm 0) has no decomposition.
inline Decomposition permutation_to_decomposition(const Permutation& sigma) {
    const int n = sigma.degree();
    const LehmerCode code = lehmer_code(sigma);
    if (norm_of_code(code) == 0)
        throw std::domain_error("the identity has norm 0 and no decomposition");
    if (code[0] == 0)
        throw std::domain_error(
            "leading Lehmer digit is 0; strip leading fixed structure first "
            "(only minimal-degree representatives decompose)");
    std::vector<Block> blocks;
    for (int i = 1; i <= n; ++i) {
        const int digit = code[static_cast<std::size_t>(i - 1)];
        if (digit != 0) blocks.push_back(Block{n - 1 - i, digit - 1});
    }
    return Decomposition{std::move(blocks)};
}

// Text form matching the tabulated style: one block prints bare, "(2,1)";
// several print nested, "((2,0),(1,1))".
inline std::string to_string(const Decomposition& dec) {
    std::string body;
    for (std::size_t j = 0; j < dec.blocks.size(); ++j) {
        if (j > 0) body += ',';
        body += '(' + std::to_string(dec.blocks[j].lead) + ',' +
                std::to_string(dec.blocks[j].len) + ')';
    }
    if (dec.blocks.size() == 1) return body;
    return '(' + body + ')';
}

// Sum-of-powers rendering, e.g. "7=[2^2]+[2^1+2^0]": each block lists its
// run of powers inside one pair of brackets.
inline std::string sum_expression(const Decomposition& dec) {
    std::string out = std::to_string(decomposition_value(dec)) + "=";
    for (std::size_t j = 0; j < dec.blocks.size(); ++j) {
        if (j > 0) out += '+';
        out += '[';
        for (int p = 0; p <= dec.blocks[j].len; ++p) {
            if (p > 0) out += '+';
            out += "2^" + std::to_string(dec.blocks[j].lead - p);
        }
        out += ']';
    }
    return out;
}

// Accepts both text forms: "((2,0),(1,1))" and the bare one-block "(2,1)".
inline Decomposition parse_decomposition(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t') compact += c;
    if (compact.size() < 5 || compact.front() != '(' || compact.back() != ')')
        throw std::invalid_argument("expected block pairs like ((2,0),(1,1)) or (2,1)");

    std::vector<Block> blocks;
    std::string_view body = compact;
    if (body.size() >= 2 && body[0] == '(' && body[1] == '(') {  // nested form
        body.remove_prefix(1);
        body.remove_suffix(1);
    }
    std::size_t pos = 0;
    while (pos < body.size()) {
        if (body[pos] == ',') {
            ++pos;
            continue;
        }
        if (body[pos] != '(')
            throw std::invalid_argument("expected '(' at position " + std::to_string(pos));
        const std::size_t close = body.find(')', pos);
        if (close == std::string_view::npos)
            throw std::invalid_argument("unbalanced parentheses");
        std::string_view pair = body.substr(pos + 1, close - pos - 1);
        const std::size_t comma = pair.find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument("block '" + std::string(pair) + "' needs two entries");
        const std::string lead_text(pair.substr(0, comma));
        const std::string len_text(pair.substr(comma + 1));
        if (lead_text.empty() || len_text.empty() ||
            lead_text.find_first_not_of("0123456789") != std::string::npos ||
            len_text.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("block '" + std::string(pair) + "' has invalid entries");
        if (lead_text.size() > 2 || len_text.size() > 2)
            throw std::invalid_argument("block '" + std::string(pair) + "' out of range");
        blocks.push_back(Block{std::stoi(lead_text), std::stoi(len_text)});
        pos = close + 1;
    }
    return make_decomposition(std::move(blocks));
}

}  // namespace lfn
