#pragma once

// Exhaustive and seeded-random re-verification of every testable statement
// behind the norm, the code formulas, and the distribution counts.
//
// Each suite walks its whole scope in lexicographic order and reports one
// record per property: cases checked, failures, the first counterexample
// (lexicographically least, because iteration is ordered), the seed for any
// sampled part, and wall time. Reports are deterministic given (suite,
// scope, seed); wall time is informational only.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "decomposition.hpp"
#include "distribution.hpp"
#include "lehmer_code.hpp"
#include "norm.hpp"
#include "permutation.hpp"

namespace lfn {

struct PropertyResult {
    std::string name;
    std::string scope;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::string first_counterexample;  // empty when everything passed
    std::uint64_t seed = 0;            // 0 for purely exhaustive properties
    double millis = 0.0;

    bool pass() const { return failed == 0; }
};

struct VerificationReport {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool all_pass() const {
        for (const PropertyResult& property : properties)
            if (!property.pass()) return false;
        return true;
    }

    std::uint64_t total_checked() const {
        std::uint64_t total = 0;
        for (const PropertyResult& property : properties) total += property.checked;
        return total;
    }
};

inline constexpr std::uint64_t default_verification_seed = 20240915;

namespace detail {

// Calls fn(word) for every permutation word of degree n, lexicographically.
template <typename Fn>
void for_each_word(int n, Fn&& fn) {
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
    do {
        fn(word);
    } while (std::next_permutation(word.begin(), word.end()));
}

class PropertyTimer {
public:
    explicit PropertyTimer(PropertyResult& result)
        : result_(result), start_(std::chrono::steady_clock::now()) {}
    ~PropertyTimer() { stop(); }

    // Writes the elapsed time into the result; call before moving it out,
    // or the destructor stamps a local that is already moved-from.
    void stop() {
        if (stopped_) return;
        stopped_ = true;
        result_.millis = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    }

private:
    PropertyResult& result_;
    std::chrono::steady_clock::time_point start_;
    bool stopped_ = false;
};

inline void record_failure(PropertyResult& result, const std::string& counterexample) {
    if (result.failed == 0) result.first_counterexample = counterexample;
    ++result.failed;
}

// Uniform rank below bound, by rejection, so the stream depends only on the
// seed and the standard-mandated mt19937_64 sequence -- identical on every
// platform, unlike the distribution adapters in <random>.
inline std::uint64_t uniform_rank(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t residue =
        (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t draw = gen();
        if (residue == 0 || draw < std::uint64_t{0} - residue) return draw % bound;
    }
}

}  // namespace detail

// Triangle bound ||sigma tau|| <= ||sigma|| + ||tau|| on seeded random pairs.
inline PropertyResult triangle_sample_check(int n, std::uint64_t pairs,
                                            std::uint64_t seed = default_verification_seed) {
    if (n < 2 || n > max_factorial_arg)
        throw std::domain_error("sampled degree " + std::to_string(n) + " out of range 2.." +
                                std::to_string(max_factorial_arg));
    PropertyResult result;
    result.name = "triangle inequality (sampled pairs)";
    result.scope = "S_" + std::to_string(n) + ", " + std::to_string(pairs) + " pairs";
    result.seed = seed;
    detail::PropertyTimer timer(result);

    std::mt19937_64 gen(seed);
    const std::uint64_t group_order = factorial(n);
    for (std::uint64_t i = 0; i < pairs; ++i) {
        const Permutation sigma = lex_unrank(detail::uniform_rank(gen, group_order), n);
        const Permutation tau = lex_unrank(detail::uniform_rank(gen, group_order), n);
        ++result.checked;
        if (norm(compose(sigma, tau)) > norm(sigma) + norm(tau))
            detail::record_failure(result,
                                   "sigma=" + to_string(sigma) + " tau=" + to_string(tau));
    }
    timer.stop();
    return result;
}

// Everything provable about the norm itself, exhaustively over S_n:
// unique minimum, unique maximum, the transposition chain, preservation
// under the degree-raising embedding, invariance under inversion, the
// triangle bound (exhaustive pairs at degree min(n,5), sampled at n above
// that), and the one-transposition delta formula.
inline VerificationReport verify_norm_properties(int n,
                                                 std::uint64_t seed = default_verification_seed) {
    if (n < 2 || n > 7)
        throw std::domain_error("norm suite supports degrees 2..7, got " + std::to_string(n));

    VerificationReport report;
    report.suite = "norm";
    const std::string scope = "S_" + std::to_string(n);

    {
        PropertyResult result;
        result.name = "norm 0 exactly at the identity";
        result.scope = scope;
        detail::PropertyTimer timer(result);
        const Permutation id = identity(n);
        detail::for_each_word(n, [&](const std::vector<int>& word) {
            ++result.checked;
            const bool is_identity = word == id.word();
            if ((norm_of_word(word) == 0) != is_identity)
                detail::record_failure(result, "sigma=" + to_string(Permutation(word)));
        });
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    {
        PropertyResult result;
        result.name = "norm 2^n-(n+1) exactly at the reversal";
        result.scope = scope;
        detail::PropertyTimer timer(result);
        const Permutation reversal = reverse(identity(n));
        const std::uint64_t maximum = max_norm(n);
        detail::for_each_word(n, [&](const std::vector<int>& word) {
            ++result.checked;
            const bool is_reversal = word == reversal.word();
            const std::uint64_t value = norm_of_word(word);
            if (value > maximum || (value == maximum) != is_reversal)
                detail::record_failure(result, "sigma=" + to_string(Permutation(word)));
        });
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    {
        PropertyResult result;
        result.name = "adjacent transpositions: norm 2^{n-1-s}, decreasing in s";
        result.scope = scope;
        detail::PropertyTimer timer(result);
        std::uint64_t previous = 0;
        for (int s = 1; s <= n - 1; ++s) {
            ++result.checked;
            const std::uint64_t direct = norm(adjacent_transposition(n, s));
            const std::uint64_t closed_form = adjacent_transposition_norm(n, s);
            const bool decreasing = s == 1 || direct < previous;
            if (direct != closed_form || !decreasing)
                detail::record_failure(result, "s=" + std::to_string(s));
            previous = direct;
        }
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    {
        PropertyResult result;
        result.name = "prepended fixed point preserves the norm";
        result.scope = scope;
        detail::PropertyTimer timer(result);
        detail::for_each_word(n, [&](const std::vector<int>& word) {
            ++result.checked;
            const Permutation sigma(word);
            if (norm(prepend_fixed_point(sigma)) != norm(sigma))
                detail::record_failure(result, "sigma=" + to_string(sigma));
        });
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    {
        PropertyResult result;
        result.name = "norm invariant under inversion";
        result.scope = scope;
        detail::PropertyTimer timer(result);
        detail::for_each_word(n, [&](const std::vector<int>& word) {
            ++result.checked;
            const Permutation sigma(word);
            if (norm(inverse(sigma)) != norm(sigma))
                detail::record_failure(result, "sigma=" + to_string(sigma));
        });
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    {
        const int pair_degree = std::min(n, 5);
        PropertyResult result;
        result.name = "triangle inequality (exhaustive pairs)";
        result.scope = "S_" + std::to_string(pair_degree) + " x S_" + std::to_string(pair_degree);
        detail::PropertyTimer timer(result);
        detail::for_each_word(pair_degree, [&](const std::vector<int>& sigma_word) {
            const Permutation sigma(sigma_word);
            const std::uint64_t norm_sigma = norm(sigma);
            detail::for_each_word(pair_degree, [&](const std::vector<int>& tau_word) {
                ++result.checked;
                const Permutation tau(tau_word);
                if (norm(compose(sigma, tau)) > norm_sigma + norm(tau))
                    detail::record_failure(result,
                                           "sigma=" + to_string(sigma) + " tau=" + to_string(tau));
            });
        });
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    if (n > 5) report.properties.push_back(triangle_sample_check(n, 100000, seed));

    {
        PropertyResult result;
        result.name = "one-transposition delta: sign, size, and scaling";
        result.scope = scope + ", all s";
        detail::PropertyTimer timer(result);
        detail::for_each_word(n, [&](const std::vector<int>& word) {
            const Permutation sigma(word);
            const std::uint64_t norm_sigma = norm(sigma);
            const LehmerCode code = lehmer_code(sigma);
            for (int s = 1; s <= n - 1; ++s) {
                ++result.checked;
                const std::int64_t delta = transposition_delta(sigma, s);
                const std::uint64_t norm_after = norm(compose(sigma, adjacent_transposition(n, s)));
                const std::int64_t direct =
                    static_cast<std::int64_t>(norm_after) - static_cast<std::int64_t>(norm_sigma);
                const int smaller_digit = std::min(code[static_cast<std::size_t>(s - 1)],
                                                   code[static_cast<std::size_t>(s)]);
                const std::uint64_t expected_size =
                    adjacent_transposition_norm(n, s) >> smaller_digit;
                const std::uint64_t size =
                    static_cast<std::uint64_t>(delta < 0 ? -delta : delta);
                if (delta != direct || size != expected_size)
                    detail::record_failure(result,
                                           "sigma=" + to_string(sigma) + " s=" + std::to_string(s));
            }
        });
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    return report;
}

// The code-level formulas, exhaustively: unit codes of transpositions, the
// value bound, the inverse-code identity (two forms), the one-transposition
// code update, digit/rank consistency, and subadditivity on pairs (at
// degree min(n,4), so the pairwise part stays a few hundred thousand
// evaluations even at the top of the supported range).
inline VerificationReport verify_code_lemmas(int n) {
    if (n < 2 || n > 7)
        throw std::domain_error("code suite supports degrees 2..7, got " + std::to_string(n));

    VerificationReport report;
    report.suite = "lemmas";
    const std::string scope = "S_" + std::to_string(n);

    {
        PropertyResult result;
        result.name = "adjacent transposition codes are unit vectors";
        result.scope = scope;
        detail::PropertyTimer timer(result);
        for (int s = 1; s <= n - 1; ++s) {
            ++result.checked;
            const LehmerCode code = lehmer_code(adjacent_transposition(n, s));
            bool ok = true;
            for (int i = 1; i <= n; ++i)
                if (code[static_cast<std::size_t>(i - 1)] != (i == s ? 1 : 0)) ok = false;
            if (!ok) detail::record_failure(result, "s=" + std::to_string(s));
        }
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    {
        PropertyResult result;
        result.name = "word values obey sigma(i) <= i + c_i";
        result.scope = scope;
        detail::PropertyTimer timer(result);
        detail::for_each_word(n, [&](const std::vector<int>& word) {
            ++result.checked;
            const LehmerCode code = lehmer_code_of_word(word);
            for (int i = 1; i <= n; ++i)
                if (word[static_cast<std::size_t>(i - 1)] > i + code[static_cast<std::size_t>(i - 1)]) {
                    detail::record_failure(result, "sigma=" + to_string(Permutation(word)) +
                                                       " i=" + std::to_string(i));
                    break;
                }
        });
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    {
        PropertyResult result;
        result.name = "inverse code computed digitwise matches the inverse's code";
        result.scope = scope;
        detail::PropertyTimer timer(result);
        detail::for_each_word(n, [&](const std::vector<int>& word) {
            ++result.checked;
            const Permutation sigma(word);
            if (inverse_code(sigma) != lehmer_code(inverse(sigma)))
                detail::record_failure(result, "sigma=" + to_string(sigma));
        });
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    {
        PropertyResult result;
        result.name = "index identity i + c_i(sigma) == sigma(i) + c_{sigma(i)}(inverse)";
        result.scope = scope;
        detail::PropertyTimer timer(result);
        detail::for_each_word(n, [&](const std::vector<int>& word) {
            ++result.checked;
            const Permutation sigma(word);
            const LehmerCode code = lehmer_code(sigma);
            const LehmerCode inv = lehmer_code(inverse(sigma));
            for (int i = 1; i <= n; ++i)
                if (i + code[static_cast<std::size_t>(i - 1)] !=
                    sigma(i) + inv[static_cast<std::size_t>(sigma(i) - 1)]) {
                    detail::record_failure(result, "sigma=" + to_string(sigma) +
                                                       " i=" + std::to_string(i));
                    break;
                }
        });
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    {
        PropertyResult result;
        result.name = "one-transposition code update matches recomputation";
        result.scope = scope + ", all s";
        detail::PropertyTimer timer(result);
        detail::for_each_word(n, [&](const std::vector<int>& word) {
            const Permutation sigma(word);
            const LehmerCode code = lehmer_code(sigma);
            for (int s = 1; s <= n - 1; ++s) {
                ++result.checked;
                if (code_after_transposition(code, sigma, s) !=
                    lehmer_code(compose(sigma, adjacent_transposition(n, s))))
                    detail::record_failure(result,
                                           "sigma=" + to_string(sigma) + " s=" + std::to_string(s));
            }
        });
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    {
        PropertyResult result;
        result.name = "factorial digits of the rank reproduce the code";
        result.scope = scope;
        detail::PropertyTimer timer(result);
        detail::for_each_word(n, [&](const std::vector<int>& word) {
            ++result.checked;
            const Permutation sigma(word);
            if (factorial_digits(lex_rank(sigma), n) != lehmer_code(sigma))
                detail::record_failure(result, "sigma=" + to_string(sigma));
        });
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    {
        const int pair_degree = std::min(n, 4);
        PropertyResult result;
        result.name = "composition codes are subadditive";
        result.scope = "S_" + std::to_string(pair_degree) + " x S_" + std::to_string(pair_degree);
        detail::PropertyTimer timer(result);
        detail::for_each_word(pair_degree, [&](const std::vector<int>& sigma_word) {
            const Permutation sigma(sigma_word);
            detail::for_each_word(pair_degree, [&](const std::vector<int>& tau_word) {
                ++result.checked;
                const Permutation tau(tau_word);
                if (!check_code_inequalities(sigma, tau).all_pass())
                    detail::record_failure(result,
                                           "sigma=" + to_string(sigma) + " tau=" + to_string(tau));
            });
        });
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    return report;
}

// Distribution counts three ways plus the decomposition bijection, for all
// norm values up to max_m (at most 256, which keeps the census inside S_10).
inline VerificationReport verify_distribution(std::uint64_t max_m) {
    if (max_m < 1 || max_m > 256)
        throw std::domain_error("distribution suite supports 1..256, got " +
                                std::to_string(max_m));

    VerificationReport report;
    report.suite = "distribution";
    const std::string scope = "m <= " + std::to_string(max_m);
    DistributionSession session;

    {
        PropertyResult result;
        result.name = "recursion matches enumeration on the live block sizes";
        result.scope = scope;
        detail::PropertyTimer timer(result);
        for (std::uint64_t m = 1; m <= max_m; ++m) {
            const int q = top_bit(m);
            for (int k = std::max(0, q - 1); k <= q; ++k) {
                ++result.checked;
                if (session.s_k(m, k) != s_k_bruteforce(m, k))
                    detail::record_failure(result,
                                           "m=" + std::to_string(m) + " k=" + std::to_string(k));
            }
        }
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    {
        PropertyResult result;
        result.name = "counts vanish outside the two live block sizes";
        result.scope = scope;
        detail::PropertyTimer timer(result);
        for (std::uint64_t m = 1; m <= max_m; ++m) {
            const int q = top_bit(m);
            for (int k = 0; k <= q + 3; ++k) {
                if (k == q || k == q - 1) continue;
                ++result.checked;
                if (session.s_k(m, k) != 0 || s_k_bruteforce(m, k) != 0)
                    detail::record_failure(result,
                                           "m=" + std::to_string(m) + " k=" + std::to_string(k));
            }
        }
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    {
        PropertyResult result;
        const int census_degree = top_bit(max_m) + 2;
        result.name = "one-group census agrees with the recursion";
        result.scope = scope + ", census S_" + std::to_string(census_degree);
        detail::PropertyTimer timer(result);
        const std::vector<std::uint64_t> counts = norm_histogram(census_degree);
        for (std::uint64_t m = 1; m <= max_m; ++m) {
            ++result.checked;
            if (counts[static_cast<std::size_t>(m)] != session.s_total(m))
                detail::record_failure(result, "m=" + std::to_string(m));
        }
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    {
        PropertyResult result;
        result.name = "decomposition -> permutation -> decomposition round trip";
        result.scope = "all decompositions of value <= " + std::to_string(max_m);
        detail::PropertyTimer timer(result);
        for (std::uint64_t m = 1; m <= max_m; ++m) {
            const int q = top_bit(m);
            for (int k = std::max(0, q - 1); k <= q; ++k) {
                for (const Decomposition& dec : enumerate_Sk(m, k)) {
                    ++result.checked;
                    const Permutation sigma = decomposition_to_permutation(dec);
                    if (norm(sigma) != m || lehmer_code(sigma)[0] == 0 ||
                        permutation_to_decomposition(sigma) != dec)
                        detail::record_failure(result, "dec=" + to_string(dec));
                }
            }
        }
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    {
        const int degree = std::min(9, top_bit(max_m) + 2);
        PropertyResult result;
        result.name = "permutation -> decomposition -> permutation round trip";
        result.scope = "S_" + std::to_string(degree) + ", nonzero leading digit";
        detail::PropertyTimer timer(result);
        detail::for_each_word(degree, [&](const std::vector<int>& word) {
            if (word[0] == 1) return;  // leading digit c_1 = sigma(1) - 1 = 0
            ++result.checked;
            const Permutation sigma(word);
            const Decomposition dec = permutation_to_decomposition(sigma);
            if (decomposition_value(dec) != norm(sigma) ||
                decomposition_to_permutation(dec) != sigma)
                detail::record_failure(result, "sigma=" + to_string(sigma));
        });
        timer.stop();
        report.properties.push_back(std::move(result));
    }

    return report;
}

// Line-oriented rendering, one property per line plus a verdict.
inline std::string to_text(const VerificationReport& report) {
    std::string out = "suite: " + report.suite + "\n";
    for (const PropertyResult& property : report.properties) {
        char millis[32];
        std::snprintf(millis, sizeof millis, "%.1f", property.millis);
        out += property.pass() ? "  [PASS] " : "  [FAIL] ";
        out += property.name + " | scope " + property.scope + " | checked " +
               std::to_string(property.checked) + " | failed " + std::to_string(property.failed);
        if (property.seed != 0) out += " | seed " + std::to_string(property.seed);
        out += " | ";
        out += millis;
        out += " ms";
        if (!property.pass()) out += " | first counterexample: " + property.first_counterexample;
        out += '\n';
    }
    out += report.all_pass() ? "result: PASS" : "result: FAIL";
    out += " (" + std::to_string(report.properties.size()) + " properties, " +
           std::to_string(report.total_checked()) + " checks)\n";
    return out;
}

}  // namespace lfn
