// Command-line front end. Every command is a thin adapter over the library:
// parse arguments, call one operation, print its text form. Exit codes:
// 0 success (verify: all properties passed), 1 verification failures,
// 2 usage errors, unparseable input, or guard violations.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lfn/lfn.hpp"

namespace {

// Where a command writes: stdout by default, a file when -o/--output is
// given. Opened in binary mode so emitted bytes are exactly what a golden
// diff sees.
struct OutputTarget {
    std::string path;
    std::ofstream file;

    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file.is_open()) {
            file.open(path, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
        }
        return file;
    }
};

void emit_distribution_csv(std::ostream& out, std::uint64_t max_m, const std::string& method) {
    if (max_m < 1) throw std::domain_error("--max must be at least 1");
    out << "m,s,d\n";
    if (method == "recursion") {
        const lfn::DistributionTable table = lfn::distribution_table(max_m);
        for (const lfn::DistributionRow& row : table.rows)
            out << row.m << ',' << row.s << ',' << row.d << '\n';
        return;
    }
    if (method == "definition") {
        std::uint64_t cumulative = 0;
        for (std::uint64_t m = 1; m <= max_m; ++m) {
            const int q = lfn::top_bit(m);
            std::uint64_t s = lfn::s_k_bruteforce(m, q);
            if (q >= 1) s += lfn::s_k_bruteforce(m, q - 1);
            cumulative += s;
            out << m << ',' << s << ',' << cumulative << '\n';
        }
        return;
    }
    // method == "permutations": one census of the smallest group that holds a
    // representative of every class with norm <= max_m.
    if (max_m > 256) throw std::domain_error("method 'permutations' supports --max up to 256");
    const std::vector<std::uint64_t> counts = lfn::norm_histogram(lfn::top_bit(max_m) + 2);
    std::uint64_t cumulative = 0;
    for (std::uint64_t m = 1; m <= max_m; ++m) {
        cumulative += counts[static_cast<std::size_t>(m)];
        out << m << ',' << counts[static_cast<std::size_t>(m)] << ',' << cumulative << '\n';
    }
}

// One line per decomposition of m, smaller leading exponents first, block
// sequences in ascending lexicographic order within each exponent:
//   sum expression ; Lehmer code of the matching permutation ; blocks ; set
void emit_decompositions(std::ostream& out, std::uint64_t m) {
    if (m < 1 || m > 512) throw std::domain_error("supported range is 1..512");
    const int q = lfn::top_bit(m);
    for (int k = std::max(0, q - 1); k <= q; ++k) {
        for (const lfn::Decomposition& dec : lfn::enumerate_Sk(m, k)) {
            const lfn::Permutation sigma = lfn::decomposition_to_permutation(dec);
            out << lfn::sum_expression(dec) << ';' << lfn::to_string(lfn::lehmer_code(sigma))
                << ';' << lfn::to_string(dec) << ";S_" << k << '(' << m << ")\n";
        }
    }
}

nlohmann::json report_to_json(const lfn::VerificationReport& report) {
    nlohmann::json doc;
    doc["suite"] = report.suite;
    doc["pass"] = report.all_pass();
    doc["properties"] = nlohmann::json::array();
    for (const lfn::PropertyResult& property : report.properties) {
        doc["properties"].push_back({
            {"name", property.name},
            {"scope", property.scope},
            {"checked", property.checked},
            {"failed", property.failed},
            {"seed", property.seed},
            {"millis", property.millis},
            {"first_counterexample", property.first_counterexample},
        });
    }
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Lehmer codes, lexicographic rank/unrank, the base-2 factorial norm with its\n"
        "position-sensitive metric, and the distribution of norm values."};
    app.require_subcommand(1);
    app.fallthrough();  // let the global -o/--output follow the subcommand too

    OutputTarget output;
    app.add_option("-o,--output", output.path, "write output to this file instead of stdout");

    int exit_code = 0;

    // ---- code ----
    std::string code_perm;
    CLI::App* cmd_code = app.add_subcommand("code", "Lehmer code of a permutation");
    cmd_code->add_option("permutation", code_perm, "one-line notation, e.g. 3,1,2")->required();
    cmd_code->callback([&] {
        output.stream() << lfn::to_string(lfn::lehmer_code(lfn::parse_permutation(code_perm)))
                        << '\n';
    });

    // ---- decode ----
    std::string decode_code;
    CLI::App* cmd_decode = app.add_subcommand("decode", "permutation with the given Lehmer code");
    cmd_decode->add_option("code", decode_code, "digit list, e.g. [2,0,0]")->required();
    cmd_decode->callback([&] {
        output.stream() << lfn::to_string(lfn::decode(lfn::parse_code(decode_code))) << '\n';
    });

    // ---- norm ----
    std::string norm_perm;
    std::uint64_t norm_rank = 0;
    int norm_degree = 0;
    CLI::App* cmd_norm =
        app.add_subcommand("norm", "norm of a permutation, given directly or by rank");
    CLI::Option* norm_pos = cmd_norm->add_option("permutation", norm_perm, "one-line notation");
    CLI::Option* norm_rank_opt =
        cmd_norm->add_option("--rank", norm_rank, "lexicographic position, 0-based");
    CLI::Option* norm_degree_opt =
        cmd_norm->add_option("--degree", norm_degree, "group degree for --rank");
    norm_rank_opt->needs(norm_degree_opt);
    norm_degree_opt->needs(norm_rank_opt);
    norm_pos->excludes(norm_rank_opt);
    cmd_norm->callback([&] {
        if (norm_pos->count() > 0)
            output.stream() << lfn::norm(lfn::parse_permutation(norm_perm)) << '\n';
        else if (norm_rank_opt->count() > 0)
            output.stream() << lfn::norm_of_natural(norm_rank, norm_degree) << '\n';
        else
            throw CLI::RequiredError("norm needs a permutation or --rank with --degree");
    });

    // ---- rank ----
    std::string rank_perm;
    CLI::App* cmd_rank = app.add_subcommand("rank", "0-based lexicographic position");
    cmd_rank->add_option("permutation", rank_perm, "one-line notation")->required();
    cmd_rank->callback(
        [&] { output.stream() << lfn::lex_rank(lfn::parse_permutation(rank_perm)) << '\n'; });

    // ---- unrank ----
    std::uint64_t unrank_rank = 0;
    int unrank_degree = 0;
    CLI::App* cmd_unrank =
        app.add_subcommand("unrank", "permutation at a lexicographic position");
    cmd_unrank->add_option("--rank", unrank_rank, "lexicographic position, 0-based")->required();
    cmd_unrank->add_option("--degree", unrank_degree, "group degree")->required();
    cmd_unrank->callback([&] {
        output.stream() << lfn::to_string(lfn::lex_unrank(unrank_rank, unrank_degree)) << '\n';
    });

    // ---- dist ----
    std::string dist_sigma;
    std::string dist_tau;
    std::string dist_invariance = "left";
    CLI::App* cmd_dist = app.add_subcommand("dist", "distance between two permutations");
    cmd_dist->add_option("sigma", dist_sigma, "one-line notation")->required();
    cmd_dist->add_option("tau", dist_tau, "one-line notation")->required();
    cmd_dist->add_option("--invariance", dist_invariance, "left (default) or right")
        ->check(CLI::IsMember({"left", "right"}));
    cmd_dist->callback([&] {
        const lfn::Invariance invariance =
            dist_invariance == "left" ? lfn::Invariance::left : lfn::Invariance::right;
        output.stream() << lfn::distance(lfn::parse_permutation(dist_sigma),
                                         lfn::parse_permutation(dist_tau), invariance)
                        << '\n';
    });

    // ---- delta ----
    std::string delta_perm;
    int delta_pos = 0;
    CLI::App* cmd_delta = app.add_subcommand(
        "delta", "signed norm change from one adjacent transposition on the right");
    cmd_delta->add_option("permutation", delta_perm, "one-line notation")->required();
    cmd_delta->add_option("position", delta_pos, "swap positions s and s+1")->required();
    cmd_delta->callback([&] {
        const std::int64_t delta =
            lfn::transposition_delta(lfn::parse_permutation(delta_perm), delta_pos);
        output.stream() << (delta >= 0 ? "+" : "") << delta << '\n';
    });

    // ---- distribution ----
    std::uint64_t distribution_max = 0;
    std::string distribution_method = "recursion";
    bool distribution_csv = false;
    CLI::App* cmd_distribution =
        app.add_subcommand("distribution", "CSV table of s(m) and cumulative d(m)");
    cmd_distribution->add_option("--max", distribution_max, "largest norm value m")->required();
    cmd_distribution
        ->add_option("--method", distribution_method,
                     "recursion (default), definition, or permutations")
        ->check(CLI::IsMember({"recursion", "definition", "permutations"}));
    cmd_distribution->add_flag("--csv", distribution_csv,
                               "emit CSV (the default and only format)");
    cmd_distribution->callback(
        [&] { emit_distribution_csv(output.stream(), distribution_max, distribution_method); });

    // ---- decompositions ----
    std::uint64_t decompositions_m = 0;
    CLI::App* cmd_decompositions =
        app.add_subcommand("decompositions", "all block decompositions of a norm value");
    cmd_decompositions->add_option("m", decompositions_m, "norm value, 1..512")->required();
    cmd_decompositions->callback([&] { emit_decompositions(output.stream(), decompositions_m); });

    // ---- verify ----
    std::string verify_suite;
    std::uint64_t verify_scope = 0;
    std::uint64_t verify_seed = lfn::default_verification_seed;
    bool verify_json = false;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("--suite", verify_suite, "norm, lemmas, or distribution")
        ->required()
        ->check(CLI::IsMember({"norm", "lemmas", "distribution"}));
    cmd_verify
        ->add_option("--scope", verify_scope,
                     "degree (norm, lemmas: 2..7) or largest norm value (distribution: 1..256)")
        ->required();
    cmd_verify->add_option("--seed", verify_seed, "seed for the sampled checks");
    cmd_verify->add_flag("--json", verify_json, "emit the report as JSON");
    cmd_verify->callback([&] {
        // Degrees far outside the guard range still have to reach the guard
        // as ints without wrapping.
        const int scope_degree =
            verify_scope > 1000 ? 1000 : static_cast<int>(verify_scope);
        lfn::VerificationReport report;
        if (verify_suite == "norm")
            report = lfn::verify_norm_properties(scope_degree, verify_seed);
        else if (verify_suite == "lemmas")
            report = lfn::verify_code_lemmas(scope_degree);
        else
            report = lfn::verify_distribution(verify_scope);
        if (verify_json)
            output.stream() << report_to_json(report).dump(2) << '\n';
        else
            output.stream() << lfn::to_text(report);
        if (!report.all_pass()) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
