// Command-line front end: digit-law predictions, exact oracle tables,
// Laplace error analysis, extrema scans, and dataset conformity checks.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "benford/digit_law.hpp"
#include "benford/distribution.hpp"
#include "benford/empirics.hpp"
#include "benford/laplace.hpp"
#include "benford/oracle.hpp"
#include "benford/report.hpp"
#include "benford/selftest.hpp"

namespace {

using namespace benford;

struct RunConfig {
    int base = 10;
    int width = 1;
    int position = 0;  // predict: i-th digit marginal instead of block table
    std::int64_t lead = 0;
    std::int64_t span = 1;
    std::string dist_spec;
    std::string input_path;
    std::string column = "1";
    std::string svg_path;
    double tol = 1e-9;
    unsigned seed = 42;
    std::string format = "table";
    int samples = 4096;
};

int block_width_for_lead(int base, std::int64_t lead) {
    int width = 1;
    std::int64_t hi = base;
    while (lead >= hi) {
        hi *= base;
        ++width;
    }
    return width;
}

void emit(const Report& report, const RunConfig& cfg) {
    std::cout << (cfg.format == "kv" ? report.to_kv() : report.to_table());
}

void write_svg(const std::string& path, const DigitHistogram& hist,
               const LawPrediction& expected) {
    std::vector<std::string> labels;
    std::vector<double> observed, exp_props;
    for (const auto& [outcome, p] : expected.probabilities) {
        labels.push_back(std::to_string(outcome));
        const auto it = hist.counts.find(outcome);
        observed.push_back(it == hist.counts.end()
                               ? 0.0
                               : static_cast<double>(it->second) / hist.total);
        exp_props.push_back(p);
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write SVG to '" + path + "'");
    out << svg_bar_chart(labels, observed, exp_props);
}

void add_table_rows(Report& report, const LawPrediction& table, const std::string& prefix) {
    for (const auto& [outcome, p] : table.probabilities) {
        report.add(prefix + std::to_string(outcome), p);
    }
}

int cmd_predict(RunConfig cfg) {
    if (cfg.width == 0) cfg.width = 1;
    Report report;
    report.add("command", std::string("predict"));
    report.add("base", std::int64_t{cfg.base});
    LawPrediction table;
    if (cfg.position >= 1) {
        table = ith_digit_table(cfg.base, cfg.position);
        report.add("position", std::int64_t{cfg.position});
        add_table_rows(report, table, "p_digit_");
    } else if (cfg.width == 1) {
        table = first_digit_table(cfg.base);
        report.add("width", std::int64_t{1});
        add_table_rows(report, table, "p_");
    } else {
        table.base = cfg.base;
        table.width = cfg.width;
        const std::int64_t hi = pow_int(cfg.base, cfg.width);
        if (hi > 10000) {
            throw std::domain_error("predict: base^width = " + std::to_string(hi) +
                                    " exceeds the table guard of 10^4 rows");
        }
        for (std::int64_t d = hi / cfg.base; d < hi; ++d) {
            table.probabilities[d] = benford_prob({cfg.base, d, 1, cfg.width});
        }
        report.add("width", std::int64_t{cfg.width});
        add_table_rows(report, table, "p_");
    }
    if (!cfg.svg_path.empty()) {
        DigitHistogram empty_hist;
        empty_hist.base = cfg.base;
        empty_hist.total = 1;
        write_svg(cfg.svg_path, empty_hist, table);
    }
    emit(report, cfg);
    return 0;
}

int cmd_oracle(const RunConfig& cfg) {
    const Distribution dist = parse_dist_spec(cfg.dist_spec);
    Report report;
    report.add("command", std::string("oracle"));
    report.add("dist", dist.name);
    report.add("base", std::int64_t{cfg.base});
    report.add("tol", cfg.tol);
    if (cfg.lead > 0) {
        const int width = cfg.width > 0 ? cfg.width : block_width_for_lead(cfg.base, cfg.lead);
        const DigitBlock block{cfg.base, cfg.lead, cfg.span, width};
        const OracleResult res = exact_block_prob(dist, block, cfg.tol);
        report.add("block", to_string(block));
        report.add("probability", res.probability);
        report.add("benford", benford_prob(block));
        report.add("scales_lo", std::int64_t{res.truncation_lo});
        report.add("scales_hi", std::int64_t{res.truncation_hi});
        report.add("tail_bound", res.tail_bound);
    } else {
        const int width = cfg.width > 0 ? cfg.width : 1;
        const LawPrediction table = exact_table(dist, cfg.base, width, cfg.tol);
        report.add("width", std::int64_t{width});
        add_table_rows(report, table, "p_");
    }
    emit(report, cfg);
    return 0;
}

int cmd_error(const RunConfig& cfg) {
    const Distribution dist = parse_dist_spec(cfg.dist_spec);
    const int width = cfg.width > 0 ? cfg.width : block_width_for_lead(cfg.base, cfg.lead);
    const DigitBlock block{cfg.base, cfg.lead > 0 ? cfg.lead : 1, cfg.span, width};
    const ErrorReport res = total_error(dist, block, cfg.tol);
    Report report;
    report.add("command", std::string("error"));
    report.add("dist", dist.name);
    report.add("block", to_string(block));
    report.add("oracle_prob", res.oracle_prob);
    report.add("benford_term", res.benford_term);
    report.add("total_error", res.total_error);
    report.add("periodic_max", res.periodic_max);
    if (res.bound_M) {
        report.add("bound_M", *res.bound_M);
        report.add("bound_value", *res.bound_value);
        report.add("bound_certified", std::string(res.bound_certified ? "yes" : "no"));
        report.add("kernel_weighted_error", kernel_weighted_error(dist, block, cfg.tol));
    }
    emit(report, cfg);
    return 0;
}

int cmd_scan(const RunConfig& cfg) {
    const int width = cfg.width > 0 ? cfg.width : block_width_for_lead(cfg.base, cfg.lead);
    const DigitBlock block{cfg.base, cfg.lead > 0 ? cfg.lead : 1, cfg.span, width};
    const ExtremaScan scan = scan_delta_extrema(block, cfg.samples);
    Report report;
    report.add("command", std::string("scan"));
    report.add("block", to_string(block));
    report.add("samples_per_period", std::int64_t{cfg.samples});
    report.add("max_abs_delta", scan.max_abs);
    report.add("argmax_s", scan.argmax_s);
    report.add("period", std::log(static_cast<double>(cfg.base)));
    emit(report, cfg);
    return 0;
}

int cmd_analyze(RunConfig cfg) {
    if (cfg.width == 0) cfg.width = 1;
    const ColumnData column = read_column(cfg.input_path, cfg.column);
    if (column.values.empty()) {
        throw std::runtime_error("no numeric values in column '" + cfg.column + "' of '" +
                                 cfg.input_path + "'");
    }
    const DigitHistogram hist = histogram(std::span<const std::string>(column.values),
                                          cfg.base, cfg.width);

    LawPrediction expected;
    expected.base = cfg.base;
    expected.width = cfg.width;
    const std::int64_t hi = pow_int(cfg.base, cfg.width);
    for (std::int64_t d = hi / cfg.base; d < hi; ++d) {
        expected.probabilities[d] = benford_prob({cfg.base, d, 1, cfg.width});
    }
    const ConformityReport res = conformity(hist, expected);

    Report report;
    report.add("command", std::string("analyze"));
    report.add("input", cfg.input_path);
    report.add("column", cfg.column);
    report.add("base", std::int64_t{cfg.base});
    report.add("width", std::int64_t{cfg.width});
    report.add("rows_used", hist.total);
    report.add("rows_skipped", column.skipped_rows);
    report.add("dropped_zeros", hist.dropped_zeros);
    report.add("negatives_folded", hist.negatives_folded);
    report.add("chi_square", res.chi_square);
    report.add("degrees_of_freedom", std::int64_t{res.degrees_of_freedom});
    report.add("mad", res.mad);
    report.add("max_abs_dev", res.max_abs_dev);
    report.add("verdict", to_string(res.verdict));
    for (const auto& [outcome, p] : expected.probabilities) {
        const auto it = hist.counts.find(outcome);
        const double prop =
            it == hist.counts.end() ? 0.0 : static_cast<double>(it->second) / hist.total;
        report.add("observed_" + std::to_string(outcome), prop);
        report.add("expected_" + std::to_string(outcome), p);
    }
    if (!cfg.svg_path.empty()) write_svg(cfg.svg_path, hist, expected);
    emit(report, cfg);
    return 0;
}

int cmd_selftest(const RunConfig& cfg) {
    const std::vector<CheckResult> results = run_acceptance_suite(cfg.seed);
    bool all_ok = true;
    int index = 1;
    for (const auto& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << index++ << ". " << r.name;
        if (!r.detail.empty()) std::cout << " — " << r.detail;
        std::cout << "\n";
        all_ok = all_ok && r.passed;
    }
    std::cout << (all_ok ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Significant-digit law toolkit: closed-form predictions, exact "
                 "digit-probability oracles, Laplace-series error analysis, and "
                 "dataset conformity checks"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--base", cfg.base, "number base (>= 2)")->capture_default_str();
        sub->add_option("--format", cfg.format, "output format: table or kv")
            ->check(CLI::IsMember({"table", "kv"}))
            ->capture_default_str();
    };

    CLI::App* predict = app.add_subcommand("predict", "closed-form digit-law tables");
    add_common(predict);
    predict->add_option("--width", cfg.width, "digits per block")->capture_default_str();
    predict->add_option("--position", cfg.position,
                        "marginal law of the i-th significant digit instead");
    predict->add_option("--svg", cfg.svg_path, "write a bar chart of the law");

    CLI::App* oracle = app.add_subcommand("oracle", "exact digit probabilities of a distribution");
    add_common(oracle);
    oracle->add_option("--dist", cfg.dist_spec, "distribution spec, e.g. exp:rate=1")
        ->required();
    oracle->add_option("--width", cfg.width, "digits per block")->capture_default_str();
    oracle->add_option("--d", cfg.lead, "single block: leading value");
    oracle->add_option("--l", cfg.span, "single block: span")->capture_default_str();
    oracle->add_option("--tol", cfg.tol, "oracle tolerance")->capture_default_str();

    CLI::App* error_cmd = app.add_subcommand("error", "total error of the law for a distribution");
    add_common(error_cmd);
    error_cmd->add_option("--dist", cfg.dist_spec, "distribution spec")->required();
    error_cmd->add_option("--d", cfg.lead, "block leading value")->capture_default_str();
    error_cmd->add_option("--l", cfg.span, "block span")->capture_default_str();
    error_cmd->add_option("--width", cfg.width, "block width (default: digits of --d)");
    error_cmd->add_option("--tol", cfg.tol, "oracle tolerance")->capture_default_str();

    CLI::App* scan = app.add_subcommand("scan", "extrema of the periodic error function");
    add_common(scan);
    scan->add_option("--d", cfg.lead, "block leading value")->capture_default_str();
    scan->add_option("--l", cfg.span, "block span")->capture_default_str();
    scan->add_option("--width", cfg.width, "block width (default: digits of --d)");
    scan->add_option("--samples", cfg.samples, "grid samples per period")
        ->capture_default_str();

    CLI::App* analyze = app.add_subcommand("analyze", "conformity of a dataset column");
    add_common(analyze);
    analyze->add_option("--input", cfg.input_path, "delimited text file")->required();
    analyze->add_option("--column", cfg.column, "1-based index or header name")
        ->capture_default_str();
    analyze->add_option("--width", cfg.width, "digits per block")->capture_default_str();
    analyze->add_option("--svg", cfg.svg_path, "write a bar chart of observed vs expected");

    CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->add_option("--seed", cfg.seed, "seed for the randomized checks")
        ->capture_default_str();

    // width 0 means "not given": commands then derive it from --d or use 1.
    cfg.width = 0;

    CLI11_PARSE(app, argc, argv);

    try {
        if (predict->parsed()) return cmd_predict(cfg);
        if (oracle->parsed()) return cmd_oracle(cfg);
        if (error_cmd->parsed()) return cmd_error(cfg);
        if (scan->parsed()) return cmd_scan(cfg);
        if (analyze->parsed()) return cmd_analyze(cfg);
        if (selftest->parsed()) return cmd_selftest(cfg);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
